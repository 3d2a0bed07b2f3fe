#include "cohomo/grid.hpp"

#include <charconv>
#include <cmath>

#include "cohomo/errors.hpp"

namespace cohomo {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view what)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidArgument("bad grid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

double Grid::point(int i) const
{
    if (count <= 1 || i == 0) {
        return lo;
    }
    if (i == count - 1) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<double> Grid::points() const
{
    validate();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back(point(i));
    }
    return out;
}

void Grid::validate() const
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw InvalidArgument("grid needs finite lo <= hi");
    }
    if (count < 1) {
        throw InvalidArgument("grid needs at least one point");
    }
}

Grid Grid::parse(std::string_view text)
{
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw InvalidArgument("grid must look like lo:hi:count, got '" + std::string(text) + "'");
    }
    Grid g;
    g.lo = parse_number<double>(text.substr(0, first), "lower end");
    g.hi = parse_number<double>(text.substr(first + 1, second - first - 1), "upper end");
    g.count = parse_number<int>(text.substr(second + 1), "count");
    g.validate();
    return g;
}

} // namespace cohomo
