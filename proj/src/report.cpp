#include "cohomo/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "json.hpp"

#include "cohomo/errors.hpp"

namespace cohomo::report {

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const Cell& c)
{
    struct Visitor {
        std::string operator()(Null) const { return {}; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return csv_escape(v); }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c)
{
    struct Visitor {
        nlohmann::ordered_json operator()(Null) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const
        {
            if (!std::isfinite(v)) {
                return nullptr;
            }
            return v;
        }
        nlohmann::ordered_json operator()(long long v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

} // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw InvalidArgument("report row has " + std::to_string(row.size()) + " cells for " +
                              std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

std::string to_csv(const Table& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i == 0 ? "" : ",") + csv_escape(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t)
{
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : t.meta) {
        meta[key] = json_cell(value);
    }
    doc["meta"] = std::move(meta);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[t.columns[i]] = json_cell(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace cohomo::report
