#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cohomo::report {

/// Empty cell (CSV: empty field, JSON: null).
struct Null {};

using Cell = std::variant<Null, double, long long, bool, std::string>;

/// A fixed-column table plus an ordered key/value meta block.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> meta;

    void add_row(std::vector<Cell> row);
};

/// 17 significant digits, '.' decimal separator, independent of the global locale.
std::string format_double(double v);

/// Header row then data rows, '\n' line ends.
std::string to_csv(const Table& t);
/// {"meta": {...}, "rows": [{...}, ...]} with keys in column order.
std::string to_json(const Table& t);

} // namespace cohomo::report
