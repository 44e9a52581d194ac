#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lhxcli {

enum class Format { csv, json };

struct Null {};

using Cell = std::variant<Null, double, long long, bool, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Scalar header fields followed by named tables.
struct Document {
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<Table> tables;
};

// %.{precision}g; CSV and JSON share this text for every finite number.
std::string format_number(double v, int precision);

// CSV: meta as "# key=value" lines, then each table as header plus rows, tables separated by a blank line.
// JSON: one object holding the meta fields and an array of row objects per table.
void write(std::ostream& os, const Document& doc, Format fmt, int precision);

}  // namespace lhxcli
