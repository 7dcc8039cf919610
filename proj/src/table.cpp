#include "cogmimo/table.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cogmimo/errors.hpp"

namespace cogmimo {

int CurveTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

void CurveTable::append_row(std::vector<double> row) {
    if (row.size() != columns.size()) throw DomainError("CurveTable: row width does not match header");
    rows.push_back(std::move(row));
}

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const CurveTable& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_value(row[i]) << (i + 1 < row.size() ? "," : "");
        out << '\n';
    }
}

CurveTable read_csv(std::istream& in) {
    CurveTable table;
    std::string line;
    if (!std::getline(in, line)) throw DomainError("read_csv: missing header row");
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) table.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row_stream(line);
        std::vector<double> row;
        while (std::getline(row_stream, cell, ',')) {
            std::size_t pos = 0;
            row.push_back(std::stod(cell, &pos));
            if (pos != cell.size()) throw DomainError("read_csv: malformed cell '" + cell + "'");
        }
        table.append_row(std::move(row));
    }
    return table;
}

void write_json(const CurveTable& table, std::ostream& out) {
    nlohmann::json doc;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    out << doc.dump(2) << '\n';
}

}  // namespace cogmimo
