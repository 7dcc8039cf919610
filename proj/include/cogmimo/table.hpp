#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cogmimo {

/// Rectangular numeric table with named columns, the common currency of the
/// command layer.
struct CurveTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const;  ///< -1 when absent
    void append_row(std::vector<double> row);
};

/// CSV with a header row; values carry 17 significant digits so parsing the
/// output recovers them exactly.
void write_csv(const CurveTable& table, std::ostream& out);
CurveTable read_csv(std::istream& in);

/// JSON mirror: {"columns": [...], "rows": [[...], ...]}.
void write_json(const CurveTable& table, std::ostream& out);

}  // namespace cogmimo
