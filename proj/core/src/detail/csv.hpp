#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hlsqor::detail {

/// Split one CSV line into cells. Handles double-quoted cells with escaped
/// quotes; our own writers only quote when a cell contains , " or newline.
inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

inline std::string csv_escape(std::string_view cell) {
    bool needs_quotes = cell.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace hlsqor::detail
