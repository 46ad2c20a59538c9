#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

/// Minimal CSV table: one header row, string cells, '#'-prefixed comment
/// lines before the header. Doubles are rendered with std::to_chars, whose
/// shortest form parses back to the identical bit pattern, so emitted files
/// reproduce the in-memory records exactly.
struct CsvTable {
    std::vector<std::string> comments;  // without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    static std::string cell(double v) {
        char buf[40];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }
    static std::string cell(long long v) { return std::to_string(v); }
    static std::string cell(std::size_t v) { return std::to_string(v); }
    static std::string cell(int v) { return std::to_string(v); }

    void write(std::ostream& os) const {
        for (const auto& c : comments) os << "# " << c << "\n";
        write_row(os, header);
        for (const auto& r : rows) write_row(os, r);
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    static CsvTable parse(std::istream& is) {
        CsvTable t;
        std::string line;
        bool have_header = false;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line[0] == '#') {
                std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
                t.comments.push_back(line.substr(start));
                continue;
            }
            auto cells = split_row(line);
            if (!have_header) {
                t.header = std::move(cells);
                have_header = true;
            } else {
                t.rows.push_back(std::move(cells));
            }
        }
        if (!have_header) throw ContractViolation("CSV input has no header row");
        return t;
    }

private:
    static void write_row(std::ostream& os, const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            const bool needs_quotes = row[i].find_first_of(",\"\n") != std::string::npos;
            if (!needs_quotes) {
                os << row[i];
                continue;
            }
            os << '"';
            for (char c : row[i]) {
                if (c == '"') os << '"';
                os << c;
            }
            os << '"';
        }
        os << '\n';
    }

    static std::vector<std::string> split_row(const std::string& line) {
        std::vector<std::string> cells;
        std::string cur;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        cur += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    cur += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                cells.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(std::move(cur));
        return cells;
    }
};

} // namespace bergman
