#include "sds/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sds {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string format_number(long long value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", value);
    return buf;
}

std::string format_number(unsigned long long value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%llu", value);
    return buf;
}

namespace {

void append_row(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += cells[i];
    }
    out += '\n';
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

}  // namespace

std::string CsvDocument::render() const {
    std::string out;
    for (const auto& line : meta) {
        out += "# ";
        out += line;
        out += '\n';
    }
    append_row(out, header);
    for (const auto& row : rows) append_row(out, row);
    return out;
}

CsvDocument CsvDocument::parse(const std::string& text) {
    CsvDocument doc;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!header_seen && line.rfind("# ", 0) == 0) {
            doc.meta.push_back(line.substr(2));
        } else if (!header_seen) {
            doc.header = split_cells(line);
            header_seen = true;
        } else {
            doc.rows.push_back(split_cells(line));
        }
    }
    if (!header_seen) {
        throw std::invalid_argument("CSV document has no header row");
    }
    return doc;
}

}  // namespace sds
