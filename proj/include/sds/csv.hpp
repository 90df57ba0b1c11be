#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sds {

/// CSV with '#'-prefixed metadata lines, one header row, then data rows.
/// Cells are kept as rendered text so that parse(render(doc)) == doc and
/// render(parse(text)) == text byte for byte.
struct CsvDocument {
    std::vector<std::string> meta;  // without the leading "# "
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render() const;
    static CsvDocument parse(const std::string& text);

    bool operator==(const CsvDocument&) const = default;
};

// Numeric cell text: up to 12 significant digits, '.' separator.
std::string format_number(double value);
std::string format_number(long long value);
std::string format_number(unsigned long long value);

}  // namespace sds
