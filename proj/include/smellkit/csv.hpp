#pragma once

#include <istream>
#include <string>
#include <vector>

namespace smellkit::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line;  // 1-based line number of the row start
};

/// Reads one CSV record; handles RFC-4180 quoted fields and LF/CRLF endings.
/// Returns false at end of stream.
bool read_row(std::istream& in, Row& out, std::size_t& line_counter);

/// Reads a whole CSV document. If `expect_header` is nonempty, the first row
/// must match it exactly (throws InputError otherwise). Returned rows exclude
/// the header.
std::vector<Row> read_all(std::istream& in, const std::vector<std::string>& expect_header);

/// Joins fields with commas, quoting any field containing a comma, quote, or
/// newline.
std::string format_row(const std::vector<std::string>& fields);

}  // namespace smellkit::csv
