#include "smellkit/csv.hpp"

#include <sstream>

#include "smellkit/errors.hpp"

namespace smellkit::csv {

bool read_row(std::istream& in, Row& out, std::size_t& line_counter) {
    out.fields.clear();
    int c = in.peek();
    if (c == EOF) return false;
    out.line = line_counter;

    std::string field;
    bool in_quotes = false;
    bool row_done = false;
    while (!row_done) {
        c = in.get();
        if (c == EOF) {
            row_done = true;
        } else if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line_counter;
                field.push_back(static_cast<char>(c));
            }
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
        } else if (c == ',') {
            out.fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            ++line_counter;
            row_done = true;
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get();
            ++line_counter;
            row_done = true;
        } else {
            field.push_back(static_cast<char>(c));
        }
    }
    if (in_quotes) throw InputError("csv: unterminated quoted field at line " + std::to_string(out.line));
    out.fields.push_back(std::move(field));
    return true;
}

std::vector<Row> read_all(std::istream& in, const std::vector<std::string>& expect_header) {
    std::size_t line = 1;
    std::vector<Row> rows;
    Row row;
    bool first = true;
    while (read_row(in, row, line)) {
        // skip a fully blank trailing line
        if (row.fields.size() == 1 && row.fields[0].empty()) continue;
        if (first && !expect_header.empty()) {
            first = false;
            if (row.fields != expect_header) {
                std::string want;
                for (std::size_t i = 0; i < expect_header.size(); ++i) {
                    if (i) want += ',';
                    want += expect_header[i];
                }
                throw InputError("csv: expected header '" + want + "' at line " +
                                 std::to_string(row.line));
            }
            continue;
        }
        first = false;
        rows.push_back(row);
    }
    return rows;
}

std::string format_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") != std::string::npos) {
            out += '"';
            for (char ch : f) {
                if (ch == '"') out += "\"\"";
                else out += ch;
            }
            out += '"';
        } else {
            out += f;
        }
    }
    return out;
}

}  // namespace smellkit::csv
