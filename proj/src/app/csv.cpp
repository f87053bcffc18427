// csv.cpp

#include "puredeph/app/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace puredeph::app {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
    bool first = true;
    for (auto h : header) {
        if (!first) out_ << ',';
        out_ << h;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::string> cells) {
    if (cells.size() != columns_) throw std::logic_error("CsvWriter: row width does not match header");
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out_ << ',';
        out_ << c;
        first = false;
    }
    out_ << '\n';
}

}  // namespace puredeph::app
