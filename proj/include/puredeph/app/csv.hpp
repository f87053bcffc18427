// csv.hpp — minimal CSV emission: ',' delimiter, '.' decimal, 17 significant digits.

#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace puredeph::app {

std::string format_double(double v);
inline std::string format_bool(bool v) { return v ? "true" : "false"; }

class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

    // Cells must already be formatted; the writer only joins them.
    void row(std::initializer_list<std::string> cells);

private:
    std::ostream& out_;
    std::size_t columns_;
};

}  // namespace puredeph::app
