#include "slitwave/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace slitwave::csv {

std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Writer::meta(const std::string& key, const std::string& value) {
    if (header_written_) throw std::logic_error("csv: metadata after header");
    out_ << "# " << key << " = " << value << "\n";
}

void Writer::meta(const std::string& key, double value) {
    meta(key, format(value));
}

void Writer::header(std::span<const std::string> columns) {
    for (size_t i = 0; i < columns.size(); ++i) {
        out_ << (i ? "," : "") << columns[i];
    }
    out_ << "\n";
    header_written_ = true;
}

void Writer::row(std::span<const double> values) {
    if (!header_written_) throw std::logic_error("csv: row before header");
    for (size_t i = 0; i < values.size(); ++i) {
        out_ << (i ? "," : "") << format(values[i]);
    }
    out_ << "\n";
}

}  // namespace slitwave::csv
