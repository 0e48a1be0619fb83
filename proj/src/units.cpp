#include "slitwave/units.hpp"

#include <cstdlib>
#include <stdexcept>

namespace slitwave {

namespace {

// number + remaining suffix; throws if the numeric part is malformed
std::pair<double, std::string> split_number(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
        throw std::invalid_argument("cannot parse number from '" + text + "'");
    }
    return {v, std::string(end)};
}

[[noreturn]] void bad_suffix(const std::string& text) {
    throw std::invalid_argument("unknown unit suffix in '" + text + "'");
}

}  // namespace

double parse_length_m(const std::string& text) {
    const auto [v, suffix] = split_number(text);
    if (suffix.empty() || suffix == "m") return v;
    if (suffix == "nm") return v * 1e-9;
    if (suffix == "um") return v * 1e-6;
    if (suffix == "mm") return v * 1e-3;
    bad_suffix(text);
}

TimeValue parse_time(const std::string& text) {
    const auto [v, suffix] = split_number(text);
    if (suffix.empty() || suffix == "tau0") return TimeValue{v, true};
    if (suffix == "s") return TimeValue{v, false};
    if (suffix == "ms") return TimeValue{v * 1e-3, false};
    bad_suffix(text);
}

namespace {

Range parse_range_with(const std::string& text, double (*elem)(const std::string&, double),
                       double aux) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw std::invalid_argument("range must be 'lo:hi:n' (got '" + text + "')");
    }
    Range r;
    r.lo = elem(text.substr(0, c1), aux);
    r.hi = elem(text.substr(c1 + 1, c2 - c1 - 1), aux);
    const std::string n_part = text.substr(c2 + 1);
    try {
        size_t used = 0;
        r.n = std::stoi(n_part, &used);
        if (used != n_part.size()) throw std::invalid_argument(n_part);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad sample count in range '" + text + "'");
    }
    if (!(r.lo < r.hi)) {
        throw std::invalid_argument("range must be ordered lo < hi (got '" + text + "')");
    }
    if (r.n < 2) {
        throw std::invalid_argument("range needs at least 2 samples (got '" + text + "')");
    }
    return r;
}

}  // namespace

Range parse_time_range(const std::string& text, double tau0_s) {
    return parse_range_with(
        text, [](const std::string& s, double tau0) { return parse_time(s).to_tau0(tau0); },
        tau0_s);
}

Range parse_length_range(const std::string& text) {
    return parse_range_with(
        text, [](const std::string& s, double) { return parse_length_m(s); }, 0.0);
}

}  // namespace slitwave
