#ifndef SLITWAVE_UNITS_HPP
#define SLITWAVE_UNITS_HPP

#include <string>

namespace slitwave {

/// Length with unit suffix um | mm | m; bare numbers are meters.
/// "7.8um" -> 7.8e-6.
double parse_length_m(const std::string& text);

/// Time with unit suffix tau0 | ms | s; bare numbers are units of tau0.
struct TimeValue {
    double value;
    bool in_tau0;  // true: value is in tau0 units, false: seconds

    double to_tau0(double tau0_s) const { return in_tau0 ? value : value / tau0_s; }
};

TimeValue parse_time(const std::string& text);

/// "a:b:n" range; endpoints parsed by the supplied element parser rules.
struct Range {
    double lo;
    double hi;
    int n;
};

/// Range of times "a:b:n" (suffix rules of parse_time apply to a and b,
/// resolved against tau0). lo < hi and n >= 2 required.
Range parse_time_range(const std::string& text, double tau0_s);

/// Range of lengths "a:b:n" in meters.
Range parse_length_range(const std::string& text);

}  // namespace slitwave

#endif
