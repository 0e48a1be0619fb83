#ifndef SLITWAVE_CSV_HPP
#define SLITWAVE_CSV_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace slitwave::csv {

/// Full round-trip formatting of a double (17 significant digits).
std::string format(double v);

/// Plain CSV with '#'-prefixed metadata lines, one mandatory header row,
/// comma separators and '\n' line endings. Byte-deterministic for a given
/// sequence of calls.
class Writer {
  public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);
    void header(std::span<const std::string> columns);
    void row(std::span<const double> values);

  private:
    std::ostream& out_;
    bool header_written_ = false;
};

}  // namespace slitwave::csv

#endif
