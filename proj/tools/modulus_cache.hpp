#pragma once

#include "quintic/bigreal.hpp"
#include "quintic/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace quintic::cli {

/// Solved moduli keyed by r, one `p/q <bits> <k_decimal>` line each. `bits`
/// is the mantissa width the value was computed at; the decimal string
/// parses back to that exact value.
class ModulusCache {
 public:
  struct Entry {
    Rational r;
    long bits;
    std::string k_decimal;
  };

  ModulusCache() = default;
  /// Reads `path` if it exists. Malformed lines are reported on `warnings`
  /// and skipped.
  static ModulusCache load(const std::string& path, std::ostream& warnings);

  /// Best entry for r with at least `bits` bits, rounded to `bits`.
  std::optional<BigReal> lookup(const Rational& r, long bits) const;
  void store(const Rational& r, const BigReal& k);
  /// Appends the entries stored since load.
  void flush() const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::string path_;
  std::vector<Entry> entries_;
  std::size_t loaded_ = 0;
};

}  // namespace quintic::cli
