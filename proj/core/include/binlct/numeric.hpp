#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace binlct {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact rational extended with +infinity. Only ordering is defined on the
/// infinite value; it compares greater than every finite value.
class ExtendedRational {
public:
  ExtendedRational() = default;
  ExtendedRational(Rat value) : value_(std::move(value)) {}
  ExtendedRational(const Int& value) : value_(value) {}
  ExtendedRational(long value) : value_(value) {}

  static ExtendedRational infinity();

  /// num/den in lowest terms; den == 0 maps to +infinity.
  static ExtendedRational ratio(const Int& num, const Int& den);

  bool finite() const { return !infinite_; }
  bool infinite() const { return infinite_; }

  /// Finite value; throws std::logic_error on +infinity.
  const Rat& rational() const;

  Int numerator() const;    // 1 for +infinity
  Int denominator() const;  // 0 for +infinity

  std::string str() const;  // "13/9", "2", "inf"

  /// Fixed-point display with the given number of fractional digits,
  /// truncated toward zero. Display only; never used in comparisons.
  std::string decimal(unsigned digits = 4) const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b);

private:
  Rat value_ = 0;
  bool infinite_ = false;
};

/// base^exp for exact rationals with integer (possibly negative) exponent.
/// base must be nonzero when exp < 0.
Rat rat_pow(const Rat& base, const Int& exp);

std::string rat_str(const Rat& value);

}  // namespace binlct
