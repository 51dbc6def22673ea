#include "binlct/numeric.hpp"

#include <stdexcept>

namespace binlct {

namespace mp = boost::multiprecision;

ExtendedRational ExtendedRational::infinity() {
  ExtendedRational r;
  r.infinite_ = true;
  return r;
}

ExtendedRational ExtendedRational::ratio(const Int& num, const Int& den) {
  if (den == 0) return infinity();
  return ExtendedRational(Rat(num) / Rat(den));
}

const Rat& ExtendedRational::rational() const {
  if (infinite_) throw std::logic_error("ExtendedRational: +infinity has no rational value");
  return value_;
}

Int ExtendedRational::numerator() const {
  return infinite_ ? Int(1) : Int(mp::numerator(value_));
}

Int ExtendedRational::denominator() const {
  return infinite_ ? Int(0) : Int(mp::denominator(value_));
}

std::string ExtendedRational::str() const {
  if (infinite_) return "inf";
  return rat_str(value_);
}

std::string ExtendedRational::decimal(unsigned digits) const {
  if (infinite_) return "inf";
  Int num = mp::numerator(value_);
  Int den = mp::denominator(value_);
  bool negative = num < 0;
  if (negative) num = -num;
  Int whole = num / den;
  Int rem = num - whole * den;
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Int frac = rem * scale / den;  // truncated
  std::string f = frac.str();
  if (f.size() < digits) f.insert(f.begin(), digits - f.size(), '0');
  std::string out = whole.str();
  if (digits > 0) out += "." + f;
  if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
  return a.value_ == b.value_;
}

bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

Rat rat_pow(const Rat& base, const Int& exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  Int e = exp < 0 ? Int(-exp) : exp;
  if (e > 1000000) throw std::invalid_argument("rat_pow: exponent out of supported range");
  auto k = e.convert_to<unsigned long>();
  Int num = mp::pow(Int(mp::numerator(base)), static_cast<unsigned>(k));
  Int den = mp::pow(Int(mp::denominator(base)), static_cast<unsigned>(k));
  if (exp < 0) std::swap(num, den);
  return Rat(num) / Rat(den);
}

std::string rat_str(const Rat& value) {
  Int num = mp::numerator(value);
  Int den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace binlct
