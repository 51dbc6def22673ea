#pragma once

#include "binlct/parse.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace binlct;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

inline ExtendedRational q(long num, long den = 1) {
  return ExtendedRational::ratio(Int(num), Int(den));
}

inline ExtendedRational inf() { return ExtendedRational::infinity(); }

inline const char* kCurve345 =
    "vars x1 x2 x3\n"
    "x2^2 - x1*x3\n"
    "x2*x3 - x1^3\n"
    "x3^2 - x1^2*x2\n";

inline const char* kCurve378 =
    "vars x1 x2 x3\n"
    "x1^2*x3 - x2^2\n"
    "x1^3*x2 - x3^2\n"
    "x1^5 - x2*x3\n";

inline const char* kCurve5689 =
    "vars x1 x2 x3 x4\n"
    "x2*x3 - x1*x4\n"
    "x1^2*x3 - x4^2\n"
    "x2^3 - x1^2*x3\n"
    "x1*x2^2 - x3*x4\n"
    "x1^2*x2 - x3^2\n"
    "x1^3 - x2*x4\n";

inline const char* kToricSurface =
    "vars x1 x2 x3 x4\n"
    "x2*x4 - x1^3\n"
    "x3^4*x4 - x1*x2^6\n"
    "x1^2*x3^4 - x2^7\n";

inline const char* kDepCoef1 =
    "vars x1 x2 x3 x4 x5\n"
    "x2^2*x4 - x1*x3*x4\n"
    "x1^3*x4 - x3^2*x4\n"
    "x2^2*x5 - x1*x3*x5\n"
    "x1^3*x5 - x3^2*x5\n";

inline const char* kDepCoef2 =
    "vars x1 x2 x3 x4 x5\n"
    "x2^2*x4 - x1*x3*x4\n"
    "x1^3*x4 - x3^2*x4\n"
    "x2^2*x5 + x1*x3*x5\n"
    "x1^3*x5 - x3^2*x5\n";

inline const char* kCurve681011 =
    "vars x1 x2 x3 x4\n"
    "x2^2 - x1*x3\n"
    "x1^3 - x2*x3\n"
    "x1^2*x2 - x3^2\n"
    "x1^2*x3 - x4^2\n";

inline const char* kCurve681011Sign =
    "vars x1 x2 x3 x4\n"
    "x2^2 - x1*x3\n"
    "x1^3 - x2*x3\n"
    "x1^2*x2 + x3^2\n"
    "x1^2*x3 - x4^2\n";

inline IdealTriple triple_from(const char* text) { return triple_of(parse_ideal(text)); }

struct RandomIdealOptions {
  size_t max_vars = 4;
  size_t max_gens = 4;
  long max_exp = 4;
  bool monomial_only = false;
  std::vector<Rat> coefficients = {Rat(1), Rat(-1), Rat(2), Rat(-2)};
};

inline GeneralBinomialIdeal random_ideal(std::mt19937& rng, const RandomIdealOptions& opt = {}) {
  std::uniform_int_distribution<size_t> nd(1, opt.max_vars);
  std::uniform_int_distribution<size_t> rd(1, opt.max_gens);
  std::uniform_int_distribution<long> ed(0, opt.max_exp);
  const size_t n = nd(rng);
  const size_t r = rd(rng);

  GeneralBinomialIdeal ideal;
  for (size_t i = 0; i < n; ++i) ideal.vars.push_back("x" + std::to_string(i + 1));

  auto random_exponent = [&](bool allow_zero) {
    for (;;) {
      IntVector v(n);
      bool zero = true;
      for (size_t k = 0; k < n; ++k) {
        long e = ed(rng);
        v[k] = e;
        if (e != 0) zero = false;
      }
      if (!zero || allow_zero) return v;
    }
  };

  for (size_t g = 0; g < r; ++g) {
    bool monomial = opt.monomial_only || (rng() % 4 == 0);
    if (monomial) {
      IntVector a = random_exponent(false);
      ideal.generators.push_back(Generator{a, a, Rat(0)});
    } else {
      IntVector a = random_exponent(false);
      IntVector b = random_exponent(true);
      while (b == a) b = random_exponent(true);
      Rat u = opt.coefficients[rng() % opt.coefficients.size()];
      ideal.generators.push_back(normalize_generator(Generator{a, b, u}));
    }
  }
  return ideal;
}

inline Rat random_nonzero_rat(std::mt19937& rng, long bound = 9) {
  std::uniform_int_distribution<long> nd(-bound, bound);
  std::uniform_int_distribution<long> dd(1, bound);
  long num = 0;
  while (num == 0) num = nd(rng);
  return Rat(num) / Rat(dd(rng));
}

inline IntVector random_direction(std::mt19937& rng, size_t n, long bound = 50) {
  std::uniform_int_distribution<long> d(0, bound);
  for (;;) {
    IntVector v(n);
    bool zero = true;
    for (size_t i = 0; i < n; ++i) {
      v[i] = d(rng);
      if (v[i] != 0) zero = false;
    }
    if (!zero) return v;
  }
}

}  // namespace testsupport
