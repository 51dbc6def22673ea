#include "binlct/torus.hpp"

#include "binlct/parse.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace binlct;
using testsupport::iv;

namespace {

std::vector<Generator> gens_of(const char* text) { return parse_ideal(text).generators; }

// Exhaustive search for a relation with mismatched coefficient product,
// independent of the kernel-lattice route.
bool brute_force_unit(const std::vector<Generator>& gens, long bound) {
  for (const Generator& g : gens)
    if (is_monomial_generator(g)) return true;
  const size_t r = gens.size();
  const size_t n = gens.front().a.size();
  std::vector<IntVector> d;
  for (const Generator& g : gens) d.push_back(sub(g.b, g.a));
  std::vector<long> lam(r, -bound);
  for (;;) {
    bool all_zero = std::all_of(lam.begin(), lam.end(), [](long x) { return x == 0; });
    if (!all_zero) {
      bool relation = true;
      for (size_t j = 0; j < n && relation; ++j) {
        Int s = 0;
        for (size_t i = 0; i < r; ++i) s += Int(lam[i]) * d[i][j];
        if (s != 0) relation = false;
      }
      if (relation) {
        Rat prod = 1;
        for (size_t i = 0; i < r; ++i) prod *= rat_pow(gens[i].u, Int(lam[i]));
        if (prod != 1) return true;
      }
    }
    size_t k = 0;
    while (k < r && lam[k] == bound) lam[k++] = -bound;
    if (k == r) return false;
    ++lam[k];
  }
}

}  // namespace

TEST_CASE("coefficient witness makes the sign-flipped prefix a torus unit") {
  auto gens = gens_of(
      "vars x1 x2 x3\n"
      "x2^2 - x1*x3\n"
      "x1^3 - x2*x3\n"
      "x1^2*x2 + x3^2\n");
  TorusVerdict v = is_torus_unit(gens);
  CHECK(v.is_unit);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(v.monomial_index.has_value());
  // witness soundness: lambda kills the exponent matrix and the character is not 1
  IntVector lam = *v.witness;
  const size_t n = 3;
  for (size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (size_t i = 0; i < gens.size(); ++i) s += lam[i] * (gens[i].b[j] - gens[i].a[j]);
    CHECK(s == 0);
  }
  Rat prod = 1;
  for (size_t i = 0; i < gens.size(); ++i) prod *= rat_pow(gens[i].u, lam[i]);
  CHECK(prod != 1);
}

TEST_CASE("the curve681011 generators are not a torus unit") {
  auto gens = gens_of(testsupport::kCurve681011);
  CHECK_FALSE(is_torus_unit(gens).is_unit);
}

TEST_CASE("a monomial generator is a torus unit") {
  auto gens = gens_of("vars x1 x2\nx1^2\n");
  TorusVerdict v = is_torus_unit(gens);
  CHECK(v.is_unit);
  CHECK(v.monomial_index == size_t{0});
}

TEST_CASE("r_zero on the curve345 triple is r+1") {
  IdealTriple t = testsupport::triple_from(testsupport::kCurve345);
  std::vector<size_t> eps{0, 1, 2};
  CHECK(r_zero(t, eps) == 4);
}

TEST_CASE("r_zero on depcoef2 with the tie-broken ordering is 2") {
  IdealTriple t = testsupport::triple_from(testsupport::kDepCoef2);
  std::vector<size_t> eps{0, 2, 1, 3};  // alpha ordering at v = (4,5,6,0,0)
  CHECK(r_zero(t, eps) == 2);
  IdealTriple t1 = testsupport::triple_from(testsupport::kDepCoef1);
  CHECK(r_zero(t1, eps) == 5);
}

TEST_CASE("a monomial cut short by its position bounds r_zero") {
  IdealTriple t = testsupport::triple_from(
      "vars x y\n"
      "x - y\n"
      "x^2*y\n"
      "x^3 - y^2\n");
  std::vector<size_t> eps{0, 1, 2};
  CHECK(r_zero(t, eps) == 2);
}

TEST_CASE("verdicts agree with the brute-force oracle on small instances") {
  std::mt19937 rng(41);
  testsupport::RandomIdealOptions opt;
  opt.max_vars = 3;
  opt.max_gens = 3;
  opt.max_exp = 2;
  opt.coefficients = {Rat(1), Rat(-1)};
  for (int t = 0; t < 150; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng, opt);
    bool expected = brute_force_unit(ideal.generators, 10);
    CHECK(is_torus_unit(ideal.generators).is_unit == expected);
  }
}

TEST_CASE("adding a generator preserves unit verdicts") {
  std::mt19937 rng(42);
  testsupport::RandomIdealOptions opt;
  opt.max_vars = 3;
  opt.max_gens = 3;
  opt.max_exp = 3;
  for (int t = 0; t < 150; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng, opt);
    if (!is_torus_unit(ideal.generators).is_unit) continue;
    GeneralBinomialIdeal extra = testsupport::random_ideal(rng, opt);
    std::vector<Generator> grown = ideal.generators;
    Generator g = extra.generators.front();
    g.a.resize(ideal.var_count(), Int(0));
    g.b.resize(ideal.var_count(), Int(0));
    if (g.a == g.b && g.u != 0) continue;
    grown.push_back(g);
    CHECK(is_torus_unit(grown).is_unit);
  }
}

TEST_CASE("random unit verdicts come with sound evidence") {
  std::mt19937 rng(44);
  testsupport::RandomIdealOptions opt;
  opt.max_vars = 3;
  opt.max_gens = 4;
  size_t with_witness = 0;
  for (int t = 0; t < 200; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng, opt);
    TorusVerdict v = is_torus_unit(ideal.generators);
    if (!v.is_unit) {
      CHECK_FALSE(v.witness.has_value());
      CHECK_FALSE(v.monomial_index.has_value());
      continue;
    }
    CHECK(v.witness.has_value() != v.monomial_index.has_value());
    if (v.monomial_index) {
      CHECK(is_monomial_generator(ideal.generators[*v.monomial_index]));
      continue;
    }
    ++with_witness;
    const IntVector& lam = *v.witness;
    for (size_t j = 0; j < ideal.var_count(); ++j) {
      Int s = 0;
      for (size_t i = 0; i < ideal.generators.size(); ++i)
        s += lam[i] * (ideal.generators[i].b[j] - ideal.generators[i].a[j]);
      CHECK(s == 0);
    }
    Rat prod = 1;
    for (size_t i = 0; i < ideal.generators.size(); ++i)
      prod *= rat_pow(ideal.generators[i].u, lam[i]);
    CHECK(prod != 1);
  }
  CHECK(with_witness > 0);
}

TEST_CASE("the verdict depends on the generator set, not its order") {
  std::mt19937 rng(43);
  testsupport::RandomIdealOptions opt;
  opt.max_vars = 3;
  opt.max_gens = 4;
  for (int t = 0; t < 100; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng, opt);
    bool base = is_torus_unit(ideal.generators).is_unit;
    std::vector<Generator> shuffled = ideal.generators;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(is_torus_unit(shuffled).is_unit == base);
  }
}
