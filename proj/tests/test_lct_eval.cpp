#include "binlct/lct_eval.hpp"

#include "binlct/parse.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace binlct;
using testsupport::inf;
using testsupport::iv;
using testsupport::q;

TEST_CASE("curve345 at its parametrization ray") {
  IdealTriple t = testsupport::triple_from(testsupport::kCurve345);
  LctBreakdown b = evaluate(t, iv({3, 4, 5}));
  CHECK(b.alpha == std::vector<Int>{8, 9, 10});
  CHECK(b.candidates == std::vector<ExtendedRational>{q(2), q(3, 2), q(13, 9)});
  CHECK(b.value == q(13, 9));
  CHECK(b.star == q(3, 2));
}

TEST_CASE("curve345 at (4,5,6)") {
  IdealTriple t = testsupport::triple_from(testsupport::kCurve345);
  LctBreakdown b = evaluate(t, iv({4, 5, 6}));
  CHECK(b.alpha == std::vector<Int>{10, 11, 12});
  CHECK(b.beta == std::vector<Int>{0, -1, -1});
  CHECK(b.s_v == 2);
  CHECK(b.value == q(16, 11));
  CHECK(b.star == q(3, 2));
}

TEST_CASE("curve345 at the boundary ray (1,3,0)") {
  IdealTriple t = testsupport::triple_from(testsupport::kCurve345);
  LctBreakdown b = evaluate(t, iv({1, 3, 0}));
  CHECK(b.alpha == std::vector<Int>{1, 3, 0});
  CHECK(b.epsilon == std::vector<size_t>{2, 0, 1});
  CHECK(b.s_rank == 2);
  CHECK(b.tilde_s == q(2));
  CHECK(b.star == inf());
  CHECK(b.value == q(2));
}

TEST_CASE("curve681011 worked example, both coefficient vectors") {
  IdealTriple t = testsupport::triple_from(testsupport::kCurve681011);
  LctBreakdown b = evaluate(t, iv({6, 8, 10, 11}));
  CHECK(b.alpha == std::vector<Int>{16, 18, 20, 22});
  CHECK(b.beta == std::vector<Int>{0, 0, 0, 0});
  CHECK(b.r0 == 5);
  CHECK(b.n_seq == std::vector<size_t>{1, 2, 4});
  CHECK(b.s_rank == 3);
  CHECK(b.candidates == std::vector<ExtendedRational>{q(3), q(35, 16), q(37, 18), q(45, 22)});
  CHECK(b.value == q(45, 22));

  IdealTriple t2 = testsupport::triple_from(testsupport::kCurve681011Sign);
  LctBreakdown b2 = evaluate(t2, iv({6, 8, 10, 11}));
  CHECK(b2.r0 == 3);
  CHECK(b2.tilde_s == inf());
  CHECK(b2.n_seq == std::vector<size_t>{1, 2});
  CHECK(b2.candidates == std::vector<ExtendedRational>{inf(), q(35, 16), q(37, 18), q(41, 20)});
  CHECK(b2.value == q(41, 20));
}

TEST_CASE("depcoef evaluations at (4,5,6,0,0)") {
  IdealTriple t1 = testsupport::triple_from(testsupport::kDepCoef1);
  LctBreakdown b1 = evaluate(t1, iv({4, 5, 6, 0, 0}));
  CHECK(b1.alpha == std::vector<Int>{10, 12, 10, 12});
  CHECK(b1.epsilon == std::vector<size_t>{0, 2, 1, 3});
  CHECK(b1.r0 == 5);
  CHECK(b1.n_seq == std::vector<size_t>{1, 3});
  CHECK(b1.candidates == std::vector<ExtendedRational>{q(2), q(15, 10), q(17, 12)});
  CHECK(b1.value == q(17, 12));

  IdealTriple t2 = testsupport::triple_from(testsupport::kDepCoef2);
  LctBreakdown b2 = evaluate(t2, iv({4, 5, 6, 0, 0}));
  CHECK(b2.alpha == b1.alpha);
  CHECK(b2.beta == b1.beta);
  CHECK(b2.epsilon == b1.epsilon);
  CHECK(b2.r0 == 2);
  CHECK(b2.tilde_s == inf());
  CHECK(b2.candidates == std::vector<ExtendedRational>{inf(), q(15, 10), q(15, 10)});
  CHECK(b2.value == q(3, 2));
}

TEST_CASE("evaluate_star examples") {
  CHECK(evaluate_star(testsupport::triple_from(testsupport::kCurve378), iv({3, 7, 8})) == q(9, 7));
  CHECK(evaluate_star(testsupport::triple_from(testsupport::kCurve345), iv({1, 1, 1})) == q(3, 2));
  CHECK(evaluate_star(testsupport::triple_from(testsupport::kCurve345), iv({1, 3, 0})) == inf());
}

TEST_CASE("input validation") {
  IdealTriple t = testsupport::triple_from(testsupport::kCurve345);
  CHECK_THROWS_AS(evaluate(t, iv({0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(t, iv({1, -1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(t, iv({1, 1})), std::invalid_argument);
}

TEST_CASE("scaling invariance of value and star") {
  std::mt19937 rng(51);
  for (const char* text : {testsupport::kCurve345, testsupport::kCurve378,
                           testsupport::kCurve681011, testsupport::kDepCoef2}) {
    IdealTriple t = testsupport::triple_from(text);
    for (int s = 0; s < 25; ++s) {
      IntVector v = testsupport::random_direction(rng, t.var_count(), 9);
      LctBreakdown base = evaluate(t, v);
      for (long lam : {2L, 3L, 7L}) {
        IntVector scaled(v.size());
        for (size_t i = 0; i < v.size(); ++i) scaled[i] = lam * v[i];
        LctBreakdown sb = evaluate(t, scaled);
        CHECK(sb.value == base.value);
        CHECK(sb.star == base.star);
      }
    }
  }
}

TEST_CASE("value never exceeds star") {
  std::mt19937 rng(52);
  for (int t = 0; t < 60; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng);
    IdealTriple triple = triple_of(ideal);
    for (int s = 0; s < 10; ++s) {
      IntVector v = testsupport::random_direction(rng, triple.var_count(), 9);
      LctBreakdown b = evaluate(triple, v);
      CHECK(b.value <= b.star);
      CHECK(b.star == evaluate_star(triple, v));
    }
  }
}

TEST_CASE("column permutation equivariance") {
  std::mt19937 rng(53);
  for (int t = 0; t < 80; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng);
    IdealTriple triple = triple_of(ideal);
    const size_t n = triple.var_count();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    IdealTriple permuted{IntMatrix(n), IntMatrix(n), triple.u};
    for (size_t i = 0; i < triple.gen_count(); ++i) {
      IntVector a(n), b(n);
      for (size_t k = 0; k < n; ++k) {
        a[k] = triple.mplus[i][perm[k]];
        b[k] = triple.mminus[i][perm[k]];
      }
      permuted.mplus.push_row(a);
      permuted.mminus.push_row(b);
    }
    IntVector v = testsupport::random_direction(rng, n, 7);
    IntVector pv(n);
    for (size_t k = 0; k < n; ++k) pv[k] = v[perm[k]];
    CHECK(evaluate(triple, v).value == evaluate(permuted, pv).value);
  }
}

TEST_CASE("monomial triples have value equal to star") {
  std::mt19937 rng(54);
  testsupport::RandomIdealOptions opt;
  opt.monomial_only = true;
  for (int t = 0; t < 60; ++t) {
    GeneralBinomialIdeal ideal = testsupport::random_ideal(rng, opt);
    IdealTriple triple = triple_of(ideal);
    IntVector v = testsupport::random_direction(rng, triple.var_count(), 9);
    LctBreakdown b = evaluate(triple, v);
    CHECK(b.value == b.star);
    Int total = 0;
    for (const Int& x : v) total += x;
    Int best = dot(triple.mplus[0], v);
    for (size_t i = 1; i < triple.gen_count(); ++i) {
      Int d = dot(triple.mplus[i], v);
      if (d < best) best = d;
    }
    CHECK(b.value == ExtendedRational::ratio(total, best));
  }
}

TEST_CASE("tie permutations agree at the depcoef tie point") {
  IdealTriple t = testsupport::triple_from(testsupport::kDepCoef2);
  // alpha = (10,12,10,12): both orders of each tied pair
  for (std::vector<size_t> eps : {std::vector<size_t>{0, 2, 1, 3}, {2, 0, 1, 3},
                                  {0, 2, 3, 1}, {2, 0, 3, 1}}) {
    LctBreakdown b = evaluate_with_permutation(t, iv({4, 5, 6, 0, 0}), eps);
    CHECK(b.value == q(3, 2));
  }
  CHECK_THROWS_AS(evaluate_with_permutation(t, iv({4, 5, 6, 0, 0}), {1, 0, 2, 3}),
                  std::invalid_argument);
}
