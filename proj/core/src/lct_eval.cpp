#include "binlct/lct_eval.hpp"

#include "binlct/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace binlct {

namespace {

void validate_direction(const IdealTriple& triple, const IntVector& v) {
  if (v.size() != triple.var_count())
    throw std::invalid_argument("evaluate: direction length mismatch");
  bool nonzero = false;
  for (const Int& x : v) {
    if (x < 0) throw std::invalid_argument("evaluate: negative entry in direction");
    if (x != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("evaluate: zero direction");
}

LctBreakdown evaluate_impl(const IdealTriple& triple, const IntVector& v,
                           std::vector<size_t> epsilon, bool epsilon_given) {
  validate_direction(triple, v);
  const size_t r = triple.gen_count();
  if (r == 0) throw std::invalid_argument("evaluate: triple has no generators");

  LctBreakdown out;
  out.v = v;
  out.alpha.resize(r);
  out.beta.resize(r);
  for (size_t i = 0; i < r; ++i) {
    Int plus = dot(triple.mplus[i], v);
    Int minus = dot(triple.mminus[i], v);
    out.alpha[i] = plus < minus ? plus : minus;
    out.beta[i] = plus - minus;
  }

  if (epsilon_given) {
    if (epsilon.size() != r) throw std::invalid_argument("evaluate: permutation size mismatch");
    std::vector<bool> seen(r, false);
    for (size_t i : epsilon) {
      if (i >= r || seen[i]) throw std::invalid_argument("evaluate: not a permutation");
      seen[i] = true;
    }
    for (size_t k = 0; k + 1 < r; ++k)
      if (out.alpha[epsilon[k]] > out.alpha[epsilon[k + 1]])
        throw std::invalid_argument("evaluate: permutation does not sort alpha");
    out.epsilon = std::move(epsilon);
  } else {
    out.epsilon.resize(r);
    std::iota(out.epsilon.begin(), out.epsilon.end(), size_t{0});
    std::stable_sort(out.epsilon.begin(), out.epsilon.end(),
                     [&](size_t x, size_t y) { return out.alpha[x] < out.alpha[y]; });
  }

  out.r0 = r_zero(triple, out.epsilon);

  // Greedy n-sequence over the epsilon order, positions 1..r0-1: a position
  // joins when its M row leaves the rational span of the rows collected so
  // far. Position 1 always opens the sequence (a zero M row there would be a
  // monomial, which forces r0 == 1 and an empty scan).
  RowSpace span(triple.var_count());
  for (size_t j = 1; j < out.r0; ++j) {
    IntVector row = triple_m_row(triple, out.epsilon[j - 1]);
    if (j == 1) {
      out.n_seq.push_back(1);
      span.insert(row);
    } else if (!span.contains(row)) {
      out.n_seq.push_back(j);
      span.insert(row);
    }
  }
  out.s0 = out.n_seq.size();
  out.s_rank = rank_over_q(triple_m(triple));
  out.tilde_s =
      out.r0 == r + 1 ? ExtendedRational(Int(out.s_rank)) : ExtendedRational::infinity();

  // s_v: the largest t <= min(s0+1, r) with beta vanishing at the first t-1
  // n-sequence positions.
  const size_t cap = std::min(out.s0 + 1, r);
  size_t s_v = 1;
  while (s_v + 1 <= cap && out.beta[out.epsilon[out.n_seq[s_v - 1] - 1]] == 0) ++s_v;
  out.s_v = s_v;

  Int total = 0;
  for (const Int& x : v) total += x;

  out.candidates.push_back(out.tilde_s);
  for (size_t t = 1; t <= out.s_v; ++t) {
    // The t = s0+1 fraction uses the generator at position r0 and only
    // participates when r0 <= r (otherwise there is no such generator).
    size_t pos;
    if (t <= out.s0) {
      pos = out.n_seq[t - 1];
    } else {
      if (out.r0 > r) continue;
      pos = out.r0;
    }
    const Int& denom = out.alpha[out.epsilon[pos - 1]];
    Int num = total;
    for (size_t j = 1; j < t; ++j) num += denom - out.alpha[out.epsilon[out.n_seq[j - 1] - 1]];
    out.candidates.push_back(ExtendedRational::ratio(num, denom));
  }

  out.value = *std::min_element(out.candidates.begin(), out.candidates.end());
  out.star = ExtendedRational::ratio(total, out.alpha[out.epsilon[0]]);
  return out;
}

}  // namespace

LctBreakdown evaluate(const IdealTriple& triple, const IntVector& v) {
  return evaluate_impl(triple, v, {}, false);
}

LctBreakdown evaluate_with_permutation(const IdealTriple& triple, const IntVector& v,
                                       std::vector<size_t> epsilon) {
  return evaluate_impl(triple, v, std::move(epsilon), true);
}

ExtendedRational evaluate_star(const IdealTriple& triple, const IntVector& v) {
  validate_direction(triple, v);
  Int total = 0;
  for (const Int& x : v) total += x;
  Int best = 0;
  bool first = true;
  for (size_t i = 0; i < triple.gen_count(); ++i) {
    Int plus = dot(triple.mplus[i], v);
    Int minus = dot(triple.mminus[i], v);
    Int a = plus < minus ? plus : minus;
    if (first || a < best) {
      best = a;
      first = false;
    }
  }
  return ExtendedRational::ratio(total, best);
}

}  // namespace binlct
