#pragma once

#include "binlct/ideal.hpp"

#include <vector>

namespace binlct {

/// Full diagnostic of one evaluation of the lct function at a ray.
///
/// epsilon holds 0-based generator indexes sorted by alpha (stable in the
/// original order on ties). r0 and the entries of n_seq are prefix lengths
/// in the epsilon order, so they are 1-based; n_seq is strictly increasing
/// with n_seq[0] == 1 whenever it is nonempty.
struct LctBreakdown {
  IntVector v;
  std::vector<Int> alpha;  // componentwise min(M+ v, M- v), generator order
  std::vector<Int> beta;   // (M+ - M-) v, generator order
  std::vector<size_t> epsilon;
  size_t r0 = 0;  // in 1..r+1
  std::vector<size_t> n_seq;
  size_t s0 = 0;
  size_t s_rank = 0;  // rank of M+ - M-
  ExtendedRational tilde_s;
  size_t s_v = 0;
  std::vector<ExtendedRational> candidates;  // tilde_s first, then fractions
  ExtendedRational value;
  ExtendedRational star;
};

/// Evaluates lct_(M+,M-,u) at v (entries >= 0, not all zero): the minimum of
/// tilde_s and the candidate fractions
///   (|v| + sum_{j<t} (alpha_eps(n_t) - alpha_eps(n_j))) / alpha_eps(n_t)
/// for t = 1..s_v, where the t = s0+1 fraction participates only when
/// r0 <= r. Zero denominators give +infinity.
LctBreakdown evaluate(const IdealTriple& triple, const IntVector& v);

/// lct* = |v| / min_i alpha_i, +infinity on a zero denominator.
ExtendedRational evaluate_star(const IdealTriple& triple, const IntVector& v);

/// evaluate with a caller-supplied alpha-sorting permutation; epsilon must
/// sort alpha ascending (0-based indexes). Used to study tie-breaking.
LctBreakdown evaluate_with_permutation(const IdealTriple& triple, const IntVector& v,
                                       std::vector<size_t> epsilon);

}  // namespace binlct
