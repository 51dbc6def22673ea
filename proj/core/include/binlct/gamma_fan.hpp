#pragma once

#include "binlct/lct_eval.hpp"

#include <vector>

namespace binlct {

/// Hyperplane normals cutting the orthant into the fan on whose rays the lct
/// function attains its minimum. The first identity_count rows are the
/// coordinate hyperplanes; the rest are primitive mixed-sign difference rows.
struct HyperplaneSet {
  IntMatrix rows;
  size_t identity_count = 0;
};

/// n identity rows plus the normalized rows built from M+_i - M-_i and all
/// four sign combinations of M±_i - M±_j (i != j): zero rows and rows whose
/// entries are all >= 0 or all <= 0 are dropped, the rest are made primitive
/// and deduplicated.
HyperplaneSet hyperplane_rows(const IdealTriple& triple);

/// All primitive vectors in the closed nonnegative orthant spanning the
/// nullspace of some (n-1) linearly independent rows, deduplicated, in
/// lexicographic order. For n == 1 returns {(1)}.
std::vector<IntVector> enumerate_rays(const HyperplaneSet& h);

struct RayTable {
  std::vector<IntVector> rays;  // lexicographic order
  std::vector<LctBreakdown> breakdowns;
  ExtendedRational global;
  std::vector<IntVector> argmin;
  size_t hyperplane_count = 0;
  size_t subset_count = 0;  // independent (n-1)-subsets inspected
};

/// Evaluates the lct function at every candidate ray and returns the table,
/// the minimum and all minimizing rays. Evaluation may be data parallel; the
/// result does not depend on the thread count.
RayTable global_lct(const IdealTriple& triple, unsigned threads = 1);
RayTable global_lct(const GeneralBinomialIdeal& ideal, unsigned threads = 1);

}  // namespace binlct
