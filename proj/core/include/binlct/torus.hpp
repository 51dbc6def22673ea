#pragma once

#include "binlct/ideal.hpp"

#include <optional>
#include <span>
#include <vector>

namespace binlct {

/// Outcome of restricting a set of generators to the torus. At most one of
/// witness / monomial_index is present; is_unit holds iff one of them is.
struct TorusVerdict {
  bool is_unit = false;
  /// Integer relation lambda among the exponent differences d_i = b_i - a_i
  /// with prod u_i^{lambda_i} != 1.
  std::optional<IntVector> witness;
  /// 0-based index of a monomial generator (a Laurent unit).
  std::optional<size_t> monomial_index;
};

/// Decides whether the generators span the unit ideal in the Laurent
/// polynomial ring. On the torus each binomial is a unit multiple of
/// 1 - u x^(b-a); the ideal is the unit ideal iff some generator is a
/// monomial or some integer relation among the d_i has coefficient product
/// different from 1. Checking a kernel-lattice basis suffices because
/// lambda -> prod u^lambda is a homomorphism.
TorusVerdict is_torus_unit(std::span<const Generator> gens);

/// Smallest prefix length j (generators taken in epsilon order) whose
/// generators are the unit ideal on the torus; gen_count()+1 when no prefix
/// is. epsilon holds 0-based generator indexes.
size_t r_zero(const IdealTriple& triple, std::span<const size_t> epsilon);

}  // namespace binlct
