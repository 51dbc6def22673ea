#pragma once

#include "binlct/linalg.hpp"

#include <vector>

namespace binlct {

/// conv(union of gamma_i + nonnegative orthant). Generators are nonzero
/// vectors with nonnegative entries; there is at least one.
struct NewtonPolyhedron {
  std::vector<IntVector> generators;
  size_t dim = 0;
};

/// Validates and builds a Newton polyhedron; throws std::invalid_argument.
NewtonPolyhedron make_newton(std::vector<IntVector> generators);

/// Exponent c of the monomial divisor z^c shifting the numerator to c + 1.
struct DivisorShift {
  IntVector c;
};

/// Membership q in P, decided by exact rational feasibility of
/// lambda >= 0, sum lambda = 1, sum lambda_i gamma_i <= q.
bool newton_contains(const NewtonPolyhedron& p, const std::vector<Rat>& q);

/// Minimal m with m * target in P (target strictly positive), solved as an
/// exact rational linear program over the same membership system.
Rat minimal_containment_scale(const NewtonPolyhedron& p, const IntVector& target);

/// Howald's threshold min over candidate rays of (c+1).v / min_i gamma_i.v,
/// cross-checked against 1/m with m minimal such that m(c+1) lies in P.
ExtendedRational howald_lct(const NewtonPolyhedron& p, const DivisorShift& shift);

}  // namespace binlct
