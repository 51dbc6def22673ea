#pragma once

#include "binlct/lct_eval.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace binlct {

/// Regular fan supported on the nonnegative orthant. Only maximal cones are
/// stored; 2-faces are pairs of vertices occurring together in some maximal
/// cone. The first dim vertices are the standard basis.
struct ResolutionFan {
  size_t dim = 0;
  std::vector<IntVector> vertices;
  std::vector<std::vector<uint32_t>> cones;  // sorted index sets of size dim
};

ResolutionFan orthant_fan(size_t n);

/// Every maximal cone has vertex determinant +-1.
bool fan_is_regular(const ResolutionFan& fan);

/// Total transforms of the generators in vertex coordinates: entry k of a_i
/// equals the original exponent vector paired with vertex k.
struct TransformState {
  std::vector<IntVector> a;
  std::vector<IntVector> b;
  std::vector<Rat> u;

  size_t gen_count() const { return u.size(); }
};

TransformState initial_state(const IdealTriple& triple);

IntVector state_beta(const TransformState& s, size_t i);   // a_i - b_i
IntVector state_alpha(const TransformState& s, size_t i);  // min(a_i, b_i)

/// Maximal opposite-sign gap over 2-faces and the number of attaining pairs;
/// l == 0 iff no permissible pair exists (and then lp == 0).
struct LPair {
  Int l = 0;
  size_t lp = 0;

  friend bool operator==(const LPair&, const LPair&) = default;
  friend bool operator<(const LPair& x, const LPair& y);  // lexicographic
};

LPair l_invariant(const IntVector& beta, const ResolutionFan& fan);

/// Star subdivision at the 2-face {i, j}: appends vertex v_i + v_j, replaces
/// every maximal cone containing both indexes by the two cones with i resp.
/// j swapped for the new vertex, and extends every exponent vector by the
/// sum of its i and j coordinates. Throws std::invalid_argument when {i, j}
/// is not a 2-face.
void star_subdivide(ResolutionFan& fan, TransformState& state, uint32_t i, uint32_t j);

struct BlowupRecord {
  size_t step = 0;  // 1-based, continuous across one resolution run
  std::string target;
  uint32_t center_i = 0;
  uint32_t center_j = 0;
  IntVector center_vi;
  IntVector center_vj;
  IntVector new_vertex;
  LPair before;
};

using TargetSelector = std::function<IntVector(const TransformState&)>;

/// Repeatedly star-subdivides at the lexicographically smallest 2-face
/// attaining (L, Lp) of the selected vector until L == 0, appending one
/// record per blow-up. Checks that (L, Lp) strictly decreases and that new
/// cones stay regular, throwing std::logic_error otherwise.
void resolve_target(ResolutionFan& fan, TransformState& state, const TargetSelector& selector,
                    const std::string& label, std::vector<BlowupRecord>& trace);

struct ResolvedCheck {
  bool ok = false;
  std::string violation;  // first violation when !ok
};

/// True iff on every maximal cone each binomial is hyperbolic (beta+ or
/// beta- vanishes on the cone) and the alpha vectors are totally ordered by
/// componentwise <=.
ResolvedCheck assert_pseudo_resolved(const ResolutionFan& fan, const TransformState& state);

struct PseudoResolution {
  ResolutionFan fan;
  TransformState state;
  std::vector<BlowupRecord> trace;
};

/// Phase 1 flattens each binomial's beta; phase 2 orders each pair of
/// monomial factors alpha_i, alpha_j. The result passes
/// assert_pseudo_resolved.
PseudoResolution pseudo_resolve(const IdealTriple& triple);
PseudoResolution pseudo_resolve(const GeneralBinomialIdeal& ideal);

/// Minimum of the lct function over the vertices of a pseudo-resolution fan.
ExtendedRational lct_via_resolution(const IdealTriple& triple);
ExtendedRational lct_via_resolution(const GeneralBinomialIdeal& ideal);

}  // namespace binlct
