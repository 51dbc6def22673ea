#include "binlct/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace binlct {

ResolutionFan orthant_fan(size_t n) {
  if (n == 0) throw std::invalid_argument("orthant_fan: zero dimension");
  ResolutionFan fan;
  fan.dim = n;
  fan.vertices = IntMatrix::identity(n).rows();
  std::vector<uint32_t> cone(n);
  for (size_t i = 0; i < n; ++i) cone[i] = static_cast<uint32_t>(i);
  fan.cones.push_back(std::move(cone));
  return fan;
}

bool fan_is_regular(const ResolutionFan& fan) {
  for (const auto& cone : fan.cones) {
    IntMatrix m(fan.dim);
    for (uint32_t idx : cone) m.push_row(fan.vertices[idx]);
    Int d = determinant(m);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

TransformState initial_state(const IdealTriple& triple) {
  TransformState s;
  for (size_t i = 0; i < triple.gen_count(); ++i) {
    s.a.push_back(triple.mplus[i]);
    s.b.push_back(triple.mminus[i]);
    s.u.push_back(triple.u[i]);
  }
  return s;
}

IntVector state_beta(const TransformState& s, size_t i) { return sub(s.a[i], s.b[i]); }

IntVector state_alpha(const TransformState& s, size_t i) { return min_entrywise(s.a[i], s.b[i]); }

bool operator<(const LPair& x, const LPair& y) {
  if (x.l != y.l) return x.l < y.l;
  return x.lp < y.lp;
}

namespace {

std::set<std::pair<uint32_t, uint32_t>> two_faces(const ResolutionFan& fan) {
  std::set<std::pair<uint32_t, uint32_t>> faces;
  for (const auto& cone : fan.cones)
    for (size_t x = 0; x < cone.size(); ++x)
      for (size_t y = x + 1; y < cone.size(); ++y) faces.emplace(cone[x], cone[y]);
  return faces;
}

struct Scan {
  LPair lp;
  std::pair<uint32_t, uint32_t> center{0, 0};
};

Scan scan_invariant(const IntVector& beta, const ResolutionFan& fan) {
  if (beta.size() != fan.vertices.size())
    throw std::invalid_argument("l_invariant: vector length mismatch");
  Scan s;
  for (const auto& [i, j] : two_faces(fan)) {
    if (beta[i] == 0 || beta[j] == 0) continue;
    if ((beta[i] > 0) == (beta[j] > 0)) continue;
    Int gap = beta[i] > beta[j] ? Int(beta[i] - beta[j]) : Int(beta[j] - beta[i]);
    if (gap > s.lp.l) {
      s.lp.l = gap;
      s.lp.lp = 1;
      s.center = {i, j};
    } else if (gap == s.lp.l) {
      ++s.lp.lp;
    }
  }
  return s;
}

}  // namespace

LPair l_invariant(const IntVector& beta, const ResolutionFan& fan) {
  return scan_invariant(beta, fan).lp;
}

void star_subdivide(ResolutionFan& fan, TransformState& state, uint32_t i, uint32_t j) {
  if (i == j || i >= fan.vertices.size() || j >= fan.vertices.size())
    throw std::invalid_argument("star_subdivide: bad vertex indexes");
  bool is_face = false;
  for (const auto& cone : fan.cones) {
    if (std::binary_search(cone.begin(), cone.end(), i) &&
        std::binary_search(cone.begin(), cone.end(), j)) {
      is_face = true;
      break;
    }
  }
  if (!is_face) throw std::invalid_argument("star_subdivide: {i,j} is not a 2-face");

  const uint32_t fresh = static_cast<uint32_t>(fan.vertices.size());
  fan.vertices.push_back(add(fan.vertices[i], fan.vertices[j]));

  std::vector<std::vector<uint32_t>> cones;
  cones.reserve(fan.cones.size() + 4);
  for (auto& cone : fan.cones) {
    bool has_i = std::binary_search(cone.begin(), cone.end(), i);
    bool has_j = std::binary_search(cone.begin(), cone.end(), j);
    if (!has_i || !has_j) {
      cones.push_back(std::move(cone));
      continue;
    }
    std::vector<uint32_t> child_i, child_j;
    child_i.reserve(cone.size());
    child_j.reserve(cone.size());
    for (uint32_t idx : cone) {
      if (idx != i) child_i.push_back(idx);
      if (idx != j) child_j.push_back(idx);
    }
    child_i.push_back(fresh);
    child_j.push_back(fresh);
    cones.push_back(std::move(child_i));
    cones.push_back(std::move(child_j));
  }
  fan.cones = std::move(cones);

  for (size_t g = 0; g < state.gen_count(); ++g) {
    state.a[g].push_back(state.a[g][i] + state.a[g][j]);
    state.b[g].push_back(state.b[g][i] + state.b[g][j]);
  }
}

// Permissible pairs are tracked incrementally across blow-ups: existing
// coordinates of the target never change, the center pair stops being a
// 2-face, and the only new 2-faces involve the fresh vertex (paired with
// every vertex of a replaced cone).
void resolve_target(ResolutionFan& fan, TransformState& state, const TargetSelector& selector,
                    const std::string& label, std::vector<BlowupRecord>& trace) {
  IntVector target = selector(state);
  if (target.size() != fan.vertices.size())
    throw std::invalid_argument("resolve_target: selector length mismatch");

  std::map<Int, std::set<std::pair<uint32_t, uint32_t>>> by_gap;
  auto note_pair = [&](uint32_t a, uint32_t b) {
    if (target[a] == 0 || target[b] == 0) return;
    if ((target[a] > 0) == (target[b] > 0)) return;
    Int gap = target[a] > target[b] ? Int(target[a] - target[b]) : Int(target[b] - target[a]);
    by_gap[gap].emplace(std::min(a, b), std::max(a, b));
  };
  for (const auto& [a, b] : two_faces(fan)) note_pair(a, b);

  bool have_prev = false;
  LPair prev;
  while (!by_gap.empty()) {
    auto last = std::prev(by_gap.end());
    LPair cur{last->first, last->second.size()};
    auto [i, j] = *last->second.begin();
    if (have_prev && !(cur < prev))
      throw std::logic_error("resolve_target: (L,Lp) failed to decrease at " + label);
    prev = cur;
    have_prev = true;

    BlowupRecord rec;
    rec.step = trace.size() + 1;
    rec.target = label;
    rec.center_i = i;
    rec.center_j = j;
    rec.center_vi = fan.vertices[i];
    rec.center_vj = fan.vertices[j];
    rec.new_vertex = add(rec.center_vi, rec.center_vj);
    rec.before = cur;
    trace.push_back(std::move(rec));

    std::set<uint32_t> touched;
    for (const auto& cone : fan.cones) {
      if (std::binary_search(cone.begin(), cone.end(), i) &&
          std::binary_search(cone.begin(), cone.end(), j))
        touched.insert(cone.begin(), cone.end());
    }

    star_subdivide(fan, state, i, j);
    const uint32_t fresh = static_cast<uint32_t>(fan.vertices.size() - 1);

    target = selector(state);
    if (target.size() != fan.vertices.size() ||
        target[fresh] != target[i] + target[j])
      throw std::logic_error("resolve_target: transform lost the sum rule at " + label);

    for (const auto& cone : fan.cones) {
      if (!std::binary_search(cone.begin(), cone.end(), fresh)) continue;
      IntMatrix m(fan.dim);
      for (uint32_t idx : cone) m.push_row(fan.vertices[idx]);
      Int d = determinant(m);
      if (d != 1 && d != -1)
        throw std::logic_error("resolve_target: subdivision produced a non-regular cone");
    }

    last->second.erase({i, j});
    if (last->second.empty()) by_gap.erase(last);
    for (uint32_t k : touched) note_pair(k, fresh);
  }
}

ResolvedCheck assert_pseudo_resolved(const ResolutionFan& fan, const TransformState& state) {
  const size_t r = state.gen_count();
  std::vector<IntVector> beta(r), alpha(r);
  for (size_t i = 0; i < r; ++i) {
    beta[i] = state_beta(state, i);
    alpha[i] = state_alpha(state, i);
  }
  for (size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    for (size_t i = 0; i < r; ++i) {
      if (state.u[i] == 0) continue;
      bool pos = false, neg = false;
      for (uint32_t idx : cone) {
        if (beta[i][idx] > 0) pos = true;
        if (beta[i][idx] < 0) neg = true;
      }
      if (pos && neg)
        return {false, "generator " + std::to_string(i + 1) + " is not hyperbolic on cone #" +
                           std::to_string(c + 1)};
    }
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = i + 1; j < r; ++j) {
        bool pos = false, neg = false;
        for (uint32_t idx : cone) {
          Int d = alpha[i][idx] - alpha[j][idx];
          if (d > 0) pos = true;
          if (d < 0) neg = true;
        }
        if (pos && neg)
          return {false, "alpha factors of generators " + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + " are incomparable on cone #" +
                             std::to_string(c + 1)};
      }
    }
  }
  return {true, ""};
}

PseudoResolution pseudo_resolve(const IdealTriple& triple) {
  PseudoResolution out;
  out.fan = orthant_fan(triple.var_count());
  out.state = initial_state(triple);

  // Phase 1: flatten each binomial's strict-transform exponent.
  for (size_t i = 0; i < triple.gen_count(); ++i) {
    if (triple.u[i] == 0) continue;
    resolve_target(
        out.fan, out.state, [i](const TransformState& s) { return state_beta(s, i); },
        "gen " + std::to_string(i + 1), out.trace);
  }
  // Phase 2: order the monomial factors pairwise.
  for (size_t i = 0; i < triple.gen_count(); ++i) {
    for (size_t j = i + 1; j < triple.gen_count(); ++j) {
      resolve_target(
          out.fan, out.state,
          [i, j](const TransformState& s) {
            return sub(state_alpha(s, i), state_alpha(s, j));
          },
          "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", out.trace);
    }
  }

  ResolvedCheck check = assert_pseudo_resolved(out.fan, out.state);
  if (!check.ok) throw std::logic_error("pseudo_resolve: " + check.violation);
  return out;
}

PseudoResolution pseudo_resolve(const GeneralBinomialIdeal& ideal) {
  return pseudo_resolve(triple_of(ideal));
}

ExtendedRational lct_via_resolution(const IdealTriple& triple) {
  PseudoResolution res = pseudo_resolve(triple);
  ExtendedRational best = ExtendedRational::infinity();
  for (const IntVector& v : res.fan.vertices) {
    ExtendedRational val = evaluate(triple, v).value;
    if (val < best) best = val;
  }
  return best;
}

ExtendedRational lct_via_resolution(const GeneralBinomialIdeal& ideal) {
  return lct_via_resolution(triple_of(ideal));
}

}  // namespace binlct
