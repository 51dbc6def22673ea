#include "binlct/newton.hpp"

#include "binlct/gamma_fan.hpp"
#include "binlct/ideal.hpp"

#include <optional>
#include <stdexcept>

namespace binlct {

NewtonPolyhedron make_newton(std::vector<IntVector> generators) {
  if (generators.empty()) throw std::invalid_argument("newton: no generators");
  const size_t dim = generators.front().size();
  if (dim == 0) throw std::invalid_argument("newton: zero dimension");
  for (const IntVector& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("newton: generator length mismatch");
    if (is_zero(g)) throw std::invalid_argument("newton: zero generator vector");
    for (const Int& x : g)
      if (x < 0) throw std::invalid_argument("newton: negative exponent");
  }
  return {std::move(generators), dim};
}

namespace {

// Exact two-phase simplex with Bland's rule for
//   minimize c.x  over  { x >= 0 : A x = b },  b >= 0.
// Returns nullopt when infeasible; callers pose bounded problems only.
class Simplex {
public:
  Simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  std::optional<Rat> minimize() {
    const size_t m = a_.size();
    const size_t n = c_.size();

    // Phase 1: minimize the sum of one artificial variable per row.
    for (size_t i = 0; i < m; ++i) {
      for (size_t k = 0; k < m; ++k) a_[i].push_back(i == k ? Rat(1) : Rat(0));
    }
    basis_.resize(m);
    for (size_t i = 0; i < m; ++i) basis_[i] = n + i;
    std::vector<Rat> phase1(n + m, Rat(0));
    for (size_t i = 0; i < m; ++i) phase1[n + i] = 1;
    banned_ = n;  // artificial columns may not re-enter once out

    Rat opt = run(phase1, n + m);
    if (opt != 0) return std::nullopt;

    // Drive leftover artificial variables out of the basis; rows that cannot
    // pivot are redundant equations and stay with a zero artificial.
    for (size_t i = 0; i < m; ++i) {
      if (basis_[i] < n) continue;
      for (size_t j = 0; j < n; ++j) {
        if (a_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }

    std::vector<Rat> phase2 = c_;
    phase2.resize(n + m, Rat(0));
    return run(phase2, n + m);
  }

private:
  Rat objective(const std::vector<Rat>& c) const {
    Rat v = 0;
    for (size_t i = 0; i < basis_.size(); ++i) v += c[basis_[i]] * b_[i];
    return v;
  }

  void pivot(size_t row, size_t col) {
    Rat p = a_[row][col];
    for (auto& x : a_[row]) x /= p;
    b_[row] /= p;
    for (size_t i = 0; i < a_.size(); ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rat f = a_[i][col];
      for (size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  Rat run(const std::vector<Rat>& c, size_t ncols) {
    const size_t m = a_.size();
    for (;;) {
      // reduced costs via the basic multipliers
      std::vector<Rat> y(m, Rat(0));
      for (size_t i = 0; i < m; ++i) y[i] = c[basis_[i]];
      size_t entering = ncols;
      for (size_t j = 0; j < ncols; ++j) {
        bool basic = false;
        for (size_t i = 0; i < m; ++i)
          if (basis_[i] == j) basic = true;
        if (basic) continue;
        if (j >= banned_ && c[j] == 0) continue;  // retired artificial column
        Rat reduced = c[j];
        for (size_t i = 0; i < m; ++i) reduced -= y[i] * a_[i][j];
        if (reduced < 0) {
          entering = j;  // Bland: smallest index
          break;
        }
      }
      if (entering == ncols) return objective(c);

      size_t leaving = m;
      Rat best_ratio = 0;
      for (size_t i = 0; i < m; ++i) {
        if (a_[i][entering] <= 0) continue;
        Rat ratio = b_[i] / a_[i][entering];
        if (leaving == m || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == m) throw std::logic_error("simplex: objective unbounded below");
      pivot(leaving, entering);
    }
  }

  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_;
  std::vector<Rat> c_;
  std::vector<size_t> basis_;
  size_t banned_ = 0;
};

}  // namespace

bool newton_contains(const NewtonPolyhedron& p, const std::vector<Rat>& point) {
  if (point.size() != p.dim) throw std::invalid_argument("newton_contains: dimension mismatch");
  const size_t q = p.generators.size();

  // lambda >= 0, slack s >= 0:  sum lambda = 1,  sum lambda_i gamma_ij + s_j = point_j
  const size_t nvars = q + p.dim;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  {
    std::vector<Rat> row(nvars, Rat(0));
    for (size_t i = 0; i < q; ++i) row[i] = 1;
    a.push_back(std::move(row));
    b.push_back(Rat(1));
  }
  for (size_t j = 0; j < p.dim; ++j) {
    if (point[j] < 0) return false;  // the polyhedron lives in the orthant
    std::vector<Rat> row(nvars, Rat(0));
    for (size_t i = 0; i < q; ++i) row[i] = Rat(p.generators[i][j]);
    row[q + j] = 1;
    a.push_back(std::move(row));
    b.push_back(point[j]);
  }
  std::vector<Rat> c(nvars, Rat(0));
  return Simplex(std::move(a), std::move(b), std::move(c)).minimize().has_value();
}

Rat minimal_containment_scale(const NewtonPolyhedron& p, const IntVector& target) {
  if (target.size() != p.dim)
    throw std::invalid_argument("minimal_containment_scale: dimension mismatch");
  for (const Int& x : target)
    if (x <= 0) throw std::invalid_argument("minimal_containment_scale: target must be positive");

  // minimize m:  sum lambda = 1,  sum lambda_i gamma_ij - m target_j + s_j = 0
  const size_t q = p.generators.size();
  const size_t nvars = q + 1 + p.dim;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  {
    std::vector<Rat> row(nvars, Rat(0));
    for (size_t i = 0; i < q; ++i) row[i] = 1;
    a.push_back(std::move(row));
    b.push_back(Rat(1));
  }
  for (size_t j = 0; j < p.dim; ++j) {
    std::vector<Rat> row(nvars, Rat(0));
    for (size_t i = 0; i < q; ++i) row[i] = Rat(p.generators[i][j]);
    row[q] = Rat(-target[j]);
    row[q + 1 + j] = 1;
    a.push_back(std::move(row));
    b.push_back(Rat(0));
  }
  std::vector<Rat> c(nvars, Rat(0));
  c[q] = 1;
  auto result = Simplex(std::move(a), std::move(b), std::move(c)).minimize();
  if (!result) throw std::logic_error("minimal_containment_scale: infeasible system");
  if (*result <= 0) throw std::logic_error("minimal_containment_scale: scale must be positive");
  return *result;
}

ExtendedRational howald_lct(const NewtonPolyhedron& p, const DivisorShift& shift) {
  if (shift.c.size() != p.dim) throw std::invalid_argument("howald_lct: shift dimension mismatch");
  for (const Int& x : shift.c)
    if (x < 0) throw std::invalid_argument("howald_lct: negative shift");

  IntVector target(p.dim);
  for (size_t j = 0; j < p.dim; ++j) target[j] = shift.c[j] + 1;

  // Ray minimization of (c+1).v / min_i gamma_i.v over the candidate rays of
  // the monomial triple with rows gamma_i.
  IntMatrix gamma(std::vector<IntVector>(p.generators), p.dim);
  IdealTriple triple{gamma, gamma, std::vector<Rat>(p.generators.size(), Rat(0))};
  std::vector<IntVector> rays = enumerate_rays(hyperplane_rows(triple));

  ExtendedRational by_rays = ExtendedRational::infinity();
  for (const IntVector& v : rays) {
    Int num = dot(target, v);
    Int den = dot(p.generators[0], v);
    for (size_t i = 1; i < p.generators.size(); ++i) {
      Int d = dot(p.generators[i], v);
      if (d < den) den = d;
    }
    ExtendedRational cand = ExtendedRational::ratio(num, den);
    if (cand < by_rays) by_rays = cand;
  }

  Rat scale = minimal_containment_scale(p, target);
  ExtendedRational by_membership(Rat(1) / scale);
  if (by_rays != by_membership)
    throw std::logic_error("howald_lct: ray and membership computations disagree");
  return by_rays;
}

}  // namespace binlct
