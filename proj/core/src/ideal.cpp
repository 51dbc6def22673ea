#include "binlct/ideal.hpp"

#include <stdexcept>

namespace binlct {

bool is_monomial_generator(const Generator& g) { return g.u == 0; }

static void check_nonnegative(const IntVector& v, const char* what) {
  for (const Int& x : v)
    if (x < 0) throw std::invalid_argument(std::string(what) + ": negative exponent");
}

Generator normalize_generator(Generator g) {
  if (g.a.size() != g.b.size()) throw std::invalid_argument("generator: exponent length mismatch");
  check_nonnegative(g.a, "generator");
  check_nonnegative(g.b, "generator");
  if (g.u == 0) {
    g.b = g.a;
    return g;
  }
  if (g.a == g.b) {
    if (g.u == 1) throw std::invalid_argument("zero generator");
    // x^a - u x^a = (1-u) x^a, a unit times a monomial
    g.u = 0;
    return g;
  }
  return g;
}

void validate_ideal(const GeneralBinomialIdeal& ideal) {
  if (ideal.vars.empty()) throw std::invalid_argument("ideal: no variables");
  if (ideal.generators.empty()) throw std::invalid_argument("ideal: no generators");
  const size_t n = ideal.vars.size();
  for (const Generator& g : ideal.generators) {
    if (g.a.size() != n || g.b.size() != n)
      throw std::invalid_argument("ideal: generator length mismatch");
    check_nonnegative(g.a, "ideal");
    check_nonnegative(g.b, "ideal");
    if (g.u == 0 && g.a != g.b) throw std::invalid_argument("ideal: monomial with b != a");
    if (g.u == 1 && g.a == g.b) throw std::invalid_argument("ideal: zero generator");
  }
}

IdealTriple triple_of(const GeneralBinomialIdeal& ideal) {
  validate_ideal(ideal);
  const size_t n = ideal.var_count();
  IdealTriple t{IntMatrix(n), IntMatrix(n), {}};
  for (const Generator& g : ideal.generators) {
    t.mplus.push_row(g.a);
    t.mminus.push_row(g.b);
    t.u.push_back(g.u);
  }
  return t;
}

Generator triple_row_generator(const IdealTriple& t, size_t i) {
  return Generator{t.mplus[i], t.mminus[i], t.u[i]};
}

IntVector triple_m_row(const IdealTriple& t, size_t i) { return sub(t.mplus[i], t.mminus[i]); }

IntMatrix triple_m(const IdealTriple& t) {
  IntMatrix m(t.var_count());
  for (size_t i = 0; i < t.gen_count(); ++i) m.push_row(triple_m_row(t, i));
  return m;
}

}  // namespace binlct
