#pragma once

#include "binlct/linalg.hpp"

#include <string>
#include <vector>

namespace binlct {

/// One monomial or binomial generator x^a - u x^b with nonnegative exponent
/// vectors. Monomials are encoded as u == 0 with b == a.
struct Generator {
  IntVector a;
  IntVector b;
  Rat u = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

bool is_monomial_generator(const Generator& g);

/// Canonical form: u == 0 forces b = a; a == b with u not in {0,1} collapses
/// to the monomial (a, a, 0). Throws std::invalid_argument on the zero
/// generator (a == b, u == 1) and on negative exponents.
Generator normalize_generator(Generator g);

struct GeneralBinomialIdeal {
  std::vector<std::string> vars;      // display names, length n
  std::vector<Generator> generators;  // nonempty, vectors of length n

  size_t var_count() const { return vars.size(); }

  friend bool operator==(const GeneralBinomialIdeal&, const GeneralBinomialIdeal&) = default;
};

/// Throws std::invalid_argument when the ideal violates its invariants.
void validate_ideal(const GeneralBinomialIdeal& ideal);

/// The matrices (M+, M-) and coefficient vector u: row i of M+ is a_i, row i
/// of M- is b_i (= a_i for monomial rows, which carry u_i = 0).
struct IdealTriple {
  IntMatrix mplus;
  IntMatrix mminus;
  std::vector<Rat> u;

  size_t gen_count() const { return u.size(); }
  size_t var_count() const { return mplus.col_count(); }
};

IdealTriple triple_of(const GeneralBinomialIdeal& ideal);

Generator triple_row_generator(const IdealTriple& t, size_t i);

/// Row i of M = M+ - M-.
IntVector triple_m_row(const IdealTriple& t, size_t i);

IntMatrix triple_m(const IdealTriple& t);

}  // namespace binlct
