#include "binlct/torus.hpp"

#include <stdexcept>

namespace binlct {

TorusVerdict is_torus_unit(std::span<const Generator> gens) {
  if (gens.empty()) throw std::invalid_argument("is_torus_unit: empty generator set");
  for (size_t i = 0; i < gens.size(); ++i) {
    if (is_monomial_generator(gens[i])) return {true, std::nullopt, i};
  }
  // All binomial: on the torus f_i is a unit multiple of 1 - u_i x^(d_i).
  IntMatrix d(gens.front().a.size());
  for (const Generator& g : gens) {
    IntVector di = sub(g.b, g.a);
    if (is_zero(di)) throw std::invalid_argument("is_torus_unit: unnormalized generator");
    d.push_row(std::move(di));
  }
  IntMatrix kernel = left_kernel_lattice(d);
  for (size_t k = 0; k < kernel.row_count(); ++k) {
    Rat character = 1;
    for (size_t i = 0; i < gens.size(); ++i) character *= rat_pow(gens[i].u, kernel[k][i]);
    if (character != 1) return {true, kernel[k], std::nullopt};
  }
  return {false, std::nullopt, std::nullopt};
}

size_t r_zero(const IdealTriple& triple, std::span<const size_t> epsilon) {
  const size_t r = triple.gen_count();
  if (epsilon.size() != r) throw std::invalid_argument("r_zero: permutation size mismatch");
  std::vector<Generator> prefix;
  prefix.reserve(r);
  for (size_t j = 0; j < r; ++j) {
    prefix.push_back(triple_row_generator(triple, epsilon[j]));
    if (is_torus_unit(prefix).is_unit) return j + 1;
  }
  return r + 1;
}

}  // namespace binlct
