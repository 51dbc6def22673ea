#include "binlct/gamma_fan.hpp"

#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace binlct {

namespace {

bool mixed_signs(const IntVector& v) {
  bool pos = false, neg = false;
  for (const Int& x : v) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  return pos && neg;
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& body) {
  if (threads <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

HyperplaneSet hyperplane_rows(const IdealTriple& triple) {
  const size_t n = triple.var_count();
  const size_t r = triple.gen_count();

  IntMatrix rows = IntMatrix::identity(n);
  std::set<IntVector> seen(rows.rows().begin(), rows.rows().end());
  auto push = [&](IntVector d) {
    if (is_zero(d) || !mixed_signs(d)) return;
    d = primitive(d);
    if (seen.insert(d).second) rows.push_row(std::move(d));
  };

  for (size_t i = 0; i < r; ++i) push(sub(triple.mplus[i], triple.mminus[i]));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = i + 1; j < r; ++j) {
      push(sub(triple.mplus[i], triple.mplus[j]));
      push(sub(triple.mplus[i], triple.mminus[j]));
      push(sub(triple.mminus[i], triple.mplus[j]));
      push(sub(triple.mminus[i], triple.mminus[j]));
    }
  }
  return {std::move(rows), n};
}

namespace {

struct RayEnumerator {
  const IntMatrix& rows;
  size_t n;
  std::set<IntVector> found;
  size_t subsets = 0;
  std::vector<size_t> chosen;

  void run() {
    RowSpace space(n);
    extend(0, space);
  }

  void extend(size_t start, const RowSpace& space) {
    if (chosen.size() == n - 1) {
      ++subsets;
      IntMatrix sub_matrix(n);
      for (size_t idx : chosen) sub_matrix.push_row(rows[idx]);
      auto ray = nullspace_ray(sub_matrix);
      if (!ray) throw std::logic_error("enumerate_rays: independent subset with no ray");
      bool nonneg = true;
      for (const Int& x : *ray)
        if (x < 0) {
          nonneg = false;
          break;
        }
      if (nonneg) found.insert(std::move(*ray));
      return;
    }
    const size_t need = n - 1 - chosen.size();
    for (size_t i = start; i + need <= rows.row_count(); ++i) {
      RowSpace next = space;
      if (!next.insert(rows[i])) continue;  // dependent rows cannot reach rank n-1
      chosen.push_back(i);
      extend(i + 1, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<IntVector> enumerate_rays(const HyperplaneSet& h) {
  const size_t n = h.rows.col_count();
  if (n == 0) throw std::invalid_argument("enumerate_rays: empty dimension");
  if (n == 1) return {IntVector{Int(1)}};
  RayEnumerator e{h.rows, n, {}, 0, {}};
  e.run();
  return {e.found.begin(), e.found.end()};
}

RayTable global_lct(const IdealTriple& triple, unsigned threads) {
  HyperplaneSet h = hyperplane_rows(triple);

  RayTable table;
  table.hyperplane_count = h.rows.row_count();

  const size_t n = h.rows.col_count();
  if (n == 1) {
    table.rays = {IntVector{Int(1)}};
    table.subset_count = 1;
  } else {
    RayEnumerator e{h.rows, n, {}, 0, {}};
    e.run();
    table.rays.assign(e.found.begin(), e.found.end());
    table.subset_count = e.subsets;
  }

  table.breakdowns.resize(table.rays.size());
  parallel_for(table.rays.size(), threads,
               [&](size_t i) { table.breakdowns[i] = evaluate(triple, table.rays[i]); });

  table.global = ExtendedRational::infinity();
  for (const auto& b : table.breakdowns)
    if (b.value < table.global) table.global = b.value;
  for (size_t i = 0; i < table.rays.size(); ++i)
    if (table.breakdowns[i].value == table.global) table.argmin.push_back(table.rays[i]);
  return table;
}

RayTable global_lct(const GeneralBinomialIdeal& ideal, unsigned threads) {
  return global_lct(triple_of(ideal), threads);
}

}  // namespace binlct
