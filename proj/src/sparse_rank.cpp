#include <algorithm>
#include <map>

#include "qm/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qm {

namespace {

using ZRow = std::vector<std::pair<int64_t, mpz_class>>;

void make_primitive(ZRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

ZRow to_integer_row(const SparseRow& row) {
  ZRow r;
  mpz_class den = 1;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    mpz_class x = v.get_num() * (den / v.get_den());
    r.emplace_back(c, std::move(x));
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  make_primitive(r);
  return r;
}

// a·r − b·p, both sorted
ZRow combine(const ZRow& r, const mpz_class& a, const ZRow& p, const mpz_class& b) {
  ZRow out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      mpz_class v = a * r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

class Echelon {
 public:
  // true when the row was independent
  bool insert(ZRow r) {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(r.front().first, std::move(r));
        return true;
      }
      const ZRow& p = it->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
      mpz_class a = p.front().second / g, b = r.front().second / g;
      r = combine(r, a, p, b);
      make_primitive(r);
    }
    return false;
  }
  int64_t rank() const { return static_cast<int64_t>(pivots_.size()); }
  std::vector<ZRow> take() {
    std::vector<ZRow> out;
    for (auto& [c, r] : pivots_) out.push_back(std::move(r));
    pivots_.clear();
    return out;
  }

 private:
  std::map<int64_t, ZRow> pivots_;
};

}  // namespace

int64_t sparse_rank_serial(const std::vector<SparseRow>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(to_integer_row(r));
  return e.rank();
}

int64_t sparse_rank_parallel(const std::vector<SparseRow>& rows) {
  int chunks = 1;
#ifdef _OPENMP
  chunks = std::max(1, omp_get_max_threads());
#endif
  if (chunks == 1 || rows.size() < 64) return sparse_rank_serial(rows);
  std::vector<std::vector<ZRow>> partial(chunks);
  const int64_t n = static_cast<int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    Echelon e;
    for (int64_t i = n * c / chunks; i < n * (c + 1) / chunks; ++i) e.insert(to_integer_row(rows[i]));
    partial[c] = e.take();
  }
  Echelon merged;
  for (auto& part : partial)
    for (auto& r : part) merged.insert(std::move(r));
  return merged.rank();
}

}  // namespace qm
