#include "bvkit/linalg.hpp"

namespace bvkit {

SparseVector make_sparse(const std::map<std::size_t, Rational>& entries) {
  SparseVector v;
  v.reserve(entries.size());
  for (const auto& [k, q] : entries)
    if (!is_zero(q)) v.emplace_back(k, q);
  return v;
}

SparseVector axpy(const SparseVector& v, const Rational& c, const SparseVector& w) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -c * w[j].second);
      ++j;
    } else {
      Rational q = v[i].second - c * w[j].second;
      if (!is_zero(q)) out.emplace_back(v[i].first, std::move(q));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector Echelon::reduce(SparseVector v) const {
  // Only the leading entry is eliminated at each step; the leading column
  // strictly increases so the loop terminates.
  std::size_t start = 0;
  while (start < v.size()) {
    auto it = rows_.find(v[start].first);
    if (it == rows_.end()) {
      ++start;
      continue;
    }
    Rational c = v[start].second;
    SparseVector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(start));
    SparseVector tail(v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
    tail = axpy(tail, c, it->second);
    head.insert(head.end(), tail.begin(), tail.end());
    v = std::move(head);
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  // Semi-echelon insertion: clear leading entries until a free column appears.
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    v = axpy(v, v.front().second, it->second);
  }
  if (v.empty()) return false;
  Rational inv = Rational(1) / v.front().second;
  for (auto& [k, q] : v) q *= inv;
  std::size_t lead = v.front().first;
  rows_.emplace(lead, std::move(v));
  return true;
}

std::size_t Echelon::rank_below(std::size_t limit) const {
  std::size_t n = 0;
  for (auto it = rows_.begin(); it != rows_.end() && it->first < limit; ++it) ++n;
  return n;
}

std::size_t rank_of(const std::vector<SparseVector>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace bvkit
