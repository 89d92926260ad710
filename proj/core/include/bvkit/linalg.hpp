#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bvkit/rational.hpp"

namespace bvkit {

// Sparse vector over Q: (column, value) pairs, strictly increasing columns, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector make_sparse(const std::map<std::size_t, Rational>& entries);

// Incremental semi-echelon basis of a row space. Each stored row has a
// distinct leading (smallest) column, normalized to 1.
class Echelon {
 public:
  // Reduces v against the stored rows; stores the remainder if nonzero.
  // Returns true when v was independent of the rows inserted so far.
  bool insert(SparseVector v);
  // Remainder of v modulo the current row space.
  SparseVector reduce(SparseVector v) const;

  std::size_t rank() const { return rows_.size(); }
  // Rank of the row space projected onto the columns < limit.
  std::size_t rank_below(std::size_t limit) const;
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVector> rows_;  // keyed by leading column
};

// v - c * w
SparseVector axpy(const SparseVector& v, const Rational& c, const SparseVector& w);

std::size_t rank_of(const std::vector<SparseVector>& rows);

}  // namespace bvkit
