#ifndef HNR_LINALG_HPP
#define HNR_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hnr/scalar.hpp"

namespace hnr {

using SparseRow = std::map<std::uint64_t, Scalar>;
using DenseMatrix = std::vector<std::vector<Scalar>>;

/// Incrementally maintained reduced row-echelon form over exact scalars.
/// Each stored row has pivot coefficient 1 and zeros in every other
/// row's pivot column.
class RowEchelon {
public:
  /// Residual of `row` modulo the current span (zero iff contained).
  SparseRow reduce(const SparseRow& row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }
  /// Adds `row`; returns true iff the rank grew.
  bool insert(const SparseRow& row);

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::map<std::uint64_t, SparseRow>& rows() const noexcept { return rows_; }

private:
  std::map<std::uint64_t, SparseRow> rows_;  // keyed by pivot column
};

std::size_t rank(const DenseMatrix& m);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix identity_matrix(std::size_t n);
/// Solves a x = b for square nonsingular a; OutOfRange when singular.
std::vector<Scalar> solve(DenseMatrix a, std::vector<Scalar> b);

}  // namespace hnr

#endif  // HNR_LINALG_HPP
