#include "hnr/linalg.hpp"

#include "hnr/error.hpp"

namespace hnr {

namespace {

void axpy(SparseRow& target, const Scalar& factor, const SparseRow& row) {
  for (const auto& [col, v] : row) {
    auto [it, inserted] = target.try_emplace(col, factor * v);
    if (!inserted) {
      it->second += factor * v;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

}  // namespace

SparseRow RowEchelon::reduce(const SparseRow& row) const {
  SparseRow out = row;
  for (const auto& [col, v] : row) {
    auto pivot = rows_.find(col);
    if (pivot != rows_.end()) axpy(out, -v, pivot->second);
  }
  return out;
}

bool RowEchelon::insert(const SparseRow& row) {
  SparseRow residual = reduce(row);
  if (residual.empty()) return false;
  const std::uint64_t pivot = residual.begin()->first;
  const Scalar inv = residual.begin()->second.inverse();
  for (auto& kv : residual) kv.second *= inv;
  for (auto& [p, stored] : rows_) {
    auto it = stored.find(pivot);
    if (it != stored.end()) {
      const Scalar factor = -it->second;
      axpy(stored, factor, residual);
    }
  }
  rows_.emplace(pivot, std::move(residual));
  return true;
}

std::size_t rank(const DenseMatrix& m) {
  RowEchelon ech;
  for (const auto& row : m) {
    SparseRow sparse;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) sparse.emplace(j, row[j]);
    ech.insert(sparse);
  }
  return ech.rank();
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw Error(ErrorCode::SizeMismatch, "matmul: inner dimensions differ");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  DenseMatrix out(a.size(), std::vector<Scalar>(cols, Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

DenseMatrix identity_matrix(std::size_t n) {
  DenseMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

std::vector<Scalar> solve(DenseMatrix a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::SizeMismatch, "solve: right-hand side size");
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::SizeMismatch, "solve: matrix is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::OutOfRange, "solve: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Scalar inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Scalar f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace hnr
