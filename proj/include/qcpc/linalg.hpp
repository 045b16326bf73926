#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcpc/field.hpp"

namespace qcpc {

// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Value operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Value> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Value> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Value> r) {
    if (r.size() != cols_) throw DomainError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Value> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Echelon row_reduce(Matrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Value inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Value k = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j)) m(i, j) = f.sub(m(i, j), f.mul(k, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

// Basis of the right kernel {x : M x = 0}, one vector per free column.
inline std::vector<std::vector<Value>> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  const auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Value>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Value> x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

// Row space basis (reduced echelon rows).
inline std::vector<std::vector<Value>> row_space_basis(const Matrix& m) {
  const auto e = row_reduce(m);
  std::vector<std::vector<Value>> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    auto r = e.reduced.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

inline Matrix matrix_from_rows(Field f, std::size_t cols, const std::vector<std::vector<Value>>& rows) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

// Whether two lists of vectors span the same subspace.
inline bool same_span(Field f, std::size_t cols, const std::vector<std::vector<Value>>& a,
                      const std::vector<std::vector<Value>>& b) {
  const Matrix ma = matrix_from_rows(f, cols, a);
  const Matrix mb = matrix_from_rows(f, cols, b);
  Matrix both = ma;
  for (std::size_t i = 0; i < mb.rows(); ++i) both.append_row(mb.row(i));
  const std::size_t r = rank(both);
  return rank(ma) == r && rank(mb) == r;
}

struct Solution {
  enum class Status { unique, inconsistent, underdetermined };
  Status status;
  std::vector<Value> x;  // filled only when unique
};

// Solve A x = b.
inline Solution solve(const Matrix& a, std::span<const Value> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return {Solution::Status::inconsistent, {}};
  if (e.pivots.size() < a.cols()) return {Solution::Status::underdetermined, {}};
  std::vector<Value> x(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return {Solution::Status::unique, std::move(x)};
}

}  // namespace qcpc
