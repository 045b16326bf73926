#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qcpc/polynomial.hpp"

namespace qcpc {

// Matrix over F_q[X].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Polynomial(f)) {}

  static PolyMatrix from_rows(Field f, std::size_t cols, const std::vector<std::vector<Polynomial>>& rows) {
    PolyMatrix m(f, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  static PolyMatrix identity(Field f, std::size_t n, const Polynomial& diag) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag;
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Polynomial> row(std::size_t i) const {
    return {e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void append_row(const std::vector<Polynomial>& r) {
    if (r.size() != cols_) throw DomainError("row length mismatch");
    for (const auto& p : r)
      if (!(p.field() == field_)) throw FieldMismatch("row entry over another field");
    e_.insert(e_.end(), r.begin(), r.end());
    ++rows_;
  }

  void erase_row(std::size_t i) {
    if (i >= rows_) throw DomainError("row index out of range");
    e_.erase(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    --rows_;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  bool is_upper_triangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> e_;
};

// Elementary row operations over F_q[X].
struct SwapRows {
  std::size_t a, b;
};
struct ScaleRow {
  std::size_t row;
  Polynomial unit;  // must be a nonzero constant
};
struct AddRowMultiple {
  std::size_t target, source;
  Polynomial factor;  // target += factor * source
};
struct DeleteRow {
  std::size_t row;  // caller guarantees the row is dependent on the others
};
using RowOp = std::variant<SwapRows, ScaleRow, AddRowMultiple, DeleteRow>;

inline PolyMatrix apply_row_op(PolyMatrix m, const RowOp& op) {
  if (const auto* s = std::get_if<SwapRows>(&op)) {
    if (s->a >= m.rows() || s->b >= m.rows()) throw DomainError("row index out of range");
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(s->a, j), m(s->b, j));
  } else if (const auto* s = std::get_if<ScaleRow>(&op)) {
    if (s->row >= m.rows()) throw DomainError("row index out of range");
    if (s->unit.size() != 1) throw DomainError("scaling by a non-unit");
    for (std::size_t j = 0; j < m.cols(); ++j) m(s->row, j) = m(s->row, j).scaled(s->unit.lead());
  } else if (const auto* s = std::get_if<AddRowMultiple>(&op)) {
    if (s->target >= m.rows() || s->source >= m.rows()) throw DomainError("row index out of range");
    if (s->target == s->source) throw DomainError("adding a multiple of a row to itself");
    for (std::size_t j = 0; j < m.cols(); ++j) m(s->target, j) += s->factor * m(s->source, j);
  } else {
    m.erase_row(std::get<DeleteRow>(op).row);
  }
  return m;
}

// Determinant of a square upper-triangular matrix: the diagonal product.
inline Polynomial upper_det(const PolyMatrix& m) {
  if (!m.is_upper_triangular()) throw DomainError("matrix is not square upper triangular");
  Polynomial d = Polynomial::constant(m.field(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

}  // namespace qcpc
