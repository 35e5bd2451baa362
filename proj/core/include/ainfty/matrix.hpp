#pragma once

#include <vector>

#include "ainfty/ring.hpp"

namespace ainfty {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over one ring. Zero-extent shapes are legal and
// behave as the unique map between zero modules.
class Matrix {
 public:
  Matrix() : ring_(RingSpec::rationals()), rows_(0), cols_(0) {}
  Matrix(RingSpec ring, int rows, int cols);

  static Matrix identity(const RingSpec& ring, int n);
  static Matrix from_rows(const RingSpec& ring, std::vector<std::vector<Scalar>> rows);

  const RingSpec& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;

  Matrix column(int c) const;
  void set_column(int c, const Vec& v);
  Vec column_vec(int c) const;

  // Concatenates columns: [*this | rhs].
  Matrix hcat(const Matrix& rhs) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  RingSpec ring_;
  int rows_;
  int cols_;
  std::vector<Scalar> a_;
};

Vec zero_vec(const RingSpec& ring, int n);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);

}  // namespace ainfty
