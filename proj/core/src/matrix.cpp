#include "ainfty/matrix.hpp"

#include "ainfty/errors.hpp"

namespace ainfty {

Matrix::Matrix(RingSpec ring, int rows, int cols) : ring_(ring), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix extent");
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(ring_));
}

Matrix Matrix::identity(const RingSpec& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::from_rows(const RingSpec& ring, std::vector<std::vector<Scalar>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ShapeMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(ring_ == rhs.ring_)) throw RingMismatch("matrix product over different rings");
  if (cols_ != rhs.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Matrix out(ring_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j).is_zero()) continue;
        out.at(i, j) += x * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (!(ring_ == rhs.ring_)) throw RingMismatch("matrix sum over different rings");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + rhs.scaled(-Scalar::one(ring_)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (Scalar& x : out.a_) x *= c;
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  Vec out = zero_vec(ring_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::column(int c) const {
  Matrix out(ring_, rows_, 1);
  for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, c);
  return out;
}

void Matrix::set_column(int c, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw ShapeMismatch("column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
}

Vec Matrix::column_vec(int c) const {
  Vec v = zero_vec(ring_, rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

Matrix Matrix::hcat(const Matrix& rhs) const {
  if (!(ring_ == rhs.ring_)) throw RingMismatch("hcat over different rings");
  if (rows_ != rhs.rows_) throw ShapeMismatch("hcat row mismatch");
  Matrix out(ring_, rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return false;
  }
  return true;
}

Vec zero_vec(const RingSpec& ring, int n) { return Vec(static_cast<std::size_t>(n), Scalar::zero(ring)); }

bool is_zero_vec(const Vec& v) {
  for (const Scalar& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector sum length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec scale_vec(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (Scalar& x : out) x *= c;
  return out;
}

}  // namespace ainfty
