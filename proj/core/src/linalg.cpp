#include "ainfty/linalg.hpp"

#include <cstdlib>
#include <utility>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

// Working state for the Smith reduction: integer matrix plus the four
// transforms kept in sync so that u * original * v == a at every step.
struct SmithState {
  int rows, cols;
  std::vector<BigInt> a, u, uinv, v, vinv;

  BigInt& at(std::vector<BigInt>& m, int ld, int r, int c) { return m[static_cast<std::size_t>(r) * ld + c]; }

  BigInt& A(int r, int c) { return at(a, cols, r, c); }

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < cols; ++j) std::swap(A(r1, j), A(r2, j));
    for (int j = 0; j < rows; ++j) std::swap(at(u, rows, r1, j), at(u, rows, r2, j));
    for (int i = 0; i < rows; ++i) std::swap(at(uinv, rows, i, r1), at(uinv, rows, i, r2));
  }

  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < rows; ++i) std::swap(A(i, c1), A(i, c2));
    for (int i = 0; i < cols; ++i) std::swap(at(v, cols, i, c1), at(v, cols, i, c2));
    for (int j = 0; j < cols; ++j) std::swap(at(vinv, cols, c1, j), at(vinv, cols, c2, j));
  }

  // row r -= q * row t
  void row_sub(int r, int t, const BigInt& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) A(r, j) -= q * A(t, j);
    for (int j = 0; j < rows; ++j) at(u, rows, r, j) -= q * at(u, rows, t, j);
    for (int i = 0; i < rows; ++i) at(uinv, rows, i, t) += q * at(uinv, rows, i, r);
  }

  // col c -= q * col t
  void col_sub(int c, int t, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) A(i, c) -= q * A(i, t);
    for (int i = 0; i < cols; ++i) at(v, cols, i, c) -= q * at(v, cols, i, t);
    for (int j = 0; j < cols; ++j) at(vinv, cols, t, j) += q * at(vinv, cols, c, j);
  }

  void negate_row(int r) {
    for (int j = 0; j < cols; ++j) A(r, j) = -A(r, j);
    for (int j = 0; j < rows; ++j) at(u, rows, r, j) = -at(u, rows, r, j);
    for (int i = 0; i < rows; ++i) at(uinv, rows, i, r) = -at(uinv, rows, i, r);
  }
};

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void require_ring(const Matrix& m, RingKind kind, const char* what) {
  if (m.ring().kind != kind) throw RingMismatch(what);
}

// Elimination state over a field: reduced row echelon form of [M | aug].
struct Echelon {
  Matrix r;                       // rows x (cols + aug_cols), fully reduced
  std::vector<int> pivot_cols;    // ascending, within the first `cols` columns
  int cols;                       // width of the M block
};

Echelon echelonize(const Matrix& m, const Matrix* aug) {
  if (!m.ring().is_field()) throw RingMismatch("echelon form needs a field");
  Matrix work = aug ? m.hcat(*aug) : m;
  const int rows = work.rows();
  const int mcols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < mcols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (!work.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < work.cols(); ++j) std::swap(work.at(r, j), work.at(pr, j));
    }
    Scalar inv = work.at(r, c).inverse();
    for (int j = 0; j < work.cols(); ++j) work.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || work.at(i, c).is_zero()) continue;
      Scalar f = work.at(i, c);
      for (int j = 0; j < work.cols(); ++j) work.at(i, j) -= f * work.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(work), std::move(pivots), mcols};
}

std::optional<Matrix> field_solve_many(const Matrix& m, const Matrix& b) {
  Echelon e = echelonize(m, &b);
  const int np = static_cast<int>(e.pivot_cols.size());
  // Rows past the pivot count must have zero right-hand side.
  for (int i = np; i < m.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      if (!e.r.at(i, e.cols + j).is_zero()) return std::nullopt;
    }
  }
  Matrix x(m.ring(), m.cols(), b.cols());
  for (int pi = 0; pi < np; ++pi) {
    for (int j = 0; j < b.cols(); ++j) x.at(e.pivot_cols[pi], j) = e.r.at(pi, e.cols + j);
  }
  return x;
}

std::optional<Matrix> integer_solve_many(const SmithNormalForm& s, const Matrix& b) {
  const RingSpec ring = RingSpec::integers();
  Matrix c = s.U * b;
  Matrix y(ring, s.V.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < c.rows(); ++i) {
      if (i < s.rank) {
        Scalar d = s.D.at(i, i);
        const BigInt& num = c.at(i, j).as_integer();
        const BigInt& den = d.as_integer();
        if (num % den != 0) return std::nullopt;
        y.at(i, j) = Scalar::from_big(ring, num / den);
      } else if (!c.at(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  }
  return s.V * y;
}

}  // namespace

SmithNormalForm smith_normal_form(const Matrix& m) {
  require_ring(m, RingKind::integers, "smith_normal_form needs an integer matrix");
  const int rows = m.rows(), cols = m.cols();
  SmithState st;
  st.rows = rows;
  st.cols = cols;
  st.a.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) st.A(i, j) = m.at(i, j).as_integer();
  }
  auto ident = [](int n) {
    std::vector<BigInt> id(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;
    return id;
  };
  st.u = ident(rows);
  st.uinv = ident(rows);
  st.v = ident(cols);
  st.vinv = ident(cols);

  int t = 0;
  const int bound = rows < cols ? rows : cols;
  while (t < bound) {
    // Deterministic pivot: least |value| in the active submatrix, ties by
    // (row, col) ascending.
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (st.A(i, j) == 0) continue;
        BigInt a = big_abs(st.A(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (st.A(i, t) == 0) continue;
        BigInt q = st.A(i, t) / st.A(t, t);
        st.row_sub(i, t, q);
        if (st.A(i, t) != 0) {
          // Remainder smaller than the pivot becomes the new pivot.
          st.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (st.A(t, j) == 0) continue;
        BigInt q = st.A(t, j) / st.A(t, t);
        st.col_sub(j, t, q);
        if (st.A(t, j) != 0) {
          st.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide the remaining submatrix before we move on.
      for (int i = t + 1; i < rows && clean; ++i) {
        for (int j = t + 1; j < cols && clean; ++j) {
          if (st.A(i, j) % st.A(t, t) != 0) {
            st.row_sub(t, i, BigInt(-1));  // row t += row i
            clean = false;
          }
        }
      }
    }
    if (st.A(t, t) < 0) st.negate_row(t);
    ++t;
  }

  const RingSpec ring = RingSpec::integers();
  SmithNormalForm out{Matrix(ring, rows, rows), Matrix(ring, rows, rows), Matrix(ring, rows, cols),
                      Matrix(ring, cols, cols), Matrix(ring, cols, cols)};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.D.at(i, j) = Scalar::from_big(ring, st.A(i, j));
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      out.U.at(i, j) = Scalar::from_big(ring, st.u[static_cast<std::size_t>(i) * rows + j]);
      out.Uinv.at(i, j) = Scalar::from_big(ring, st.uinv[static_cast<std::size_t>(i) * rows + j]);
    }
  }
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < cols; ++j) {
      out.V.at(i, j) = Scalar::from_big(ring, st.v[static_cast<std::size_t>(i) * cols + j]);
      out.Vinv.at(i, j) = Scalar::from_big(ring, st.vinv[static_cast<std::size_t>(i) * cols + j]);
    }
  }
  for (int k = 0; k < bound; ++k) {
    const BigInt& d = out.D.at(k, k).as_integer();
    if (d == 0) break;
    out.diagonal.push_back(d);
    ++out.rank;
  }
  return out;
}

int rank(const Matrix& m) {
  if (m.ring().is_field()) return static_cast<int>(echelonize(m, nullptr).pivot_cols.size());
  return smith_normal_form(m).rank;
}

std::optional<Vec> solve_exact(const Matrix& m, const Vec& b) {
  Matrix bm(m.ring(), m.rows(), 1);
  bm.set_column(0, b);
  auto x = solve_many(m, bm);
  if (!x) return std::nullopt;
  return x->column_vec(0);
}

std::optional<Matrix> solve_many(const Matrix& m, const Matrix& b) {
  if (!(m.ring() == b.ring())) throw RingMismatch("solve over different rings");
  if (m.rows() != b.rows()) throw ShapeMismatch("solve shape mismatch");
  if (m.ring().is_field()) return field_solve_many(m, b);
  return integer_solve_many(smith_normal_form(m), b);
}

Matrix kernel_basis(const Matrix& m) {
  if (m.ring().is_field()) {
    Echelon e = echelonize(m, nullptr);
    std::vector<int> free_cols;
    {
      std::size_t pi = 0;
      for (int c = 0; c < m.cols(); ++c) {
        if (pi < e.pivot_cols.size() && e.pivot_cols[pi] == c) {
          ++pi;
        } else {
          free_cols.push_back(c);
        }
      }
    }
    Matrix k(m.ring(), m.cols(), static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
      int fc = free_cols[j];
      k.at(fc, j) = Scalar::one(m.ring());
      for (int pi = 0; pi < static_cast<int>(e.pivot_cols.size()); ++pi) {
        k.at(e.pivot_cols[pi], j) = -e.r.at(pi, fc);
      }
    }
    return k;
  }
  SmithNormalForm s = smith_normal_form(m);
  Matrix k(m.ring(), m.cols(), m.cols() - s.rank);
  for (int j = s.rank; j < m.cols(); ++j) {
    for (int i = 0; i < m.cols(); ++i) k.at(i, j - s.rank) = s.V.at(i, j);
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  if (m.ring().is_field()) {
    Echelon e = echelonize(m, nullptr);
    Matrix b(m.ring(), m.rows(), static_cast<int>(e.pivot_cols.size()));
    for (int j = 0; j < static_cast<int>(e.pivot_cols.size()); ++j) {
      for (int i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, e.pivot_cols[j]);
    }
    return b;
  }
  SmithNormalForm s = smith_normal_form(m);
  Matrix b(m.ring(), m.rows(), s.rank);
  for (int k = 0; k < s.rank; ++k) {
    Scalar d = s.D.at(k, k);
    for (int i = 0; i < m.rows(); ++i) b.at(i, k) = d * s.Uinv.at(i, k);
  }
  return b;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotInvertible("inverse of a non-square matrix");
  if (m.ring().is_field()) {
    Matrix id = Matrix::identity(m.ring(), m.rows());
    Echelon e = echelonize(m, &id);
    if (static_cast<int>(e.pivot_cols.size()) != m.rows()) {
      throw NotInvertible("matrix is singular");
    }
    Matrix out(m.ring(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.rows(); ++j) out.at(i, j) = e.r.at(i, e.cols + j);
    }
    return out;
  }
  SmithNormalForm s = smith_normal_form(m);
  if (s.rank != m.rows() || !s.D.is_identity()) {
    throw NotInvertible("integer matrix is not unimodular");
  }
  return s.V * s.U;
}

}  // namespace ainfty
