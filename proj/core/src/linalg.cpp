#include "toricham/linalg.hpp"

#include "toricham/error.hpp"

#include <algorithm>
#include <utility>

namespace toricham {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

// Reduces m in place to row echelon form and returns the pivot columns.
// When `reduced` is set the pivots are normalized to 1 and cleared above too.
std::vector<std::size_t> row_echelon(RatMatrix& m, bool reduced, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      if (swaps) ++*swaps;
    }
    if (reduced) {
      const Rational inv = Rational(1) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    }
    for (std::size_t i = reduced ? 0 : row + 1; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Replaces columns (p, q) of a and u by the unimodular combination that
// leaves gcd(a(i,p), a(i,q)) in column p and zero in column q at row i.
void column_gcd_step(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t p, std::size_t q) {
  Integer g, s, t;
  const Integer x = a(i, p);
  const Integer y = a(i, q);
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  const Integer yg = y / g;
  const Integer xg = x / g;
  auto combine = [&](IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Integer cp = m(r, p);
      const Integer cq = m(r, q);
      m(r, p) = s * cp + t * cq;
      m(r, q) = xg * cq - yg * cp;
    }
  };
  combine(a);
  combine(u);
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector multiply(const IntMatrix& a, std::span<const Integer> x) {
  require(a.cols() == x.size(), "matrix-vector dimension mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
  return out;
}

RatVector multiply(const IntMatrix& a, std::span<const Rational> x) {
  require(a.cols() == x.size(), "matrix-vector dimension mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
  return out;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  require(a.size() == b.size(), "dot product dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += Rational(a[i]) * b[i];
  }
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require(a.size() == b.size(), "dot product dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  require(a.size() == b.size(), "dot product dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix work = m;
  return row_echelon(work, false).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  RatMatrix work = m;
  int swaps = 0;
  const auto pivots = row_echelon(work, false, &swaps);
  if (pivots.size() < m.rows()) return Rational(0);
  Rational det = swaps % 2 == 0 ? Rational(1) : Rational(-1);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= work(i, i);
  return det;
}

Integer determinant(const IntMatrix& m) {
  const Rational d = determinant(to_rational(m));
  return d.numerator();
}

std::optional<RatVector> solve_square(const RatMatrix& a, std::span<const Rational> b) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "solve_square needs a square matrix");
  require(b.size() == a.rows(), "right-hand side dimension mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_echelon(aug, true);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

RatVector solve_rational(const IntMatrix& w, std::span<const Rational> tau) {
  require(tau.size() == w.rows(), "level vector length must equal the number of rows of W");
  const std::size_t r = w.rows();
  const std::size_t m = w.cols();
  RatMatrix aug(r, m + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = Rational(w(i, j));
    aug(i, m) = tau[i];
  }
  const auto pivots = row_echelon(aug, true);
  if (!pivots.empty() && pivots.back() == m) {
    throw Error(ErrorCode::NoSolution, "level vector is not in the column space of W");
  }
  RatVector s(m);
  for (std::size_t i = 0; i < pivots.size(); ++i) s[pivots[i]] = aug(i, m);
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Integer g, s, t;
      const Integer x = a(row, col);
      const Integer y = a(i, col);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      const Integer xg = x / g;
      const Integer yg = y / g;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Integer rp = a(row, j);
        const Integer ri = a(i, j);
        a(row, j) = s * rp + t * ri;
        a(i, j) = xg * ri - yg * rp;
      }
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(row, j);
    }
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& w) {
  const std::size_t m = w.cols();
  IntMatrix a = w;
  IntMatrix u(m, m);
  for (std::size_t i = 0; i < m; ++i) u(i, i) = 1;

  // Column operations bring a to lower echelon form a * u = [H | 0]; u stays
  // unimodular, so its trailing columns span the saturated kernel.
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < a.rows() && pivot < m; ++i) {
    for (std::size_t j = pivot + 1; j < m; ++j) {
      if (a(i, j) != 0) column_gcd_step(a, u, i, pivot, j);
    }
    if (a(i, pivot) != 0) ++pivot;
  }

  const std::size_t n = m - pivot;
  if (n == 0) return IntMatrix(m, 0);
  IntMatrix basis(n, m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < m; ++r) basis(k, r) = u(r, pivot + k);
  return hermite_normal_form(basis).transposed();
}

PrimitiveVector primitive(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive() of the zero vector");
  PrimitiveVector out{IntVector(v.begin(), v.end()), g};
  for (auto& x : out.vector) x /= g;
  return out;
}

int affine_dimension(std::span<const RatVector> points) {
  if (points.empty()) return -1;
  const std::size_t dim = points.front().size();
  RatMatrix diffs(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
  return static_cast<int>(rank(diffs));
}

bool is_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  const Integer d = determinant(u);
  return d == 1 || d == -1;
}

}  // namespace toricham
