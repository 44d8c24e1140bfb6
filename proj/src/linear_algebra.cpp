#include "phenylene/linear_algebra.hpp"

#include <utility>

#include "phenylene/errors.hpp"

namespace phenylene {

namespace {

// Compares |a| with |b| without allocating new rationals.
int cmp_abs(const mpq_class& a, const mpq_class& b) {
  mpz_class lhs = a.get_num() * b.get_den();
  mpz_class rhs = b.get_num() * a.get_den();
  return mpz_cmpabs(lhs.get_mpz_t(), rhs.get_mpz_t());
}

using Row = std::vector<mpq_class>;

std::vector<Row> to_rows(const RationalMatrix& m, std::size_t extra_cols) {
  std::vector<Row> rows(m.rows(), Row(m.cols() + extra_cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).value();
  }
  return rows;
}

// Gauss-Jordan on an augmented system [A | R] where A occupies the first n
// columns. On return A has become the identity and R holds A^{-1} R.
void gauss_jordan(std::vector<Row>& rows, std::size_t n) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  mpq_class factor;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      if (pivot == n || cmp_abs(rows[r][col], rows[pivot][col]) > 0) pivot = r;
    }
    if (pivot == n) throw ArithmeticError("singular matrix");
    std::swap(rows[col], rows[pivot]);

    Row& prow = rows[col];
    const mpq_class inv = 1 / prow[col];
    for (std::size_t j = col; j < width; ++j) {
      if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(rows[r][col]) == 0) continue;
      Row& row = rows[r];
      factor = row[col];
      for (std::size_t j = col; j < width; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
      }
    }
  }
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameter("matrix shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InvalidParameter("solve: shape mismatch");
  auto rows = to_rows(a, 1);
  for (std::size_t i = 0; i < n; ++i) rows[i][n] = b[i].value();
  gauss_jordan(rows, n);
  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(rows[i][n]);
  return x;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw InvalidParameter("solve: shape mismatch");
  auto rows = to_rows(a, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) rows[i][n + j] = b(i, j).value();
  }
  gauss_jordan(rows, n);
  RationalMatrix out(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = Rational(rows[i][n + j]);
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidParameter("inverse: matrix is not square");
  auto rows = to_rows(a, n);
  for (std::size_t i = 0; i < n; ++i) rows[i][n + i] = 1;
  gauss_jordan(rows, n);
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(rows[i][n + j]);
  }
  return out;
}

}  // namespace phenylene
