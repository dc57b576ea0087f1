#include "symspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

namespace symspec {

namespace {

constexpr std::uint64_t mersenne = (std::uint64_t{1} << 31) - 1;

std::uint64_t mod_reduce(std::uint64_t x) {
  x = (x & mersenne) + (x >> 31);
  x = (x & mersenne) + (x >> 31);
  return x == mersenne ? 0 : x;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_reduce(r * b);
    b = mod_reduce(b * b);
    e >>= 1;
  }
  return r;
}

std::size_t bareiss_rank(const Matrix<int>& in) {
  const std::size_t rows = in.rows(), cols = in.cols();
  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = in(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

bool is_symmetric(const Matrix<double>& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace

std::size_t rank_mod_p(const Matrix<int>& in) {
  const std::size_t rows = in.rows(), cols = in.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = in(i, j);
      const std::int64_t r = v % static_cast<std::int64_t>(mersenne);
      a[i * cols + j] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(mersenne) : r);
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const std::uint64_t inv = mod_pow(a[rank * cols + col], mersenne - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = mod_reduce(a[i * cols + col] * inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t sub = mod_reduce(factor * a[rank * cols + j]);
        a[i * cols + j] = mod_reduce(a[i * cols + j] + mersenne - sub);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const Matrix<int>& m, std::optional<std::size_t> upper_bound) {
  const std::size_t modular = rank_mod_p(m);
  if (modular == std::min(m.rows(), m.cols())) return modular;
  if (upper_bound && modular == *upper_bound) return modular;
  return bareiss_rank(m);
}

std::vector<double> symmetric_eigenvalues(Matrix<double> a) {
  if (!a.square()) throw Error("symmetric_eigenvalues: matrix is not square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {};
  std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 0.0);
  auto A = [&](int i, int j) -> double& { return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };

  // Householder reduction to tridiagonal form
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          g = 0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
  }
  for (int i = 0; i < n; ++i) d[i] = A(i, i);

  // implicit QL on the tridiagonal matrix
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  // off-diagonals below eps * ||T|| are negligible even next to zero eigenvalues
  double anorm = 0;
  for (int i = 0; i < n; ++i) anorm = std::max(anorm, std::fabs(d[i]) + std::fabs(e[i]));
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        if (std::fabs(e[m]) <= eps * anorm) break;
      }
      if (m == l) break;
      if (iter++ == 60) throw EigenNonConvergence("symmetric_eigenvalues: QL iteration did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1, c = 1, p = 0;
      int i;
      for (i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        e[i + 1] = r = std::hypot(f, g);
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<double> singular_values(const Matrix<double>& m) {
  std::vector<double> out;
  if (is_symmetric(m)) {
    out = symmetric_eigenvalues(m);
    for (double& v : out) v = std::fabs(v);
  } else {
    Matrix<double> gram(m.cols(), m.cols(), 0.0);
    for (std::size_t i = 0; i < m.cols(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double s = 0;
        for (std::size_t k = 0; k < m.rows(); ++k) s += m(k, i) * m(k, j);
        gram(i, j) = gram(j, i) = s;
      }
    out = symmetric_eigenvalues(std::move(gram));
    for (double& v : out) v = std::sqrt(std::max(v, 0.0));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string matrix_text(const Matrix<int>& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace symspec
