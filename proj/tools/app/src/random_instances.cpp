#include "toricham/app/random_instances.hpp"

#include <algorithm>

namespace toricham::app {
namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational positive_offset(Rng& rng) { return Rational(Integer(uniform(rng, 2, 8)), Integer(uniform(rng, 1, 3))); }

IntVector nonzero_row(Rng& rng, std::size_t n) {
  IntVector row(n);
  do {
    for (auto& x : row) x = uniform(rng, -2, 2);
  } while (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; }));
  return row;
}

}  // namespace

RandomQuotient random_quotient(Rng& rng, std::size_t n, std::size_t m) {
  // Rows a_1..a_n independent, a_{n+1} = -(a_1 + ... + a_n): every offset
  // positive makes a bounded simplex around the origin. Extra rows cut it.
  IntMatrix a(m, n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = nonzero_row(rng, n);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
    }
    IntMatrix head(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) head(i, j) = a(i, j);
    if (determinant(head) != 0) break;
  } while (true);
  for (std::size_t j = 0; j < n; ++j) {
    Integer sum;
    for (std::size_t i = 0; i < n; ++i) sum -= a(i, j);
    a(n, j) = sum;
  }
  for (std::size_t i = n + 1; i < m; ++i) {
    const auto row = nonzero_row(rng, n);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
  }
  RatVector offsets;
  for (std::size_t i = 0; i < m; ++i) offsets.push_back(positive_offset(rng));

  // s = offsets + A x, so W must annihilate the columns of A.
  RandomQuotient out;
  out.weights = integer_kernel(a.transposed()).transposed();
  out.level = multiply(out.weights, offsets);
  return out;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;
  if (n == 0) return u;
  const std::size_t steps = 3 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    switch (uniform(rng, 0, 3)) {
      case 0:
        for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
        break;
      default:
        if (i != j) {
          const long k = uniform(rng, -2, 2);
          for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
        }
    }
  }
  return u;
}

RatVector random_rational_vector(Rng& rng, std::size_t n) {
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(Integer(uniform(rng, -3, 3)), Integer(uniform(rng, 1, 3)));
  return v;
}

}  // namespace toricham::app
