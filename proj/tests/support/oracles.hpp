#pragma once

// Reference computations for the tests. They deliberately avoid the library's
// own algorithms: rational Euclid instead of Sylvester determinants, Möbius
// products instead of the divisor recursion, Gaussian elimination over Q
// instead of Hermite reduction.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "cmaut/polyz.hpp"

namespace oracle {

using Q = mpq_class;
using QPoly = std::vector<Q>;  // ascending, trimmed

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly to_q(const cmaut::UniPoly& p) {
  QPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

inline long deg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

// Remainder of a modulo b over Q (b nonzero).
inline QPoly qrem(QPoly a, const QPoly& b) {
  trim(a);
  while (deg(a) >= deg(b)) {
    const Q factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

inline QPoly qdiv_exact(QPoly a, const QPoly& b) {
  trim(a);
  if (deg(a) < deg(b)) return {};
  QPoly q(a.size() - b.size() + 1);
  while (deg(a) >= deg(b)) {
    const Q factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// gcd over Q, as a polynomial of degree >= 0 (zero only if both are zero).
inline QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// R(f, g) = lc(f)^n lc(g)^m prod (a_i - b_j), by the Euclidean recursion
// R(f, g) = (-1)^(mn) lc(g)^(m - deg r) R(g, r) with r = f mod g.
inline Q euclid_resultant(QPoly f, QPoly g) {
  trim(f);
  trim(g);
  Q acc = 1;
  while (true) {
    const long m = deg(f), n = deg(g);
    if (n == 0) {
      Q p = 1;
      for (long i = 0; i < m; ++i) p *= g[0];
      return acc * p;
    }
    if (m == 0) {
      Q p = 1;
      for (long i = 0; i < n; ++i) p *= f[0];
      return acc * p;
    }
    QPoly r = qrem(f, g);
    if (r.empty()) return 0;
    if ((m * n) % 2) acc = -acc;
    for (long i = 0; i < m - deg(r); ++i) acc *= g.back();
    f = std::move(g);
    g = std::move(r);
  }
}

inline int mobius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Φ_m = prod_{d | m} (x^d - 1)^{μ(m/d)}
inline cmaut::UniPoly mobius_cyclotomic(std::int64_t m) {
  QPoly num{1}, den{1};
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    QPoly xd(static_cast<std::size_t>(d) + 1);
    xd[0] = -1;
    xd.back() = 1;
    const int mu = mobius(m / d);
    if (mu == 1) num = qmul(num, xd);
    if (mu == -1) den = qmul(den, xd);
  }
  QPoly q = qdiv_exact(num, den);
  std::vector<cmaut::Integer> coeffs;
  for (const auto& c : q) coeffs.push_back(c.get_num());
  return cmaut::UniPoly(std::move(coeffs));
}

inline std::int64_t totient_by_count(std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}

inline bool is_prime_power_naive(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Solves A y = t over Q (A square, nonsingular). Row-major A.
inline std::optional<std::vector<Q>> solve_rational(std::vector<std::vector<Q>> a, std::vector<Q> t) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(t[pivot], t[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      t[r] -= f * t[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) t[i] /= a[i][i];
  return t;
}

// Whether t lies in Z[x]_{<deg g} f + Z[x]_{<deg f} g, decided over Q.
inline bool lattice_member_rational(const cmaut::UniPoly& f, const cmaut::UniPoly& g, const cmaut::UniPoly& t) {
  const std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
  const std::size_t dim = m + n;
  std::vector<std::vector<Q>> a(dim, std::vector<Q>(dim));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= m; ++i) a[i + j][j] = f.coeff(i);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i <= n; ++i) a[i + j][n + j] = g.coeff(i);
  std::vector<Q> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) rhs[i] = t.coeff(i);
  auto y = solve_rational(a, rhs);
  if (!y) return false;
  for (auto& v : *y)
    if (v.get_den() != 1) return false;
  return true;
}

inline cmaut::UniPoly random_poly(std::mt19937_64& rng, int max_deg, int bound, bool unitary) {
  std::uniform_int_distribution<int> dd(unitary ? 0 : -1, max_deg), cd(-bound, bound);
  const int d = dd(rng);
  if (d < 0) return {};
  std::vector<cmaut::Integer> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = cd(rng);
  if (unitary) c.back() = 1;
  return cmaut::UniPoly(std::move(c));
}

}  // namespace oracle
