#pragma once

// Dense univariate polynomials over Z with GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmaut {

using Integer = mpz_class;

class UniPoly {
 public:
  /// Degree reported for the zero polynomial; compares below every real degree.
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

  UniPoly() = default;
  /// Coefficients in ascending order of powers; trailing zeros are dropped.
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Integer& c);
  /// c * x^k
  static UniPoly monomial(const Integer& c, std::size_t k);
  /// x^k - 1
  static UniPoly x_pow_minus_one(std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1;
  }
  const Integer& leading() const;
  bool is_unitary() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero beyond the stored range.
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Integer eval(const Integer& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Integer& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Integer& c) { return a *= c; }
  friend UniPoly operator*(const Integer& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// f(x) -> f(x^k)
  UniPoly compose_power(std::size_t k) const;
  /// Replaces x^i by x^(i mod m), i.e. reduction modulo x^m - 1.
  UniPoly fold_exponents(std::size_t m) const;
  /// f(x) -> f(x^-1) modulo x^m - 1.
  UniPoly reciprocal_mod(std::size_t m) const;

  /// Ascending comma-separated coefficients, "0" for the zero polynomial.
  std::string to_string() const;
  static UniPoly parse(std::string_view text);

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a by a unitary b; throws unless b is unitary.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
/// Remainder of a modulo a unitary b.
UniPoly mod(const UniPoly& a, const UniPoly& b);
/// Exact quotient a / b for unitary b; throws InternalError if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Determinant of a square integer matrix (row-major), fraction-free Bareiss.
Integer bareiss_determinant(std::vector<std::vector<Integer>> rows);

/// Resultant R(f,g) = lc(f)^deg g * lc(g)^deg f * prod (a_i - b_j), computed as
/// a determinant of the Sylvester matrix built from f, x f, ..., g, x g, ...
/// Returns 1 when both inputs are constants. Throws ZeroPolynomial on zero input.
Integer resultant(const UniPoly& f, const UniPoly& g);

/// Columns (f, x f, ..., x^(n-1) f, g, ..., x^(m-1) g) in the monomial basis
/// 1, x, ..., x^(m+n-1), where m = deg f and n = deg g. Row-major.
std::vector<std::vector<Integer>> sylvester_matrix(const UniPoly& f, const UniPoly& g);

}  // namespace cmaut
