#include "cmaut/polyz.hpp"

#include <algorithm>
#include <cctype>

#include "cmaut/error.hpp"

namespace cmaut {

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly(std::vector<Integer>{c}); }

UniPoly UniPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::x_pow_minus_one(std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[0] -= 1;
  v[k] += 1;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer UniPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& other) { return *this = *this * other; }

UniPoly& UniPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

UniPoly UniPoly::compose_power(std::size_t k) const {
  if (k == 0) return constant(eval(1));
  if (is_zero()) return {};
  std::vector<Integer> out((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::fold_exponents(std::size_t m) const {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "fold_exponents modulus must be positive");
  std::vector<Integer> out(std::min(m, coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i % m] += coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::reciprocal_mod(std::size_t m) const {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "reciprocal_mod modulus must be positive");
  std::vector<Integer> out(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[(m - i % m) % m] += coeffs_[i];
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

UniPoly UniPoly::parse(std::string_view text) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    std::string digits(tok);
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    bool ok = !digits.empty();
    for (std::size_t i = 0; ok && i < digits.size(); ++i) {
      char ch = digits[i];
      ok = std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && ch == '-' && digits.size() > 1);
    }
    if (!ok) throw Error(ErrorCode::InvalidArgument, "malformed polynomial coefficient '" + std::string(tok) + "'");
    out.emplace_back(digits, 10);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (!b.is_unitary()) throw Error(ErrorCode::NotUnitary, "divisor " + b.to_string() + " is not unitary");
  const long db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(r.size() - static_cast<std::size_t>(db));
  const auto& bc = b.coeffs();
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    const Integer c = r[i];
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(i - db);
    q[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly mod(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InternalError, "inexact division by " + b.to_string());
  return q;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<Integer>> sylvester_matrix(const UniPoly& f, const UniPoly& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= m; ++i) a[i + j][j] = f.coeffs()[i];
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i <= n; ++i) a[i + k][n + k] = g.coeffs()[i];
  return a;
}

Integer resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  const long m = f.degree();
  const long n = g.degree();
  if (m + n == 0) return 1;
  // The determinant of the ascending-basis Sylvester matrix differs from the
  // root-product resultant by (-1)^(m n).
  Integer det = bareiss_determinant(sylvester_matrix(f, g));
  return (m * n) % 2 == 0 ? det : Integer(-det);
}

}  // namespace cmaut
