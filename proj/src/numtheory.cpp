#include "cmaut/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "cmaut/error.hpp"

namespace cmaut {

std::vector<PrimePower> factorize(Order n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize requires n >= 1, got " + std::to_string(n));
  std::vector<PrimePower> out;
  for (Order p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(Order n) {
  if (n < 2) return false;
  for (Order p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(Order n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

Order totient(Order m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "totient requires m >= 1, got " + std::to_string(m));
  Order phi = m;
  for (const auto& [p, k] : factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

int valuation(Order m, Order p) {
  if (m < 1 || p < 2) throw Error(ErrorCode::InvalidArgument, "valuation requires m >= 1 and p >= 2");
  int l = 0;
  while (m % p == 0) {
    m /= p;
    ++l;
  }
  return l;
}

std::vector<Order> divisors(Order n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "divisors requires n >= 1");
  std::vector<Order> small, large;
  for (Order d = 1; d <= n / d; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Order gcd(Order a, Order b) { return std::gcd(a, b); }

Order lcm_bounded(std::span<const Order> values, Order bound) {
  Order acc = 1;
  for (Order v : values) {
    if (v < 1) throw Error(ErrorCode::InvalidArgument, "lcm of non-positive value " + std::to_string(v));
    const Order step = v / std::gcd(acc, v);
    if (acc > bound / step) {
      throw Error(ErrorCode::ResourceLimit, "lcm exceeds the configured bound " + std::to_string(bound));
    }
    acc *= step;
  }
  return acc;
}

Order lcm(std::span<const Order> values) { return lcm_bounded(values, std::numeric_limits<Order>::max()); }

std::vector<Order> prime_divisors(Order n) {
  std::vector<Order> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<Order> validated_set(std::span<const Order> elements) {
  if (elements.empty()) throw Error(ErrorCode::EmptySet, "the set M is empty");
  std::vector<Order> out(elements.begin(), elements.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1) throw Error(ErrorCode::InvalidArgument, "elements of M must be positive, got " + std::to_string(out[i]));
    if (i > 0 && out[i] == out[i - 1]) throw Error(ErrorCode::DuplicateElement, "duplicate element " + std::to_string(out[i]));
  }
  return out;
}

}  // namespace cmaut
