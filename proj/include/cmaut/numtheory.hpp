#pragma once

// Small-integer number theory used throughout: factorization by trial
// division, prime-power detection, valuations, lcm.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cmaut {

using Order = std::int64_t;

struct PrimePower {
  Order prime;
  int exponent;
};

/// Prime factorization in increasing order of primes. Requires n >= 1.
std::vector<PrimePower> factorize(Order n);
bool is_prime(Order n);
/// (p, k) with n = p^k, k >= 1; absent for 1 and for non prime powers.
std::optional<PrimePower> as_prime_power(Order n);
/// Euler phi via the factorization of m. Throws InvalidArgument for m < 1.
Order totient(Order m);
/// Largest l with p^l | m (the l(m, p) of the monodromy graph).
int valuation(Order m, Order p);
/// Ascending list of the positive divisors of n.
std::vector<Order> divisors(Order n);
Order gcd(Order a, Order b);
/// lcm of all entries; throws ResourceLimit once the running value exceeds bound.
Order lcm_bounded(std::span<const Order> values, Order bound);
Order lcm(std::span<const Order> values);
/// Distinct primes dividing n, ascending.
std::vector<Order> prime_divisors(Order n);

/// Ascending copy of a finite set of positive integers. Throws EmptySet,
/// DuplicateElement, or InvalidArgument for entries < 1.
std::vector<Order> validated_set(std::span<const Order> elements);

}  // namespace cmaut
