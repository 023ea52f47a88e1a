#pragma once

// Brute-force automorphism groups of Z[x]/(prod Phi_m) with multiplication by x,
// and the exact certification primitives used to validate decisions.
//
// An automorphism is determined by its value ε_m x^{a_m} modulo every Φ_m. Such
// a value is encoded as an exponent u in Z/2m: the unit e(u / 2m), so
// u = 2a + (ε < 0 ? m : 0) mod 2m. Even m only ever produce even u.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cmaut/hermite.hpp"
#include "cmaut/numtheory.hpp"
#include "cmaut/polyz.hpp"

namespace cmaut {

struct UnitValue {
  int sign;    // ±1, always +1 for even m
  Order power;  // in [0, m)

  friend bool operator==(const UnitValue&, const UnitValue&) = default;
};

Order unit_exponent(Order m, UnitValue v);
UnitValue unit_from_exponent(Order m, Order u);
/// ε x^a reduced modulo Φ_m.
UniPoly unit_residue(Order m, UnitValue v);

/// Reduction map Z[x]_{<N} -> ⊕ Z[x]/(Φ_m), N = Σ φ(m), in Hermite form.
class ResidueLattice {
 public:
  ResidueLattice(std::vector<Order> orders, bool track_transform);

  const std::vector<Order>& orders() const noexcept { return orders_; }
  std::size_t dimension() const noexcept { return dimension_; }
  /// Concatenated, zero-padded residues; residues[i] must have degree < φ(orders[i]).
  HermiteLattice::Column stack(std::span<const UniPoly> residues) const;
  bool contains(const HermiteLattice::Column& target) const { return lattice_.contains(target); }
  /// The unique c with deg c < N matching the residues, when it has integer coefficients.
  std::optional<UniPoly> solve(const HermiteLattice::Column& target) const;

 private:
  std::vector<Order> orders_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
  HermiteLattice lattice_;
};

/// |c(λ)| = 1 at every primitive m-th root of unity for every m in M, tested
/// exactly as c(x) c(x^-1) ≡ 1 mod Φ_m.
bool certify_automorphism(std::span<const Order> orders, const UniPoly& c);

struct SignedPower {
  int sign;
  Order k;

  friend bool operator==(const SignedPower&, const SignedPower&) = default;
};

/// First (ε, k), ε = +1 before -1 and k ascending in [0, lcm M), with
/// c ≡ ε x^k mod prod Φ_m; absent when c is not of that form.
std::optional<SignedPower> is_pm_power(std::span<const Order> orders, const UniPoly& c);

/// Same test on the value tuple of an automorphism (one exponent per order).
std::optional<SignedPower> is_pm_power_tuple(std::span<const Order> orders, std::span<const Order> exponents);

/// c with deg c < Σ φ(m) and c ≡ targets[m] mod Φ_m for all m, if one exists
/// over the integers. Throws KeyMismatch unless the keys are exactly M.
std::optional<UniPoly> solve_congruences(std::span<const Order> orders, const std::map<Order, UniPoly>& targets);

/// Direct pairwise test: ε x^a - ε' x^b ∈ (Φ_m, Φ_n).
bool pairwise_compatible(Order m, UnitValue vm, Order n, UnitValue vn);

struct OracleOptions {
  Order max_lcm = 120;
  /// Bound on the product of per-order candidate counts (m for even m, 2m for odd m).
  std::uint64_t max_tuple_space = 1'000'000;
  bool representatives = false;
};

struct AutGroup {
  /// M, descending.
  std::vector<Order> orders;
  /// One value per order, parallel to `orders`; lexicographic in (a, ε) level by level.
  std::vector<std::vector<UnitValue>> members;
  /// Solving polynomial for each member, when requested.
  std::vector<UniPoly> representatives;

  std::uint64_t order() const noexcept { return members.size(); }
};

/// Product of candidate counts, saturating at UINT64_MAX.
std::uint64_t tuple_space(std::span<const Order> orders);

AutGroup aut_group(std::span<const Order> orders, const OracleOptions& options = {});

}  // namespace cmaut
