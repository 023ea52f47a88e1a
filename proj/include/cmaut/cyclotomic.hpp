#pragma once

// Cyclotomic polynomials, their values at 1, the closed-form resultants
// between two of them, and norms from Z[e(1/m)] down to Z.

#include <map>
#include <mutex>

#include "cmaut/numtheory.hpp"
#include "cmaut/polyz.hpp"

namespace cmaut {

/// Memoizes Phi_m. Each entry is obtained by dividing x^m - 1 by the product
/// of Phi_k over the proper divisors k of m. Safe for concurrent use.
class CycloCache {
 public:
  const UniPoly& get(Order m);
  std::size_t size() const;

  /// Process-wide instance used by the free functions below.
  static CycloCache& global();

 private:
  mutable std::mutex mutex_;
  std::map<Order, UniPoly> table_;
};

/// Phi_m from the global cache. Throws InvalidArgument for m < 1.
const UniPoly& cyclotomic(Order m);

/// Product of Phi_m over the given orders.
UniPoly cyclotomic_product(std::span<const Order> orders);

/// Phi_m(1): 0 for m = 1, p for m = p^k, 1 otherwise.
Integer value_at_one(Order m);

/// Signed R(Phi_m, Phi_n) from the closed-form table (no determinant).
Integer cyclo_resultant(Order m, Order n);

/// prod g(lambda) over the primitive m-th roots of unity, i.e. R(Phi_m, g).
/// Returns 0 for the zero polynomial.
Integer norm(Order m, const UniPoly& g);

}  // namespace cmaut
