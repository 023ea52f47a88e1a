#include "cmaut/cyclotomic.hpp"

#include <string>

#include "cmaut/error.hpp"

namespace cmaut {

const UniPoly& CycloCache::get(Order m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1, got " + std::to_string(m));
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(m); it != table_.end()) return it->second;
  }
  UniPoly denom = UniPoly::constant(1);
  for (Order k : divisors(m)) {
    if (k != m) denom *= get(k);
  }
  UniPoly phi = exact_div(UniPoly::x_pow_minus_one(static_cast<std::size_t>(m)), denom);
  std::lock_guard lock(mutex_);
  // std::map never invalidates references, so a racing insert is harmless.
  return table_.emplace(m, std::move(phi)).first->second;
}

std::size_t CycloCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

CycloCache& CycloCache::global() {
  static CycloCache cache;
  return cache;
}

const UniPoly& cyclotomic(Order m) { return CycloCache::global().get(m); }

UniPoly cyclotomic_product(std::span<const Order> orders) {
  UniPoly out = UniPoly::constant(1);
  for (Order m : orders) out *= cyclotomic(m);
  return out;
}

Integer value_at_one(Order m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "value_at_one requires m >= 1");
  if (m == 1) return 0;
  if (auto pp = as_prime_power(m)) return Integer(static_cast<long>(pp->prime));
  return 1;
}

Integer cyclo_resultant(Order m, Order n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "cyclo_resultant requires m, n >= 1");
  if (m == n) return 0;
  if (m == 1 && n == 2) return 2;
  if (m == 2 && n == 1) return -2;
  const Order big = std::max(m, n);
  const Order small = std::min(m, n);
  if (big % small != 0) return 1;
  auto pp = as_prime_power(big / small);
  if (!pp) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(pp->prime),
                static_cast<unsigned long>(totient(small)));
  return out;
}

Integer norm(Order m, const UniPoly& g) {
  if (g.is_zero()) return 0;
  return resultant(cyclotomic(m), g);
}

}  // namespace cmaut
