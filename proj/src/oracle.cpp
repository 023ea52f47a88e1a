#include "cmaut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "cmaut/cyclotomic.hpp"
#include "cmaut/error.hpp"
#include "cmaut/zxlattice.hpp"

namespace cmaut {
namespace {

using Column = HermiteLattice::Column;

// x^j mod Φ_m for j = 0, ..., count - 1, each padded to φ(m) coefficients.
std::vector<Column> power_residues(Order m, std::size_t count) {
  const UniPoly& phi = cyclotomic(m);
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  std::vector<Column> out;
  out.reserve(count);
  Column r(deg);
  r[0] = 1;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(r);
    const Integer top = r[deg - 1];
    for (std::size_t i = deg; i-- > 1;) r[i] = r[i - 1];
    r[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) mpz_submul(r[i].get_mpz_t(), top.get_mpz_t(), phi.coeffs()[i].get_mpz_t());
  }
  return out;
}

Column negated(Column c) {
  for (auto& x : c) x = -x;
  return c;
}

// Residue columns of every unit e(u / 2m) that can occur for order m, indexed by u.
std::vector<Column> unit_residue_table(Order m) {
  const auto powers = power_residues(m, static_cast<std::size_t>(m));
  std::vector<Column> table(static_cast<std::size_t>(2 * m));
  for (Order u = 0; u < 2 * m; ++u) {
    if (m % 2 == 0 && u % 2 != 0) continue;
    const UnitValue v = unit_from_exponent(m, u);
    const Column& p = powers[static_cast<std::size_t>(v.power)];
    table[static_cast<std::size_t>(u)] = v.sign > 0 ? p : negated(p);
  }
  return table;
}

Order mod_floor(Order a, Order m) {
  Order r = a % m;
  return r < 0 ? r + m : r;
}

// Combine k ≡ r1 (mod n1) with k ≡ r2 (mod n2); false when incompatible.
bool crt_merge(Order& r1, Order& n1, Order r2, Order n2) {
  const Order g = std::gcd(n1, n2);
  if ((r2 - r1) % g != 0) return false;
  const Order n2g = n2 / g;
  // inverse of n1/g modulo n2/g
  Order inv = 0;
  if (n2g > 1) {
    Integer a = n1 / g, mod = n2g, out;
    mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    inv = out.get_si();
  }
  const __int128 step = static_cast<__int128>(mod_floor((r2 - r1) / g, n2g)) * inv % (n2g == 0 ? 1 : n2g);
  const __int128 combined = r1 + static_cast<__int128>(n1) * step;
  const __int128 modulus = static_cast<__int128>(n1) * n2g;
  if (modulus > std::numeric_limits<Order>::max()) throw Error(ErrorCode::ResourceLimit, "lcm overflows 64 bits");
  n1 = static_cast<Order>(modulus);
  r1 = static_cast<Order>(combined % modulus);
  return true;
}

}  // namespace

Order unit_exponent(Order m, UnitValue v) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  return mod_floor(2 * mod_floor(v.power, m) + (v.sign < 0 ? m : 0), 2 * m);
}

UnitValue unit_from_exponent(Order m, Order u) {
  u = mod_floor(u, 2 * m);
  if (u % 2 == 0) return {1, u / 2};
  if (m % 2 == 0) throw Error(ErrorCode::InvalidArgument, "odd exponent for even order " + std::to_string(m));
  return {-1, ((u + m) / 2) % m};
}

UniPoly unit_residue(Order m, UnitValue v) {
  return mod(UniPoly::monomial(v.sign, static_cast<std::size_t>(mod_floor(v.power, m))), cyclotomic(m));
}

ResidueLattice::ResidueLattice(std::vector<Order> orders, bool track_transform) : orders_(std::move(orders)) {
  for (Order m : orders_) {
    offsets_.push_back(dimension_);
    dimension_ += static_cast<std::size_t>(totient(m));
  }
  std::vector<Column> cols(dimension_, Column(dimension_));
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto powers = power_residues(orders_[i], dimension_);
    for (std::size_t k = 0; k < dimension_; ++k)
      std::copy(powers[k].begin(), powers[k].end(), cols[k].begin() + static_cast<long>(offsets_[i]));
  }
  auto reduced = HermiteLattice::reduce(std::move(cols), track_transform);
  if (!reduced) throw Error(ErrorCode::InternalError, "reduction map is not injective");
  lattice_ = std::move(*reduced);
}

Column ResidueLattice::stack(std::span<const UniPoly> residues) const {
  if (residues.size() != orders_.size()) throw Error(ErrorCode::InvalidArgument, "one residue per order expected");
  Column out(dimension_);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::size_t width = (i + 1 < offsets_.size() ? offsets_[i + 1] : dimension_) - offsets_[i];
    if (residues[i].degree() >= static_cast<long>(width)) {
      throw Error(ErrorCode::DegreeBound, "residue for order " + std::to_string(orders_[i]) + " not reduced");
    }
    std::copy(residues[i].coeffs().begin(), residues[i].coeffs().end(), out.begin() + static_cast<long>(offsets_[i]));
  }
  return out;
}

std::optional<UniPoly> ResidueLattice::solve(const Column& target) const {
  auto coords = lattice_.generator_coordinates(target);
  if (!coords) return std::nullopt;
  return UniPoly(std::move(*coords));
}

bool certify_automorphism(std::span<const Order> orders, const UniPoly& c) {
  for (Order m : validated_set(orders)) {
    const std::size_t mm = static_cast<std::size_t>(m);
    const UniPoly folded = c.fold_exponents(mm);
    if (mod(folded * folded.reciprocal_mod(mm), cyclotomic(m)) != UniPoly{1}) return false;
  }
  return true;
}

std::optional<SignedPower> is_pm_power_tuple(std::span<const Order> orders, std::span<const Order> exponents) {
  if (orders.size() != exponents.size()) throw Error(ErrorCode::InvalidArgument, "one exponent per order expected");
  for (int sign : {1, -1}) {
    Order r = 0, n = 1;
    bool ok = true;
    for (std::size_t i = 0; ok && i < orders.size(); ++i) {
      const Order m = orders[i];
      const Order shifted = mod_floor(exponents[i] - (sign < 0 ? m : 0), 2 * m);
      ok = shifted % 2 == 0 && crt_merge(r, n, shifted / 2, m);
    }
    if (ok) return SignedPower{sign, r};
  }
  return std::nullopt;
}

std::optional<SignedPower> is_pm_power(std::span<const Order> orders, const UniPoly& c) {
  const auto set = validated_set(orders);
  std::vector<Order> exponents;
  for (Order m : set) {
    const UniPoly r = mod(c.fold_exponents(static_cast<std::size_t>(m)), cyclotomic(m));
    const auto table = unit_residue_table(m);
    std::optional<Order> found;
    for (Order u = 0; u < 2 * m && !found; ++u) {
      if (m % 2 == 0 && u % 2 != 0) continue;
      if (UniPoly(table[static_cast<std::size_t>(u)]) == r) found = u;
    }
    if (!found) return std::nullopt;
    exponents.push_back(*found);
  }
  return is_pm_power_tuple(set, exponents);
}

std::optional<UniPoly> solve_congruences(std::span<const Order> orders, const std::map<Order, UniPoly>& targets) {
  const auto set = validated_set(orders);
  if (targets.size() != set.size() ||
      !std::all_of(set.begin(), set.end(), [&](Order m) { return targets.count(m) > 0; })) {
    throw Error(ErrorCode::KeyMismatch, "congruence targets must be keyed exactly by M");
  }
  ResidueLattice lattice(set, true);
  std::vector<UniPoly> residues;
  for (Order m : set) residues.push_back(mod(targets.at(m), cyclotomic(m)));
  return lattice.solve(lattice.stack(residues));
}

bool pairwise_compatible(Order m, UnitValue vm, Order n, UnitValue vn) {
  if (m == n) throw Error(ErrorCode::InvalidArgument, "pairwise test needs distinct orders");
  IdealLattice lattice(cyclotomic(m), cyclotomic(n));
  const UniPoly t = UniPoly::monomial(vm.sign, static_cast<std::size_t>(mod_floor(vm.power, m))) -
                    UniPoly::monomial(vn.sign, static_cast<std::size_t>(mod_floor(vn.power, n)));
  return lattice.ideal_contains(t).has_value();
}

std::uint64_t tuple_space(std::span<const Order> orders) {
  std::uint64_t total = 1;
  for (Order m : orders) {
    const auto count = static_cast<std::uint64_t>(m % 2 == 0 ? m : 2 * m);
    if (total > std::numeric_limits<std::uint64_t>::max() / count) return std::numeric_limits<std::uint64_t>::max();
    total *= count;
  }
  return total;
}

namespace {

class TupleSearch {
 public:
  TupleSearch(std::vector<Order> orders, bool representatives)
      : orders_(std::move(orders)), representatives_(representatives) {
    const std::size_t levels = orders_.size();
    for (std::size_t j = 0; j < levels; ++j) {
      const Order m = orders_[j];
      residues_.push_back(unit_residue_table(m));
      std::vector<Order> cands;
      for (Order a = 0; a < m; ++a) {
        cands.push_back(unit_exponent(m, {1, a}));
        if (m % 2 != 0) cands.push_back(unit_exponent(m, {-1, a}));
      }
      candidates_.push_back(std::move(cands));
      std::vector<Order> prefix(orders_.begin(), orders_.begin() + static_cast<long>(j) + 1);
      prefixes_.emplace_back(std::move(prefix), representatives_ && j + 1 == levels);
      compatible_.emplace_back();
      for (std::size_t i = 0; i < j; ++i) compatible_[j].push_back(compatibility_table(m, orders_[i]));
    }
    chosen_.resize(levels);
  }

  AutGroup run() {
    descend(0);
    AutGroup out;
    out.orders = orders_;
    out.members = std::move(members_);
    out.representatives = std::move(reps_);
    return out;
  }

 private:
  // Compatible pairs with order n form a subgroup of the value group, so
  // (α, β) is compatible iff (α / β, 1) is, where β is read at order m.
  std::vector<bool> compatibility_table(Order m, Order n) const {
    IdealLattice lattice(cyclotomic(m), cyclotomic(n));
    std::vector<bool> table(static_cast<std::size_t>(2 * m));
    for (Order u = 0; u < 2 * m; ++u) {
      if (m % 2 == 0 && u % 2 != 0) continue;
      UniPoly t = UniPoly(residues_.back()[static_cast<std::size_t>(u)]) - UniPoly{1};
      table[static_cast<std::size_t>(u)] = lattice.ideal_contains(t).has_value();
    }
    return table;
  }

  bool passes_prefilter(std::size_t j, Order u) const {
    const Order m = orders_[j];
    for (std::size_t i = 0; i < j; ++i) {
      const UnitValue earlier = unit_from_exponent(orders_[i], chosen_[i]);
      const Order gamma = (u - unit_exponent(m, earlier) + 2 * m) % (2 * m);
      if (!compatible_[j][i][static_cast<std::size_t>(gamma)]) return false;
    }
    return true;
  }

  Column stacked(std::size_t j) const {
    Column out;
    for (std::size_t i = 0; i <= j; ++i) {
      const Column& r = residues_[i][static_cast<std::size_t>(chosen_[i])];
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  void descend(std::size_t j) {
    if (j == orders_.size()) {
      record();
      return;
    }
    for (Order u : candidates_[j]) {
      chosen_[j] = u;
      if (j > 0 && (!passes_prefilter(j, u) || !prefixes_[j].contains(stacked(j)))) continue;
      descend(j + 1);
    }
  }

  void record() {
    std::vector<UnitValue> member;
    for (std::size_t i = 0; i < orders_.size(); ++i) member.push_back(unit_from_exponent(orders_[i], chosen_[i]));
    members_.push_back(std::move(member));
    if (representatives_) {
      auto c = prefixes_.back().solve(stacked(orders_.size() - 1));
      if (!c) throw Error(ErrorCode::InternalError, "accepted tuple has no solving polynomial");
      reps_.push_back(std::move(*c));
    }
  }

  std::vector<Order> orders_;
  bool representatives_;
  std::vector<std::vector<Column>> residues_;
  std::vector<std::vector<Order>> candidates_;
  std::vector<ResidueLattice> prefixes_;
  std::vector<std::vector<std::vector<bool>>> compatible_;
  std::vector<Order> chosen_;
  std::vector<std::vector<UnitValue>> members_;
  std::vector<UniPoly> reps_;
};

}  // namespace

AutGroup aut_group(std::span<const Order> orders, const OracleOptions& options) {
  auto set = validated_set(orders);
  lcm_bounded(set, options.max_lcm);
  if (tuple_space(set) > options.max_tuple_space) {
    throw Error(ErrorCode::ResourceLimit,
                "tuple space exceeds the configured bound " + std::to_string(options.max_tuple_space));
  }
  std::reverse(set.begin(), set.end());
  return TupleSearch(std::move(set), options.representatives).run();
}

}  // namespace cmaut
