#pragma once

// Truncated ideal lattices (f, g) ∩ Z[x]_{<= deg f + deg g - 1} for unitary f, g.

#include <optional>
#include <utility>
#include <vector>

#include "cmaut/hermite.hpp"
#include "cmaut/polyz.hpp"

namespace cmaut {

struct BezoutCertificate {
  UniPoly a;  // multiplier of f, deg a <= deg g - 1
  UniPoly b;  // multiplier of g, deg b <= deg f - 1
};

/// Triangular basis h^(0), ..., h^(N-1) of the ideal lattice with N = deg f + deg g,
/// deg h^(i) = i, positive leading coefficients forming a divisibility chain,
/// and a record of each h^(i) as a f + b g. Immutable after construction.
class IdealLattice {
 public:
  /// Throws NotUnitary, or ResultantZero when f and g share a root.
  IdealLattice(UniPoly f, UniPoly g);

  const UniPoly& f() const noexcept { return f_; }
  const UniPoly& g() const noexcept { return g_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<UniPoly>& basis() const noexcept { return basis_; }
  /// Leading coefficients h^(i)_i.
  std::vector<Integer> diagonal() const;
  const BezoutCertificate& certificate(std::size_t i) const { return certificates_[i]; }
  /// Signed R(f, g), computed independently of the reduction.
  const Integer& resultant() const noexcept { return resultant_; }

  /// Certificate t = a f + b g when t is in the lattice. Throws DegreeBound if
  /// deg t exceeds rank() - 1.
  std::optional<BezoutCertificate> contains(const UniPoly& t) const;

  /// Membership in the full ideal (f, g) for any t, by reduction modulo f g.
  std::optional<BezoutCertificate> ideal_contains(const UniPoly& t) const;

 private:
  BezoutCertificate combine(const HermiteLattice::Column& coords) const;
  void check_invariants() const;

  UniPoly f_;
  UniPoly g_;
  Integer resultant_;
  HermiteLattice lattice_;
  std::vector<UniPoly> basis_;
  std::vector<BezoutCertificate> certificates_;
};

/// (a1, a2) with 1 = a1 f + a2 g when |R(f, g)| = 1; absent otherwise.
std::optional<BezoutCertificate> bezout_one(const UniPoly& f, const UniPoly& g);

/// Whether (f, g) = (p, g), decided as |R(f,g)| = p^deg g together with p ∈ (f, g).
/// Requires deg f >= deg g.
bool equals_p_ideal(const UniPoly& f, const UniPoly& g, long p);

struct LatticeSplitting {
  /// Index of (g)/(fg) + (f)/(fg) in Z[x]/(fg); 1 iff Z[x]/(fg) splits as a product.
  Integer index;
  /// x^i g for i < deg f: the primitive sublattice on which x acts with characteristic polynomial f.
  std::vector<UniPoly> sub_f;
  /// x^i f for i < deg g.
  std::vector<UniPoly> sub_g;
};

LatticeSplitting split_lattice(const UniPoly& f, const UniPoly& g);

}  // namespace cmaut
