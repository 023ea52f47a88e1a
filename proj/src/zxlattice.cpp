#include "cmaut/zxlattice.hpp"

#include <string>

#include "cmaut/error.hpp"

namespace cmaut {
namespace {

std::vector<HermiteLattice::Column> columns_of(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t n = rows.size();
  std::vector<HermiteLattice::Column> cols(n, HermiteLattice::Column(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = rows[i][j];
  return cols;
}

HermiteLattice::Column padded(const UniPoly& p, std::size_t n) {
  HermiteLattice::Column c(n);
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p.coeffs()[i];
  return c;
}

void require_unitary(const UniPoly& p, const char* name) {
  if (!p.is_unitary()) throw Error(ErrorCode::NotUnitary, std::string(name) + " = " + p.to_string() + " is not unitary");
}

}  // namespace

IdealLattice::IdealLattice(UniPoly f, UniPoly g) : f_(std::move(f)), g_(std::move(g)) {
  require_unitary(f_, "f");
  require_unitary(g_, "g");
  resultant_ = cmaut::resultant(f_, g_);
  if (resultant_ == 0) {
    throw Error(ErrorCode::ResultantZero, "R(" + f_.to_string() + "; " + g_.to_string() + ") = 0");
  }
  auto reduced = HermiteLattice::reduce(columns_of(sylvester_matrix(f_, g_)));
  if (!reduced) throw Error(ErrorCode::InternalError, "Sylvester columns dependent although R != 0");
  lattice_ = std::move(*reduced);

  const std::size_t n_f = static_cast<std::size_t>(g_.degree());  // multiples x^k f, k < deg g
  for (std::size_t i = 0; i < lattice_.dimension(); ++i) {
    basis_.emplace_back(lattice_.basis(i));
    const auto& u = lattice_.transform(i);
    certificates_.push_back({UniPoly(std::vector<Integer>(u.begin(), u.begin() + static_cast<long>(n_f))),
                             UniPoly(std::vector<Integer>(u.begin() + static_cast<long>(n_f), u.end()))});
  }
  check_invariants();
}

std::vector<Integer> IdealLattice::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < lattice_.dimension(); ++i) d.push_back(lattice_.diagonal(i));
  return d;
}

void IdealLattice::check_invariants() const {
  const auto fail = [](const std::string& what) { throw Error(ErrorCode::InternalError, "ideal lattice: " + what); };
  const std::size_t trailing_from = static_cast<std::size_t>(std::min(f_.degree(), g_.degree()));
  Integer prod = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& h = basis_[i];
    if (h.degree() != static_cast<long>(i)) fail("deg h^(" + std::to_string(i) + ") != " + std::to_string(i));
    const Integer& d = h.leading();
    if (d <= 0) fail("non-positive diagonal");
    if (i + 1 < basis_.size() && !mpz_divisible_p(d.get_mpz_t(), basis_[i + 1].leading().get_mpz_t()))
      fail("divisibility chain broken at " + std::to_string(i));
    if (i >= trailing_from && d != 1) fail("diagonal entry " + std::to_string(i) + " should be 1");
    if (certificates_[i].a * f_ + certificates_[i].b * g_ != h) fail("certificate does not reproduce h^(i)");
    prod *= d;
  }
  if (prod != abs(resultant_)) fail("diagonal product differs from |R(f,g)|");
}

BezoutCertificate IdealLattice::combine(const HermiteLattice::Column& coords) const {
  BezoutCertificate out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    out.a += certificates_[i].a * coords[i];
    out.b += certificates_[i].b * coords[i];
  }
  return out;
}

std::optional<BezoutCertificate> IdealLattice::contains(const UniPoly& t) const {
  if (t.degree() >= static_cast<long>(rank())) {
    throw Error(ErrorCode::DegreeBound,
                "deg " + std::to_string(t.degree()) + " exceeds lattice bound " + std::to_string(rank() - 1));
  }
  auto coords = lattice_.basis_coordinates(padded(t, rank()));
  if (!coords) return std::nullopt;
  return combine(*coords);
}

std::optional<BezoutCertificate> IdealLattice::ideal_contains(const UniPoly& t) const {
  auto [q, r] = divrem(t, f_ * g_);
  auto cert = contains(r);
  if (!cert) return std::nullopt;
  cert->a += q * g_;
  return cert;
}

std::optional<BezoutCertificate> bezout_one(const UniPoly& f, const UniPoly& g) {
  require_unitary(f, "f");
  require_unitary(g, "g");
  if (f.degree() == 0) return BezoutCertificate{UniPoly{1}, UniPoly{}};
  if (g.degree() == 0) return BezoutCertificate{UniPoly{}, UniPoly{1}};
  IdealLattice lattice(f, g);
  if (abs(lattice.resultant()) != 1) return std::nullopt;
  auto cert = lattice.contains(UniPoly{1});
  if (!cert) throw Error(ErrorCode::InternalError, "|R| = 1 but 1 is not in the ideal lattice");
  return cert;
}

bool equals_p_ideal(const UniPoly& f, const UniPoly& g, long p) {
  if (f.degree() < g.degree()) throw Error(ErrorCode::PreconditionViolated, "equals_p_ideal requires deg f >= deg g");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be a prime");
  IdealLattice lattice(f, g);
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(g.degree()));
  if (abs(lattice.resultant()) != expected) return false;
  if (lattice.rank() == 0) return true;
  return lattice.contains(UniPoly::constant(p)).has_value();
}

LatticeSplitting split_lattice(const UniPoly& f, const UniPoly& g) {
  require_unitary(f, "f");
  require_unitary(g, "g");
  if (resultant(f, g) == 0) {
    throw Error(ErrorCode::ResultantZero, "R(" + f.to_string() + "; " + g.to_string() + ") = 0");
  }
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  LatticeSplitting out;
  std::vector<HermiteLattice::Column> cols;
  for (std::size_t i = 0; i < m; ++i) {
    out.sub_f.push_back(UniPoly::monomial(1, i) * g);
    cols.push_back(padded(out.sub_f.back(), m + n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.sub_g.push_back(UniPoly::monomial(1, i) * f);
    cols.push_back(padded(out.sub_g.back(), m + n));
  }
  auto reduced = HermiteLattice::reduce(std::move(cols), false);
  if (!reduced) throw Error(ErrorCode::InternalError, "sublattices not of full rank although R != 0");
  out.index = reduced->index();
  return out;
}

}  // namespace cmaut
