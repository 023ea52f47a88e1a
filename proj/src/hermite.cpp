#include "cmaut/hermite.hpp"

#include <string>

#include "cmaut/error.hpp"

namespace cmaut {
namespace {

using Column = HermiteLattice::Column;

// col_a <- s*a + t*b, col_b <- u*a + v*b
void combine(Column& a, Column& b, const Integer& s, const Integer& t, const Integer& u, const Integer& v) {
  Integer na, nb;
  for (std::size_t k = 0; k < a.size(); ++k) {
    na = s * a[k] + t * b[k];
    nb = u * a[k] + v * b[k];
    a[k].swap(na);
    b[k].swap(nb);
  }
}

void axpy(Column& y, const Integer& q, const Column& x) {
  for (std::size_t k = 0; k < y.size(); ++k) mpz_submul(y[k].get_mpz_t(), q.get_mpz_t(), x[k].get_mpz_t());
}

}  // namespace

std::optional<HermiteLattice> HermiteLattice::reduce(std::vector<Column> cols, bool track_transform) {
  const std::size_t n = cols.size();
  for (const auto& c : cols) {
    if (c.size() != n) throw Error(ErrorCode::InvalidArgument, "generator matrix must be square");
  }
  std::vector<Column> u;
  if (track_transform) {
    u.assign(n, Column(n));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  }

  Integer g, s, t, a_div, b_div;
  for (std::size_t r = n; r-- > 0;) {
    // Fold row r of columns 0..r-1 into the pivot column r.
    for (std::size_t j = 0; j < r; ++j) {
      if (cols[j][r] == 0) continue;
      if (cols[r][r] == 0) {
        std::swap(cols[r], cols[j]);
        if (track_transform) std::swap(u[r], u[j]);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cols[r][r].get_mpz_t(), cols[j][r].get_mpz_t());
      mpz_divexact(a_div.get_mpz_t(), cols[r][r].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b_div.get_mpz_t(), cols[j][r].get_mpz_t(), g.get_mpz_t());
      // [s t; -b/g a/g] has determinant 1.
      const Integer nb = -b_div;
      combine(cols[r], cols[j], s, t, nb, a_div);
      if (track_transform) combine(u[r], u[j], s, t, nb, a_div);
    }
    if (cols[r][r] == 0) return std::nullopt;
    if (cols[r][r] < 0) {
      for (auto& x : cols[r]) x = -x;
      if (track_transform)
        for (auto& x : u[r]) x = -x;
    }
    Integer q;
    for (std::size_t j = r + 1; j < n; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_mpz_t(), cols[r][r].get_mpz_t());
      if (q == 0) continue;
      axpy(cols[j], q, cols[r]);
      if (track_transform) axpy(u[j], q, u[r]);
    }
  }

  HermiteLattice out;
  out.basis_ = std::move(cols);
  out.transform_ = std::move(u);
  return out;
}

Integer HermiteLattice::index() const {
  Integer prod = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) prod *= basis_[i][i];
  return prod;
}

std::optional<Column> HermiteLattice::basis_coordinates(Column target) const {
  const std::size_t n = basis_.size();
  if (target.size() != n) throw Error(ErrorCode::InvalidArgument, "target length does not match lattice dimension");
  Column y(n);
  for (std::size_t r = n; r-- > 0;) {
    if (target[r] == 0) continue;
    if (!mpz_divisible_p(target[r].get_mpz_t(), basis_[r][r].get_mpz_t())) return std::nullopt;
    mpz_divexact(y[r].get_mpz_t(), target[r].get_mpz_t(), basis_[r][r].get_mpz_t());
    axpy(target, y[r], basis_[r]);
  }
  return y;
}

std::optional<Column> HermiteLattice::generator_coordinates(const Column& target) const {
  if (!has_transform()) throw Error(ErrorCode::InternalError, "lattice was reduced without a transform");
  auto y = basis_coordinates(target);
  if (!y) return std::nullopt;
  const std::size_t n = basis_.size();
  Column x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((*y)[i] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) mpz_addmul(x[k].get_mpz_t(), (*y)[i].get_mpz_t(), transform_[i][k].get_mpz_t());
  }
  return x;
}

}  // namespace cmaut
