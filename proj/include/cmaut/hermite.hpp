#pragma once

// Column-style Hermite reduction of a full-rank square integer lattice.
//
// The reduced basis is upper triangular: basis column i has its last nonzero
// entry in row i, the diagonal is strictly positive, and every entry to the
// right of a diagonal element lies in [0, diagonal).

#include <optional>
#include <vector>

#include "cmaut/polyz.hpp"

namespace cmaut {

class HermiteLattice {
 public:
  using Column = std::vector<Integer>;

  /// Reduces the given generator columns (all of length generators.size()).
  /// Returns nullopt when they are linearly dependent. With track_transform the
  /// unimodular change of basis is recorded so that coordinates with respect
  /// to the original generators can be recovered.
  static std::optional<HermiteLattice> reduce(std::vector<Column> generators, bool track_transform = true);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const Column& basis(std::size_t i) const { return basis_[i]; }
  const Integer& diagonal(std::size_t i) const { return basis_[i][i]; }
  /// Index of the lattice in Z^n, the product of the diagonal.
  Integer index() const;
  bool has_transform() const noexcept { return !transform_.empty() || basis_.empty(); }
  /// Column i: coefficients of basis(i) in terms of the original generators.
  const Column& transform(std::size_t i) const { return transform_[i]; }

  /// Integer coordinates of target in the reduced basis, or nullopt if target
  /// is not a lattice vector.
  std::optional<Column> basis_coordinates(Column target) const;
  /// Integer coordinates with respect to the original generators.
  std::optional<Column> generator_coordinates(const Column& target) const;
  bool contains(const Column& target) const { return basis_coordinates(target).has_value(); }

 private:
  std::vector<Column> basis_;
  std::vector<Column> transform_;
};

}  // namespace cmaut
