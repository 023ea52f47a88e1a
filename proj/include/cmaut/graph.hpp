#pragma once

// The monodromy graph of a finite set M of positive integers: a directed edge
// m1 -> m2 labelled p whenever m1/m2 = p^k (k >= 1) and no third element of M
// lies between them in the divisibility order.

#include <set>
#include <span>
#include <string>
#include <vector>

#include "cmaut/numtheory.hpp"

namespace cmaut {

struct Edge {
  Order from;
  Order to;
  Order prime;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of vertices, ascending.
using VertexSet = std::vector<Order>;
/// Disjoint vertex sets ordered by their smallest member.
using Partition = std::vector<VertexSet>;

struct QuotientGraph {
  Partition planes;
  /// (i, j): some p-edge runs from planes[i] to planes[j]. Sorted, no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct HighestParts {
  Partition planes;
  std::vector<Edge> edges;
};

class MonodromyGraph {
 public:
  /// Throws EmptySet, DuplicateElement, or InvalidArgument for entries < 1.
  static MonodromyGraph build(std::span<const Order> elements);

  /// Vertices ascending.
  const VertexSet& vertices() const noexcept { return vertices_; }
  /// Edges ordered by source descending, then target descending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<Edge> edges_labelled(Order p) const;
  Order lcm() const { return cmaut::lcm(vertices_); }
  /// max over M of l(m, p)
  int level(Order p) const;

  Partition p_planes(Order p) const;
  HighestParts highest(Order p) const;
  QuotientGraph quotient_graph(Order p) const;
  /// Exactly one highest p-plane. Cross-checked against quotient reachability.
  bool condition_tp(Order p) const;
  /// Quotient-graph form of condition_tp: some p-plane reaches all others.
  bool condition_tp_by_reachability(Order p) const;
  /// Deleting all highest 2-edges leaves at most two components.
  bool condition_s2() const;
  Partition components() const;
  Partition components_without(std::span<const Edge> removed) const;
  bool connected() const { return components().size() == 1; }

  std::string to_dot() const;

 private:
  Partition components_with_edges(std::span<const Edge> kept) const;

  VertexSet vertices_;
  std::vector<Edge> edges_;
};

}  // namespace cmaut
