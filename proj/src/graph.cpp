#include "cmaut/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cmaut/error.hpp"

namespace cmaut {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

MonodromyGraph MonodromyGraph::build(std::span<const Order> elements) {
  MonodromyGraph g;
  g.vertices_ = validated_set(elements);
  const auto& v = g.vertices_;
  for (Order m1 : v) {
    for (Order m2 : v) {
      if (m1 == m2 || m1 % m2 != 0) continue;
      auto pp = as_prime_power(m1 / m2);
      if (!pp) continue;
      const bool blocked = std::any_of(v.begin(), v.end(), [&](Order m3) {
        return m3 != m1 && m3 != m2 && m3 % m2 == 0 && m1 % m3 == 0;
      });
      if (!blocked) g.edges_.push_back({m1, m2, pp->prime});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from > b.from : a.to > b.to;
  });
  return g;
}

std::vector<Edge> MonodromyGraph::edges_labelled(Order p) const {
  std::vector<Edge> out;
  std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(out), [p](const Edge& e) { return e.prime == p; });
  return out;
}

int MonodromyGraph::level(Order p) const {
  int best = 0;
  for (Order m : vertices_) best = std::max(best, valuation(m, p));
  return best;
}

Partition MonodromyGraph::components_with_edges(std::span<const Edge> kept) const {
  auto idx = [this](Order m) {
    return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), m) - vertices_.begin());
  };
  UnionFind uf(vertices_.size());
  for (const auto& e : kept) uf.unite(idx(e.from), idx(e.to));
  std::map<std::size_t, VertexSet> groups;
  for (std::size_t i = 0; i < vertices_.size(); ++i) groups[uf.find(i)].push_back(vertices_[i]);
  // Roots are the smallest index of each class, so map order is by smallest member.
  Partition out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Partition MonodromyGraph::components() const { return components_with_edges(edges_); }

Partition MonodromyGraph::components_without(std::span<const Edge> removed) const {
  std::vector<Edge> kept;
  for (const auto& e : edges_)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  return components_with_edges(kept);
}

Partition MonodromyGraph::p_planes(Order p) const { return components_without(edges_labelled(p)); }

HighestParts MonodromyGraph::highest(Order p) const {
  const auto p_edges = edges_labelled(p);
  std::set<Order> targets;
  for (const auto& e : p_edges) targets.insert(e.to);
  HighestParts out;
  for (auto& plane : p_planes(p)) {
    if (std::none_of(plane.begin(), plane.end(), [&](Order m) { return targets.count(m) > 0; }))
      out.planes.push_back(std::move(plane));
  }
  for (const auto& e : p_edges)
    if (!targets.count(e.from)) out.edges.push_back(e);
  return out;
}

QuotientGraph MonodromyGraph::quotient_graph(Order p) const {
  QuotientGraph q;
  q.planes = p_planes(p);
  std::map<Order, std::size_t> plane_of;
  for (std::size_t i = 0; i < q.planes.size(); ++i)
    for (Order m : q.planes[i]) plane_of[m] = i;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : edges_labelled(p)) edges.insert({plane_of.at(e.from), plane_of.at(e.to)});
  q.edges.assign(edges.begin(), edges.end());
  return q;
}

bool MonodromyGraph::condition_tp_by_reachability(Order p) const {
  const auto q = quotient_graph(p);
  const std::size_t n = q.planes.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : q.edges) adj[a].push_back(b);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> seen(n);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
    if (count == n) return true;
  }
  return false;
}

bool MonodromyGraph::condition_tp(Order p) const {
  const bool by_count = highest(p).planes.size() == 1;
  if (by_count != condition_tp_by_reachability(p)) {
    throw Error(ErrorCode::InternalError, "highest-plane count and quotient reachability disagree for p = " +
                                              std::to_string(p));
  }
  return by_count;
}

bool MonodromyGraph::condition_s2() const { return components_without(highest(2).edges).size() <= 2; }

std::string MonodromyGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph G {\n";
  for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it) out << "  " << *it << ";\n";
  for (const auto& e : edges_) out << "  " << e.from << " -> " << e.to << " [label=\"" << e.prime << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cmaut
