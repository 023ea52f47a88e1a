#include "cmaut/decide.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <set>

#include "cmaut/cyclotomic.hpp"
#include "cmaut/error.hpp"
#include "cmaut/oracle.hpp"
#include "cmaut/zxlattice.hpp"

namespace cmaut {
namespace {

std::string braces(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, Order m) { return std::binary_search(s.begin(), s.end(), m); }

std::vector<Order> odd_primes_of(const MonodromyGraph& g) {
  auto primes = prime_divisors(g.lcm());
  std::erase(primes, Order{2});
  return primes;
}

// Empty when case (I) holds for a connected graph, otherwise the reason.
std::string case_one_failure(const MonodromyGraph& g) {
  if (!g.connected()) return "disconnected";
  for (Order p : odd_primes_of(g))
    if (!g.condition_tp(p)) return "Tp-failed(" + std::to_string(p) + ")";
  if (!g.condition_s2()) return "S2-failed";
  return {};
}

// Empty when case (II) holds for a disconnected graph, otherwise a detail.
std::string case_two_failure(const MonodromyGraph& g) {
  const auto comps = g.components();
  if (comps.size() != 2) return std::to_string(comps.size()) + " components";
  for (const auto& c : comps) {
    for (const auto& e : g.edges_labelled(2))
      if (contains(c, e.from)) return "component " + braces(c) + " contains a 2-edge";
    const auto sub = MonodromyGraph::build(c);
    for (Order p : odd_primes_of(sub))
      if (!sub.condition_tp(p)) return "component " + braces(c) + " fails T" + std::to_string(p);
  }
  const Order l1 = cmaut::lcm(comps[0]), l2 = cmaut::lcm(comps[1]);
  const Order g12 = gcd(l1, l2);
  if (g12 > 2) return "gcd of component lcms is " + std::to_string(g12);
  const int v1 = valuation(l1, 2), v2 = valuation(l2, 2);
  if (v1 == v2) return "both components have l(.,2)=" + std::to_string(v1);
  if (std::min(v1, v2) > 1) return "smaller l(.,2) is " + std::to_string(std::min(v1, v2));
  return {};
}

UniPoly product(const VertexSet& s) { return cyclotomic_product(s); }

// Witness for a connected graph that fails case (I).
UniPoly connected_witness(const MonodromyGraph& g) {
  for (Order p : odd_primes_of(g))
    if (!g.condition_tp(p)) return witness_tp(g.vertices(), p);
  return witness_s2(g.vertices());
}

void require_certified(std::span<const Order> orders, const UniPoly& c) {
  if (!certify_automorphism(orders, c)) throw Error(ErrorCode::InternalError, "witness fails |c| = 1: " + c.to_string());
  if (is_pm_power(orders, c)) throw Error(ErrorCode::InternalError, "witness is ±x^k: " + c.to_string());
}

// Search over one (ε, k) per component, the first component pinned to (+1, 0),
// by total k, then number of negative signs, then lexicographically.
std::optional<UniPoly> search_componentwise(const VertexSet& orders, const Partition& comps) {
  const std::size_t r = comps.size();
  std::vector<Order> period;
  for (const auto& c : comps) period.push_back(cmaut::lcm(c));
  std::vector<std::size_t> comp_of;
  for (Order m : orders)
    for (std::size_t i = 0; i < r; ++i)
      if (contains(comps[i], m)) comp_of.push_back(i);

  ResidueLattice lattice(orders, true);
  std::vector<int> sign(r, 1);
  std::vector<Order> k(r, 0);

  auto attempt = [&]() -> std::optional<UniPoly> {
    std::vector<Order> exps;
    std::vector<UniPoly> residues;
    for (std::size_t j = 0; j < orders.size(); ++j) {
      const std::size_t i = comp_of[j];
      const UnitValue v{sign[i], k[i] % orders[j]};
      exps.push_back(unit_exponent(orders[j], v));
      residues.push_back(unit_residue(orders[j], v));
    }
    if (is_pm_power_tuple(orders, exps)) return std::nullopt;
    return lattice.solve(lattice.stack(residues));
  };

  std::function<std::optional<UniPoly>(std::size_t, Order, std::size_t)> walk =
      [&](std::size_t i, Order sum_left, std::size_t neg_left) -> std::optional<UniPoly> {
    if (i == r) return sum_left == 0 && neg_left == 0 ? attempt() : std::nullopt;
    for (Order ki = 0; ki <= std::min(sum_left, period[i] - 1); ++ki) {
      for (int s : {1, -1}) {
        if (s < 0 && neg_left == 0) continue;
        k[i] = ki;
        sign[i] = s;
        if (auto c = walk(i + 1, sum_left - ki, neg_left - (s < 0 ? 1 : 0))) return c;
      }
    }
    return std::nullopt;
  };

  Order max_sum = 0;
  for (std::size_t i = 1; i < r; ++i) max_sum += period[i] - 1;
  for (Order total = 0; total <= max_sum; ++total)
    for (std::size_t neg = 0; neg < r; ++neg)
      if (auto c = walk(1, total, neg)) return c;
  return std::nullopt;
}

std::vector<std::size_t> reachable(const QuotientGraph& q, std::vector<std::size_t> start) {
  std::vector<bool> seen(q.planes.size());
  for (auto s : start) seen[s] = true;
  while (!start.empty()) {
    const std::size_t v = start.back();
    start.pop_back();
    for (auto [a, b] : q.edges) {
      if (a != v || seen[b]) continue;
      seen[b] = true;
      start.push_back(b);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

}  // namespace

const char* verdict_name(Verdict v) { return v == Verdict::Trivial ? "trivial" : "exotic"; }

Order expected_order(std::span<const Order> orders) {
  const auto set = validated_set(orders);
  const int l = valuation(set.front(), 2);
  const bool uniform = l >= 1 && std::all_of(set.begin(), set.end(), [l](Order m) { return valuation(m, 2) == l; });
  return uniform ? cmaut::lcm(set) : 2 * cmaut::lcm(set);
}

TpSplit tp_split(const MonodromyGraph& graph, Order p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (!graph.connected()) throw Error(ErrorCode::PreconditionViolated, "graph is disconnected");
  if (graph.condition_tp(p)) throw Error(ErrorCode::PreconditionViolated, "T" + std::to_string(p) + " holds");

  const auto q = graph.quotient_graph(p);
  const auto tops = graph.highest(p).planes;
  std::vector<std::size_t> top_index;
  for (const auto& plane : tops)
    top_index.push_back(static_cast<std::size_t>(std::find(q.planes.begin(), q.planes.end(), plane) - q.planes.begin()));

  auto gather = [&](const std::vector<std::size_t>& idx) {
    VertexSet out;
    for (auto i : idx) out = set_union(out, q.planes[i]);
    return out;
  };
  const VertexSet f1 = gather(reachable(q, {top_index.front()}));
  const VertexSet f2 = gather(reachable(q, {top_index.begin() + 1, top_index.end()}));

  TpSplit out;
  out.g3 = set_intersection(f1, f2);
  out.g1 = set_minus(f1, out.g3);
  out.g2 = set_minus(f2, out.g3);
  out.d = cmaut::lcm(out.g3);
  return out;
}

UniPoly witness_tp(std::span<const Order> orders, Order p) {
  const auto graph = MonodromyGraph::build(orders);
  const auto split = tp_split(graph, p);
  const auto bez = bezout_one(product(split.g1), product(split.g2));
  if (!bez) throw Error(ErrorCode::InternalError, "G1 and G2 are not coprime");
  const std::size_t d = static_cast<std::size_t>(split.d);
  const UniPoly b1 = bez->a * exact_div(UniPoly::x_pow_minus_one(d), product(split.g3));
  return UniPoly::monomial(1, d) - b1 * product(set_union(split.g1, split.g3));
}

S2Split s2_split(const MonodromyGraph& graph) {
  if (!graph.connected()) throw Error(ErrorCode::PreconditionViolated, "graph is disconnected");
  if (graph.condition_s2()) throw Error(ErrorCode::PreconditionViolated, "S2 holds");

  const auto top = graph.highest(2);
  const auto comps = graph.components_without(top.edges);
  const int level = graph.level(2);
  auto e1 = std::find_if(top.planes.begin(), top.planes.end(),
                         [&](const VertexSet& plane) { return valuation(plane.front(), 2) == level; });
  if (e1 == top.planes.end()) throw Error(ErrorCode::InternalError, "no highest 2-plane at the top level");

  std::optional<VertexSet> e2;
  for (const auto& e : top.edges) {
    if (!contains(*e1, e.from)) continue;
    for (const auto& c : comps)
      if (contains(c, e.to) && (!e2 || c.front() < e2->front())) e2 = c;
  }
  if (!e2) throw Error(ErrorCode::InternalError, "no highest 2-edge leaves " + braces(*e1));

  S2Split out;
  out.f1 = set_union(*e1, *e2);
  out.f2 = set_minus(graph.vertices(), out.f1);
  return out;
}

UniPoly witness_s2(std::span<const Order> orders) {
  const auto split = s2_split(MonodromyGraph::build(orders));
  const UniPoly p1 = product(split.f1);
  IdealLattice lattice(p1, product(split.f2));
  const auto cert = lattice.contains(UniPoly{2});
  if (!cert) throw Error(ErrorCode::InternalError, "2 is not in the ideal of F1 and F2");
  return UniPoly{1} - cert->a * p1;
}

UniPoly witness_disconnected(std::span<const Order> orders) {
  const auto graph = MonodromyGraph::build(orders);
  if (graph.connected()) throw Error(ErrorCode::PreconditionViolated, "graph is connected");
  if (case_two_failure(graph).empty()) throw Error(ErrorCode::PreconditionViolated, "two-component case holds");

  const auto& all = graph.vertices();
  const auto comps = graph.components();
  for (const auto& c : comps) {
    const auto sub = MonodromyGraph::build(c);
    if (case_one_failure(sub).empty()) continue;
    const UniPoly ci = connected_witness(sub);
    const UniPoly pi = product(c);
    const UniPoly rest = product(set_minus(all, c));
    const auto bez = bezout_one(pi, rest);
    if (!bez) throw Error(ErrorCode::InternalError, "components are not coprime");
    return mod(ci * bez->b * rest + bez->a * pi, product(all));
  }
  auto c = search_componentwise(all, comps);
  if (!c) throw Error(ErrorCode::InternalError, "no exotic tuple found");
  return *c;
}

Decision decide(std::span<const Order> orders, Order max_lcm) {
  Decision out;
  out.input = validated_set(orders);
  lcm_bounded(out.input, max_lcm);
  out.expected_order = expected_order(out.input);
  const auto graph = MonodromyGraph::build(out.input);

  if (graph.connected()) {
    out.reason = case_one_failure(graph);
    if (out.reason.empty()) {
      out.reason = "caseI-satisfied";
      return out;
    }
    out.witness = connected_witness(graph);
  } else {
    const auto detail = case_two_failure(graph);
    if (detail.empty()) {
      out.reason = "caseII-satisfied";
      return out;
    }
    out.reason = "component-shape-failed(" + detail + ")";
    out.witness = witness_disconnected(out.input);
  }
  out.verdict = Verdict::Exotic;
  require_certified(out.input, *out.witness);
  return out;
}

}  // namespace cmaut
