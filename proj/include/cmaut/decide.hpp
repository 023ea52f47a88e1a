#pragma once

// Decides whether every automorphism of the cyclic-monodromy lattice for M is
// of the form ±h^k, and builds a certified exotic automorphism c(x) when not.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmaut/graph.hpp"
#include "cmaut/polyz.hpp"

namespace cmaut {

enum class Verdict { Trivial, Exotic };

const char* verdict_name(Verdict v);

struct Decision {
  /// M, ascending.
  std::vector<Order> input;
  Verdict verdict = Verdict::Trivial;
  /// caseI-satisfied, caseII-satisfied, Tp-failed(p), S2-failed or
  /// component-shape-failed(detail).
  std::string reason;
  std::optional<UniPoly> witness;
  Order expected_order = 0;
};

inline constexpr Order kDefaultDecideMaxLcm = 1'000'000;

/// Throws EmptySet, DuplicateElement, InvalidArgument, or ResourceLimit when
/// lcm(M) exceeds max_lcm. Exotic witnesses are certified before returning.
Decision decide(std::span<const Order> orders, Order max_lcm = kDefaultDecideMaxLcm);

/// lcm(M) when every m has the same l(m,2) >= 1, otherwise 2 lcm(M).
Order expected_order(std::span<const Order> orders);

/// c ≡ x^d on G1 ∪ G3 and c ≡ 1 on G2 ∪ G3. Requires G(M) connected, p >= 3
/// prime and (T_p) failing.
UniPoly witness_tp(std::span<const Order> orders, Order p);

/// c ≡ 1 on F1 and c ≡ -1 on F2. Requires G(M) connected with (S_2) failing.
UniPoly witness_s2(std::span<const Order> orders);

/// Requires G(M) disconnected and the two-component case to fail.
UniPoly witness_disconnected(std::span<const Order> orders);

/// The parts used by witness_tp, for inspection.
struct TpSplit {
  VertexSet g1, g2, g3;
  Order d = 0;
};
TpSplit tp_split(const MonodromyGraph& graph, Order p);

/// The parts used by witness_s2.
struct S2Split {
  VertexSet f1, f2;
};
S2Split s2_split(const MonodromyGraph& graph);

}  // namespace cmaut
