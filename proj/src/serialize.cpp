#include "cmaut/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace cmaut {
namespace {

using Json = nlohmann::ordered_json;

Json graph_value(const MonodromyGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.from, e.to, e.prime});
  Json planes = Json::object();
  for (Order p : prime_divisors(g.lcm())) planes[std::to_string(p)] = g.p_planes(p);
  return Json{{"edges", std::move(edges)}, {"planes", std::move(planes)}};
}

std::string join(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

std::string graph_json(const MonodromyGraph& g) { return graph_value(g).dump() + "\n"; }

std::string graph_text(const MonodromyGraph& g) {
  std::ostringstream out;
  out << "vertices: " << join(g.vertices()) << "\n";
  for (const auto& e : g.edges()) out << "edge " << e.from << " -> " << e.to << " p=" << e.prime << "\n";
  for (Order p : prime_divisors(g.lcm())) {
    out << p << "-planes:";
    for (const auto& plane : g.p_planes(p)) out << " {" << join(plane) << "}";
    out << "\n" << "highest " << p << "-planes:";
    for (const auto& plane : g.highest(p).planes) out << " {" << join(plane) << "}";
    out << "\n";
  }
  out << "components:";
  for (const auto& c : g.components()) out << " {" << join(c) << "}";
  out << "\n";
  return out.str();
}

std::string decision_json(const Decision& d) {
  Json j;
  j["input"] = d.input;
  j["verdict"] = verdict_name(d.verdict);
  j["reason"] = d.reason;
  if (d.witness) j["witness"] = d.witness->to_string();
  j["expected_order"] = d.expected_order;
  j["graph"] = graph_value(MonodromyGraph::build(d.input));
  return j.dump() + "\n";
}

std::string decision_text(const Decision& d) {
  std::ostringstream out;
  out << "input: " << join(d.input) << "\n"
      << "verdict: " << verdict_name(d.verdict) << "\n"
      << "reason: " << d.reason << "\n"
      << "expected_order: " << d.expected_order << "\n";
  if (d.witness) out << "witness: " << d.witness->to_string() << "\n";
  return out.str();
}

std::string aut_group_json(const AutGroup& group) {
  Json members = Json::array();
  for (const auto& tuple : group.members) {
    Json t = Json::array();
    for (std::size_t i = 0; i < tuple.size(); ++i) t.push_back({group.orders[i], tuple[i].sign, tuple[i].power});
    members.push_back(std::move(t));
  }
  Json j;
  j["order"] = group.order();
  j["members"] = std::move(members);
  if (!group.representatives.empty()) {
    Json reps = Json::array();
    for (const auto& c : group.representatives) reps.push_back(c.to_string());
    j["representatives"] = std::move(reps);
  }
  return j.dump() + "\n";
}

std::string aut_group_text(const AutGroup& group) {
  std::ostringstream out;
  out << "order: " << group.order() << "\n";
  for (std::size_t n = 0; n < group.members.size(); ++n) {
    const auto& tuple = group.members[n];
    for (std::size_t i = 0; i < tuple.size(); ++i)
      out << (i ? " " : "") << group.orders[i] << ":" << (tuple[i].sign > 0 ? "+" : "-") << tuple[i].power;
    if (n < group.representatives.size()) out << "  " << group.representatives[n].to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace cmaut
