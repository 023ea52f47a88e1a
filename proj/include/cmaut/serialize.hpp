#pragma once

// Text, JSON and DOT renderings shared by the C API and the command line.

#include <string>

#include "cmaut/decide.hpp"
#include "cmaut/graph.hpp"
#include "cmaut/oracle.hpp"

namespace cmaut {

/// {"edges": [[m1, m2, p], ...], "planes": {"p": [[...], ...]}} for primes p | lcm(M).
std::string graph_json(const MonodromyGraph& g);
std::string graph_text(const MonodromyGraph& g);

std::string decision_json(const Decision& d);
std::string decision_text(const Decision& d);

/// {"order": N, "members": [[[m, ε, a], ...], ...], "representatives": [...]}
std::string aut_group_json(const AutGroup& group);
std::string aut_group_text(const AutGroup& group);

}  // namespace cmaut
