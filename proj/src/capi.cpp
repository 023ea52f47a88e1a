#include "cmaut/cmaut.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "cmaut/cyclotomic.hpp"
#include "cmaut/decide.hpp"
#include "cmaut/error.hpp"
#include "cmaut/graph.hpp"
#include "cmaut/oracle.hpp"
#include "cmaut/serialize.hpp"

struct cmaut_graph {
  cmaut::MonodromyGraph graph;
};

struct cmaut_decision {
  cmaut::Decision decision;
};

struct cmaut_autgroup {
  cmaut::AutGroup group;
};

namespace {

thread_local std::string last_name;
thread_local std::string last_message;

cmaut_status fail(cmaut_status status, std::string name, std::string message) {
  last_name = std::move(name);
  last_message = std::move(message);
  return status;
}

struct UsageError {
  std::string message;
};

// Runs body, translating exceptions into status codes.
template <class F>
cmaut_status guarded(F&& body) {
  last_name.clear();
  last_message.clear();
  try {
    body();
    return CMAUT_OK;
  } catch (const UsageError& e) {
    return fail(CMAUT_USAGE_ERROR, "UsageError", e.message);
  } catch (const cmaut::Error& e) {
    const auto status = e.code() == cmaut::ErrorCode::ResourceLimit   ? CMAUT_RESOURCE_LIMIT
                        : e.code() == cmaut::ErrorCode::InternalError ? CMAUT_INTERNAL_ERROR
                                                                      : CMAUT_DOMAIN_ERROR;
    return fail(status, cmaut::error_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CMAUT_RESOURCE_LIMIT, "ResourceLimit", "out of memory");
  } catch (const std::exception& e) {
    return fail(CMAUT_INTERNAL_ERROR, "InternalError", e.what());
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw UsageError{std::string(what) + " must not be NULL"};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<cmaut::Order> orders_of(const int64_t* orders, size_t count) {
  if (count > 0) require(orders, "orders");
  return std::vector<cmaut::Order>(orders, orders + count);
}

cmaut::UniPoly parse_poly(const char* text, const char* what) {
  require(text, what);
  try {
    return cmaut::UniPoly::parse(text);
  } catch (const cmaut::Error& e) {
    throw UsageError{std::string(what) + ": " + e.what()};
  }
}

}  // namespace

extern "C" {

const char* cmaut_version(void) { return "0.1.0"; }
const char* cmaut_last_error_name(void) { return last_name.c_str(); }
const char* cmaut_last_error_message(void) { return last_message.c_str(); }
void cmaut_string_free(char* s) { std::free(s); }

cmaut_status cmaut_cyclotomic(int64_t m, char** poly) {
  return guarded([&] {
    require(poly, "poly");
    *poly = dup(cmaut::cyclotomic(m).to_string());
  });
}

cmaut_status cmaut_totient(int64_t m, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = cmaut::totient(m);
  });
}

cmaut_status cmaut_cyclo_resultant(int64_t m, int64_t n, char** value) {
  return guarded([&] {
    require(value, "value");
    *value = dup(cmaut::cyclo_resultant(m, n).get_str());
  });
}

cmaut_status cmaut_resultant(const char* f, const char* g, char** value) {
  return guarded([&] {
    require(value, "value");
    *value = dup(cmaut::resultant(parse_poly(f, "f"), parse_poly(g, "g")).get_str());
  });
}

cmaut_status cmaut_expected_order(const int64_t* orders, size_t count, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = cmaut::expected_order(orders_of(orders, count));
  });
}

cmaut_status cmaut_certify(const int64_t* orders, size_t count, const char* c, int* automorphism, int* found,
                           int* sign, int64_t* k) {
  return guarded([&] {
    require(automorphism, "automorphism");
    require(found, "found");
    const auto set = orders_of(orders, count);
    const auto poly = parse_poly(c, "c");
    *automorphism = cmaut::certify_automorphism(set, poly) ? 1 : 0;
    const auto power = cmaut::is_pm_power(set, poly);
    *found = power ? 1 : 0;
    if (power && sign) *sign = power->sign;
    if (power && k) *k = power->k;
  });
}

cmaut_status cmaut_graph_build(const int64_t* orders, size_t count, cmaut_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cmaut_graph{cmaut::MonodromyGraph::build(orders_of(orders, count))};
  });
}

void cmaut_graph_free(cmaut_graph* g) { delete g; }

cmaut_status cmaut_graph_connected(const cmaut_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->graph.connected() ? 1 : 0;
  });
}

cmaut_status cmaut_graph_condition_tp(const cmaut_graph* g, int64_t p, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (!cmaut::is_prime(p)) throw cmaut::Error(cmaut::ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    *out = g->graph.condition_tp(p) ? 1 : 0;
  });
}

cmaut_status cmaut_graph_condition_s2(const cmaut_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->graph.condition_s2() ? 1 : 0;
  });
}

cmaut_status cmaut_graph_text(const cmaut_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(cmaut::graph_text(g->graph));
  });
}

cmaut_status cmaut_graph_json(const cmaut_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(cmaut::graph_json(g->graph));
  });
}

cmaut_status cmaut_graph_dot(const cmaut_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(g->graph.to_dot());
  });
}

cmaut_status cmaut_decide(const int64_t* orders, size_t count, int64_t max_lcm, cmaut_decision** out) {
  return guarded([&] {
    require(out, "out");
    const auto bound = max_lcm > 0 ? max_lcm : cmaut::kDefaultDecideMaxLcm;
    *out = new cmaut_decision{cmaut::decide(orders_of(orders, count), bound)};
  });
}

void cmaut_decision_free(cmaut_decision* d) { delete d; }

cmaut_status cmaut_decision_exotic(const cmaut_decision* d, int* out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = d->decision.verdict == cmaut::Verdict::Exotic ? 1 : 0;
  });
}

cmaut_status cmaut_decision_reason(const cmaut_decision* d, char** out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = dup(d->decision.reason);
  });
}

cmaut_status cmaut_decision_witness(const cmaut_decision* d, char** out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = d->decision.witness ? dup(d->decision.witness->to_string()) : nullptr;
  });
}

cmaut_status cmaut_decision_expected_order(const cmaut_decision* d, int64_t* out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = d->decision.expected_order;
  });
}

cmaut_status cmaut_decision_text(const cmaut_decision* d, char** out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = dup(cmaut::decision_text(d->decision));
  });
}

cmaut_status cmaut_decision_json(const cmaut_decision* d, char** out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = dup(cmaut::decision_json(d->decision));
  });
}

cmaut_status cmaut_aut_group(const int64_t* orders, size_t count, int64_t max_lcm, uint64_t max_tuples,
                             int representatives, cmaut_autgroup** out) {
  return guarded([&] {
    require(out, "out");
    cmaut::OracleOptions options;
    if (max_lcm > 0) options.max_lcm = max_lcm;
    if (max_tuples > 0) options.max_tuple_space = max_tuples;
    options.representatives = representatives != 0;
    *out = new cmaut_autgroup{cmaut::aut_group(orders_of(orders, count), options)};
  });
}

void cmaut_autgroup_free(cmaut_autgroup* g) { delete g; }

cmaut_status cmaut_autgroup_order(const cmaut_autgroup* g, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->group.order();
  });
}

cmaut_status cmaut_autgroup_text(const cmaut_autgroup* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(cmaut::aut_group_text(g->group));
  });
}

cmaut_status cmaut_autgroup_json(const cmaut_autgroup* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(cmaut::aut_group_json(g->group));
  });
}

}  // extern "C"
