// Command-line front end. Talks to the library only through cmaut.h.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmaut/cmaut.h"

namespace {

struct Usage {
  std::string message;
};

struct Failure {
  int code;
};

std::vector<int64_t> parse_set(const std::string& text) {
  std::vector<int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int64_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw Usage{"malformed integer '" + item + "' in set '" + text + "'"};
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void check(cmaut_status status) {
  if (status == CMAUT_OK) return;
  std::cerr << "error: " << cmaut_last_error_message() << "\n";
  throw Failure{static_cast<int>(status)};
}

// Takes ownership of a library string and prints it.
void emit(char* s) {
  std::cout << s;
  cmaut_string_free(s);
}

void emit_line(char* s) {
  emit(s);
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms of Z-lattices with cyclic monodromy"};
  app.require_subcommand(1);

  int64_t phi_m = 0;
  auto* phi = app.add_subcommand("phi", "print the cyclotomic polynomial Phi_m");
  phi->add_option("m", phi_m, "order")->required();

  int64_t res_m = 0, res_n = 0;
  auto* res = app.add_subcommand("resultant", "print the resultant R(Phi_m, Phi_n)");
  res->add_option("m", res_m)->required();
  res->add_option("n", res_n)->required();

  std::string set_text;
  bool dot = false, json = false, representatives = false;
  int64_t max_lcm = 0;
  uint64_t max_tuples = 0;
  std::string poly;

  auto* graph = app.add_subcommand("graph", "print the monodromy graph of M");
  graph->add_option("M", set_text, "comma-separated orders")->required();
  graph->add_flag("--dot", dot, "Graphviz output");
  graph->add_flag("--json", json, "JSON output");

  auto* dec = app.add_subcommand("decide", "decide whether Aut = {±h^k}");
  dec->add_option("M", set_text, "comma-separated orders")->required();
  dec->add_flag("--json", json, "JSON output");
  dec->add_option("--max-lcm", max_lcm, "refuse lcm(M) above this bound (default 1000000)");

  auto* orc = app.add_subcommand("oracle", "enumerate the automorphism group by brute force");
  orc->add_option("M", set_text, "comma-separated orders")->required();
  orc->add_flag("--json", json, "JSON output");
  orc->add_flag("--representatives", representatives, "include a polynomial for each member");
  orc->add_option("--max-lcm", max_lcm, "refuse lcm(M) above this bound (default 120)");
  orc->add_option("--max-tuples", max_tuples, "refuse candidate spaces above this size (default 1000000)");

  auto* cert = app.add_subcommand("certify", "test a polynomial for |c| = 1 and for the form ±x^k");
  cert->add_option("M", set_text, "comma-separated orders")->required();
  cert->add_option("--poly", poly, "ascending coefficients, e.g. -1,0,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CMAUT_USAGE_ERROR;
  }

  try {
    if (*phi) {
      char* out = nullptr;
      check(cmaut_cyclotomic(phi_m, &out));
      emit_line(out);
      return 0;
    }
    if (*res) {
      char* out = nullptr;
      check(cmaut_cyclo_resultant(res_m, res_n, &out));
      emit_line(out);
      return 0;
    }

    const auto set = parse_set(set_text);
    if (*graph) {
      cmaut_graph* g = nullptr;
      check(cmaut_graph_build(set.data(), set.size(), &g));
      char* out = nullptr;
      const auto status = dot ? cmaut_graph_dot(g, &out) : json ? cmaut_graph_json(g, &out) : cmaut_graph_text(g, &out);
      cmaut_graph_free(g);
      check(status);
      emit(out);
    } else if (*dec) {
      cmaut_decision* d = nullptr;
      check(cmaut_decide(set.data(), set.size(), max_lcm, &d));
      char* out = nullptr;
      const auto status = json ? cmaut_decision_json(d, &out) : cmaut_decision_text(d, &out);
      cmaut_decision_free(d);
      check(status);
      emit(out);
    } else if (*orc) {
      cmaut_autgroup* g = nullptr;
      check(cmaut_aut_group(set.data(), set.size(), max_lcm, max_tuples, representatives ? 1 : 0, &g));
      char* out = nullptr;
      const auto status = json ? cmaut_autgroup_json(g, &out) : cmaut_autgroup_text(g, &out);
      cmaut_autgroup_free(g);
      check(status);
      emit(out);
    } else if (*cert) {
      int automorphism = 0, found = 0, sign = 0;
      int64_t k = 0;
      check(cmaut_certify(set.data(), set.size(), poly.c_str(), &automorphism, &found, &sign, &k));
      std::cout << "automorphism: " << (automorphism ? "true" : "false") << "\n";
      if (found)
        std::cout << "pm_power: " << (sign > 0 ? "+" : "-") << "x^" << k << "\n";
      else
        std::cout << "pm_power: none\n";
    }
  } catch (const Usage& u) {
    std::cerr << "error: " << u.message << "\n";
    return CMAUT_USAGE_ERROR;
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
