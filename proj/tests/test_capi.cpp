#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "cmaut/cmaut.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cmaut_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(cmaut_version(), "0.1.0"); }

TEST(CApi, Scalars) {
  char* s = nullptr;
  ASSERT_EQ(cmaut_cyclotomic(12, &s), CMAUT_OK);
  EXPECT_EQ(take(s), "1,0,-1,0,1");
  ASSERT_EQ(cmaut_cyclo_resultant(2, 1, &s), CMAUT_OK);
  EXPECT_EQ(take(s), "-2");
  ASSERT_EQ(cmaut_resultant("-1,0,1", "1,1", &s), CMAUT_OK);
  EXPECT_EQ(take(s), "0");
  int64_t t = 0;
  ASSERT_EQ(cmaut_totient(9, &t), CMAUT_OK);
  EXPECT_EQ(t, 6);
  const int64_t m[] = {12, 6, 4, 3, 2};
  ASSERT_EQ(cmaut_expected_order(m, 5, &t), CMAUT_OK);
  EXPECT_EQ(t, 24);
}

TEST(CApi, Errors) {
  char* s = nullptr;
  EXPECT_EQ(cmaut_cyclotomic(0, &s), CMAUT_DOMAIN_ERROR);
  EXPECT_STREQ(cmaut_last_error_name(), "InvalidArgument");
  EXPECT_EQ(s, nullptr);

  const int64_t dup[] = {3, 5, 3};
  cmaut_decision* d = nullptr;
  EXPECT_EQ(cmaut_decide(dup, 3, 0, &d), CMAUT_DOMAIN_ERROR);
  EXPECT_STREQ(cmaut_last_error_name(), "DuplicateElement");
  EXPECT_EQ(d, nullptr);

  EXPECT_EQ(cmaut_decide(nullptr, 2, 0, &d), CMAUT_USAGE_ERROR);
  EXPECT_EQ(cmaut_resultant("1,x", "1", &s), CMAUT_USAGE_ERROR);
  EXPECT_STREQ(cmaut_last_error_name(), "UsageError");

  const int64_t wide[] = {7, 11, 13};
  cmaut_autgroup* g = nullptr;
  EXPECT_EQ(cmaut_aut_group(wide, 3, 0, 0, 0, &g), CMAUT_RESOURCE_LIMIT);
  EXPECT_STREQ(cmaut_last_error_name(), "ResourceLimit");
  EXPECT_NE(std::string(cmaut_last_error_message()), "");
  EXPECT_EQ(cmaut_decide(wide, 3, 100, &d), CMAUT_RESOURCE_LIMIT);
}

TEST(CApi, Graph) {
  const int64_t m[] = {24, 20, 6, 5, 4, 3, 2};
  cmaut_graph* g = nullptr;
  ASSERT_EQ(cmaut_graph_build(m, 7, &g), CMAUT_OK);
  int v = -1;
  ASSERT_EQ(cmaut_graph_connected(g, &v), CMAUT_OK);
  EXPECT_EQ(v, 1);
  ASSERT_EQ(cmaut_graph_condition_s2(g, &v), CMAUT_OK);
  EXPECT_EQ(v, 0);
  ASSERT_EQ(cmaut_graph_condition_tp(g, 3, &v), CMAUT_OK);
  EXPECT_EQ(v, 1);
  char* s = nullptr;
  ASSERT_EQ(cmaut_graph_json(g, &s), CMAUT_OK);
  EXPECT_NE(take(s).find("\"5\":[[2,3,4,6,24],[5,20]]"), std::string::npos);
  ASSERT_EQ(cmaut_graph_dot(g, &s), CMAUT_OK);
  EXPECT_EQ(take(s).rfind("digraph G {", 0), 0u);
  ASSERT_EQ(cmaut_graph_text(g, &s), CMAUT_OK);
  EXPECT_FALSE(take(s).empty());
  cmaut_graph_free(g);
  cmaut_graph_free(nullptr);
}

TEST(CApi, DecisionAndCertify) {
  const int64_t m[] = {3, 5};
  cmaut_decision* d = nullptr;
  ASSERT_EQ(cmaut_decide(m, 2, 0, &d), CMAUT_OK);
  int exotic = 0;
  ASSERT_EQ(cmaut_decision_exotic(d, &exotic), CMAUT_OK);
  EXPECT_EQ(exotic, 1);
  char* s = nullptr;
  ASSERT_EQ(cmaut_decision_witness(d, &s), CMAUT_OK);
  const std::string w = take(s);
  EXPECT_EQ(w, "-1,-2,-2,-2,-2,-2");
  int64_t order = 0;
  ASSERT_EQ(cmaut_decision_expected_order(d, &order), CMAUT_OK);
  EXPECT_EQ(order, 30);
  ASSERT_EQ(cmaut_decision_reason(d, &s), CMAUT_OK);
  EXPECT_EQ(take(s).rfind("component-shape-failed", 0), 0u);
  ASSERT_EQ(cmaut_decision_json(d, &s), CMAUT_OK);
  EXPECT_NE(take(s).find("\"witness\":\"" + w + "\""), std::string::npos);
  ASSERT_EQ(cmaut_decision_text(d, &s), CMAUT_OK);
  EXPECT_NE(take(s).find("verdict: exotic"), std::string::npos);
  cmaut_decision_free(d);

  int aut = 0, found = 0, sign = 0;
  int64_t k = -1;
  ASSERT_EQ(cmaut_certify(m, 2, w.c_str(), &aut, &found, &sign, &k), CMAUT_OK);
  EXPECT_EQ(aut, 1);
  EXPECT_EQ(found, 0);
  ASSERT_EQ(cmaut_certify(m, 2, "0,0,0,0,0,0,0,1", &aut, &found, &sign, &k), CMAUT_OK);
  EXPECT_EQ(aut, 1);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(sign, 1);
  EXPECT_EQ(k, 7);

  const int64_t t[] = {12, 6, 4, 3, 2};
  ASSERT_EQ(cmaut_decide(t, 5, 0, &d), CMAUT_OK);
  s = reinterpret_cast<char*>(1);
  ASSERT_EQ(cmaut_decision_witness(d, &s), CMAUT_OK);
  EXPECT_EQ(s, nullptr);
  cmaut_decision_free(d);
}

TEST(CApi, AutGroup) {
  const int64_t m[] = {12, 6, 4, 3, 2};
  cmaut_autgroup* g = nullptr;
  ASSERT_EQ(cmaut_aut_group(m, 5, 0, 0, 1, &g), CMAUT_OK);
  uint64_t order = 0;
  ASSERT_EQ(cmaut_autgroup_order(g, &order), CMAUT_OK);
  EXPECT_EQ(order, 24u);
  char* s = nullptr;
  ASSERT_EQ(cmaut_autgroup_json(g, &s), CMAUT_OK);
  const std::string json = take(s);
  EXPECT_EQ(json.rfind("{\"order\":24,", 0), 0u);
  EXPECT_NE(json.find("\"representatives\""), std::string::npos);
  ASSERT_EQ(cmaut_autgroup_text(g, &s), CMAUT_OK);
  EXPECT_EQ(take(s).rfind("order: 24\n", 0), 0u);
  cmaut_autgroup_free(g);
}
