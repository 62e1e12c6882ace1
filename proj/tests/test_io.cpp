#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "invmaxian/error.hpp"
#include "invmaxian/io.hpp"
#include "invmaxian/pmaxian.hpp"
#include "invmaxian/random_instance.hpp"

using namespace invmaxian;
using namespace invmaxian::testing;

namespace {

void expect_same(const InverseInstance& x, const InverseInstance& y) {
  ASSERT_EQ(x.tree.vertex_count(), y.tree.vertex_count());
  for (VertexId v = 0; v < x.tree.vertex_count(); ++v) {
    EXPECT_EQ(x.tree.weight(v), y.tree.weight(v));
    EXPECT_EQ(x.vertex_name(v), y.vertex_name(v));
  }
  for (EdgeId e = 0; e < x.tree.edge_count(); ++e) {
    EXPECT_EQ(x.tree.edge(e).u, y.tree.edge(e).u);
    EXPECT_EQ(x.tree.edge(e).v, y.tree.edge(e).v);
    EXPECT_EQ(x.tree.edge(e).length, y.tree.edge(e).length);
    EXPECT_EQ(x.edge_name(e), y.edge_name(e));
  }
  EXPECT_EQ(x.targets, y.targets);
  EXPECT_EQ(x.cost, y.cost);
  EXPECT_EQ(x.inc_bound, y.inc_bound);
  EXPECT_EQ(x.dec_bound, y.dec_bound);
  EXPECT_EQ(x.objective, y.objective);
}

std::string error_text(const std::string& doc) {
  try {
    (void)parse_instance_text(doc);
  } catch (const Error& e) {
    return std::string(to_string(e.code())) + ": " + e.what();
  }
  return "no error";
}

}  // namespace

TEST(Io, MinimalInstance) {
  const auto inst = parse_instance(data_path("minimal.json"));
  EXPECT_EQ(inst.tree.edge_count(), 1u);
  EXPECT_EQ(inst.tree.edge(0).length, Rational(3, 2));
  EXPECT_EQ(inst.objective, Objective::L1);
}

TEST(Io, T1Fixture) {
  const auto inst = parse_instance(data_path("t1.json"));
  expect_same(inst, t1());
}

TEST(Io, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorOptions opt;
    opt.n = 15;
    opt.denominator = 7;
    opt.max_weight = 5;
    opt.targets = 3;
    const auto inst = random_instance(opt, seed);
    expect_same(parse_instance_text(serialize_instance(inst)), inst);
  }
}

TEST(Io, Errors) {
  EXPECT_NE(error_text("{").find("PARSE_ERROR"), std::string::npos);
  EXPECT_NE(error_text("{\n\"vertices\": [}\n").find("line 2"), std::string::npos);

  const std::string dup = R"({"vertices":[{"id":"x"},{"id":"y"},{"id":"z"}],
    "edges":[{"u":"x","v":"y","length":"1","cost":"1","inc_bound":"0","dec_bound":"0"},
             {"u":"y","v":"x","length":"1","cost":"1","inc_bound":"0","dec_bound":"0"}],
    "targets":["x","z"]})";
  const std::string dup_msg = error_text(dup);
  EXPECT_NE(dup_msg.find("VALIDATION_ERROR"), std::string::npos);
  EXPECT_NE(dup_msg.find("not a tree"), std::string::npos);

  const std::string neg = R"({"vertices":[{"id":"x"},{"id":"y"}],
    "edges":[{"u":"x","v":"y","length":"1","cost":"-1","inc_bound":"0","dec_bound":"0"}],
    "targets":["x","y"]})";
  const std::string neg_msg = error_text(neg);
  EXPECT_NE(neg_msg.find("VALIDATION_ERROR"), std::string::npos);
  EXPECT_NE(neg_msg.find("cost"), std::string::npos);

  const std::string flt = R"({"vertices":[{"id":"x"},{"id":"y"}],
    "edges":[{"u":"x","v":"y","length":0.5,"cost":"1","inc_bound":"0","dec_bound":"0"}],
    "targets":["x","y"]})";
  EXPECT_NE(error_text(flt).find("edges[0].length"), std::string::npos);

  const std::string inner = R"({"vertices":[{"id":"x"},{"id":"y"},{"id":"z"}],
    "edges":[{"u":"x","v":"y","length":"1","cost":"1","inc_bound":"0","dec_bound":"0"},
             {"u":"y","v":"z","length":"1","cost":"1","inc_bound":"0","dec_bound":"0"}],
    "targets":["x","y"]})";
  EXPECT_NE(error_text(inner).find("NOT_A_LEAF"), std::string::npos);
}

TEST(Io, ReportJsonIsSchemaStable) {
  std::vector<std::string> first_keys;
  for (auto o : {Objective::L1, Objective::Chebyshev, Objective::HammingBottleneck, Objective::HammingSum}) {
    const auto inst = t1({5, 2, 3}, {10, 10, 10}, o);
    const auto report = solve_inverse_pmaxian(inst);
    const auto doc = nlohmann::json::parse(report_to_json(inst, report));
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    if (first_keys.empty()) first_keys = keys;
    EXPECT_EQ(keys, first_keys);
    ASSERT_EQ(doc["plan"].size(), 3u);
    for (const auto& entry : doc["plan"]) {
      EXPECT_TRUE(entry.contains("edge"));
      EXPECT_TRUE(entry.contains("sign"));
      EXPECT_TRUE(entry["amount"].is_string());
      EXPECT_TRUE(entry["new_length"].is_string());
    }
    const auto back = parse_report(inst, doc.dump());
    EXPECT_EQ(back.cost, report.cost);
    EXPECT_EQ(back.plan.amount, report.plan.amount);
    EXPECT_TRUE(verify_solution(inst, back).ok);
  }
}

TEST(Io, ExactAndDecimal) {
  EXPECT_EQ(exact_and_decimal(Rational(15, 4)), "15/4 (3.75)");
  EXPECT_EQ(exact_and_decimal(Rational(2)), "2");
}
