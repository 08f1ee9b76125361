#include "shimura/report.hpp"

#include <gtest/gtest.h>

#include "shimura/error.hpp"

namespace shimura::report {
namespace {

using namespace obstruction;

Certificate sample_certificate() {
  const auto v = theorem_check(quaternion::from_discriminant(39), named_field("Q(sqrt(2),sqrt(-13))"), 2);
  return std::get<Proven>(v).certificate;
}

TEST(CertificateJsonTest, RoundTrip) {
  const auto c = sample_certificate();
  const auto j = certificate_to_json(c, {"a citation"});
  EXPECT_EQ(certificate_from_json(j), c);
  EXPECT_EQ(certificate_from_json(json::parse(j.dump())), c);
  EXPECT_TRUE(validate_certificate(certificate_from_json(json::parse(j.dump()))));
}

TEST(CertificateJsonTest, SchemaKeys) {
  const auto j = certificate_to_json(sample_certificate());
  for (const char* key : {"disc", "field", "q", "e", "f", "g", "Nq", "exponent", "split_over_k", "classB", "p_set",
                          "witness_p", "verdict", "citations", "version"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  for (const char* key : {"spec", "modulus", "subgroup", "degree"}) EXPECT_TRUE(j["field"].contains(key)) << key;
  EXPECT_EQ(j["verdict"], "Proven");
  EXPECT_EQ(j["version"], std::string(kVersion));
  EXPECT_EQ(j["Nq"], 2);
  EXPECT_EQ(j["witness_p"], 13);
  EXPECT_EQ(j["field"]["spec"], "Q(sqrt(2),sqrt(-13))");
  ASSERT_EQ(j["classB"]["q_fields"].size(), 2u);
  EXPECT_EQ(j["classB"]["q_fields"][0]["t"], 1);
  EXPECT_EQ(j["classB"]["q_fields"][0]["witness_p"], 13);
}

TEST(CertificateJsonTest, NullWitnessSurvives) {
  auto c = sample_certificate();
  c.class_b.push_back({5, std::nullopt});
  const auto j = certificate_to_json(c);
  EXPECT_TRUE(j["classB"]["q_fields"][2]["witness_p"].is_null());
  EXPECT_EQ(certificate_from_json(j), c);
}

TEST(CertificateJsonTest, MissingKeyRejected) {
  auto j = certificate_to_json(sample_certificate());
  j.erase("Nq");
  EXPECT_ANY_THROW(certificate_from_json(j));
}

TEST(VerdictJsonTest, AllKindsRoundTrip) {
  const auto b = quaternion::from_discriminant(6);
  const std::vector<Verdict> verdicts = {
      Proven{sample_certificate()},
      emptiness_scan(b, named_field("Q(sqrt(2))"), 10),
      emptiness_scan(b, named_field("Q(sqrt(-1))"), 20),
  };
  EXPECT_TRUE(std::holds_alternative<ProvenRealPlace>(verdicts[1]));
  EXPECT_TRUE(std::holds_alternative<Inconclusive>(verdicts[2]));
  for (const auto& v : verdicts) {
    const auto text = verdict_to_json(v).dump();
    EXPECT_EQ(verdict_from_json(json::parse(text)), v) << text;
  }
  const auto j = verdict_to_json(verdicts[2]);
  EXPECT_EQ(j["verdict"], "Inconclusive");
  EXPECT_EQ(j["attempts"][0]["q"], 2);
  EXPECT_TRUE(j["attempts"][0]["reasons"][0].contains("hypothesis"));
}

TEST(VerdictJsonTest, UnknownNamesRejected) {
  EXPECT_THROW(verdict_from_json(json{{"verdict", "Maybe"}}), InvalidArgument);
  json bad = verdict_to_json(emptiness_scan(quaternion::from_discriminant(6), named_field("Q(sqrt(-1))"), 2));
  bad["attempts"][0]["reasons"][0]["hypothesis"] = "no_such_hypothesis";
  EXPECT_THROW(verdict_from_json(bad), InvalidArgument);
}

TEST(HasseJsonTest, RoundTrip) {
  const auto registry = builtin_registry();
  const auto positive =
      hasse_report(quaternion::from_discriminant(62), named_field("comp(cycsub(9;8),Q(sqrt(-39)))"), 10, registry);
  const auto negative = hasse_report(quaternion::from_discriminant(39), named_field("Q(sqrt(2))"), 10, registry);
  for (const auto& r : {positive, negative}) {
    EXPECT_EQ(hasse_from_json(json::parse(hasse_to_json(r).dump())), r);
  }
  const auto j = hasse_to_json(positive);
  EXPECT_EQ(j["label"], std::string(kCounterexampleLabel));
  EXPECT_EQ(j["local"]["base_field"], "Q(sqrt(-39))");
  EXPECT_TRUE(hasse_to_json(negative)["label"].is_null());
}

TEST(TraceDataJsonTest, RoundTrip) {
  for (const auto& [n, e] : {std::pair<std::int64_t, unsigned>{2, 4}, {3, 5}, {3, 16}}) {
    const auto t = tracesets::compute(n, e);
    const auto back = trace_data_from_json(json::parse(trace_data_to_json(t).dump()));
    EXPECT_EQ(back.params.n, n);
    EXPECT_EQ(back.params.e, e);
    EXPECT_EQ(back.c_set, t.c_set);
    EXPECT_EQ(back.d_set, t.d_set);
    EXPECT_EQ(back.p_set, t.p_set);
  }
  const auto j = trace_data_to_json(tracesets::compute(3, 5));
  for (const char* key : {"N", "e", "C", "D", "P", "version"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["D"].is_null());
}

TEST(TraceDataJsonTest, ValuesBeyondInt64Rejected) {
  EXPECT_THROW(trace_data_to_json(tracesets::compute(1000, 8)), OverflowError);
}

}  // namespace
}  // namespace shimura::report
