#include "shimura/report.hpp"

#include <limits>

#include "shimura/error.hpp"

namespace shimura::report {

namespace {

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("value " + to_string(v) + " does not fit a JSON integer");
  }
  return static_cast<std::int64_t>(v);
}

json set_to_json(const tracesets::IntSet& s) {
  json out = json::array();
  for (const i128 v : s) out.push_back(narrow(v));
  return out;
}

tracesets::IntSet set_from_json(const json& j) {
  tracesets::IntSet out;
  for (const auto& v : j) out.insert(v.get<std::int64_t>());
  return out;
}

obstruction::Hypothesis hypothesis_from_name(const std::string& name) {
  using obstruction::Hypothesis;
  for (const auto h : {Hypothesis::kEvenDegree, Hypothesis::kUniquePrime, Hypothesis::kOddResidueDegree,
                       Hypothesis::kClassB, Hypothesis::kSDefined, Hypothesis::kOutsideS}) {
    if (obstruction::hypothesis_name(h) == name) return h;
  }
  throw InvalidArgument("unknown hypothesis '" + name + "'");
}

}  // namespace

json field_to_json(const obstruction::FieldRecord& f) {
  return {{"spec", f.spec}, {"modulus", f.modulus}, {"subgroup", f.subgroup}, {"degree", f.degree}};
}

obstruction::FieldRecord field_from_json(const json& j) {
  obstruction::FieldRecord f;
  f.spec = j.at("spec").get<std::string>();
  f.modulus = j.at("modulus").get<std::int64_t>();
  f.subgroup = j.at("subgroup").get<std::vector<std::int64_t>>();
  f.degree = j.at("degree").get<int>();
  return f;
}

json certificate_to_json(const obstruction::Certificate& c, const std::vector<std::string>& citations) {
  json q_fields = json::array();
  for (const auto& w : c.class_b) {
    q_fields.push_back({{"t", w.t}, {"witness_p", w.witness_p ? json(*w.witness_p) : json(nullptr)}});
  }
  return {{"disc", c.disc},
          {"field", field_to_json(c.field)},
          {"q", c.q},
          {"e", c.e},
          {"f", c.f},
          {"g", c.g},
          {"Nq", c.nq},
          {"exponent", c.exponent},
          {"split_over_k", c.split_over_k},
          {"classB", {{"q_fields", q_fields}}},
          {"p_set", c.p_set},
          {"witness_p", c.witness_p},
          {"verdict", "Proven"},
          {"citations", citations},
          {"version", kVersion}};
}

obstruction::Certificate certificate_from_json(const json& j) {
  obstruction::Certificate c;
  c.disc = j.at("disc").get<std::int64_t>();
  c.field = field_from_json(j.at("field"));
  c.q = j.at("q").get<std::int64_t>();
  c.e = j.at("e").get<int>();
  c.f = j.at("f").get<int>();
  c.g = j.at("g").get<int>();
  c.nq = j.at("Nq").get<std::int64_t>();
  c.exponent = j.at("exponent").get<int>();
  c.split_over_k = j.at("split_over_k").get<bool>();
  for (const auto& w : j.at("classB").at("q_fields")) {
    quaternion::QuadraticWitness qw{w.at("t").get<std::int64_t>(), std::nullopt};
    if (!w.at("witness_p").is_null()) qw.witness_p = w.at("witness_p").get<std::int64_t>();
    c.class_b.push_back(qw);
  }
  c.p_set = j.at("p_set").get<std::vector<std::int64_t>>();
  c.witness_p = j.at("witness_p").get<std::int64_t>();
  return c;
}

json verdict_to_json(const obstruction::Verdict& v, const std::vector<std::string>& citations) {
  if (const auto* p = std::get_if<obstruction::Proven>(&v)) return certificate_to_json(p->certificate, citations);
  if (const auto* r = std::get_if<obstruction::ProvenRealPlace>(&v)) {
    return {{"verdict", "ProvenRealPlace"},
            {"field", field_to_json(r->field)},
            {"conjugation", r->conjugation},
            {"citations", citations},
            {"version", kVersion}};
  }
  json attempts = json::array();
  for (const auto& a : std::get<obstruction::Inconclusive>(v).attempts) {
    json reasons = json::array();
    for (const auto& r : a.reasons) {
      reasons.push_back({{"hypothesis", obstruction::hypothesis_name(r.which)}, {"detail", r.detail}});
    }
    attempts.push_back({{"q", a.q}, {"reasons", reasons}});
  }
  return {{"verdict", "Inconclusive"}, {"attempts", attempts}, {"citations", citations}, {"version", kVersion}};
}

obstruction::Verdict verdict_from_json(const json& j) {
  const auto kind = j.at("verdict").get<std::string>();
  if (kind == "Proven") return obstruction::Proven{certificate_from_json(j)};
  if (kind == "ProvenRealPlace") {
    return obstruction::ProvenRealPlace{field_from_json(j.at("field")), j.at("conjugation").get<std::int64_t>()};
  }
  if (kind != "Inconclusive") throw InvalidArgument("unknown verdict '" + kind + "'");
  obstruction::Inconclusive out;
  for (const auto& a : j.at("attempts")) {
    obstruction::Attempt attempt{a.at("q").get<std::int64_t>(), {}};
    for (const auto& r : a.at("reasons")) {
      attempt.reasons.push_back(
          {hypothesis_from_name(r.at("hypothesis").get<std::string>()), r.at("detail").get<std::string>()});
    }
    out.attempts.push_back(std::move(attempt));
  }
  return out;
}

json hasse_to_json(const obstruction::HasseReport& r) {
  std::vector<std::string> citations;
  if (r.local) citations.push_back(r.local->citation);
  json out = {{"disc", r.disc},
              {"field_spec", r.field_spec},
              {"global", verdict_to_json(r.global)},
              {"local", nullptr},
              {"counterexample", r.counterexample},
              {"label", r.counterexample ? json(obstruction::kCounterexampleLabel) : json(nullptr)},
              {"citations", citations},
              {"version", kVersion}};
  if (r.local) {
    out["local"] = {{"disc", r.local->disc}, {"base_field", r.local->base_spec}, {"citation", r.local->citation}};
  }
  return out;
}

obstruction::HasseReport hasse_from_json(const json& j) {
  obstruction::HasseReport r;
  r.disc = j.at("disc").get<std::int64_t>();
  r.field_spec = j.at("field_spec").get<std::string>();
  r.global = verdict_from_json(j.at("global"));
  if (!j.at("local").is_null()) {
    const auto& l = j.at("local");
    r.local = obstruction::LocalEvidence{l.at("disc").get<std::int64_t>(), l.at("base_field").get<std::string>(),
                                         l.at("citation").get<std::string>()};
  }
  r.counterexample = j.at("counterexample").get<bool>();
  return r;
}

json trace_data_to_json(const tracesets::TraceData& t) {
  return {{"N", t.params.n},
          {"e", t.params.e},
          {"C", set_to_json(t.c_set)},
          {"D", t.d_set ? set_to_json(*t.d_set) : json(nullptr)},
          {"P", t.p_set ? set_to_json(*t.p_set) : json(nullptr)},
          {"version", kVersion}};
}

tracesets::TraceData trace_data_from_json(const json& j) {
  tracesets::TraceData t;
  t.params = {j.at("N").get<std::int64_t>(), j.at("e").get<unsigned>()};
  t.c_set = set_from_json(j.at("C"));
  if (!j.at("D").is_null()) t.d_set = set_from_json(j.at("D"));
  if (!j.at("P").is_null()) t.p_set = set_from_json(j.at("P"));
  return t;
}

}  // namespace shimura::report
