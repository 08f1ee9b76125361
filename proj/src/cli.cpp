#include "shimura/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "shimura/abfield.hpp"
#include "shimura/arith.hpp"
#include "shimura/error.hpp"
#include "shimura/obstruction.hpp"
#include "shimura/quaternion.hpp"
#include "shimura/report.hpp"
#include "shimura/tracesets.hpp"

namespace shimura::cli {

namespace {

using obstruction::Verdict;
using report::json;

std::string format_set(const tracesets::IntSet& s) {
  std::string out;
  for (const i128 v : s) out += (out.empty() ? "" : ", ") + to_string(v);
  return "{" + out + "}";
}

std::string format_list(const std::vector<std::int64_t>& values) {
  std::string out;
  for (const auto v : values) out += (out.empty() ? "" : ", ") + std::to_string(v);
  return "{" + out + "}";
}

void print_verdict(const Verdict& verdict, std::ostream& out) {
  if (const auto* p = std::get_if<obstruction::Proven>(&verdict)) {
    const auto& c = p->certificate;
    out << "verdict: Proven (no k-rational points)\n";
    out << "  d(B) = " << c.disc << ", k = " << c.field.spec << " [m = " << c.field.modulus
        << ", degree " << c.field.degree << "]\n";
    out << "  q = " << c.q << ": e = " << c.e << ", f = " << c.f << ", g = " << c.g << ", Nq = " << c.nq
        << ", exponent = " << c.exponent << ", B splits over k: " << (c.split_over_k ? "yes" : "no") << "\n";
    out << "  B(" << c.q << ") witnesses:";
    for (const auto& w : c.class_b) out << " " << *w.witness_p << " splits in Q(sqrt(-" << w.t << "));";
    out << "\n  P(D(" << c.nq << "," << c.exponent << ")) + {" << c.q << "} = " << format_list(c.p_set) << "\n";
    out << "  witness p = " << c.witness_p << "\n";
    return;
  }
  if (const auto* r = std::get_if<obstruction::ProvenRealPlace>(&verdict)) {
    out << "verdict: ProvenRealPlace (k = " << r->field.spec << " has a real place; -1 = " << r->conjugation
        << " mod " << r->field.modulus << " lies in H, and the curve has no real points)\n";
    return;
  }
  out << "verdict: Inconclusive\n";
  for (const auto& attempt : std::get<obstruction::Inconclusive>(verdict).attempts) {
    out << "  q = " << attempt.q << ":\n";
    for (const auto& reason : attempt.reasons) {
      out << "    - " << obstruction::hypothesis_name(reason.which) << ": " << reason.detail << "\n";
    }
  }
}

int cmd_trace_sets(std::int64_t n, unsigned e, bool want_d, bool as_json, std::ostream& out, std::ostream& err) {
  if (want_d && e % 2 != 0) {
    err << "error: non-integral D requested (odd e = " << e << ")\n";
    return kExitInputError;
  }
  const auto data = tracesets::compute(n, e);
  if (as_json) {
    out << report::trace_data_to_json(data).dump() << "\n";
    return kExitOk;
  }
  out << "N = " << n << ", e = " << e << "\n";
  out << "C = " << format_set(data.c_set) << "\n";
  if (data.d_set) {
    out << "D = " << format_set(*data.d_set) << "\n";
    out << "P = " << format_set(*data.p_set) << "\n";
  } else {
    out << "D, P: not computed (D is not integral for odd e)\n";
  }
  return kExitOk;
}

int cmd_check(std::int64_t disc, const std::string& spec, std::optional<std::int64_t> q, std::int64_t q_max,
              bool as_json, std::ostream& out) {
  const auto b = quaternion::from_discriminant(disc);
  const auto k = obstruction::named_field(spec);
  Verdict verdict;
  if (q) {
    if (*q < 2 || !arith::is_prime(*q)) throw InvalidArgument("--q must be prime, got " + std::to_string(*q));
    verdict = obstruction::theorem_check(b, k, *q);
  } else {
    verdict = obstruction::emptiness_scan(b, k, q_max);
  }
  if (as_json) {
    out << report::verdict_to_json(verdict).dump() << "\n";
  } else {
    print_verdict(verdict, out);
  }
  return obstruction::is_proven(verdict) ? kExitOk : kExitInconclusive;
}

struct PublishedPair {
  std::int64_t disc;
  std::string spec;
  std::int64_t q;
  std::int64_t witness;
  int e;
  int f;
  bool splits;
};

int cmd_verify_paper(bool as_json, std::ostream& out) {
  int failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    if (!as_json) out << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };

  for (const auto& [a, b, disc] : {std::tuple{62, 13, 62}, std::tuple{86, 5, 86}}) {
    const auto result = quaternion::from_symbol(a, b);
    const auto* alg = std::get_if<quaternion::QuaternionAlgebra>(&result);
    expect(alg != nullptr && alg->discriminant() == disc,
           "(" + std::to_string(a) + "," + std::to_string(b) + "/Q) has discriminant " + std::to_string(disc));
  }

  const auto q13 = abfield::quadratic_field(-13);
  const auto d3 = abfield::decompose(q13, 3);
  const auto d13 = abfield::decompose(q13, 13);
  expect(d3.e == 1 && d3.f == 2 && d3.g == 1, "3 is inert in Q(sqrt(-13))");
  expect(d13.e == 2 && d13.f == 1 && d13.g == 1, "13 is ramified in Q(sqrt(-13))");
  expect(quaternion::splits_over(quaternion::from_discriminant(39), q13).splits,
         "B of discriminant 39 splits over Q(sqrt(-13))");

  const std::vector<PublishedPair> pairs = {
      {39, "Q(sqrt(2),sqrt(-13))", 2, 13, 4, 1, true},
      {39, "Q(sqrt(-2),sqrt(-13))", 2, 13, 4, 1, true},
      {62, "comp(cycsub(9;8),Q(sqrt(-39)))", 3, 31, 6, 1, false},
      {86, "comp(cycsub(9;8),Q(sqrt(-15)))", 3, 43, 6, 1, false},
  };
  const auto registry = obstruction::builtin_registry();
  json reports = json::array();
  for (const auto& pair : pairs) {
    const auto b = quaternion::from_discriminant(pair.disc);
    const auto k = obstruction::named_field(pair.spec);
    const std::string tag = "(" + std::to_string(pair.disc) + ", " + k.spec + ")";

    expect(quaternion::splits_over(b, k.field).splits == pair.splits,
           tag + ": B " + (pair.splits ? "splits" : "does not split") + " over k");
    if (!pair.splits) {
      const auto d2 = abfield::decompose(k.field, 2);
      expect(d2.e == 1 && d2.f == 3 && d2.g == 2, tag + ": (e_2, f_2, g_2) = (1, 3, 2)");
    }

    const auto hasse = obstruction::hasse_report(b, k, 100, registry);
    const auto* proven = std::get_if<obstruction::Proven>(&hasse.global);
    const bool certified = proven != nullptr && proven->certificate.q == pair.q &&
                           proven->certificate.witness_p == pair.witness && proven->certificate.e == pair.e &&
                           proven->certificate.f == pair.f && proven->certificate.g == 1 &&
                           obstruction::validate_certificate(proven->certificate);
    expect(certified, tag + ": emptiness certified at q = " + std::to_string(pair.q) + " with (e, f) = (" +
                          std::to_string(pair.e) + ", " + std::to_string(pair.f) + ") and witness p = " +
                          std::to_string(pair.witness));
    expect(hasse.counterexample, tag + ": " + std::string(obstruction::kCounterexampleLabel));
    reports.push_back(report::hasse_to_json(hasse));
  }

  if (as_json) {
    out << json{{"reports", reports}, {"failures", failures}, {"version", report::kVersion}}.dump(2) << "\n";
  } else {
    out << (failures == 0 ? "all published claims reproduced" : std::to_string(failures) + " check(s) failed") << "\n";
  }
  return failures == 0 ? kExitOk : kExitInconclusive;
}

struct ScanTask {
  std::size_t algebra_index;
  std::size_t field_index;
};

int cmd_scan(std::int64_t disc_max, const std::string& path, std::int64_t q_max, unsigned jobs, std::ostream& out,
             std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kExitInputError;
  }
  std::vector<obstruction::NamedField> fields;
  bool had_errors = false;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      fields.push_back(obstruction::named_field(line));
    } catch (const Error& e) {
      err << path << ":" << line_no << ": " << e.what() << "\n";
      had_errors = true;
    }
  }
  std::stable_sort(fields.begin(), fields.end(),
                   [](const auto& a, const auto& b) { return a.spec < b.spec; });

  std::vector<quaternion::QuaternionAlgebra> algebras;
  for (std::int64_t d = 6; d <= disc_max; ++d) {
    try {
      algebras.push_back(quaternion::from_discriminant(d));
    } catch (const InvalidArgument&) {
    }
  }

  std::vector<ScanTask> tasks;
  for (std::size_t a = 0; a < algebras.size(); ++a) {
    for (std::size_t f = 0; f < fields.size(); ++f) tasks.push_back({a, f});
  }

  const auto registry = obstruction::builtin_registry();
  std::vector<std::string> lines(tasks.size());
  std::vector<std::string> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& b = algebras[tasks[i].algebra_index];
      const auto& k = fields[tasks[i].field_index];
      obstruction::HasseReport hasse;
      try {
        hasse = obstruction::hasse_report(b, k, q_max, registry);
      } catch (const Error& e) {
        failures[i] = std::to_string(b.discriminant()) + ", " + k.spec + ": " + e.what();
        continue;
      }
      if (!obstruction::is_proven(hasse.global)) continue;
      std::vector<std::string> citations;
      if (hasse.local) citations.push_back(hasse.local->citation);
      auto j = report::verdict_to_json(hasse.global, citations);
      j["disc"] = b.discriminant();
      j["counterexample"] = hasse.counterexample;
      j["local"] = hasse.local ? json{{"base_field", hasse.local->base_spec}, {"citation", hasse.local->citation}}
                               : json(nullptr);
      lines[i] = j.dump();
    }
  };
  const unsigned workers = std::max(1U, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& l : lines) {
    if (!l.empty()) out << l << "\n";
  }
  for (const auto& f : failures) {
    if (f.empty()) continue;
    err << "error: " << f << "\n";
    had_errors = true;
  }
  return had_errors ? kExitInputError : kExitOk;
}

}  // namespace

int run_table1(const std::vector<table1::Row>& goldens, std::ostream& out) {
  const auto diffs = table1::diff(goldens);
  std::size_t matching = 0;
  for (const auto& row : goldens) {
    const bool ok = std::none_of(diffs.begin(), diffs.end(),
                                 [&](const auto& d) { return d.n == row.n && d.e == row.e; });
    if (ok) ++matching;
    out << "(" << row.n << "," << row.e << ") " << (ok ? "match" : "MISMATCH") << "\n";
  }
  for (const auto& d : diffs) out << "  diff " << d.describe() << "\n";
  out << matching << "/" << goldens.size() << " rows match\n";
  return diffs.empty() ? kExitOk : kExitInconclusive;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify that Shimura curves have no points over abelian number fields"};
  app.name("shimura-cert");
  app.require_subcommand(1);
  std::function<int()> action;

  auto* trace = app.add_subcommand("trace-sets", "Compute the trace sets C(N,e), D(N,e) and P(D(N,e))");
  std::int64_t n = 0;
  unsigned e = 0;
  bool want_d = false;
  bool trace_json = false;
  trace->add_option("--n", n, "Residue field cardinality N")->required();
  trace->add_option("--e", e, "Exponent e")->required();
  trace->add_flag("--d", want_d, "Require D (fails for odd e)");
  trace->add_flag("--json", trace_json, "Emit JSON");
  trace->callback([&] { action = [&] { return cmd_trace_sets(n, e, want_d, trace_json, out, err); }; });

  auto* table = app.add_subcommand("table1", "Recompute the published trace-set table and diff it");
  table->callback([&] { action = [&] { return run_table1(table1::goldens(), out); }; });

  auto* check = app.add_subcommand("check", "Check the emptiness criterion for (B, k)");
  std::int64_t disc = 0;
  std::string spec;
  std::int64_t q = 0;
  std::int64_t q_max = 100;
  bool check_json = false;
  check->add_option("--disc", disc, "Discriminant of B")->required();
  check->add_option("--field", spec, "Field specification")->required();
  auto* q_opt = check->add_option("--q", q, "Use this prime q only");
  check->add_option("--qmax", q_max, "Try every prime q up to this bound")->excludes(q_opt);
  check->add_flag("--json", check_json, "Emit JSON");
  check->callback([&] {
    action = [&] {
      return cmd_check(disc, spec, q_opt->count() > 0 ? std::optional(q) : std::nullopt, q_max, check_json, out);
    };
  });

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the published Hasse-principle counterexamples");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "Emit JSON");
  verify->callback([&] { action = [&] { return cmd_verify_paper(verify_json, out); }; });

  auto* scan = app.add_subcommand("scan", "Scan discriminants against a file of field specs (JSON lines)");
  std::int64_t disc_max = 0;
  std::string fields_path;
  std::int64_t scan_qmax = 100;
  unsigned jobs = 1;
  scan->add_option("--disc-max", disc_max, "Largest discriminant")->required();
  scan->add_option("--fields", fields_path, "File with one field spec per line")->required();
  scan->add_option("--qmax", scan_qmax, "Largest q to try");
  scan->add_option("--jobs", jobs, "Worker threads");
  scan->callback([&] { action = [&] { return cmd_scan(disc_max, fields_path, scan_qmax, jobs, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace shimura::cli
