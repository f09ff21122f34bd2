#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mideal/closure.hpp"
#include "mideal/errors.hpp"
#include "mideal/graphs.hpp"
#include "mideal/io.hpp"
#include "mideal/persistence.hpp"
#include "mideal/primes.hpp"
#include "mideal/resolution.hpp"
#include "mideal/runtime.hpp"

namespace {

using nlohmann::json;
using namespace mideal;

constexpr const char* kSchema = "mideal/1";

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonomialIdeal load_ideal(const std::string& path) {
  std::vector<std::string> warnings;
  MonomialIdeal ideal = parse_ideal(read_file(path), &warnings);
  for (const std::string& w : warnings)
    std::cerr << path << ": warning: " << w << "\n";
  return ideal;
}

SimpleGraph load_graph(const std::string& path) {
  return parse_graph(read_file(path));
}

json ideal_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators())
    gens.push_back(g.str(ideal.ring()));
  return json{{"vars", ideal.ring().names()}, {"generators", gens}};
}

json primes_json(const std::vector<MonomialPrime>& primes,
                 const Ring& ring) {
  json arr = json::array();
  for (const MonomialPrime& p : primes) {
    json names = json::array();
    for (int v : p.vars()) names.push_back(ring.name(v));
    arr.push_back(names);
  }
  return arr;
}

std::string method_name(AssMethod m) {
  return m == AssMethod::WitnessSearch ? "witness" : "decomp";
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string primes_text(const std::vector<MonomialPrime>& primes) {
  std::string out;
  for (const MonomialPrime& p : primes) {
    out += p.str();
    out.push_back('\n');
  }
  return out;
}

struct GlobalOpts {
  bool as_json = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

json report_base(const std::string& command, const GlobalOpts& opts) {
  return json{{"schema", kSchema}, {"command", command}, {"seed", opts.seed}};
}

int run_ideal_result(const std::string& command, const GlobalOpts& opts,
                     const MonomialIdeal& result) {
  json j = report_base(command, opts);
  j["result"] = ideal_json(result);
  emit(j, opts.as_json, serialize_ideal(result));
  return kExitOk;
}

int cmd_ass(const GlobalOpts& opts, const std::string& path,
            const std::string& method_str, int k) {
  const AssMethod method = method_str == "decomp" ? AssMethod::Decomposition
                                                  : AssMethod::WitnessSearch;
  const MonomialIdeal base = load_ideal(path);
  const MonomialIdeal ideal = k > 1 ? power(base, k) : base;
  const AssReport report = associated_primes(ideal, method);

  json j = report_base("ass", opts);
  j["k"] = k;
  j["method"] = method_name(method);
  j["primes"] = primes_json(report.primes, ideal.ring());
  emit(j, opts.as_json, primes_text(report.primes));
  return kExitOk;
}

int cmd_irrdec(const GlobalOpts& opts, const std::string& path) {
  const MonomialIdeal ideal = load_ideal(path);
  const auto components = irreducible_decomposition(ideal);

  json comps = json::array();
  std::string text;
  for (const IrreducibleComponent& c : components) {
    json powers = json::object();
    for (int v = 0; v < ideal.ring().var_count(); ++v)
      if (c.powers()[static_cast<std::size_t>(v)] > 0)
        powers[ideal.ring().name(v)] = c.powers()[static_cast<std::size_t>(v)];
    comps.push_back(powers);
    text += c.str();
    text.push_back('\n');
  }
  json j = report_base("irrdec", opts);
  j["components"] = comps;
  emit(j, opts.as_json, text);
  return kExitOk;
}

int cmd_depth(const GlobalOpts& opts, const std::string& path, int k,
              bool exact) {
  const MonomialIdeal base = load_ideal(path);
  const MonomialIdeal ideal = k > 1 ? power(base, k) : base;
  const MaximalIdealWitness w = maximal_ideal_associated(ideal);

  json j = report_base("depth", opts);
  j["k"] = k;
  j["depth_zero"] = w.associated;
  j["witness"] =
      w.witness ? json(w.witness->str(ideal.ring())) : json(nullptr);
  std::string text = std::string("depth zero: ") + (w.associated ? "yes" : "no");
  if (w.witness) text += " (witness " + w.witness->str(ideal.ring()) + ")";
  text.push_back('\n');

  if (exact) {
    const int pd = projective_dimension(ideal);
    const int depth = ideal.ring().var_count() - pd;
    j["projective_dimension"] = pd;
    j["exact_depth"] = depth;
    text += "depth = " + std::to_string(depth) +
            " (projective dimension " + std::to_string(pd) + ")\n";
  } else {
    j["projective_dimension"] = nullptr;
    j["exact_depth"] = nullptr;
  }
  emit(j, opts.as_json, text);
  return kExitOk;
}

int cmd_persist(const GlobalOpts& opts, const std::string& path, int kmax,
                bool audit) {
  const MonomialIdeal ideal = load_ideal(path);
  const PersistenceReport report =
      persistence_report(ideal, kmax, AssMethod::WitnessSearch);

  bool audit_ok = true;
  if (audit) {
    MonomialIdeal pk = ideal;
    for (int k = 1; k <= kmax; ++k) {
      if (k > 1) pk = multiply(pk, ideal);
      const AssReport again = associated_primes(pk, AssMethod::Decomposition);
      if (again.primes != report.rows[static_cast<std::size_t>(k) - 1].ass)
        audit_ok = false;
    }
  }

  json rows = json::array();
  std::string text;
  for (const PersistenceRow& row : report.rows) {
    json r{{"k", row.k},
           {"num_generators", row.num_generators},
           {"ass", primes_json(row.ass, ideal.ring())},
           {"strong_ok", row.strong_ok},
           {"ass_next_ok", row.ass_next_ok},
           {"q2_ok", row.q2_ok ? json(*row.q2_ok) : json(nullptr)},
           {"depth_zero", row.depth_zero}};
    rows.push_back(r);
    text += "k=" + std::to_string(row.k) +
            " gens=" + std::to_string(row.num_generators) +
            " ass=" + std::to_string(row.ass.size()) +
            " strong=" + (row.strong_ok ? "ok" : "VIOLATION") +
            std::string(" ass_next=") + (row.ass_next_ok ? "ok" : "VIOLATION");
    if (row.q2_ok) text += std::string(" q2=") + (*row.q2_ok ? "ok" : "FAIL");
    text += std::string(" depth_zero=") + (row.depth_zero ? "yes" : "no");
    text.push_back('\n');
  }
  json j = report_base("persist", opts);
  j["kmax"] = kmax;
  j["method"] = method_name(report.method);
  j["rows"] = rows;
  j["strong_violations"] = report.strong_violations;
  j["ass_violations"] = report.ass_violations;
  j["q2_failures"] = report.q2_failures;
  j["consistency_ok"] = report.colon_implies_containment;
  j["audit"] = audit ? json(audit_ok) : json(nullptr);

  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (int k : v) {
      if (!s.empty()) s += ",";
      s += std::to_string(k);
    }
    return s.empty() ? std::string("none") : s;
  };
  text += "strong violations: " + list(report.strong_violations) + "\n";
  text += "ass violations: " + list(report.ass_violations) + "\n";
  text += "q2 failures: " + list(report.q2_failures) + "\n";
  text += std::string("colon implies containment: ") +
          (report.colon_implies_containment ? "ok" : "INCONSISTENT") + "\n";
  if (audit)
    text += std::string("decomposition audit: ") +
            (audit_ok ? "ok" : "MISMATCH") + "\n";
  emit(j, opts.as_json, text);

  if (!report.colon_implies_containment || !audit_ok) return kExitClaimFailed;
  return kExitOk;
}

int cmd_graph_cover(const GlobalOpts& opts, const std::string& path) {
  return run_ideal_result("graph cover", opts,
                          cover_ideal(load_graph(path)));
}

int cmd_graph_fhv(const GlobalOpts& opts, const std::string& path) {
  const SimpleGraph g = load_graph(path);
  const MonomialIdeal decomposition = fhv_square_decomposition(g);
  const MonomialIdeal square = power(cover_ideal(g), 2);
  const bool match = decomposition == square;

  json j = report_base("graph fhv", opts);
  j["match"] = match;
  j["decomposition"] = ideal_json(decomposition);
  j["cover_square"] = ideal_json(square);
  std::string text =
      std::string("decomposition = J^2: ") + (match ? "PASS" : "FAIL") + "\n";
  emit(j, opts.as_json, text);
  return match ? kExitOk : kExitClaimFailed;
}

int cmd_graph_p1(const GlobalOpts& opts, const std::string& path) {
  const P1Report report = verify_p1(load_graph(path));
  json j = report_base("graph p1", opts);
  j["closed"] = report.closed;
  j["colon_ok"] = report.colon_ok;
  std::string text =
      std::string("J^2 integrally closed: ") + (report.closed ? "PASS" : "FAIL") +
      "\n(J^3 : J) = J^2: " + (report.colon_ok ? "PASS" : "FAIL") + "\n";
  emit(j, opts.as_json, text);
  return report.closed && report.colon_ok ? kExitOk : kExitClaimFailed;
}

int cmd_paper_example(const GlobalOpts& opts, int kmax) {
  const ExampleReport report = run_paper_example(kmax);

  json clauses{{"a_m_in_ass2", report.m_in_ass2},
               {"b_m_not_in_ass3", report.m_not_in_ass3},
               {"c_colon_differs", report.colon_differs},
               {"d_ass2_not_in_ass3", report.ass2_not_in_ass3},
               {"e_depth2_zero", report.depth2_zero},
               {"e_depth3_positive", report.depth3_positive},
               {"f_union_exceeds_final", report.union_exceeds_final}};
  json ass = json::array();
  for (std::size_t k = 0; k < report.ass_per_power.size(); ++k)
    ass.push_back(
        primes_json(report.ass_per_power[k].primes, report.ideal.ring()));

  json j = report_base("paper-example", opts);
  j["kmax"] = report.kmax;
  j["fixture_hash"] = report.hash;
  j["ideal"] = ideal_json(report.ideal);
  j["clauses"] = clauses;
  j["ass_per_power"] = ass;
  j["all_passed"] = report.all_passed();

  auto line = [](const char* label, bool ok) {
    return std::string(label) + ": " + (ok ? "PASS" : "FAIL") + "\n";
  };
  std::string text = "fixture " + report.hash + "\n";
  text += line("(a) maximal ideal in Ass(I^2)", report.m_in_ass2);
  text += line("(b) maximal ideal not in Ass(I^3)", report.m_not_in_ass3);
  text += line("(c) (I^3 : I) != I^2", report.colon_differs);
  text += line("(d) Ass(I^2) not in Ass(I^3)", report.ass2_not_in_ass3);
  text += line("(e) depth R/I^2 = 0", report.depth2_zero);
  text += line("(e) depth R/I^3 >= 1", report.depth3_positive);
  text += line("(f) union of Ass sets exceeds the last one",
               report.union_exceeds_final);
  for (std::size_t k = 0; k < report.ass_per_power.size(); ++k) {
    text += "Ass(I^" + std::to_string(k + 1) + "): " +
            std::to_string(report.ass_per_power[k].primes.size()) +
            " primes\n";
  }
  emit(j, opts.as_json, text);
  return report.all_passed() ? kExitOk : kExitClaimFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monomial-ideal calculator"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_flag("--json", opts.as_json, "machine-readable output");
  app.add_option("--seed", opts.seed,
                 "seed recorded in reports; reserved for randomized runs");
  app.add_option("--threads", opts.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  std::string path_a, path_b, method = "witness";
  int k = 1, kmax = 4, paper_kmax = 3;
  bool exact = false, audit = false;

  auto* power_cmd = app.add_subcommand("power", "k-th power of an ideal");
  power_cmd->add_option("file", path_a)->required();
  power_cmd->add_option("-k", k, "exponent")->required()->check(CLI::PositiveNumber);

  auto* colon_cmd = app.add_subcommand("colon", "colon ideal (A : B)");
  colon_cmd->add_option("fileA", path_a)->required();
  colon_cmd->add_option("fileB", path_b)->required();

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection A ∩ B");
  intersect_cmd->add_option("fileA", path_a)->required();
  intersect_cmd->add_option("fileB", path_b)->required();

  auto* radical_cmd = app.add_subcommand("radical", "radical of an ideal");
  radical_cmd->add_option("file", path_a)->required();

  auto* closure_cmd = app.add_subcommand("closure", "integral closure");
  closure_cmd->add_option("file", path_a)->required();

  auto* ass_cmd = app.add_subcommand("ass", "associated primes of I^k");
  ass_cmd->add_option("file", path_a)->required();
  ass_cmd->add_option("--method", method, "witness|decomp")
      ->check(CLI::IsMember({"witness", "decomp"}));
  ass_cmd->add_option("-k", k, "power")->check(CLI::PositiveNumber);

  auto* irrdec_cmd =
      app.add_subcommand("irrdec", "irredundant irreducible components");
  irrdec_cmd->add_option("file", path_a)->required();

  auto* depth_cmd = app.add_subcommand("depth", "depth report for R/I^k");
  depth_cmd->add_option("file", path_a)->required();
  depth_cmd->add_option("-k", k, "power")->check(CLI::PositiveNumber);
  depth_cmd->add_flag("--exact", exact, "Betti-exact depth");

  auto* persist_cmd =
      app.add_subcommand("persist", "persistence scan up to kmax");
  persist_cmd->add_option("file", path_a)->required();
  persist_cmd->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
  persist_cmd->add_flag("--audit", audit,
                        "recompute Ass by decomposition and compare");

  auto* graph_cmd = app.add_subcommand("graph", "graph ideal checks");
  graph_cmd->require_subcommand(1);
  auto* cover_cmd = graph_cmd->add_subcommand("cover", "cover ideal");
  cover_cmd->add_option("gfile", path_a)->required();
  auto* fhv_cmd = graph_cmd->add_subcommand(
      "fhv", "squared cover ideal decomposition identity");
  fhv_cmd->add_option("gfile", path_a)->required();
  auto* p1_cmd =
      graph_cmd->add_subcommand("p1", "cover ideal closure and colon checks");
  p1_cmd->add_option("gfile", path_a)->required();

  auto* paper_cmd =
      app.add_subcommand("paper-example", "run the built-in 7-variable example");
  paper_cmd->add_option("--kmax", paper_kmax)->check(CLI::Range(3, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_worker_threads(opts.threads);

    if (*power_cmd)
      return run_ideal_result("power", opts, power(load_ideal(path_a), k));
    if (*colon_cmd)
      return run_ideal_result(
          "colon", opts, colon_ideal(load_ideal(path_a), load_ideal(path_b)));
    if (*intersect_cmd)
      return run_ideal_result(
          "intersect", opts,
          intersect(load_ideal(path_a), load_ideal(path_b)));
    if (*radical_cmd)
      return run_ideal_result("radical", opts, radical(load_ideal(path_a)));
    if (*closure_cmd)
      return run_ideal_result("closure", opts,
                              integral_closure(load_ideal(path_a)));
    if (*ass_cmd) return cmd_ass(opts, path_a, method, k);
    if (*irrdec_cmd) return cmd_irrdec(opts, path_a);
    if (*depth_cmd) return cmd_depth(opts, path_a, k, exact);
    if (*persist_cmd) return cmd_persist(opts, path_a, kmax, audit);
    if (*cover_cmd) return cmd_graph_cover(opts, path_a);
    if (*fhv_cmd) return cmd_graph_fhv(opts, path_a);
    if (*p1_cmd) return cmd_graph_p1(opts, path_a);
    if (*paper_cmd) return cmd_paper_example(opts, paper_kmax);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
