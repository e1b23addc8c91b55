// compmat: command-line front end.
//
//   compmat classify|solve|degree|ppt|wcheck|verify [flags] [file]
//
// Exit codes: 0 ok, 1 verify found failures, 2 parse error, 3 internal
// inconsistency, 4 precondition failure, 5 enumeration cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compmat/classes.hpp"
#include "compmat/degree.hpp"
#include "compmat/document.hpp"
#include "compmat/errors.hpp"
#include "compmat/lcp.hpp"
#include "compmat/linalg.hpp"
#include "compmat/verify.hpp"
#include "report.hpp"

using namespace compmat;
using compmat::cli::Json;
using compmat::cli::RunReport;
using compmat::cli::to_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kInconsistent = 3, kPrecondition = 4, kCap = 5 };

struct Options {
  bool json = false;
  std::string file = "-";
  std::string method = "auto";
  std::string alpha;
  std::string z;
  VerifyOptions verify;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path, 0, 0);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MatrixDocument load(const Options& o, RunReport& r) {
  const std::string text = read_input(o.file);
  r.input_sha256 = cli::sha256_hex(text);
  return parse_document(text);
}

const Vector& require_q(const MatrixDocument& doc) {
  if (!doc.q) throw DimensionMismatch("this command needs q in the input document");
  return *doc.q;
}

Json verdict_json(const ClassVerdict& v) {
  Json j;
  j["class"] = to_string(v.matrix_class);
  j["member"] = v.member;
  if (v.witness_vector) j["witness_vector"] = to_json(*v.witness_vector);
  if (v.witness_set) j["witness_set"] = to_json(*v.witness_set);
  if (!v.certificate_note.empty()) j["note"] = v.certificate_note;
  return j;
}

Json solution_json(const Solution& s) {
  Json j;
  j["w"] = to_json(s.w);
  j["z"] = to_json(s.z);
  return j;
}

Json piece_json(const SolutionPiece& p) {
  Json j;
  j["support"] = to_json(p.support);
  j["dimension"] = std::to_string(p.dimension());
  j["particular"] = solution_json(p.particular);
  j["relative_interior"] = solution_json(p.relative_interior);
  Json rays = Json::array();
  for (const auto& d : p.ray_basis) rays.push_back(to_json(d));
  j["ray_basis"] = rays;
  j["w_constant"] = p.w_constant;
  return j;
}

Json degree_json(const DegreeResult& d) {
  Json j;
  j["value"] = std::to_string(d.value);
  j["q_nondegenerate"] = d.q_nondegenerate;
  Json c = Json::array();
  for (const auto& x : d.contributions) {
    Json e;
    e["support"] = to_json(x.support);
    e["index"] = std::to_string(x.index);
    c.push_back(e);
  }
  j["contributions"] = c;
  return j;
}

void checked(const LCPInstance& inst, const Solution& s) {
  if (!is_solution(inst, s)) {
    throw InternalInconsistency("refusing to print a non-solution: z = " + to_string(s.z));
  }
}

int cmd_classify(const Options& o, RunReport& r) {
  const auto doc = load(o, r);
  const auto rep = classify(doc.A);
  r.results["matrix"] = to_json(doc.A);
  Json verdicts = Json::array();
  for (const auto& v : rep.verdicts) verdicts.push_back(verdict_json(v));
  r.results["verdicts"] = verdicts;
  Json flags = Json::array();
  for (const auto& f : rep.consistency_flags) {
    Json e;
    e["check"] = f.name;
    e["holds"] = f.holds;
    flags.push_back(e);
  }
  r.results["consistency"] = flags;
  return kOk;
}

int cmd_solve(const Options& o, RunReport& r) {
  const auto doc = load(o, r);
  const LCPInstance inst(doc.A, require_q(doc));
  r.results["method"] = o.method;
  bool enumerate = o.method == "enumerate";
  if (o.method != "enumerate") {
    const auto res = lemke_solve(inst);
    r.results["lemke_pivots"] = std::to_string(res.pivots);
    if (res.solution) {
      checked(inst, *res.solution);
      r.results["lemke"] = "solved";
      r.results["solution"] = solution_json(*res.solution);
    } else {
      r.results["lemke"] = "ray termination";
      enumerate = o.method == "auto";
    }
  }
  if (enumerate) {
    const auto pieces = enumerate_solutions(inst);
    Json arr = Json::array();
    for (const auto& p : pieces) {
      checked(inst, p.particular);
      checked(inst, p.relative_interior);
      arr.push_back(piece_json(p));
    }
    r.results["solvable"] = !pieces.empty();
    r.results["pieces"] = arr;
    const auto w = w_solution_set(inst);
    Json ws;
    ws["finite"] = w.finite;
    if (w.finite) {
      Json vals = Json::array();
      for (const auto& v : w.w_values) vals.push_back(to_json(v));
      ws["values"] = vals;
    } else {
      ws["varying_piece"] = to_json(w.infinite_witness->support);
    }
    r.results["w_solutions"] = ws;
  }
  return kOk;
}

int cmd_degree(const Options& o, RunReport& r) {
  const auto doc = load(o, r);
  const auto d = local_degree(doc.A, require_q(doc));
  r.results["degree"] = degree_json(d);
  return kOk;
}

int cmd_ppt(const Options& o, RunReport& r) {
  const auto doc = load(o, r);
  const IndexSet alpha = IndexSet::parse_one_based(doc.n, o.alpha);
  const auto p = ppt(doc.A, alpha);
  r.results["alpha"] = to_json(alpha);
  r.results["pivot_det_sign"] = std::to_string(p.pivot_det_sign);
  r.results["transformed"] = to_json(p.transformed);
  if (doc.q) r.results["transformed_q"] = to_json(ppt_transform_q(doc.A, *doc.q, alpha));
  return kOk;
}

Vector parse_vector(const std::string& text) {
  Vector v;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (!Rational::is_valid_literal(tok)) throw ParseError("--z: invalid rational \"" + tok + "\"", 1, 1);
    v.push_back(Rational::parse(tok));
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  return v;
}

int cmd_wcheck(const Options& o, RunReport& r) {
  const auto doc = load(o, r);
  const LCPInstance inst(doc.A, require_q(doc));
  const Vector z = parse_vector(o.z);
  if (z.size() != doc.n) throw DimensionMismatch("--z has " + std::to_string(z.size()) + " entries, expected " + std::to_string(doc.n));
  const Solution sol = solution_from_z(inst, z);
  r.results["solution"] = solution_json(sol);

  const auto conv = check_w_uniqueness_converse(inst, sol);
  const auto v = check_local_w_uniqueness(inst, sol);
  r.results["alpha"] = to_json(v.alpha);
  r.results["beta"] = to_json(v.beta);
  r.results["certificate_holds"] = v.certificate_holds;
  if (v.violating_pair) {
    Json p;
    p["w_alpha"] = to_json(v.violating_pair->w_alpha);
    p["z_beta"] = to_json(v.violating_pair->z_beta);
    r.results["violating_pair"] = p;
  }
  Json c;
  c["trivial_kernel"] = conv.trivial_kernel;
  if (conv.witness) c["witness"] = to_json(*conv.witness);
  r.results["converse"] = c;
  return kOk;
}

int cmd_verify(const Options& o, RunReport& r) {
  r.seed = o.verify.seed;
  const auto rep = run_verify(o.verify);
  r.results["trials"] = std::to_string(o.verify.trials);
  r.results["n_max"] = std::to_string(o.verify.n_max);
  Json inv = Json::array();
  for (const auto& i : rep.invariants) {
    Json e;
    e["invariant"] = i.name;
    e["status"] = i.passed() ? (i.evidence_only ? "pass (evidence)" : "pass") : "FAIL";
    e["checked"] = std::to_string(i.checked);
    e["failures"] = std::to_string(i.failures);
    if (i.first_counterexample) e["first_counterexample"] = *i.first_counterexample;
    if (!i.note.empty()) e["note"] = i.note;
    inv.push_back(e);
  }
  r.results["invariants"] = inv;
  if (o.verify.fixtures) {
    Json cl = Json::array();
    for (const auto& c : rep.claims) {
      Json e;
      e["fixture"] = c.fixture;
      e["claim"] = c.claim;
      e["status"] = c.passed() ? "pass" : "FAIL";
      e["expected"] = c.expected;
      e["actual"] = c.actual;
      cl.push_back(e);
    }
    r.results["fixture_claims"] = cl;
  }
  r.results["all_passed"] = rep.all_passed();
  return rep.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix-class decisions, LCP solving and degree computation"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Input document (JSON or text; '-' for stdin)");
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
  };
  auto* classify_cmd = app.add_subcommand("classify", "Decide every matrix class");
  add_file(classify_cmd);
  auto* solve_cmd = app.add_subcommand("solve", "Solve LCP(q, A)");
  add_file(solve_cmd);
  solve_cmd->add_option("--method", o.method, "lemke, enumerate or auto")
      ->check(CLI::IsMember({"lemke", "enumerate", "auto"}));
  auto* degree_cmd = app.add_subcommand("degree", "Local degree of A at q");
  add_file(degree_cmd);
  auto* ppt_cmd = app.add_subcommand("ppt", "Principal pivot transform");
  add_file(ppt_cmd);
  ppt_cmd->add_option("--alpha", o.alpha, "Pivot set, 1-based, e.g. \"1,3\"");
  auto* wcheck_cmd = app.add_subcommand("wcheck", "Local w-uniqueness certificate");
  add_file(wcheck_cmd);
  wcheck_cmd->add_option("--z", o.z, "Solution z, e.g. \"4,1\"")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Randomized invariant suite");
  verify_cmd->add_flag("--json", o.json, "Machine-readable JSON output");
  verify_cmd->add_option("--seed", o.verify.seed, "Random seed");
  verify_cmd->add_option("--trials", o.verify.trials, "Number of random instances");
  verify_cmd->add_option("--n-max", o.verify.n_max, "Largest dimension")->check(CLI::Range(1, 64));
  verify_cmd->add_flag("--fixtures", o.verify.fixtures, "Replay the fixture claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  RunReport report;
  for (int i = 0; i < argc; ++i) report.command += (i ? " " : "") + std::string(argv[i]);
  const auto start = std::chrono::steady_clock::now();
  int rc = kOk;
  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "classify") rc = cmd_classify(o, report);
    else if (name == "solve") rc = cmd_solve(o, report);
    else if (name == "degree") rc = cmd_degree(o, report);
    else if (name == "ppt") rc = cmd_ppt(o, report);
    else if (name == "wcheck") rc = cmd_wcheck(o, report);
    else rc = cmd_verify(o, report);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::cout << (o.json ? cli::render_json(report) : cli::render_text(report));
  return rc;
}
