// normcat: batch front end over the normed-category library.
//
// Subcommands read JSON documents, dispatch to the library and print one
// machine-readable JSON report on stdout. Reports are deterministic
// byte-for-byte: stable key order, fixed float formatting, and the same
// bytes for any --jobs value. A short human summary goes to stderr
// (colored when NORMCAT_COLOR=1).
//
// Exit codes: 0 all PASS/CONFIRMED, 1 any FAIL/REFUTED, 2 input error,
// 3 NO-VERDICT/INCOMPLETE.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normcat/json_io.hpp"
#include "normcat/normcat.hpp"

using namespace normcat;
using io::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240501;

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kNoVerdict = 3 };

void print_report(const json& report, const std::string& summary, bool ok) {
  std::fputs(io::dump_deterministic(report).c_str(), stdout);
  const char* color = std::getenv("NORMCAT_COLOR");
  bool colored = color && std::string(color) == "1";
  std::string verdict = ok ? "ok" : "not ok";
  if (colored) verdict = (ok ? "\033[32m" : "\033[31m") + verdict + "\033[0m";
  std::fprintf(stderr, "%s: %s\n", verdict.c_str(), summary.c_str());
}

json exit_code_json(int code) { return json(code); }

// --- shared input plumbing -------------------------------------------------

struct LoadedInputs {
  std::vector<io::Document> docs;
  std::vector<std::string> kinds;
};

LoadedInputs load_inputs(const std::vector<std::string>& files) {
  LoadedInputs in;
  for (const auto& f : files)
    for (auto& d : io::load_documents_file(f)) {
      in.kinds.push_back(d.kind);
      in.docs.push_back(std::move(d));
    }
  return in;
}

const io::Document* find_kind(const LoadedInputs& in, const std::string& kind) {
  for (const auto& d : in.docs)
    if (d.kind == kind) return &d;
  return nullptr;
}

std::vector<const io::Document*> find_all(const LoadedInputs& in, const std::string& kind) {
  std::vector<const io::Document*> out;
  for (const auto& d : in.docs)
    if (d.kind == kind) out.push_back(&d);
  return out;
}

// --- audit ------------------------------------------------------------------

struct AuditArgs {
  std::vector<std::string> files;
  double tol = 1e-9;
  std::uint64_t budget = 1'000'000;
  int jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  long cap = -1;
};

template <EnumerableNormedCategory C>
int run_audit(const C& cat, const AuditArgs& a, const LoadedInputs& in, const char* instance) {
  AuditOptions opts;
  opts.tol = a.tol;
  opts.budget = a.budget;
  opts.jobs = a.jobs;
  AuditReport rep = audit_norm(cat, opts);

  json out;
  out["command"] = "audit";
  out["seed"] = a.seed;
  out["instance"] = instance;
  out["inputs"] = in.kinds;
  out["report"] = io::report_to_json(rep);
  bool ok = rep.passed();
  out["exit"] = exit_code_json(ok ? kPass : kFail);
  print_report(out, std::string("audit of ") + instance, ok);
  return ok ? kPass : kFail;
}

int cmd_audit(const AuditArgs& a) {
  auto in = load_inputs(a.files);
  if (auto* fc = find_kind(in, "finite_category")) {
    std::optional<json> norm_doc;
    if (auto* nt = find_kind(in, "norm_table")) norm_doc = nt->payload;
    auto cat = io::decode_normed_category(fc->payload, norm_doc);
    return run_audit(cat, a, in, "finite-category");
  }
  auto spaces = find_all(in, "metric_space");
  if (spaces.size() == 1) {
    auto cat = io::decode_pseudometric(spaces[0]->payload);
    return run_audit(cat, a, in, "pseudometric");
  }
  if (spaces.size() > 1) {
    std::vector<FiniteMetricSpace> list;
    for (auto* s : spaces) list.push_back(io::decode_metric_space(s->payload));
    LipschitzCategory cat(std::move(list));
    return run_audit(cat, a, in, "lipschitz");
  }
  if (auto* dg = find_kind(in, "digraph")) {
    if (a.cap < 0) throw InputError("auditing a free category needs an explicit --cap");
    auto cat = free_category(io::decode_digraph(dg->payload), static_cast<std::size_t>(a.cap));
    return run_audit(cat, a, in, "free-category");
  }
  throw InputError("audit needs a finite_category, metric_space(s) or digraph document");
}

// --- kernel -----------------------------------------------------------------

template <EnumerableNormedCategory C>
int run_kernel(const C& cat, double tol, std::uint64_t seed, const LoadedInputs&,
               const char* instance) {
  auto k = kernel(cat, tol);
  json arrows = json::array();
  std::size_t total = 0;
  for (const auto& x : cat.objects())
    for (const auto& y : cat.objects())
      for (const auto& f : k.arrows(x, y)) {
        arrows.push_back(cat.describe_arrow(f));
        ++total;
      }
  json out;
  out["command"] = "kernel";
  out["seed"] = seed;
  out["instance"] = instance;
  out["tol"] = tol;
  out["kernel_arrows"] = arrows;
  out["count"] = total;
  out["exit"] = exit_code_json(kPass);
  print_report(out, "kernel extraction", true);
  return kPass;
}

int cmd_kernel(const AuditArgs& a) {
  auto in = load_inputs(a.files);
  if (auto* fc = find_kind(in, "finite_category")) {
    std::optional<json> norm_doc;
    if (auto* nt = find_kind(in, "norm_table")) norm_doc = nt->payload;
    auto cat = io::decode_normed_category(fc->payload, norm_doc);
    return run_kernel(cat, a.tol, a.seed, in, "finite-category");
  }
  if (auto* ms = find_kind(in, "metric_space")) {
    auto cat = io::decode_pseudometric(ms->payload);
    return run_kernel(cat, a.tol, a.seed, in, "pseudometric");
  }
  if (auto* dg = find_kind(in, "digraph")) {
    if (a.cap < 0) throw InputError("free-category kernels need an explicit --cap");
    auto cat = free_category(io::decode_digraph(dg->payload), static_cast<std::size_t>(a.cap));
    return run_kernel(cat, a.tol, a.seed, in, "free-category");
  }
  throw InputError("kernel needs a finite_category, metric_space or digraph document");
}

// --- quasimetric ------------------------------------------------------------

struct QuasiArgs {
  std::vector<std::string> files;
  std::string from, to;
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  long cap = -1;
};

int cmd_quasimetric(const QuasiArgs& a) {
  auto in = load_inputs(a.files);
  json out;
  out["command"] = "quasimetric";
  out["seed"] = a.seed;
  out["from"] = a.from;
  out["to"] = a.to;

  if (auto* dg = find_kind(in, "digraph")) {
    auto g = io::decode_digraph(dg->payload);
    auto sp = quasimetric_shortest_path(g, a.from, a.to);
    out["rho"] = io::ext_to_json(sp.distance);
    json path = json::array();
    if (sp.path) {
      path.push_back(g.vertex_label(sp.path->source));
      for (auto arc : sp.path->steps) path.push_back(g.vertex_label(g.arc_cod(arc)));
    }
    out["path"] = path;
    out["exit"] = exit_code_json(kPass);
    print_report(out, "shortest-path quasi-metric", true);
    return kPass;
  }
  if (auto* fc = find_kind(in, "finite_category")) {
    std::optional<json> norm_doc;
    if (auto* nt = find_kind(in, "norm_table")) norm_doc = nt->payload;
    auto cat = io::decode_normed_category(fc->payload, norm_doc);
    auto q = induced_quasimetric(cat, cat.category().object_index(a.from),
                                 cat.category().object_index(a.to));
    out["rho"] = io::ext_to_json(q.value);
    json path = json::array();
    if (q.witness) path.push_back(cat.describe_arrow(*q.witness));
    out["path"] = path;
    out["exit"] = exit_code_json(kPass);
    print_report(out, "hom-infimum quasi-metric", true);
    return kPass;
  }
  if (auto* ms = find_kind(in, "metric_space")) {
    auto cat = io::decode_pseudometric(ms->payload);
    auto q = induced_quasimetric(cat, cat.point_index(a.from), cat.point_index(a.to));
    out["rho"] = io::ext_to_json(q.value);
    out["path"] = json::array({a.from, a.to});
    out["exit"] = exit_code_json(kPass);
    print_report(out, "point-pair distance", true);
    return kPass;
  }
  throw InputError("quasimetric needs a digraph, finite_category or metric_space document");
}

// --- freecat-norm -----------------------------------------------------------

struct FreecatArgs {
  std::vector<std::string> files;
  std::string steps;
  std::string at;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_freecat_norm(const FreecatArgs& a) {
  auto in = load_inputs(a.files);
  auto* dg = find_kind(in, "digraph");
  if (!dg) throw InputError("freecat-norm needs a digraph document");
  auto g = io::decode_digraph(dg->payload);

  PathArrow p;
  if (a.steps.empty()) {
    if (a.at.empty()) throw InputError("an empty path needs --at <vertex>");
    p = {g.vertex_index(a.at), {}, g.vertex_index(a.at)};
  } else {
    std::vector<std::int32_t> arcs;
    std::string cur;
    for (char c : a.steps + ",") {
      if (c == ',') {
        if (!cur.empty()) arcs.push_back(g.arc_index(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (arcs.empty()) throw InputError("no steps parsed from --steps");
    p = {g.arc_dom(arcs.front()), arcs, g.arc_cod(arcs.back())};
  }
  ExtReal mu = path_norm(g, p);

  json out;
  out["command"] = "freecat-norm";
  out["seed"] = a.seed;
  out["dom"] = g.vertex_label(p.source);
  out["cod"] = g.vertex_label(p.target);
  out["length"] = p.steps.size();
  out["norm"] = io::ext_to_json(mu);
  out["exit"] = exit_code_json(kPass);
  print_report(out, "path norm", true);
  return kPass;
}

// --- sequences --------------------------------------------------------------

struct SeqArgs {
  std::vector<std::string> files;
  int horizon = 32;
  double tol = 1e-9;
  std::string candidate;
  std::uint64_t seed = kDefaultSeed;
};

struct SeqObjects {
  std::vector<long> ints;       // integer-labelled hosts
  std::vector<std::string> strs;  // finite-category hosts
};

SeqObjects decode_seq_objects(const json& p, const std::string& ptr) {
  SeqObjects out;
  if (!p.contains("objects")) return out;
  const auto& arr = p["objects"];
  if (!arr.is_array()) throw InputError("expected an array", ptr + "/objects");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].is_number_integer()) out.ints.push_back(arr[i].get<long>());
    else if (arr[i].is_string()) out.strs.push_back(arr[i].get<std::string>());
    else throw InputError("objects must be integers or strings", ptr + "/objects/" + std::to_string(i));
  }
  return out;
}

long twin_limit_object(const std::string& s) {
  if (s == "L0") return TwinLimitChain::top0;
  if (s == "L1") return TwinLimitChain::top1;
  return std::stol(s);
}

/// Generic command bodies, instantiated per host type.
template <NormedCategory C>
int run_cauchy_check(const Sequence<C>& seq, const CauchyCertificate& cert, const SeqArgs& a,
                     const char* host_name) {
  auto verdict = check_cauchy(seq, cert, a.horizon);
  json out;
  out["command"] = "cauchy-check";
  out["seed"] = a.seed;
  out["host"] = host_name;
  out["horizon"] = a.horizon;
  bool ok = verdict.confirmed();
  out["verdict"] = ok ? "CONFIRMED-UP-TO-HORIZON" : "REFUTED";
  if (verdict.witness) {
    json w;
    w["eps"] = verdict.witness->eps;
    w["m"] = verdict.witness->m;
    w["n"] = verdict.witness->n;
    w["mu"] = io::ext_to_json(verdict.witness->mu);
    out["witness"] = w;
  }
  out["exit"] = exit_code_json(ok ? kPass : kFail);
  print_report(out, "cauchy certificate check", ok);
  return ok ? kPass : kFail;
}

template <NormedCategory C>
int run_colimit_verify(const Sequence<C>& seq, const object_id_t<C>& v,
                       const std::function<arrow_id_t<C>(int)>& cocone, const SeqArgs& a,
                       const char* host_name) {
  auto verdicts = verify_colimit_candidate(seq, v, cocone, a.horizon, a.tol);
  json out;
  out["command"] = "colimit-verify";
  out["seed"] = a.seed;
  out["host"] = host_name;
  out["horizon"] = a.horizon;
  out["tol"] = a.tol;
  out["candidate"] = seq.host().describe_object(v);
  json clauses;
  clauses["C1-COCONE"] = to_string(verdicts.cocone);
  clauses["C1-UNIVERSAL"] = to_string(verdicts.universal);
  clauses["C2"] = to_string(verdicts.c2);
  out["clauses"] = clauses;
  json notes;
  if (!verdicts.cocone_witness.empty()) notes["C1-COCONE"] = verdicts.cocone_witness;
  if (!verdicts.universal_witness.empty()) notes["C1-UNIVERSAL"] = verdicts.universal_witness;
  if (!verdicts.c2_witness.empty()) notes["C2"] = verdicts.c2_witness;
  if (!notes.empty()) out["notes"] = notes;
  bool ok = verdicts.passed();
  out["exit"] = exit_code_json(ok ? kPass : kFail);
  print_report(out, "colimit candidate verification", ok);
  return ok ? kPass : kFail;
}

int cmd_cauchy_check(const SeqArgs& a) {
  auto in = load_inputs(a.files);
  auto* sd = find_kind(in, "sequence_table");
  auto* cd = find_kind(in, "certificate");
  if (!sd || !cd) throw InputError("cauchy-check needs a sequence_table and a certificate document");
  auto cert = io::decode_certificate(cd->payload);
  const json& p = sd->payload;
  const json& host = io::detail::field(p, "host", "/payload");
  std::string type = io::detail::str_field(host, "type", "/payload/host");
  auto objs = decode_seq_objects(p, "/payload");

  if (type == "builtin") {
    std::string name = io::detail::str_field(host, "name", "/payload/host");
    if (name == "parity_chain") {
      if (objs.ints.empty()) throw InputError("parity_chain sequences need integer objects");
      auto xs = objs.ints;
      if (static_cast<int>(xs.size()) <= a.horizon)
        throw InputError("objects array shorter than the horizon");
      ParityChainCategory h;
      Sequence<ParityChainCategory> seq(
          h, [xs](int n) { return xs[static_cast<std::size_t>(n)]; },
          [xs](int n, int m) {
            return std::pair<long, long>{xs[static_cast<std::size_t>(n)],
                                         xs[static_cast<std::size_t>(m)]};
          });
      return run_cauchy_check(seq, cert, a, "parity_chain");
    }
    if (name == "additive_reals") {
      const auto& steps = io::detail::arr_field(p, "steps", "/payload");
      std::vector<double> s;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!steps[i].is_number())
          throw InputError("expected a number", "/payload/steps/" + std::to_string(i));
        s.push_back(steps[i].get<double>());
      }
      if (static_cast<int>(s.size()) < a.horizon)
        throw InputError("steps array shorter than the horizon");
      AdditiveRealCategory h;
      auto seq = sequence_from_steps<AdditiveRealCategory>(
          h, [](int) { return 0; }, [s](int n) { return s[static_cast<std::size_t>(n)]; });
      return run_cauchy_check(seq, cert, a, "additive_reals");
    }
    throw InputError("unknown builtin host '" + name + "'");
  }
  if (type == "finite_category") {
    auto cat = io::decode_normed_category(io::detail::field(host, "category", "/payload/host"),
                                          std::nullopt, "/payload/host/category");
    if (objs.strs.empty()) throw InputError("finite-category sequences need string object labels");
    if (static_cast<int>(objs.strs.size()) <= a.horizon)
      throw InputError("objects array shorter than the horizon");
    const auto& steps = io::detail::arr_field(p, "steps", "/payload");
    std::vector<std::int32_t> step_ids;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (!steps[i].is_string())
        throw InputError("expected an arrow label", "/payload/steps/" + std::to_string(i));
      step_ids.push_back(cat.category().arrow_index(steps[i].get<std::string>()));
    }
    if (static_cast<int>(step_ids.size()) < a.horizon)
      throw InputError("steps array shorter than the horizon");
    std::vector<std::int32_t> obj_ids;
    for (const auto& s : objs.strs) obj_ids.push_back(cat.category().object_index(s));
    auto seq = sequence_from_steps<NormedTableCategory>(
        cat, [obj_ids](int n) { return obj_ids[static_cast<std::size_t>(n)]; },
        [step_ids](int n) { return step_ids[static_cast<std::size_t>(n)]; });
    return run_cauchy_check(seq, cert, a, "finite_category");
  }
  throw InputError("unknown sequence host type '" + type + "'");
}

int cmd_colimit_verify(const SeqArgs& a) {
  auto in = load_inputs(a.files);
  auto* sd = find_kind(in, "sequence_table");
  if (!sd) throw InputError("colimit-verify needs a sequence_table document");
  if (a.candidate.empty()) throw InputError("colimit-verify needs --candidate");
  const json& p = sd->payload;
  const json& host = io::detail::field(p, "host", "/payload");
  std::string type = io::detail::str_field(host, "type", "/payload/host");
  auto objs = decode_seq_objects(p, "/payload");

  if (type == "builtin") {
    std::string name = io::detail::str_field(host, "name", "/payload/host");
    if (name == "twin_limit") {
      if (objs.ints.empty() && objs.strs.empty())
        throw InputError("twin_limit sequences need objects");
      std::vector<long> xs = objs.ints;
      for (const auto& s : objs.strs) xs.push_back(twin_limit_object(s));
      if (static_cast<int>(xs.size()) <= a.horizon)
        throw InputError("objects array shorter than the horizon");
      long v = twin_limit_object(a.candidate);
      TwinLimitChain h;
      Sequence<TwinLimitChain> seq(
          h, [xs](int n) { return xs[static_cast<std::size_t>(n)]; },
          [xs](int n, int m) {
            return std::pair<long, long>{xs[static_cast<std::size_t>(n)],
                                         xs[static_cast<std::size_t>(m)]};
          });
      auto cocone = [xs, v](int n) {
        return std::pair<long, long>{xs[static_cast<std::size_t>(n)], v};
      };
      return run_colimit_verify<TwinLimitChain>(seq, v, cocone, a, "twin_limit");
    }
    if (name == "parity_chain") {
      if (objs.ints.empty()) throw InputError("parity_chain sequences need integer objects");
      auto xs = objs.ints;
      if (static_cast<int>(xs.size()) <= a.horizon)
        throw InputError("objects array shorter than the horizon");
      long v = std::stol(a.candidate);
      ParityChainCategory h;
      Sequence<ParityChainCategory> seq(
          h, [xs](int n) { return xs[static_cast<std::size_t>(n)]; },
          [xs](int n, int m) {
            return std::pair<long, long>{xs[static_cast<std::size_t>(n)],
                                         xs[static_cast<std::size_t>(m)]};
          });
      auto cocone = [xs, v](int n) {
        return std::pair<long, long>{xs[static_cast<std::size_t>(n)], v};
      };
      return run_colimit_verify<ParityChainCategory>(seq, v, cocone, a, "parity_chain");
    }
    throw InputError("unknown builtin host '" + name + "' for colimit-verify");
  }
  if (type == "finite_category") {
    auto cat = io::decode_normed_category(io::detail::field(host, "category", "/payload/host"),
                                          std::nullopt, "/payload/host/category");
    if (objs.strs.empty()) throw InputError("finite-category sequences need string object labels");
    const auto& steps = io::detail::arr_field(p, "steps", "/payload");
    std::vector<std::int32_t> step_ids;
    for (const auto& s : steps) step_ids.push_back(cat.category().arrow_index(s.get<std::string>()));
    const auto& cocone_arr = io::detail::arr_field(p, "cocone", "/payload");
    std::vector<std::int32_t> cocone_ids;
    for (const auto& s : cocone_arr)
      cocone_ids.push_back(cat.category().arrow_index(s.get<std::string>()));
    if (static_cast<int>(cocone_ids.size()) <= a.horizon)
      throw InputError("cocone array shorter than the horizon");
    std::vector<std::int32_t> obj_ids;
    for (const auto& s : objs.strs) obj_ids.push_back(cat.category().object_index(s));
    auto v = cat.category().object_index(a.candidate);
    auto seq = sequence_from_steps<NormedTableCategory>(
        cat, [obj_ids](int n) { return obj_ids[static_cast<std::size_t>(n)]; },
        [step_ids](int n) { return step_ids[static_cast<std::size_t>(n)]; });
    auto cocone = [cocone_ids](int n) { return cocone_ids[static_cast<std::size_t>(n)]; };
    return run_colimit_verify<NormedTableCategory>(seq, v, cocone, a, "finite_category");
  }
  throw InputError("unknown sequence host type '" + type + "'");
}

// --- fixed points -----------------------------------------------------------

struct FixArgs {
  std::string functor;
  std::string start_file;
  double eps = 1.0 / 256.0;
  double tol = -1.0;  // defaults to eps
  int max_iter = 64;
  bool emit_matrix = false;
  std::uint64_t seed = kDefaultSeed;
};

MetricFunctorExpr load_functor(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    auto docs = io::load_documents_file(arg);
    for (const auto& d : docs)
      if (d.kind == "functor_expr")
        return MetricFunctorExpr::parse(io::detail::str_field(d.payload, "expr", "/payload"));
    throw InputError("file '" + arg + "' has no functor_expr document");
  }
  return MetricFunctorExpr::parse(arg);
}

EpPair load_start(const std::string& file, const MetricFunctorExpr& functor) {
  if (file.empty()) return default_seed(functor);
  auto docs = io::load_documents_file(file);
  for (const auto& d : docs)
    if (d.kind == "ep_pair") return io::decode_ep_pair(d.payload);
  throw InputError("file '" + file + "' has no ep_pair document");
}

json approximant_json(const FixedPointResult& res, bool emit_matrix) {
  json out;
  out["points"] = res.approximant.size();
  out["diameter"] = res.approximant.diameter();
  out["colimit_matrix_error"] = res.colimit_matrix_error;
  if (emit_matrix) {
    json pts = json::array();
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(res.approximant.size()); ++i)
      pts.push_back(res.approximant.label(i));
    out["point_ids"] = pts;
    json rows = json::array();
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(res.approximant.size()); ++i) {
      json row = json::array();
      for (std::int32_t j = 0; j < static_cast<std::int32_t>(res.approximant.size()); ++j)
        row.push_back(res.approximant.dist(i, j));
      rows.push_back(row);
    }
    out["dist"] = rows;
  }
  return out;
}

int cmd_fixpoint_solve(const FixArgs& a) {
  auto functor = load_functor(a.functor);
  auto start = load_start(a.start_file, functor);
  EpCategory host;
  auto res = solve_fixed_point(host, functor, start, a.eps, a.max_iter);

  json out;
  out["command"] = "fixpoint-solve";
  out["seed"] = a.seed;
  out["functor"] = functor.str();
  out["eps"] = a.eps;
  out["iterations"] = res.iterations;
  out["residual"] = io::ext_to_json(res.residual);
  out["witness_norm"] = io::ext_to_json(res.witness_norm);
  out["incomplete"] = res.incomplete;
  out["approximant"] = approximant_json(res, a.emit_matrix);
  int code = res.incomplete ? kNoVerdict : kPass;
  out["exit"] = exit_code_json(code);
  print_report(out, "fixed-point solve of " + functor.str(), code == kPass);
  return code;
}

int cmd_fixpoint_verify(const FixArgs& a) {
  auto functor = load_functor(a.functor);
  auto start = load_start(a.start_file, functor);
  EpCategory host;
  auto res = solve_fixed_point(host, functor, start, a.eps, a.max_iter);
  double tol = a.tol > 0 ? a.tol : a.eps;
  auto check = verify_fixed_point(host, functor, res.seed, res.iterations, tol);

  json out;
  out["command"] = "fixpoint-verify";
  out["seed"] = a.seed;
  out["functor"] = functor.str();
  out["eps"] = a.eps;
  out["tol"] = tol;
  out["iterations"] = res.iterations;
  out["residual"] = io::ext_to_json(res.residual);
  out["verified"] = check.verified;
  out["deepest_norm"] = io::ext_to_json(check.deepest_norm);
  if (!check.note.empty()) out["note"] = check.note;
  int code = check.verified && !res.incomplete ? kPass : (res.incomplete ? kNoVerdict : kFail);
  out["exit"] = exit_code_json(code);
  print_report(out, "fixed-point verification of " + functor.str(), code == kPass);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normed categories: audits, quasi-metrics, Cauchy machinery, contraction solving"};
  app.require_subcommand(1);

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "check the norm axioms on an instance");
  audit_cmd->add_option("files", audit_args.files, "input documents")->required();
  audit_cmd->add_option("--tol", audit_args.tol, "inequality slack");
  audit_cmd->add_option("--budget", audit_args.budget, "composable-pair budget");
  audit_cmd->add_option("--jobs", audit_args.jobs, "worker threads for the pair scan");
  audit_cmd->add_option("--seed", audit_args.seed, "seed echoed in the report");
  audit_cmd->add_option("--cap", audit_args.cap, "path-length cap for free categories");

  AuditArgs kernel_args;
  auto* kernel_cmd = app.add_subcommand("kernel", "list the arrows of norm <= tol");
  kernel_cmd->add_option("files", kernel_args.files, "input documents")->required();
  kernel_cmd->add_option("--tol", kernel_args.tol, "kernel threshold");
  kernel_cmd->add_option("--seed", kernel_args.seed, "seed echoed in the report");
  kernel_cmd->add_option("--cap", kernel_args.cap, "path-length cap for free categories");

  QuasiArgs quasi_args;
  auto* quasi_cmd = app.add_subcommand("quasimetric", "induced distance between two objects");
  quasi_cmd->add_option("files", quasi_args.files, "input documents")->required();
  quasi_cmd->add_option("--from", quasi_args.from, "source object")->required();
  quasi_cmd->add_option("--to", quasi_args.to, "target object")->required();
  quasi_cmd->add_option("--seed", quasi_args.seed, "seed echoed in the report");

  FreecatArgs freecat_args;
  auto* freecat_cmd = app.add_subcommand("freecat-norm", "norm of a path in a weighted digraph");
  freecat_cmd->add_option("files", freecat_args.files, "digraph document")->required();
  freecat_cmd->add_option("--steps", freecat_args.steps, "comma-separated arc ids");
  freecat_cmd->add_option("--at", freecat_args.at, "vertex of the empty path");
  freecat_cmd->add_option("--seed", freecat_args.seed, "seed echoed in the report");

  SeqArgs cauchy_args;
  auto* cauchy_cmd = app.add_subcommand("cauchy-check", "check a Cauchy certificate on a sequence");
  cauchy_cmd->add_option("files", cauchy_args.files, "sequence_table + certificate")->required();
  cauchy_cmd->add_option("--horizon", cauchy_args.horizon, "largest index checked");
  cauchy_cmd->add_option("--seed", cauchy_args.seed, "seed echoed in the report");

  SeqArgs colimit_args;
  auto* colimit_cmd = app.add_subcommand("colimit-verify", "verify a limit candidate for a sequence");
  colimit_cmd->add_option("files", colimit_args.files, "sequence_table document")->required();
  colimit_cmd->add_option("--candidate", colimit_args.candidate, "limit object")->required();
  colimit_cmd->add_option("--horizon", colimit_args.horizon, "largest index checked");
  colimit_cmd->add_option("--tol", colimit_args.tol, "cocone-norm tolerance for C2");
  colimit_cmd->add_option("--seed", colimit_args.seed, "seed echoed in the report");

  FixArgs solve_args;
  auto* solve_cmd = app.add_subcommand("fixpoint-solve", "iterate a contraction to a certified residual");
  solve_cmd->add_option("functor", solve_args.functor, "functor expression or functor_expr file")->required();
  solve_cmd->add_option("--eps", solve_args.eps, "target residual");
  solve_cmd->add_option("--start", solve_args.start_file, "ep_pair document for the seed arrow");
  solve_cmd->add_option("--max-iter", solve_args.max_iter, "iteration budget");
  solve_cmd->add_flag("--emit-matrix", solve_args.emit_matrix, "include the approximant matrix");
  solve_cmd->add_option("--seed", solve_args.seed, "seed echoed in the report");

  FixArgs verify_args;
  auto* verify_cmd = app.add_subcommand("fixpoint-verify", "solve, then verify the witness certificate");
  verify_cmd->add_option("functor", verify_args.functor, "functor expression or functor_expr file")->required();
  verify_cmd->add_option("--eps", verify_args.eps, "target residual");
  verify_cmd->add_option("--tol", verify_args.tol, "verification tolerance (default: eps)");
  verify_cmd->add_option("--start", verify_args.start_file, "ep_pair document for the seed arrow");
  verify_cmd->add_option("--max-iter", verify_args.max_iter, "iteration budget");
  verify_cmd->add_option("--seed", verify_args.seed, "seed echoed in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (audit_cmd->parsed()) return cmd_audit(audit_args);
    if (kernel_cmd->parsed()) return cmd_kernel(kernel_args);
    if (quasi_cmd->parsed()) return cmd_quasimetric(quasi_args);
    if (freecat_cmd->parsed()) return cmd_freecat_norm(freecat_args);
    if (cauchy_cmd->parsed()) return cmd_cauchy_check(cauchy_args);
    if (colimit_cmd->parsed()) return cmd_colimit_verify(colimit_args);
    if (solve_cmd->parsed()) return cmd_fixpoint_solve(solve_args);
    if (verify_cmd->parsed()) return cmd_fixpoint_verify(verify_args);
  } catch (const InputError& e) {
    json err;
    err["command"] = app.get_subcommands().empty() ? "?" : app.get_subcommands()[0]->get_name();
    err["error"] = json{{"message", e.what()}, {"where", e.where()}};
    err["exit"] = exit_code_json(kInputError);
    print_report(err, std::string("input error: ") + e.what(), false);
    return kInputError;
  }
  return kInputError;
}
