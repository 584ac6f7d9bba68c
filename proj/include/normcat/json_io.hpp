#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "normcat/cauchy.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"
#include "normcat/fincat.hpp"
#include "normcat/freecat.hpp"
#include "normcat/metcat.hpp"
#include "normcat/report.hpp"

namespace normcat::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic rendering
// ---------------------------------------------------------------------------

/// 17 significant digits, enough to round-trip any double; reports must be
/// byte-identical across runs and job counts, so all floats go through here.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline json ext_to_json(ExtReal v) {
  if (v.is_inf()) return json("inf");
  return json(v.raw());
}

inline ExtReal ext_from_json(const json& j, const std::string& ptr) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtReal::infinity();
    throw InputError("expected a number or \"inf\"", ptr);
  }
  if (!j.is_number()) throw InputError("expected a number or \"inf\"", ptr);
  double v = j.get<double>();
  if (!(v >= 0.0) || !std::isfinite(v)) throw InputError("norm values must be finite and >= 0", ptr);
  return ExtReal(v);
}

namespace detail {
inline void dump_rec(const json& j, std::string& out, int indent, int depth) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(indent * d), ' '); };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        pad(depth + 1);
        out += json(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      pad(depth);
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        pad(depth + 1);
        dump_rec(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      pad(depth);
      out += "]";
      return;
    }
    case json::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}
}  // namespace detail

inline std::string dump_deterministic(const json& j, int indent = 2) {
  std::string out;
  detail::dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Document envelope
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& document_kinds() {
  static const std::vector<std::string> kinds{
      "finite_category", "norm_table", "digraph",        "metric_space", "lipschitz_map",
      "ep_pair",         "sequence_table", "certificate", "functor_expr"};
  return kinds;
}

struct Document {
  std::string kind;
  std::string version;
  json payload;
};

inline Document decode_document(const json& j, const std::string& ptr = "") {
  if (!j.is_object()) throw InputError("document must be a JSON object", ptr);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw InputError("missing string field", ptr + "/kind");
  std::string kind = j["kind"].get<std::string>();
  bool known = false;
  for (const auto& k : document_kinds()) known = known || k == kind;
  if (!known) throw InputError("unknown document kind '" + kind + "'", ptr + "/kind");
  std::string version = "1";
  if (j.contains("version")) {
    if (!j["version"].is_string()) throw InputError("version must be a string", ptr + "/version");
    version = j["version"].get<std::string>();
    if (version != "1") throw InputError("unsupported schema version '" + version + "'", ptr + "/version");
  }
  if (!j.contains("payload") || !j["payload"].is_object())
    throw InputError("missing object field", ptr + "/payload");
  return {kind, version, j["payload"]};
}

/// Loads one document, or a JSON array of documents, from a file;
/// "-" reads standard input.
inline std::vector<Document> load_documents_file(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot read file '" + path + "'");
      in >> j;
    }
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  std::vector<Document> docs;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      docs.push_back(decode_document(j[i], "/" + std::to_string(i)));
  } else {
    docs.push_back(decode_document(j));
  }
  return docs;
}

// ---------------------------------------------------------------------------
// Field helpers (all errors carry a JSON pointer)
// ---------------------------------------------------------------------------

namespace detail {
inline const json& field(const json& j, const std::string& name, const std::string& ptr) {
  if (!j.contains(name)) throw InputError("missing field", ptr + "/" + name);
  return j[name];
}
inline std::string str_field(const json& j, const std::string& name, const std::string& ptr) {
  const json& f = field(j, name, ptr);
  if (!f.is_string()) throw InputError("expected a string", ptr + "/" + name);
  return f.get<std::string>();
}
inline double num_field(const json& j, const std::string& name, const std::string& ptr) {
  const json& f = field(j, name, ptr);
  if (!f.is_number()) throw InputError("expected a number", ptr + "/" + name);
  return f.get<double>();
}
inline const json& arr_field(const json& j, const std::string& name, const std::string& ptr) {
  const json& f = field(j, name, ptr);
  if (!f.is_array()) throw InputError("expected an array", ptr + "/" + name);
  return f;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Decoders per document kind
// ---------------------------------------------------------------------------

inline FiniteCategoryData decode_finite_category(const json& p, const std::string& ptr = "/payload") {
  using detail::arr_field;
  using detail::str_field;
  FiniteCategoryData d;
  for (const auto& o : arr_field(p, "objects", ptr)) {
    if (!o.is_string()) throw InputError("object ids must be strings", ptr + "/objects");
    d.objects.push_back(o.get<std::string>());
  }
  const auto& arrows = arr_field(p, "arrows", ptr);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string ap = ptr + "/arrows/" + std::to_string(i);
    d.arrows.push_back({str_field(arrows[i], "id", ap), str_field(arrows[i], "dom", ap),
                        str_field(arrows[i], "cod", ap)});
  }
  const auto& ids = detail::field(p, "identities", ptr);
  if (!ids.is_object()) throw InputError("expected an object", ptr + "/identities");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    if (!it.value().is_string()) throw InputError("expected a string", ptr + "/identities/" + it.key());
    d.identities[it.key()] = it.value().get<std::string>();
  }
  const auto& comp = arr_field(p, "compose", ptr);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    std::string cp = ptr + "/compose/" + std::to_string(i);
    d.compose[{str_field(comp[i], "f", cp), str_field(comp[i], "g", cp)}] =
        str_field(comp[i], "to", cp);
  }
  return d;
}

inline std::map<std::string, ExtReal> decode_norm_values(const json& p, const std::string& ptr) {
  const auto& values = detail::field(p, "values", ptr);
  if (!values.is_object()) throw InputError("expected an object", ptr + "/values");
  std::map<std::string, ExtReal> out;
  for (auto it = values.begin(); it != values.end(); ++it)
    out[it.key()] = ext_from_json(it.value(), ptr + "/values/" + it.key());
  return out;
}

/// finite_category payload with an embedded or separately supplied norm.
inline NormedTableCategory decode_normed_category(const json& p,
                                                  const std::optional<json>& norm_doc,
                                                  const std::string& ptr = "/payload") {
  FiniteCategory cat(decode_finite_category(p, ptr));
  std::map<std::string, ExtReal> values;
  if (norm_doc) {
    values = decode_norm_values(*norm_doc, "/payload");
  } else if (p.contains("norm")) {
    const auto& norm = p["norm"];
    if (!norm.is_object()) throw InputError("expected an object", ptr + "/norm");
    for (auto it = norm.begin(); it != norm.end(); ++it)
      values[it.key()] = ext_from_json(it.value(), ptr + "/norm/" + it.key());
  } else {
    throw InputError("no norm table supplied for the category", ptr);
  }
  NormTable table(cat, values);
  return NormedTableCategory(std::move(cat), std::move(table));
}

inline WeightedDigraph decode_digraph(const json& p, const std::string& ptr = "/payload") {
  using detail::arr_field;
  using detail::str_field;
  std::vector<std::string> vertices;
  for (const auto& v : arr_field(p, "vertices", ptr)) {
    if (!v.is_string()) throw InputError("vertex ids must be strings", ptr + "/vertices");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<WeightedDigraph::Arc> arcs;
  const auto& arrows = arr_field(p, "arrows", ptr);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string ap = ptr + "/arrows/" + std::to_string(i);
    double w = detail::num_field(arrows[i], "w", ap);
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InputError("weights must be finite and nonnegative", ap + "/w");
    arcs.push_back({str_field(arrows[i], "id", ap), str_field(arrows[i], "dom", ap),
                    str_field(arrows[i], "cod", ap), w});
  }
  return WeightedDigraph(std::move(vertices), std::move(arcs));
}

inline FiniteMetricSpace decode_metric_space(const json& p, const std::string& ptr = "/payload") {
  using detail::arr_field;
  std::vector<std::string> points;
  for (const auto& q : arr_field(p, "points", ptr)) {
    if (!q.is_string()) throw InputError("point ids must be strings", ptr + "/points");
    points.push_back(q.get<std::string>());
  }
  const auto& dist = arr_field(p, "dist", ptr);
  std::vector<std::vector<double>> d;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!dist[i].is_array()) throw InputError("expected a row array", ptr + "/dist/" + std::to_string(i));
    std::vector<double> row;
    for (std::size_t j = 0; j < dist[i].size(); ++j) {
      const auto& cell = dist[i][j];
      if (!cell.is_number())
        throw InputError("expected a number", ptr + "/dist/" + std::to_string(i) + "/" + std::to_string(j));
      row.push_back(cell.get<double>());
    }
    d.push_back(std::move(row));
  }
  try {
    return FiniteMetricSpace(std::move(points), std::move(d));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid metric space: ") + e.what(), ptr);
  }
}

/// Pseudo-metric variant: +inf entries allowed, triangle left to the audit.
inline PseudometricCategory decode_pseudometric(const json& p, const std::string& ptr = "/payload") {
  using detail::arr_field;
  std::vector<std::string> points;
  for (const auto& q : arr_field(p, "points", ptr)) {
    if (!q.is_string()) throw InputError("point ids must be strings", ptr + "/points");
    points.push_back(q.get<std::string>());
  }
  const auto& dist = arr_field(p, "dist", ptr);
  std::vector<std::vector<ExtReal>> d;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!dist[i].is_array()) throw InputError("expected a row array", ptr + "/dist/" + std::to_string(i));
    std::vector<ExtReal> row;
    for (std::size_t j = 0; j < dist[i].size(); ++j)
      row.push_back(ext_from_json(dist[i][j],
                                  ptr + "/dist/" + std::to_string(i) + "/" + std::to_string(j)));
    d.push_back(std::move(row));
  }
  return PseudometricCategory(std::move(points), std::move(d));
}

inline LipschitzMap decode_lipschitz_map(const json& p, const std::string& ptr = "/payload") {
  auto src = decode_metric_space(detail::field(p, "source", ptr), ptr + "/source");
  auto tgt = decode_metric_space(detail::field(p, "target", ptr), ptr + "/target");
  const auto& assign = detail::field(p, "assign", ptr);
  if (!assign.is_object()) throw InputError("expected an object", ptr + "/assign");
  std::vector<std::int32_t> a(src.size(), -1);
  for (auto it = assign.begin(); it != assign.end(); ++it) {
    if (!it.value().is_string()) throw InputError("expected a string", ptr + "/assign/" + it.key());
    a[static_cast<std::size_t>(src.index(it.key()))] = tgt.index(it.value().get<std::string>());
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0)
      throw InputError("assignment missing for point '" + src.label(static_cast<std::int32_t>(i)) + "'",
                       ptr + "/assign");
  return LipschitzMap(std::move(src), std::move(tgt), std::move(a));
}

inline EpPair decode_ep_pair(const json& p, const std::string& ptr = "/payload") {
  auto src = decode_metric_space(detail::field(p, "source", ptr), ptr + "/source");
  auto tgt = decode_metric_space(detail::field(p, "target", ptr), ptr + "/target");
  auto decode_assign = [&](const char* name, const FiniteMetricSpace& from,
                           const FiniteMetricSpace& to) {
    const auto& assign = detail::field(p, name, ptr);
    if (!assign.is_object()) throw InputError("expected an object", ptr + "/" + name);
    std::vector<std::int32_t> a(from.size(), -1);
    for (auto it = assign.begin(); it != assign.end(); ++it) {
      if (!it.value().is_string())
        throw InputError("expected a string", ptr + "/" + std::string(name) + "/" + it.key());
      a[static_cast<std::size_t>(from.index(it.key()))] = to.index(it.value().get<std::string>());
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0)
        throw InputError("assignment missing for point '" + from.label(static_cast<std::int32_t>(i)) + "'",
                         ptr + "/" + name);
    return a;
  };
  auto e = decode_assign("embed", src, tgt);
  auto q = decode_assign("project", tgt, src);
  try {
    return EpPair(std::move(src), std::move(tgt), std::move(e), std::move(q));
  } catch (const InputError& err) {
    throw InputError(std::string("invalid embedding-projection pair: ") + err.what(), ptr);
  }
}

inline CauchyCertificate decode_certificate(const json& p, const std::string& ptr = "/payload") {
  const auto& rows = detail::arr_field(p, "rows", ptr);
  std::vector<std::pair<double, int>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string rp = ptr + "/rows/" + std::to_string(i);
    double eps = detail::num_field(rows[i], "eps", rp);
    double n = detail::num_field(rows[i], "n", rp);
    out.push_back({eps, static_cast<int>(n)});
  }
  try {
    return CauchyCertificate(std::move(out));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid certificate: ") + e.what(), ptr);
  }
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

inline json report_to_json(const AuditReport& rep) {
  static const Tag order[] = {Tag::CatLaws, Tag::MC1, Tag::MC2, Tag::MC3, Tag::MCFull,
                              Tag::K1,      Tag::K2,  Tag::N1,  Tag::N2,  Tag::N3,
                              Tag::Q1,      Tag::Q2,  Tag::FunctorLaws, Tag::Contraction,
                              Tag::NonExpansive};
  json out;
  out["tolerance"] = rep.tolerance;
  json tags = json::array();
  for (Tag t : order) {
    if (!rep.has(t)) continue;
    const TagResult& r = rep.results.at(t);
    json tj;
    tj["tag"] = to_string(t);
    tj["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) tj["note"] = r.note;
    if (!r.counterexamples.empty()) {
      json ces = json::array();
      for (const auto& ce : r.counterexamples) {
        json cj;
        cj["witness"] = ce.witness;
        cj["lhs"] = ext_to_json(ce.lhs);
        cj["rhs"] = ext_to_json(ce.rhs);
        if (!ce.values.empty()) {
          json vals;
          for (const auto& [name, v] : ce.values) vals[name] = ext_to_json(v);
          cj["values"] = vals;
        }
        if (ce.delta_warned) cj["delta_warning"] = true;
        ces.push_back(cj);
      }
      tj["counterexamples"] = ces;
    }
    tags.push_back(tj);
  }
  out["tags"] = tags;
  out["passed"] = rep.passed();
  if (!rep.warnings.empty()) out["warnings"] = rep.warnings;
  return out;
}

}  // namespace normcat::io
