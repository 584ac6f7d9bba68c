#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>

#include "normcat/audit.hpp"
#include "normcat/json_io.hpp"

using namespace normcat;
using io::json;

namespace {

json metric_space_doc(std::vector<std::string> pts, std::vector<std::vector<double>> d) {
  json j;
  j["kind"] = "metric_space";
  j["version"] = "1";
  json p;
  p["points"] = pts;
  p["dist"] = d;
  j["payload"] = p;
  return j;
}

}  // namespace

TEST_CASE("document envelopes") {
  auto ok = io::decode_document(metric_space_doc({"a"}, {{0.0}}));
  CHECK(ok.kind == "metric_space");

  json bad = metric_space_doc({"a"}, {{0.0}});
  bad["kind"] = "polylogarithm";
  CHECK_THROWS_AS(io::decode_document(bad), InputError);

  json badver = metric_space_doc({"a"}, {{0.0}});
  badver["version"] = "7";
  CHECK_THROWS_AS(io::decode_document(badver), InputError);
}

TEST_CASE("digraph schema violations carry their JSON pointer") {
  json p;
  p["vertices"] = json::array({"a", "b"});
  json arrows = json::array();
  for (int i = 0; i < 3; ++i)
    arrows.push_back(json{{"id", "e" + std::to_string(i)}, {"dom", "a"}, {"cod", "b"}, {"w", 1.0}});
  arrows.push_back(json{{"id", "e3"}, {"dom", "a"}, {"cod", "b"}, {"w", -2.0}});
  p["arrows"] = arrows;
  try {
    io::decode_digraph(p);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.where() == "/payload/arrows/3/w");
  }
}

TEST_CASE("a triangle-violating metric space loads for auditing and then fails") {
  json j = metric_space_doc({"a", "b", "c"},
                            {{0.0, 1.0, 5.0}, {1.0, 0.0, 2.0}, {5.0, 2.0, 0.0}});
  // strict decoding rejects it
  CHECK_THROWS_AS(io::decode_metric_space(j["payload"]), InputError);
  // the audit route loads it and the verdict carries the violation
  auto cat = io::decode_pseudometric(j["payload"]);
  auto rep = audit_norm(cat);
  CHECK_FALSE(rep.passed());
  CHECK(rep.verdict(Tag::MC2) == Verdict::Fail);
}

TEST_CASE("norm values round-trip through \"inf\"") {
  CHECK(io::ext_to_json(ExtReal::infinity()) == json("inf"));
  CHECK(io::ext_from_json(json("inf"), "/x").is_inf());
  CHECK(io::ext_from_json(json(2.5), "/x").raw() == 2.5);
  CHECK_THROWS_AS(io::ext_from_json(json("wat"), "/x"), InputError);
  CHECK_THROWS_AS(io::ext_from_json(json(-1.0), "/x"), InputError);
}

TEST_CASE("deterministic dumps") {
  json j;
  j["b_first"] = 1.0 / 3.0;
  j["a_second"] = json::array({json("inf"), json(2.0), json(0.1)});
  auto s1 = io::dump_deterministic(j);
  auto s2 = io::dump_deterministic(j);
  CHECK(s1 == s2);
  CHECK(s1.find("0.33333333333333331") != std::string::npos);
  CHECK(s1.find("\"b_first\"") < s1.find("\"a_second\""));  // insertion order, not sorted
}

TEST_CASE("finite categories decode with embedded norms") {
  json p;
  p["objects"] = json::array({"x"});
  p["arrows"] = json::array({json{{"id", "ix"}, {"dom", "x"}, {"cod", "x"}}});
  p["identities"] = json{{"x", "ix"}};
  p["compose"] = json::array({json{{"f", "ix"}, {"g", "ix"}, {"to", "ix"}}});
  p["norm"] = json{{"ix", 0.0}};
  auto cat = io::decode_normed_category(p, std::nullopt);
  CHECK(audit_norm(cat).passed());

  SECTION("a missing norm is an input error") {
    json q = p;
    q.erase("norm");
    CHECK_THROWS_AS(io::decode_normed_category(q, std::nullopt), InputError);
  }
}

TEST_CASE("certificates decode and validate") {
  json p;
  p["rows"] = json::array({json{{"eps", 1.0}, {"n", 0}}, json{{"eps", 0.5}, {"n", 3}}});
  auto cert = io::decode_certificate(p);
  CHECK(cert.rows.size() == 2);

  json bad;
  bad["rows"] = json::array({json{{"eps", 0.5}, {"n", 3}}, json{{"eps", 1.0}, {"n", 0}}});
  CHECK_THROWS_AS(io::decode_certificate(bad), InputError);
}

TEST_CASE("a schema ships for every document kind") {
  namespace fs = std::filesystem;
  fs::path schemas = fs::path(__FILE__).parent_path().parent_path() / "schemas";
  for (const auto& kind : io::document_kinds()) {
    fs::path file = schemas / (kind + ".schema.json");
    REQUIRE(fs::exists(file));
    std::ifstream in(file);
    json j;
    in >> j;
    CHECK(j["properties"]["kind"]["const"] == kind);
  }
}

TEST_CASE("audit reports render with stable tag order") {
  PseudometricCategory bad({"a", "b", "c"},
                           {{ExtReal::zero(), ExtReal(1.0), ExtReal(5.0)},
                            {ExtReal(1.0), ExtReal::zero(), ExtReal(2.0)},
                            {ExtReal(5.0), ExtReal(2.0), ExtReal::zero()}});
  auto rep = audit_norm(bad);
  auto j1 = io::report_to_json(rep);
  auto j2 = io::report_to_json(audit_norm(bad));
  CHECK(io::dump_deterministic(j1) == io::dump_deterministic(j2));
  CHECK(j1["tags"][0]["tag"] == "CAT-LAWS");
  CHECK(j1["passed"] == false);
}
