#include <catch2/catch.hpp>

#include "normcat/audit.hpp"
#include "normcat/cauchy.hpp"
#include "normcat/fincat.hpp"
#include "normcat/freecat.hpp"

#include "support/generators.hpp"

using namespace normcat;

namespace {

NormedTableCategory one_object_identity_only() {
  FiniteCategoryData d;
  d.objects = {"*"};
  d.arrows = {{"id", "*", "*"}};
  d.identities["*"] = "id";
  d.compose[{"id", "id"}] = "id";
  FiniteCategory cat(d);
  NormTable table(cat, {{"id", ExtReal::zero()}});
  return NormedTableCategory(std::move(cat), std::move(table));
}

QuasiOrderCategory nat_even_odd_window(int n) {
  return QuasiOrderCategory(
      n, [](int a, int b) { return a <= b; },
      [](int a, int b) {
        if (a == b || a % 2 == 0) return ExtReal::zero();
        return ExtReal::infinity();
      });
}

}  // namespace

TEST_CASE("a one-object identity category passes every tag") {
  auto rep = audit_norm(one_object_identity_only());
  for (Tag t : {Tag::CatLaws, Tag::MC1, Tag::MC2, Tag::MC3, Tag::MCFull})
    CHECK(rep.verdict(t) == Verdict::Pass);
  CHECK(rep.passed());
}

TEST_CASE("the even/odd window on 0..6 satisfies the norm axioms") {
  auto cat = nat_even_odd_window(7);
  auto rep = audit_norm(cat);
  CHECK(rep.verdict(Tag::MC1) == Verdict::Pass);
  CHECK(rep.verdict(Tag::MC2) == Verdict::Pass);
  CHECK(rep.verdict(Tag::MC3) == Verdict::Pass);
  CHECK(rep.passed());

  // independent brute force over all composable pairs in the window
  auto mu = [](int a, int b) {
    return (a == b || a % 2 == 0) ? ExtReal::zero() : ExtReal::infinity();
  };
  for (int x = 0; x < 7; ++x)
    for (int y = x; y < 7; ++y)
      for (int z = y; z < 7; ++z) {
        CHECK(leq_with_tol(mu(x, z), mu(y, z) + mu(x, y), 0.0));  // MC2
        CHECK(leq_with_tol(mu(x, y), mu(x, z) + mu(y, z), 0.0));  // MC3
      }
}

TEST_CASE("a planted associativity defect fails CAT-LAWS and aborts the norm tags") {
  // Z_3 with a*b corrupted: (a*a)*b = b*b = a while a*(a*b) = a*a = b
  FiniteCategoryData d;
  d.objects = {"*"};
  d.arrows = {{"e", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}};
  d.identities["*"] = "e";
  auto set = [&](const char* f, const char* g, const char* to) { d.compose[{f, g}] = to; };
  set("e", "e", "e"); set("e", "a", "a"); set("e", "b", "b");
  set("a", "e", "a"); set("a", "a", "b"); set("a", "b", "a");  // should be "e"
  set("b", "e", "b"); set("b", "a", "e"); set("b", "b", "a");
  FiniteCategory cat(d);
  NormTable table(cat, {{"e", ExtReal::zero()}, {"a", ExtReal(1.0)}, {"b", ExtReal(1.0)}});
  auto rep = audit_norm(NormedTableCategory(std::move(cat), std::move(table)));
  CHECK(rep.verdict(Tag::CatLaws) == Verdict::Fail);
  CHECK(rep.verdict(Tag::MC2) == Verdict::Skipped);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("MCFULL is diagnostic only") {
  // discrete norm from the monics of the coequalizer shape fails MCFULL
  FiniteCategoryData d;
  d.objects = {"x", "y", "z"};
  d.arrows = {{"ix", "x", "x"}, {"iy", "y", "y"}, {"iz", "z", "z"},
              {"g1", "x", "y"}, {"g2", "x", "y"}, {"f", "y", "z"},  {"c", "x", "z"}};
  d.identities = {{"x", "ix"}, {"y", "iy"}, {"z", "iz"}};
  auto set = [&](const char* f, const char* g, const char* to) { d.compose[{f, g}] = to; };
  set("ix", "ix", "ix"); set("iy", "iy", "iy"); set("iz", "iz", "iz");
  set("g1", "ix", "g1"); set("iy", "g1", "g1");
  set("g2", "ix", "g2"); set("iy", "g2", "g2");
  set("f", "iy", "f"); set("iz", "f", "f");
  set("c", "ix", "c"); set("iz", "c", "c");
  set("f", "g1", "c"); set("f", "g2", "c");
  FiniteCategory cat(d);
  auto monics = monic_arrows(cat);
  auto norm = discrete_norm(cat, monics);
  auto rep = audit_norm(NormedTableCategory(cat, norm));
  CHECK(rep.passed());
  CHECK(rep.verdict(Tag::MCFull) == Verdict::Fail);
}

TEST_CASE("zero-isomorphism search on enumerable hosts") {
  auto cat = nat_even_odd_window(5);
  SECTION("an identity is its own inverse") {
    auto z = is_zero_isomorphism(cat, cat.identity(3), 1e-9);
    REQUIRE(z.outcome == ZeroIsoResult<QuasiOrderCategory>::Outcome::Yes);
    CHECK(*z.inverse == cat.identity(3));
    CHECK_FALSE(z.norm_asymmetry);
  }
  SECTION("a one-way order arrow is no isomorphism") {
    auto z = is_zero_isomorphism(cat, {0, 1}, 1e-9);
    CHECK(z.outcome == ZeroIsoResult<QuasiOrderCategory>::Outcome::No);
    CHECK_FALSE(z.inverse.has_value());
  }
}

TEST_CASE("twin-limit tops are isomorphic but not 0-isomorphic") {
  TwinLimitChain cat;
  std::pair<long, long> l01{TwinLimitChain::top0, TwinLimitChain::top1};
  auto z = is_zero_isomorphism(cat, l01, 1e-9);
  CHECK(z.outcome == ZeroIsoResult<TwinLimitChain>::Outcome::No);
  REQUIRE(z.inverse.has_value());  // the inverse exists, the norm is the obstruction
  CHECK(cat.norm(l01).is_inf());
  CHECK_FALSE(z.norm_asymmetry);  // both directions cost inf: equal norms, no asymmetry
}

TEST_CASE("free categories leave non-identity inverses undecidable under a cap") {
  WeightedDigraph g({"x", "y"}, {{"a", "x", "y", 1.0}, {"b", "y", "x", 1.0}});
  FreeCategoryView view(g, 4);
  PathArrow step{view.digraph().vertex_index("x"),
                 {view.digraph().arc_index("a")},
                 view.digraph().vertex_index("y")};
  auto z = is_zero_isomorphism(view, step, 1e-9);
  CHECK(z.outcome == ZeroIsoResult<FreeCategoryView>::Outcome::Undecidable);
}

TEST_CASE("induced quasi-metric basics") {
  SECTION("parallel arrows take the infimum") {
    FiniteCategoryData d;
    d.objects = {"a", "b"};
    d.arrows = {{"ia", "a", "a"}, {"ib", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}};
    d.identities = {{"a", "ia"}, {"b", "ib"}};
    auto set = [&](const char* f, const char* g, const char* to) { d.compose[{f, g}] = to; };
    set("ia", "ia", "ia"); set("ib", "ib", "ib");
    set("f", "ia", "f"); set("ib", "f", "f");
    set("g", "ia", "g"); set("ib", "g", "g");
    FiniteCategory cat(d);
    NormTable t(cat, {{"ia", ExtReal::zero()}, {"ib", ExtReal::zero()},
                      {"f", ExtReal(3.0)}, {"g", ExtReal(1.0)}});
    NormedTableCategory nc(cat, t);
    auto q = induced_quasimetric(nc, nc.category().object_index("a"),
                                 nc.category().object_index("b"));
    CHECK(q.value.raw() == 1.0);
    CHECK(q.exact);
    auto none = induced_quasimetric(nc, nc.category().object_index("b"),
                                    nc.category().object_index("a"));
    CHECK(none.value.is_inf());
  }
  SECTION("the identity witnesses rho(x,x) = 0") {
    auto cat = nat_even_odd_window(4);
    auto q = induced_quasimetric(cat, 1, 1);
    CHECK(q.value == ExtReal::zero());
  }
}

TEST_CASE("quasi-metric axioms hold on audited hosts") {
  testgen::Rng rng(7001);
  for (int trial = 0; trial < 20; ++trial) {
    auto cat = testgen::random_cluster_category(rng);
    REQUIRE(audit_norm(cat).passed());
    auto q = check_induced_quasimetric(cat, 1e-9);
    CHECK(q.verdict(Tag::Q1) == Verdict::Pass);
    CHECK(q.verdict(Tag::Q2) == Verdict::Pass);
  }
}

TEST_CASE("budget exhaustion downgrades to SKIPPED, never flips FAIL to PASS") {
  // a 3-point space violating the triangle inequality
  PseudometricCategory bad({"a", "b", "c"},
                           {{ExtReal::zero(), ExtReal(1.0), ExtReal(5.0)},
                            {ExtReal(1.0), ExtReal::zero(), ExtReal(2.0)},
                            {ExtReal(5.0), ExtReal(2.0), ExtReal::zero()}});
  bool failed_once = false;
  for (std::uint64_t budget : {4ull, 16ull, 64ull, 256ull, 4096ull}) {
    AuditOptions opts;
    opts.budget = budget;
    auto rep = audit_norm(bad, opts);
    auto v = rep.verdict(Tag::MC2);
    if (failed_once) CHECK(v == Verdict::Fail);  // more budget can only keep the failure
    if (v == Verdict::Fail) failed_once = true;
    CHECK((v == Verdict::Fail || v == Verdict::Skipped || v == Verdict::Pass));
  }
  CHECK(failed_once);
  AuditOptions full;
  auto rep = audit_norm(bad, full);
  CHECK(rep.verdict(Tag::MC2) == Verdict::Fail);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("the parallel pair scan reports identically for any job count") {
  // a 14-point line with one bumped distance: 14^3 composable pairs push
  // the scan over the threading threshold and strew MC2 failures around
  const int n = 14;
  std::vector<std::string> pts;
  std::vector<std::vector<ExtReal>> rho(n, std::vector<ExtReal>(n));
  for (int i = 0; i < n; ++i) {
    pts.push_back("p" + std::to_string(i));
    for (int j = 0; j < n; ++j) rho[i][j] = ExtReal(std::abs(i - j) * 0.25);
  }
  rho[0][n - 1] = rho[n - 1][0] = ExtReal(100.0);
  PseudometricCategory cat(pts, rho);
  AuditOptions a1, a4;
  a1.jobs = 1;
  a4.jobs = 4;
  auto r1 = audit_norm(cat, a1);
  auto r4 = audit_norm(cat, a4);
  CHECK_FALSE(r1.passed());
  REQUIRE(r1.results.size() == r4.results.size());
  for (const auto& [tag, res] : r1.results) {
    const auto& other = r4.results.at(tag);
    CHECK(res.verdict == other.verdict);
    REQUIRE(res.counterexamples.size() == other.counterexamples.size());
    for (std::size_t i = 0; i < res.counterexamples.size(); ++i)
      CHECK(res.counterexamples[i].witness == other.counterexamples[i].witness);
  }
}

TEST_CASE("kernel views satisfy K1 and K2 on audited categories") {
  testgen::Rng rng(411);
  for (int trial = 0; trial < 10; ++trial) {
    auto cat = testgen::random_cluster_category(rng);
    REQUIRE(audit_norm(cat).passed());
    auto k = kernel(cat, 1e-9);
    auto rep = check_kernel_axioms(
        cat, std::function<bool(const PseudometricCategory::arrow_id&)>(
                 [&](const PseudometricCategory::arrow_id& f) { return k.contains(f); }));
    CHECK(rep.verdict(Tag::K1) == Verdict::Pass);
    CHECK(rep.verdict(Tag::K2) == Verdict::Pass);
  }
}
