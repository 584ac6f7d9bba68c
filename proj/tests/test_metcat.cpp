#include <catch2/catch.hpp>

#include <cmath>

#include "normcat/audit.hpp"
#include "normcat/metcat.hpp"

#include "support/generators.hpp"

using namespace normcat;

namespace {

FiniteMetricSpace one_point() { return FiniteMetricSpace({"x"}, {{0.0}}); }
FiniteMetricSpace pair_space(const std::string& a, const std::string& b, double d) {
  return FiniteMetricSpace({a, b}, {{0.0, d}, {d, 0.0}});
}

/// The distortion fixture: a point, a unit pair, and a stretched pair.
std::vector<FiniteMetricSpace> distortion_spaces(double r) {
  return {one_point(), pair_space("x", "y", 1.0), pair_space("x", "z", r)};
}

}  // namespace

TEST_CASE("metric space validation") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{0.0, 1.0}, {2.0, 0.0}}), InputError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{0.0, 0.0}, {0.0, 0.0}}), InputError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"},
                                    {{0.0, 1.0, 5.0}, {1.0, 0.0, 2.0}, {5.0, 2.0, 0.0}}),
                  InputError);
  CHECK_NOTHROW(FiniteMetricSpace({"a", "b", "c"},
                                  {{0.0, 1.0, 2.0}, {1.0, 0.0, 2.0}, {2.0, 2.0, 0.0}}));
}

TEST_CASE("Lipschitz constants") {
  auto unit = pair_space("x", "y", 1.0);
  auto wide = pair_space("x", "z", 2.0);

  SECTION("identity has constant 1 on two or more points") {
    LipschitzMap id(unit, unit, {0, 1});
    CHECK(lip_constant(id).raw() == 1.0);
  }
  SECTION("the stretching bijection has constant 2") {
    LipschitzMap h(unit, wide, {0, 1});
    CHECK(lip_constant(h).raw() == 2.0);
    CHECK(inverse_lip_constant(h).raw() == 0.5);
  }
  SECTION("constant maps have constant 0") {
    auto tri = FiniteMetricSpace({"a", "b", "c"},
                                 {{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
    LipschitzMap con(tri, unit, {0, 0, 0});
    CHECK(lip_constant(con) == ExtReal::zero());
    CHECK(inverse_lip_constant(con).is_inf());
  }
}

TEST_CASE("the Lipschitz norm") {
  auto unit = pair_space("x", "y", 1.0);
  auto wide = pair_space("x", "z", 2.0);

  SECTION("isometric embeddings sit exactly at zero") {
    LipschitzMap id(unit, unit, {0, 1});
    CHECK(lipschitz_norm(id) == ExtReal::zero());
    LipschitzMap swap(unit, unit, {1, 0});
    CHECK(lipschitz_norm(swap) == ExtReal::zero());
    CHECK(is_isometric_embedding(swap));
  }
  SECTION("the stretch costs log 2") {
    LipschitzMap h(unit, wide, {0, 1});
    CHECK(lipschitz_norm(h).raw() == Approx(std::log(2.0)).margin(1e-15));
  }
  SECTION("non-injective maps cost infinity") {
    LipschitzMap con(unit, wide, {0, 0});
    CHECK(lipschitz_norm(con).is_inf());
  }
  SECTION("a one-point domain leaves both sups empty") {
    LipschitzMap pt(one_point(), wide, {1});
    CHECK(lipschitz_norm(pt) == ExtReal::zero());
  }
}

TEST_CASE("Lipschitz norm satisfies the triangle axioms on random triples") {
  testgen::Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    auto X = testgen::random_metric_space(rng, 6);
    auto Y = testgen::random_metric_space(rng, 6);
    auto Z = testgen::random_metric_space(rng, 6);
    auto g = testgen::random_map(rng, X, Y);
    auto f = testgen::random_map(rng, Y, Z);
    auto fg = compose_maps(f, g);
    ExtReal nf = lipschitz_norm(f), ng = lipschitz_norm(g), nfg = lipschitz_norm(fg);
    CHECK(leq_with_tol(nfg, nf + ng, 1e-9));
    CHECK(leq_with_tol(ng, nfg + nf, 1e-9));
  }
}

TEST_CASE("bijective isometries have symmetric norms") {
  testgen::Rng rng(31338);
  for (int trial = 0; trial < 60; ++trial) {
    auto X = testgen::random_metric_space(rng, 5, 2);
    // random permutation as target relabeling: X -> X shuffled
    std::vector<std::int32_t> perm(X.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::int32_t>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    LipschitzMap h(X, X, perm);
    if (!is_injective(h)) continue;
    std::vector<std::int32_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] =
        static_cast<std::int32_t>(i);
    LipschitzMap hinv(X, X, inv);
    auto d = abs_delta(lipschitz_norm(h), lipschitz_norm(hinv));
    REQUIRE_FALSE(d.warned);
    CHECK(d.value.raw() <= 2e-9);
  }
}

TEST_CASE("the distortion fixture: MC1-MC3 pass, MCFULL fails at log r") {
  LipschitzCategory cat(distortion_spaces(2.0));
  AuditOptions opts;
  opts.tol = 1e-9;
  auto rep = audit_norm(cat, opts);
  CHECK(rep.passed());
  CHECK(rep.verdict(Tag::MC1) == Verdict::Pass);
  CHECK(rep.verdict(Tag::MC2) == Verdict::Pass);
  CHECK(rep.verdict(Tag::MC3) == Verdict::Pass);
  REQUIRE(rep.verdict(Tag::MCFull) == Verdict::Fail);

  bool found = false;
  for (const auto& ce : rep.results.at(Tag::MCFull).counterexamples) {
    ExtReal mu_f = ce.values[0].second, mu_g = ce.values[1].second, mu_fg = ce.values[2].second;
    if (mu_f.is_inf() || mu_g.is_inf() || mu_fg.is_inf()) continue;
    if (std::fabs(mu_f.raw() - std::log(2.0)) <= 1e-12 && std::fabs(mu_g.raw()) <= 1e-12 &&
        std::fabs(mu_fg.raw()) <= 1e-12)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("the distortion fixture kernel is exactly the isometric embeddings") {
  LipschitzCategory cat(distortion_spaces(2.0));
  auto k = kernel(cat, 1e-12);
  for (auto x : cat.objects())
    for (auto y : cat.objects())
      for (const auto& f : cat.arrows(x, y)) {
        bool in_kernel = k.contains(f);
        bool isometric = is_isometric_embedding(cat.as_map(f));
        CHECK(in_kernel == isometric);
      }
}

TEST_CASE("embedding-projection pairs") {
  SECTION("identity pair has delta 0") {
    auto X = pair_space("a", "b", 1.0);
    CHECK(ep_delta(ep_identity(X)) == ExtReal::zero());
  }
  SECTION("the point-into-pair example has delta 1") {
    EpPair f(one_point(), pair_space("x", "y", 1.0), {0}, {0, 0});
    CHECK(ep_delta(f).raw() == 1.0);
  }
  SECTION("invalid pairs are rejected") {
    auto unit = pair_space("x", "y", 1.0);
    auto wide = pair_space("x", "z", 2.0);
    // not isometric
    CHECK_THROWS_AS(EpPair(unit, wide, {0, 1}, {0, 1}), InputError);
    // projection does not retract the embedding
    CHECK_THROWS_AS(EpPair(unit, unit, {0, 1}, {0, 0}), InputError);
  }
  SECTION("composition re-verifies and never fails on valid inputs") {
    testgen::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      auto chain = testgen::random_ep_chain(rng);
      CHECK_NOTHROW(ep_compose(chain.f, chain.g));
    }
  }
}

TEST_CASE("delta satisfies the triangle axioms on random chains") {
  testgen::Rng rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    auto chain = testgen::random_ep_chain(rng);
    auto fg = ep_compose(chain.f, chain.g);
    ExtReal nf = ep_delta(chain.f), ng = ep_delta(chain.g), nfg = ep_delta(fg);
    CHECK(leq_with_tol(nfg, nf + ng, 1e-9));  // MC2
    CHECK(leq_with_tol(ng, nfg + nf, 1e-9));  // MC3
    CHECK(ep_delta(ep_identity(chain.g.source)) == ExtReal::zero());  // MC1
  }
}

TEST_CASE("the embedding-projection category inverts exactly the onto pairs") {
  EpCategory cat;
  auto X = pair_space("a", "b", 1.0);
  SECTION("identity inverts to itself") {
    auto inv = cat.invert(ep_identity(X));
    REQUIRE(inv.has_value());
    CHECK(*inv == ep_identity(X));
  }
  SECTION("a proper embedding has no inverse") {
    EpPair f(one_point(), X, {0}, {0, 0});
    CHECK_FALSE(cat.invert(f).has_value());
  }
  SECTION("a relabeling bijection inverts") {
    auto Y = FiniteMetricSpace({"u", "v"}, {{0.0, 1.0}, {1.0, 0.0}});
    EpPair f(X, Y, {1, 0}, {1, 0});
    auto inv = cat.invert(f);
    REQUIRE(inv.has_value());
    CHECK(ep_compose(*inv, f) == ep_identity(X));
    CHECK(ep_compose(f, *inv) == ep_identity(Y));
  }
}

TEST_CASE("metric colimits of chains") {
  SECTION("a constant chain returns the space with error 0") {
    auto X = pair_space("a", "b", 1.0);
    std::vector<ColimitStage> chain{{X, {}}, {X, {0, 1}}, {X, {0, 1}}};
    auto out = metric_colimit(chain, {{0.0, -1}});
    REQUIRE(out.ok());
    CHECK(*out.approximant == X);
    CHECK(out.error_bound == 0.0);
  }
  SECTION("shrinking metrics converge with the stated bound") {
    // rho_n = (1 + 2^-n) * rho on a fixed 3-point space
    auto base = FiniteMetricSpace({"a", "b", "c"},
                                  {{0.0, 1.0, 2.0}, {1.0, 0.0, 2.0}, {2.0, 2.0, 0.0}});
    auto stage = [&](int n) {
      double s = 1.0 + std::pow(0.5, n);
      std::vector<std::vector<double>> d(3, std::vector<double>(3, 0.0));
      for (std::int32_t i = 0; i < 3; ++i)
        for (std::int32_t j = 0; j < 3; ++j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            s * base.dist(i, j);
      return FiniteMetricSpace({"a", "b", "c"}, d);
    };
    const int N = 8;
    std::vector<ColimitStage> chain{{stage(0), {}}};
    for (int n = 1; n <= N; ++n) chain.push_back({stage(n), {0, 1, 2}});
    // |rho_m - rho_n| <= 2^-m * max rho < 2^-(m-1) for m <= n, so rows (2^-k * 2, k) hold
    std::vector<std::pair<double, int>> modulus;
    for (int k = 0; k <= N; ++k) modulus.push_back({std::pow(0.5, k) * 2.0 * 2.0, k});
    auto out = metric_colimit(chain, modulus);
    REQUIRE(out.ok());
    CHECK(out.error_bound == Approx(std::pow(0.5, N) * 4.0));
    for (std::int32_t i = 0; i < 3; ++i)
      for (std::int32_t j = 0; j < 3; ++j)
        CHECK(std::fabs(out.approximant->dist(i, j) - base.dist(i, j)) <=
              out.error_bound + 1e-15);
  }
  SECTION("a violated modulus is refuted with the witness pair") {
    auto X0 = pair_space("a", "b", 1.0);
    auto X1 = pair_space("a", "b", 3.0);  // jumps by 2
    std::vector<ColimitStage> chain{{X0, {}}, {X1, {0, 1}}};
    auto out = metric_colimit(chain, {{0.5, -1}});
    REQUIRE_FALSE(out.ok());
    REQUIRE(out.refutation.has_value());
    CHECK(out.refutation->delta == Approx(2.0));
  }
  SECTION("growing chains keep earlier points' distances") {
    testgen::Rng rng(555);
    auto base = testgen::random_metric_space(rng, 3, 2);
    auto e1 = testgen::random_pendant_extension(rng, base, 2);
    auto e2 = testgen::random_pendant_extension(rng, e1.target, 1);
    std::vector<ColimitStage> chain{{base, {}}, {e1.target, e1.embed}, {e2.target, e2.embed}};
    auto out = metric_colimit(chain, {{0.0, -1}});
    REQUIRE(out.ok());
    CHECK(out.error_bound == 0.0);
    CHECK(out.approximant->size() == e2.target.size());
  }
}
