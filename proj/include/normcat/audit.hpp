#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/report.hpp"

namespace normcat {

struct AuditOptions {
  double tol = 1e-9;
  std::uint64_t budget = 1'000'000;  // composable pairs (and law triples) examined
  int jobs = 1;
};

namespace detail {

template <EnumerableNormedCategory C>
struct Enumeration {
  std::vector<object_id_t<C>> objects;
  std::vector<arrow_id_t<C>> arrows;  // deterministic global order
  bool complete = true;               // every hom-set enumerated exhaustively

  static Enumeration build(const C& cat) {
    Enumeration e;
    e.objects = cat.objects();
    for (const auto& x : e.objects)
      for (const auto& y : e.objects) {
        auto hom = cat.arrows(x, y);
        e.complete = e.complete && cat.arrows_exhaustive(x, y);
        e.arrows.insert(e.arrows.end(), hom.begin(), hom.end());
      }
    return e;
  }
};

template <NormedCategory C>
Counterexample make_pair_witness(const C& cat, const arrow_id_t<C>& f, const arrow_id_t<C>& g,
                                 const arrow_id_t<C>& fg, ExtReal lhs, ExtReal rhs,
                                 bool warned = false) {
  Counterexample ce;
  ce.witness = "f=" + cat.describe_arrow(f) + ", g=" + cat.describe_arrow(g) +
               ", f.g=" + cat.describe_arrow(fg);
  ce.lhs = lhs;
  ce.rhs = rhs;
  ce.values = {{"mu(f)", cat.norm(f)}, {"mu(g)", cat.norm(g)}, {"mu(f.g)", cat.norm(fg)}};
  ce.delta_warned = warned;
  return ce;
}

}  // namespace detail

/// Exhaustively checks the norm axioms on a finite (or capped) instance.
///
/// Order of business: category laws first (a failure there aborts, the
/// remaining tags are meaningless), then MC1 over objects, then MC2/MC3
/// over every composable pair within the budget. MCFULL, the rejected
/// strengthening |mu(f)-mu(g)| <= mu(f.g), rides along as a diagnostic:
/// it is reported but never fails the audit.
///
/// Exceeding the pair budget downgrades unfinished tags to SKIPPED with a
/// note; failures already found stand, so enlarging the budget can never
/// turn FAIL into PASS. jobs > 1 splits the pair scan across threads; the
/// report is assembled in enumeration order and is identical for any job
/// count.
template <EnumerableNormedCategory C>
AuditReport audit_norm(const C& cat, AuditOptions opts = {}) {
  using Arr = arrow_id_t<C>;
  AuditReport rep;
  rep.tolerance = opts.tol;

  auto en = detail::Enumeration<C>::build(cat);
  if (!en.complete)
    rep.warnings.push_back("arrow enumeration truncated; verdicts cover the enumerated scope only");

  // -- category laws ------------------------------------------------------
  auto& laws = rep.at(Tag::CatLaws);
  laws.verdict = Verdict::Pass;
  std::uint64_t law_checks = 0;
  bool law_budget_hit = false;

  for (const auto& x : en.objects) {
    Arr idx = cat.identity(x);
    if (!(cat.dom(idx) == x) || !(cat.cod(idx) == x)) {
      rep.record_failure(Tag::CatLaws, {"identity of " + cat.describe_object(x) +
                                            " has wrong endpoints",
                                        ExtReal::zero(), ExtReal::zero(), {}});
    }
  }
  for (const auto& f : en.arrows) {
    Arr l = cat.identity(cat.cod(f));
    Arr r = cat.identity(cat.dom(f));
    if (cat.composable(l, f) && !(cat.compose(l, f) == f))
      rep.record_failure(Tag::CatLaws, {"id." + cat.describe_arrow(f) + " != " + cat.describe_arrow(f),
                                        ExtReal::zero(), ExtReal::zero(), {}});
    if (cat.composable(f, r) && !(cat.compose(f, r) == f))
      rep.record_failure(Tag::CatLaws, {cat.describe_arrow(f) + ".id != " + cat.describe_arrow(f),
                                        ExtReal::zero(), ExtReal::zero(), {}});
  }

  // Composable pairs in deterministic enumeration order. Pairs whose
  // endpoints match but whose composite the instance leaves undefined
  // (partial structures like group windows) are skipped and counted.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into en.arrows: (f, g)
  bool pair_budget_hit = false;
  std::uint64_t partial_skipped = 0;
  for (std::size_t gi = 0; gi < en.arrows.size() && !pair_budget_hit; ++gi)
    for (std::size_t fi = 0; fi < en.arrows.size(); ++fi) {
      if (!cat.composable(en.arrows[fi], en.arrows[gi])) {
        if (cat.dom(en.arrows[fi]) == cat.cod(en.arrows[gi])) ++partial_skipped;
        continue;
      }
      if (pairs.size() >= opts.budget) {
        pair_budget_hit = true;
        break;
      }
      pairs.emplace_back(fi, gi);
    }
  if (partial_skipped > 0)
    rep.warnings.push_back(std::to_string(partial_skipped) +
                           " endpoint-matched pairs skipped: composite undefined in this instance");

  // Closure and associativity on the enumerated scope.
  for (const auto& [fi, gi] : pairs) {
    const Arr& f = en.arrows[fi];
    const Arr& g = en.arrows[gi];
    Arr fg = cat.compose(f, g);
    if (!(cat.dom(fg) == cat.dom(g)) || !(cat.cod(fg) == cat.cod(f)))
      rep.record_failure(Tag::CatLaws, {"compose endpoints wrong for f=" + cat.describe_arrow(f) +
                                            ", g=" + cat.describe_arrow(g),
                                        ExtReal::zero(), ExtReal::zero(), {}});
  }
  for (const auto& [fi, gi] : pairs) {
    if (law_budget_hit) break;
    const Arr& f = en.arrows[fi];
    const Arr& g = en.arrows[gi];
    Arr fg = cat.compose(f, g);
    for (const auto& h : en.arrows) {
      if (!cat.composable(g, h)) continue;
      if (++law_checks > opts.budget) {
        law_budget_hit = true;
        break;
      }
      Arr gh = cat.compose(g, h);
      if (!cat.composable(f, gh) || !cat.composable(fg, h)) continue;
      if (!(cat.compose(f, gh) == cat.compose(fg, h)))
        rep.record_failure(Tag::CatLaws,
                           {"associativity fails on f=" + cat.describe_arrow(f) +
                                ", g=" + cat.describe_arrow(g) + ", h=" + cat.describe_arrow(h),
                            ExtReal::zero(), ExtReal::zero(), {}});
    }
  }
  if (law_budget_hit && laws.verdict == Verdict::Pass) {
    laws.verdict = Verdict::Skipped;
    laws.note = "associativity scan stopped at budget";
  }
  if (laws.verdict == Verdict::Fail) {
    laws.note = "category laws failed; norm axioms not audited";
    for (Tag t : {Tag::MC1, Tag::MC2, Tag::MC3, Tag::MCFull}) {
      rep.at(t).verdict = Verdict::Skipped;
      rep.at(t).note = "aborted: CAT-LAWS failed";
    }
    return rep;
  }

  // -- MC1 -----------------------------------------------------------------
  auto& mc1 = rep.at(Tag::MC1);
  mc1.verdict = Verdict::Pass;
  for (const auto& x : en.objects) {
    ExtReal mu = cat.norm(cat.identity(x));
    if (!leq_with_tol(mu, ExtReal::zero(), opts.tol))
      rep.record_failure(Tag::MC1, {"mu(id at " + cat.describe_object(x) + ")", mu,
                                    ExtReal::zero(),
                                    {{"mu(id)", mu}}});
  }

  // -- MC2 / MC3 / MCFULL over composable pairs ---------------------------
  for (Tag t : {Tag::MC2, Tag::MC3, Tag::MCFull}) rep.at(t).verdict = Verdict::Pass;

  struct Finding {
    std::size_t pair_index;
    Tag tag;
    Counterexample ce;
  };
  auto scan = [&](std::size_t lo, std::size_t hi, std::vector<Finding>& out) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Arr& f = en.arrows[pairs[i].first];
      const Arr& g = en.arrows[pairs[i].second];
      Arr fg = cat.compose(f, g);
      ExtReal nf = cat.norm(f), ng = cat.norm(g), nfg = cat.norm(fg);
      if (!leq_with_tol(nfg, nf + ng, opts.tol))
        out.push_back({i, Tag::MC2, detail::make_pair_witness(cat, f, g, fg, nfg, nf + ng)});
      if (!leq_with_tol(ng, nfg + nf, opts.tol))
        out.push_back({i, Tag::MC3, detail::make_pair_witness(cat, f, g, fg, ng, nfg + nf)});
      auto d = abs_delta(nf, ng);
      if (d.warned) continue;  // inf vs inf: no honest delta, diagnostic skips the pair
      if (!leq_with_tol(d.value, nfg, opts.tol))
        out.push_back({i, Tag::MCFull, detail::make_pair_witness(cat, f, g, fg, d.value, nfg)});
    }
  };

  std::vector<Finding> findings;
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || pairs.size() < 2048) {
    scan(0, pairs.size(), findings);
  } else {
    std::vector<std::vector<Finding>> local(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    std::size_t chunk = (pairs.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::size_t lo = std::min(pairs.size(), static_cast<std::size_t>(j) * chunk);
      std::size_t hi = std::min(pairs.size(), lo + chunk);
      workers.emplace_back(scan, lo, hi, std::ref(local[static_cast<std::size_t>(j)]));
    }
    for (auto& w : workers) w.join();
    for (auto& l : local) findings.insert(findings.end(), l.begin(), l.end());
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& a, const Finding& b) { return a.pair_index < b.pair_index; });
  }
  for (auto& fnd : findings) rep.record_failure(fnd.tag, std::move(fnd.ce));

  if (pair_budget_hit) {
    for (Tag t : {Tag::MC2, Tag::MC3, Tag::MCFull}) {
      auto& r = rep.at(t);
      if (r.verdict == Verdict::Pass) r.verdict = Verdict::Skipped;
      r.note = "pair budget exhausted after " + std::to_string(pairs.size()) + " pairs";
    }
  }
  if (!en.complete) {
    for (Tag t : {Tag::MC2, Tag::MC3, Tag::MCFull})
      if (rep.at(t).note.empty()) rep.at(t).note = "checked on truncated arrow enumeration";
  }
  return rep;
}

/// Sub-view of a normed category keeping only the arrows of norm <= tol.
/// Same objects (K1 by construction); when the host satisfies the norm
/// axioms exactly, the filtered arrows are closed under composition and
/// satisfy K2.
template <EnumerableNormedCategory C>
class KernelView {
 public:
  using object_id = object_id_t<C>;
  using arrow_id = arrow_id_t<C>;

  KernelView(C base, double tol) : base_(std::move(base)), tol_(tol) {}

  std::vector<object_id> objects() const { return base_.objects(); }
  std::vector<arrow_id> arrows(const object_id& x, const object_id& y) const {
    std::vector<arrow_id> out;
    for (auto& f : base_.arrows(x, y))
      if (contains(f)) out.push_back(f);
    return out;
  }
  bool arrows_exhaustive(const object_id& x, const object_id& y) const {
    return base_.arrows_exhaustive(x, y);
  }
  object_id dom(const arrow_id& f) const { return base_.dom(f); }
  object_id cod(const arrow_id& f) const { return base_.cod(f); }
  arrow_id identity(const object_id& x) const { return base_.identity(x); }
  bool composable(const arrow_id& f, const arrow_id& g) const { return base_.composable(f, g); }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const { return base_.compose(f, g); }
  ExtReal norm(const arrow_id& f) const { return base_.norm(f); }
  std::string describe_object(const object_id& x) const { return base_.describe_object(x); }
  std::string describe_arrow(const arrow_id& f) const { return base_.describe_arrow(f); }

  bool contains(const arrow_id& f) const { return base_.norm(f).raw() <= tol_; }
  const C& base() const { return base_; }
  double tol() const { return tol_; }

 private:
  C base_;
  double tol_;
};

template <EnumerableNormedCategory C>
KernelView<C> kernel(const C& cat, double tol) {
  return KernelView<C>(cat, tol);
}

/// K1/K2 check for an arbitrary arrow predicate over an enumerable host.
/// K1: every identity satisfies the predicate. K2: member(f) and
/// member(f.g) force member(g).
template <EnumerableNormedCategory C>
AuditReport check_kernel_axioms(const C& cat,
                                const std::function<bool(const arrow_id_t<C>&)>& member,
                                std::uint64_t budget = 1'000'000) {
  AuditReport rep;
  auto en = detail::Enumeration<C>::build(cat);
  rep.at(Tag::K1).verdict = Verdict::Pass;
  rep.at(Tag::K2).verdict = Verdict::Pass;

  for (const auto& x : en.objects)
    if (!member(cat.identity(x)))
      rep.record_failure(Tag::K1, {"identity of " + cat.describe_object(x) + " missing",
                                   ExtReal::zero(), ExtReal::zero(), {}});

  std::uint64_t seen = 0;
  for (const auto& f : en.arrows) {
    if (!member(f)) continue;
    for (const auto& g : en.arrows) {
      if (!cat.composable(f, g)) continue;
      if (++seen > budget) {
        if (rep.at(Tag::K2).verdict == Verdict::Pass) {
          rep.at(Tag::K2).verdict = Verdict::Skipped;
          rep.at(Tag::K2).note = "pair budget exhausted";
        }
        return rep;
      }
      if (member(cat.compose(f, g)) && !member(g))
        rep.record_failure(Tag::K2, {"f=" + cat.describe_arrow(f) + ", g=" + cat.describe_arrow(g) +
                                         ": f and f.g are members, g is not",
                                     ExtReal::zero(), ExtReal::zero(), {}});
    }
  }
  return rep;
}

/// Outcome of the 0-isomorphism search. `Undecidable` is distinct from a
/// plain "no": it means the hom-set enumeration was truncated before a
/// two-sided inverse could be found or ruled out.
template <NormedCategory C>
struct ZeroIsoResult {
  enum class Outcome { Yes, No, Undecidable } outcome;
  std::optional<arrow_id_t<C>> inverse;
  bool norm_asymmetry = false;  // |mu(f) - mu(f^-1)| beyond tolerance
  std::string note;

  explicit operator bool() const { return outcome == Outcome::Yes; }
};

/// True iff f has a two-sided inverse and mu(f) <= tol. When an inverse is
/// found, both norms are measured: for an exact norm they agree (an
/// isomorphism and its inverse have equal norm), so a gap beyond tol is
/// flagged as NORM-ASYMMETRY rather than trusted silently.
template <HomEnumerable C>
ZeroIsoResult<C> is_zero_isomorphism(const C& cat, const arrow_id_t<C>& f, double tol) {
  using R = ZeroIsoResult<C>;
  auto x = cat.dom(f), y = cat.cod(f);
  auto idx = cat.identity(x);
  auto idy = cat.identity(y);
  for (const auto& g : cat.arrows(y, x)) {
    if (!cat.composable(g, f) || !cat.composable(f, g)) continue;
    if (!(cat.compose(g, f) == idx) || !(cat.compose(f, g) == idy)) continue;
    R r{cat.norm(f).raw() <= tol ? R::Outcome::Yes : R::Outcome::No, g, false, ""};
    auto d = abs_delta(cat.norm(f), cat.norm(g));
    r.norm_asymmetry = !d.warned && d.value.raw() > tol;  // twin infinities are equal, not asymmetric
    if (r.outcome == R::Outcome::No) r.note = "isomorphism, but mu(f) = " + cat.norm(f).str();
    return r;
  }
  if (!cat.arrows_exhaustive(y, x))
    return {R::Outcome::Undecidable, std::nullopt, false, "inverse candidates not exhaustively enumerable"};
  return {R::Outcome::No, std::nullopt, false, "no two-sided inverse exists"};
}

template <class C>
  requires InverseSearchable<C> && (!HomEnumerable<C>)
ZeroIsoResult<C> is_zero_isomorphism(const C& cat, const arrow_id_t<C>& f, double tol) {
  using R = ZeroIsoResult<C>;
  auto g = cat.invert(f);
  if (!g) return {R::Outcome::No, std::nullopt, false, "no two-sided inverse exists"};
  R r{cat.norm(f).raw() <= tol ? R::Outcome::Yes : R::Outcome::No, g, false, ""};
  auto d = abs_delta(cat.norm(f), cat.norm(*g));
  r.norm_asymmetry = !d.warned && d.value.raw() > tol;
  return r;
}

/// inf over the hom-set of the norm; the distance the norm induces on
/// objects. INF for an (exhaustively) empty hom-set. `exact` is false when
/// the enumeration was truncated: the value is then only an upper bound.
template <NormedCategory C>
struct QuasiMetricValue {
  ExtReal value;
  bool exact = true;
  std::optional<arrow_id_t<C>> witness;
};

template <HomEnumerable C>
QuasiMetricValue<C> induced_quasimetric(const C& cat, const object_id_t<C>& x,
                                        const object_id_t<C>& y) {
  QuasiMetricValue<C> out{ExtReal::infinity(), cat.arrows_exhaustive(x, y), std::nullopt};
  for (const auto& f : cat.arrows(x, y)) {
    ExtReal mu = cat.norm(f);
    if (mu < out.value) {
      out.value = mu;
      out.witness = f;
    }
  }
  return out;
}

/// Q1/Q2 for the induced quasi-metric over all enumerated object triples.
template <EnumerableNormedCategory C>
AuditReport check_induced_quasimetric(const C& cat, double tol) {
  AuditReport rep;
  rep.tolerance = tol;
  rep.at(Tag::Q1).verdict = Verdict::Pass;
  rep.at(Tag::Q2).verdict = Verdict::Pass;
  auto objs = cat.objects();
  std::vector<std::vector<ExtReal>> rho(objs.size(), std::vector<ExtReal>(objs.size()));
  bool exact = true;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) {
      auto q = induced_quasimetric(cat, objs[i], objs[j]);
      rho[i][j] = q.value;
      exact = exact && q.exact;
    }
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (!leq_with_tol(rho[i][i], ExtReal::zero(), tol))
      rep.record_failure(Tag::Q1, {"rho(x,x) at " + cat.describe_object(objs[i]), rho[i][i],
                                   ExtReal::zero(), {}});
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (std::size_t k = 0; k < objs.size(); ++k)
        if (!leq_with_tol(rho[i][j], rho[i][k] + rho[k][j], tol))
          rep.record_failure(Tag::Q2, {"x=" + cat.describe_object(objs[i]) +
                                           ", y=" + cat.describe_object(objs[j]) +
                                           ", z=" + cat.describe_object(objs[k]),
                                       rho[i][j], rho[i][k] + rho[k][j], {}});
  if (!exact) {
    rep.warnings.push_back("quasi-metric values from truncated enumerations; upper bounds only");
    for (Tag t : {Tag::Q1, Tag::Q2})
      if (rep.at(t).verdict == Verdict::Pass) rep.at(t).verdict = Verdict::Skipped;
  }
  return rep;
}

}  // namespace normcat
