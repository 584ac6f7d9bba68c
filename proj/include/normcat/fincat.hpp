#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "normcat/audit.hpp"
#include "normcat/category.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"
#include "normcat/report.hpp"

namespace normcat {

/// Raw presentation of a finite category: labels plus a composition table.
/// Ids are opaque strings; construction sorts them so that iteration order
/// (and therefore every counterexample witness) is reproducible.
struct FiniteCategoryData {
  std::vector<std::string> objects;
  struct ArrowSpec {
    std::string id, dom, cod;
  };
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> identities;                        // object -> arrow
  std::map<std::pair<std::string, std::string>, std::string> compose;   // (f, g) -> f.g
};

/// Finite category backed by explicit tables. The composition table is
/// taken as given; whether it actually satisfies the category laws is
/// validate_category's verdict, not a constructor precondition. Dangling
/// ids, duplicates and missing identities are input errors.
class FiniteCategory {
 public:
  using object_id = std::int32_t;
  using arrow_id = std::int32_t;

  explicit FiniteCategory(const FiniteCategoryData& d) {
    object_labels_ = d.objects;
    std::sort(object_labels_.begin(), object_labels_.end());
    if (std::adjacent_find(object_labels_.begin(), object_labels_.end()) != object_labels_.end())
      throw InputError("duplicate object id");
    for (const auto& a : d.arrows) arrow_labels_.push_back(a.id);
    std::sort(arrow_labels_.begin(), arrow_labels_.end());
    if (std::adjacent_find(arrow_labels_.begin(), arrow_labels_.end()) != arrow_labels_.end())
      throw InputError("duplicate arrow id");

    dom_.resize(arrow_labels_.size());
    cod_.resize(arrow_labels_.size());
    for (const auto& a : d.arrows) {
      arrow_id f = arrow_index(a.id);
      dom_[f] = object_index(a.dom);
      cod_[f] = object_index(a.cod);
    }

    identity_.assign(object_labels_.size(), -1);
    for (const auto& [obj, arr] : d.identities) {
      object_id x = object_index(obj);
      arrow_id f = arrow_index(arr);
      if (dom_[f] != x || cod_[f] != x)
        throw InputError("identity of '" + obj + "' is not an endomorphism");
      identity_[x] = f;
    }
    for (std::size_t i = 0; i < identity_.size(); ++i)
      if (identity_[i] < 0) throw InputError("object '" + object_labels_[i] + "' has no identity");

    table_.assign(arrow_labels_.size() * arrow_labels_.size(), -1);
    for (const auto& [pair, result] : d.compose) {
      arrow_id f = arrow_index(pair.first);
      arrow_id g = arrow_index(pair.second);
      if (dom_[f] != cod_[g])
        throw InputError("composition entry (" + pair.first + ", " + pair.second +
                         ") is not composable");
      table_[cell(f, g)] = arrow_index(result);
    }

    hom_.assign(object_labels_.size() * object_labels_.size(), {});
    for (arrow_id f = 0; f < static_cast<arrow_id>(arrow_labels_.size()); ++f)
      hom_[static_cast<std::size_t>(dom_[f]) * object_labels_.size() + cod_[f]].push_back(f);
  }

  std::vector<object_id> objects() const {
    std::vector<object_id> out(object_labels_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<object_id>(i);
    return out;
  }
  std::vector<arrow_id> arrows(object_id x, object_id y) const {
    return hom_[static_cast<std::size_t>(x) * object_labels_.size() + y];
  }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  std::vector<arrow_id> all_arrows() const {
    std::vector<arrow_id> out(arrow_labels_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<arrow_id>(i);
    return out;
  }

  object_id dom(arrow_id f) const { return dom_.at(f); }
  object_id cod(arrow_id f) const { return cod_.at(f); }
  arrow_id identity(object_id x) const { return identity_.at(x); }
  bool composable(arrow_id f, arrow_id g) const { return dom_.at(f) == cod_.at(g); }
  arrow_id compose(arrow_id f, arrow_id g) const {
    arrow_id r = table_[cell(f, g)];
    if (r < 0)
      throw std::logic_error("composition table has no entry for (" + arrow_labels_[f] + ", " +
                             arrow_labels_[g] + ")");
    return r;
  }
  /// Table lookup without the closure guarantee; validate_category uses it.
  std::optional<arrow_id> compose_entry(arrow_id f, arrow_id g) const {
    arrow_id r = table_[cell(f, g)];
    return r < 0 ? std::nullopt : std::optional<arrow_id>(r);
  }

  std::string describe_object(object_id x) const { return object_labels_.at(x); }
  std::string describe_arrow(arrow_id f) const { return arrow_labels_.at(f); }

  object_id object_index(const std::string& label) const {
    auto it = std::lower_bound(object_labels_.begin(), object_labels_.end(), label);
    if (it == object_labels_.end() || *it != label)
      throw InputError("unknown object id '" + label + "'");
    return static_cast<object_id>(it - object_labels_.begin());
  }
  arrow_id arrow_index(const std::string& label) const {
    auto it = std::lower_bound(arrow_labels_.begin(), arrow_labels_.end(), label);
    if (it == arrow_labels_.end() || *it != label)
      throw InputError("unknown arrow id '" + label + "'");
    return static_cast<arrow_id>(it - arrow_labels_.begin());
  }

  std::size_t object_count() const { return object_labels_.size(); }
  std::size_t arrow_count() const { return arrow_labels_.size(); }

 private:
  std::size_t cell(arrow_id f, arrow_id g) const {
    return static_cast<std::size_t>(f) * arrow_labels_.size() + static_cast<std::size_t>(g);
  }

  std::vector<std::string> object_labels_;
  std::vector<std::string> arrow_labels_;
  std::vector<object_id> dom_, cod_;
  std::vector<arrow_id> identity_;
  std::vector<arrow_id> table_;  // -1 = no entry
  std::vector<std::vector<arrow_id>> hom_;
};

/// Total assignment of norm values to the arrows of a FiniteCategory.
class NormTable {
 public:
  NormTable(const FiniteCategory& cat, const std::map<std::string, ExtReal>& values) {
    values_.resize(cat.arrow_count());
    std::vector<bool> seen(cat.arrow_count(), false);
    for (const auto& [label, v] : values) {
      auto f = cat.arrow_index(label);
      values_[f] = v;
      seen[f] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw InputError("norm table is missing arrow '" +
                         cat.describe_arrow(static_cast<FiniteCategory::arrow_id>(i)) + "'");
  }
  explicit NormTable(std::vector<ExtReal> values) : values_(std::move(values)) {}

  ExtReal operator()(FiniteCategory::arrow_id f) const { return values_.at(f); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<ExtReal> values_;
};

/// FiniteCategory paired with a NormTable; the table-backed instance the
/// auditor consumes.
class NormedTableCategory {
 public:
  using object_id = FiniteCategory::object_id;
  using arrow_id = FiniteCategory::arrow_id;

  NormedTableCategory(FiniteCategory cat, NormTable norms)
      : cat_(std::move(cat)), norms_(std::move(norms)) {
    if (norms_.size() != cat_.arrow_count()) throw InputError("norm table size mismatch");
  }

  std::vector<object_id> objects() const { return cat_.objects(); }
  std::vector<arrow_id> arrows(object_id x, object_id y) const { return cat_.arrows(x, y); }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(arrow_id f) const { return cat_.dom(f); }
  object_id cod(arrow_id f) const { return cat_.cod(f); }
  arrow_id identity(object_id x) const { return cat_.identity(x); }
  bool composable(arrow_id f, arrow_id g) const { return cat_.composable(f, g); }
  arrow_id compose(arrow_id f, arrow_id g) const { return cat_.compose(f, g); }
  ExtReal norm(arrow_id f) const { return norms_(f); }
  std::string describe_object(object_id x) const { return cat_.describe_object(x); }
  std::string describe_arrow(arrow_id f) const { return cat_.describe_arrow(f); }

  const FiniteCategory& category() const { return cat_; }
  const NormTable& norms() const { return norms_; }

 private:
  FiniteCategory cat_;
  NormTable norms_;
};

/// Category-law check for a table presentation: closure of the composition
/// table, two-sided identity neutrality, associativity over every
/// composable triple. Verdict lands on the CAT-LAWS tag with the violating
/// pair or triple as witness.
inline AuditReport validate_category(const FiniteCategory& c) {
  AuditReport rep;
  auto& laws = rep.at(Tag::CatLaws);
  laws.verdict = Verdict::Pass;
  auto arrows = c.all_arrows();

  auto fail = [&](std::string what) {
    rep.record_failure(Tag::CatLaws, {std::move(what), ExtReal::zero(), ExtReal::zero(), {}});
  };

  for (auto f : arrows)
    for (auto g : arrows) {
      if (!c.composable(f, g)) continue;
      auto fg = c.compose_entry(f, g);
      if (!fg) {
        fail("no table entry for f=" + c.describe_arrow(f) + ", g=" + c.describe_arrow(g));
        continue;
      }
      if (c.dom(*fg) != c.dom(g) || c.cod(*fg) != c.cod(f))
        fail("entry (" + c.describe_arrow(f) + ", " + c.describe_arrow(g) +
             ") has wrong endpoints");
    }
  if (laws.verdict == Verdict::Fail) return rep;  // closure holes make the law checks moot

  for (auto f : arrows) {
    if (c.compose(f, c.identity(c.dom(f))) != f)
      fail(c.describe_arrow(f) + " . id != " + c.describe_arrow(f));
    if (c.compose(c.identity(c.cod(f)), f) != f)
      fail("id . " + c.describe_arrow(f) + " != " + c.describe_arrow(f));
  }
  for (auto f : arrows)
    for (auto g : arrows) {
      if (!c.composable(f, g)) continue;
      for (auto h : arrows) {
        if (!c.composable(g, h)) continue;
        if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
          fail("associativity fails on f=" + c.describe_arrow(f) + ", g=" + c.describe_arrow(g) +
               ", h=" + c.describe_arrow(h));
      }
    }
  return rep;
}

/// Arrows satisfying the right-cancellation law, by brute force. The result
/// always contains every identity and is closed the way a potential kernel
/// must be.
inline std::set<FiniteCategory::arrow_id> monic_arrows(const FiniteCategory& c) {
  std::set<FiniteCategory::arrow_id> monics;
  auto arrows = c.all_arrows();
  for (auto f : arrows) {
    bool monic = true;
    for (auto g1 : arrows) {
      if (!c.composable(f, g1)) continue;
      for (auto g2 : arrows) {
        if (g2 == g1 || !c.composable(f, g2)) continue;
        if (c.dom(g1) != c.dom(g2)) continue;
        if (c.compose(f, g1) == c.compose(f, g2)) {
          monic = false;
          break;
        }
      }
      if (!monic) break;
    }
    if (monic) monics.insert(f);
  }
  return monics;
}

/// K1/K2 verdicts for a candidate kernel subcategory. Containment and
/// closure under composition are preconditions on the input; violating
/// them is a NOT-SUBCATEGORY input error rather than a FAIL.
inline AuditReport check_potential_kernel(const FiniteCategory& c,
                                          const std::set<FiniteCategory::arrow_id>& k0) {
  auto arrows = c.all_arrows();
  for (auto f : k0)
    if (f < 0 || static_cast<std::size_t>(f) >= c.arrow_count())
      throw InputError("NOT-SUBCATEGORY: unknown arrow index " + std::to_string(f));
  for (auto f : k0)
    for (auto g : k0)
      if (c.composable(f, g) && !k0.count(c.compose(f, g)))
        throw InputError("NOT-SUBCATEGORY: not closed under composition at f=" +
                         c.describe_arrow(f) + ", g=" + c.describe_arrow(g));

  AuditReport rep;
  rep.at(Tag::K1).verdict = Verdict::Pass;
  rep.at(Tag::K2).verdict = Verdict::Pass;
  for (auto x : c.objects())
    if (!k0.count(c.identity(x)))
      rep.record_failure(Tag::K1, {"identity of " + c.describe_object(x) + " missing",
                                   ExtReal::zero(), ExtReal::zero(), {}});
  for (auto f : k0)
    for (auto g : arrows) {
      if (!c.composable(f, g)) continue;
      if (k0.count(c.compose(f, g)) && !k0.count(g))
        rep.record_failure(Tag::K2, {"f=" + c.describe_arrow(f) + ", g=" + c.describe_arrow(g) +
                                         ": f, f.g in kernel but g is not",
                                     ExtReal::zero(), ExtReal::zero(), {}});
    }
  return rep;
}

/// Precondition failure of discrete_norm, carrying the kernel audit.
class PotentialKernelError : public InputError {
 public:
  PotentialKernelError(AuditReport rep)
      : InputError("candidate kernel fails K1/K2; see attached audit"), report(std::move(rep)) {}
  AuditReport report;
};

/// The two-valued norm induced by a potential kernel: 0 on its arrows, inf
/// elsewhere. Passes the full norm audit whenever K1/K2 hold, and its
/// kernel recovers the input set exactly (the values are exactly 0 or inf,
/// so tol = 0 applies).
inline NormTable discrete_norm(const FiniteCategory& c,
                               const std::set<FiniteCategory::arrow_id>& k0) {
  auto audit = check_potential_kernel(c, k0);
  if (!audit.passed()) throw PotentialKernelError(std::move(audit));
  std::vector<ExtReal> values(c.arrow_count(), ExtReal::infinity());
  for (auto f : k0) values[f] = ExtReal::zero();
  return NormTable(std::move(values));
}

/// One sorted id per group element plus the group structure.
struct GroupData {
  std::vector<std::string> elements;
  std::string neutral;
  std::map<std::pair<std::string, std::string>, std::string> op;  // (a, b) -> a*b
  std::map<std::string, std::string> inverse;
};

namespace detail {
inline void require_group(const GroupData& g) {
  auto lookup = [&](const std::string& a, const std::string& b) -> const std::string& {
    auto it = g.op.find({a, b});
    if (it == g.op.end()) throw InputError("operation table incomplete at (" + a + ", " + b + ")");
    return it->second;
  };
  for (const auto& a : g.elements) {
    if (lookup(g.neutral, a) != a || lookup(a, g.neutral) != a)
      throw InputError("'" + g.neutral + "' is not neutral at '" + a + "'");
    auto inv = g.inverse.find(a);
    if (inv == g.inverse.end()) throw InputError("no inverse listed for '" + a + "'");
    if (lookup(a, inv->second) != g.neutral || lookup(inv->second, a) != g.neutral)
      throw InputError("'" + inv->second + "' is not a two-sided inverse of '" + a + "'");
  }
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      for (const auto& c : g.elements)
        if (lookup(lookup(a, b), c) != lookup(a, lookup(b, c)))
          throw InputError("operation not associative at (" + a + ", " + b + ", " + c + ")");
}
}  // namespace detail

/// A group as a one-object category whose arrows are the elements, with the
/// supplied function as norm. The table is validated as a group first.
inline NormedTableCategory group_as_normed_category(
    const GroupData& g, const std::function<ExtReal(const std::string&)>& mu) {
  detail::require_group(g);
  FiniteCategoryData d;
  d.objects = {"*"};
  for (const auto& e : g.elements) d.arrows.push_back({e, "*", "*"});
  d.identities["*"] = g.neutral;
  d.compose = g.op;
  FiniteCategory cat(d);
  std::map<std::string, ExtReal> values;
  for (const auto& e : g.elements) values[e] = mu(e);
  NormTable table(cat, values);
  return NormedTableCategory(std::move(cat), std::move(table));
}

/// Group-norm axioms N1-N3 checked directly on the table, and MC1-MC3
/// checked by the generic auditor on the one-object category. On a group
/// the two suites are equivalent, so the verdict sets must agree; the
/// report notes if they do not.
inline AuditReport check_group_norm_equivalence(const GroupData& g,
                                                const std::function<ExtReal(const std::string&)>& mu,
                                                double tol = 1e-9) {
  auto catn = group_as_normed_category(g, mu);
  AuditOptions opts;
  opts.tol = tol;
  AuditReport rep = audit_norm(catn, opts);

  rep.at(Tag::N1).verdict = Verdict::Pass;
  rep.at(Tag::N2).verdict = Verdict::Pass;
  rep.at(Tag::N3).verdict = Verdict::Pass;
  if (!leq_with_tol(mu(g.neutral), ExtReal::zero(), tol))
    rep.record_failure(Tag::N1, {"mu(" + g.neutral + ")", mu(g.neutral), ExtReal::zero(), {}});
  for (const auto& a : g.elements) {
    auto d = abs_delta(mu(a), mu(g.inverse.at(a)));
    if (d.warned) continue;
    if (d.value.raw() > tol)
      rep.record_failure(Tag::N2, {"mu(" + a + ") vs mu(" + g.inverse.at(a) + ")", mu(a),
                                   mu(g.inverse.at(a)),
                                   {{"mu(f)", mu(a)}, {"mu(f^-1)", mu(g.inverse.at(a))}}});
  }
  for (const auto& a : g.elements)
    for (const auto& b : g.elements) {
      ExtReal lhs = mu(g.op.at({a, b}));
      if (!leq_with_tol(lhs, mu(a) + mu(b), tol))
        rep.record_failure(Tag::N3, {"mu(" + a + "*" + b + ")", lhs, mu(a) + mu(b), {}});
    }

  bool n_pass = rep.verdict(Tag::N1) == Verdict::Pass && rep.verdict(Tag::N2) == Verdict::Pass &&
                rep.verdict(Tag::N3) == Verdict::Pass;
  bool mc_pass = rep.verdict(Tag::MC1) == Verdict::Pass && rep.verdict(Tag::MC2) == Verdict::Pass &&
                 rep.verdict(Tag::MC3) == Verdict::Pass;
  if (n_pass != mc_pass)
    rep.warnings.push_back("N-suite and MC-suite disagree; they must coincide on a group");
  return rep;
}

/// Additive-integer window: the elements of Z in [-window, window] as a
/// one-object category with partial composition (sums falling outside the
/// window are undefined and skipped by audits).
class IntegerWindowGroup {
 public:
  using object_id = int;  // single object 0
  using arrow_id = int;   // the integer itself

  explicit IntegerWindowGroup(int window,
                              std::function<ExtReal(int)> mu =
                                  [](int n) { return ExtReal(std::abs(n)); })
      : window_(window), mu_(std::move(mu)) {
    if (window < 0) throw InputError("window must be nonnegative");
  }

  std::vector<object_id> objects() const { return {0}; }
  std::vector<arrow_id> arrows(object_id, object_id) const {
    std::vector<arrow_id> out;
    for (int n = -window_; n <= window_; ++n) out.push_back(n);
    return out;
  }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(arrow_id) const { return 0; }
  object_id cod(arrow_id) const { return 0; }
  arrow_id identity(object_id) const { return 0; }
  bool composable(arrow_id f, arrow_id g) const { return std::abs(f + g) <= window_; }
  arrow_id compose(arrow_id f, arrow_id g) const {
    if (!composable(f, g)) throw std::logic_error("sum leaves the window");
    return f + g;
  }
  ExtReal norm(arrow_id f) const { return mu_(f); }
  std::string describe_object(object_id) const { return "*"; }
  std::string describe_arrow(arrow_id f) const { return std::to_string(f); }

 private:
  int window_;
  std::function<ExtReal(int)> mu_;
};

/// A symmetric pseudo-metric (zero diagonal, +inf allowed) presented as a
/// category with exactly one arrow per ordered point pair, normed by the
/// distance. The triangle inequality is deliberately not an input
/// requirement: the audit passes exactly when it holds.
class PseudometricCategory {
 public:
  using object_id = std::int32_t;
  using arrow_id = std::pair<std::int32_t, std::int32_t>;

  PseudometricCategory(std::vector<std::string> points, std::vector<std::vector<ExtReal>> rho)
      : labels_(std::move(points)), rho_(std::move(rho)) {
    auto order = sorted_permutation(labels_);
    apply_permutation(order);
    if (rho_.size() != labels_.size()) throw InputError("distance matrix is not square");
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      if (rho_[i].size() != labels_.size()) throw InputError("distance matrix is not square");
      if (rho_[i][i] != ExtReal::zero())
        throw InputError("nonzero diagonal at '" + labels_[i] + "'");
      for (std::size_t j = 0; j < rho_.size(); ++j)
        if (rho_[i][j] != rho_[j][i])
          throw InputError("asymmetric distances at ('" + labels_[i] + "', '" + labels_[j] +
                           "'); asymmetric spaces go through the weighted-digraph route");
    }
  }

  std::vector<object_id> objects() const {
    std::vector<object_id> out(labels_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<object_id>(i);
    return out;
  }
  std::vector<arrow_id> arrows(object_id x, object_id y) const { return {{x, y}}; }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(const arrow_id& f) const { return f.first; }
  object_id cod(const arrow_id& f) const { return f.second; }
  arrow_id identity(object_id x) const { return {x, x}; }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.first == g.second; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (!composable(f, g)) throw std::logic_error("non-composable point-pair arrows");
    return {g.first, f.second};
  }
  ExtReal norm(const arrow_id& f) const { return rho_[f.first][f.second]; }
  std::string describe_object(object_id x) const { return labels_.at(x); }
  std::string describe_arrow(const arrow_id& f) const {
    return labels_.at(f.first) + "->" + labels_.at(f.second);
  }

  object_id point_index(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw InputError("unknown point '" + label + "'");
    return static_cast<object_id>(it - labels_.begin());
  }

 private:
  static std::vector<std::size_t> sorted_permutation(const std::vector<std::string>& labels) {
    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    return order;
  }
  void apply_permutation(const std::vector<std::size_t>& order) {
    std::vector<std::string> labels(labels_.size());
    std::vector<std::vector<ExtReal>> rho(rho_.size(), std::vector<ExtReal>(rho_.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
      labels[i] = labels_[order[i]];
      for (std::size_t j = 0; j < order.size(); ++j) rho[i][j] = rho_[order[i]][order[j]];
    }
    labels_ = std::move(labels);
    rho_ = std::move(rho);
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<ExtReal>> rho_;
};

inline PseudometricCategory pseudometric_as_category(std::vector<std::string> points,
                                                     std::vector<std::vector<ExtReal>> rho) {
  return PseudometricCategory(std::move(points), std::move(rho));
}

/// Quasi-ordered category on objects 0..n-1: at most one arrow per pair,
/// present when leq holds, normed by a caller-supplied function.
class QuasiOrderCategory {
 public:
  using object_id = int;
  using arrow_id = std::pair<int, int>;

  QuasiOrderCategory(int n, std::function<bool(int, int)> leq, std::function<ExtReal(int, int)> mu,
                     std::function<std::string(int)> label = nullptr)
      : n_(n), leq_(std::move(leq)), mu_(std::move(mu)), label_(std::move(label)) {}

  std::vector<object_id> objects() const {
    std::vector<object_id> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
  }
  std::vector<arrow_id> arrows(object_id x, object_id y) const {
    if (leq_(x, y)) return {{x, y}};
    return {};
  }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(const arrow_id& f) const { return f.first; }
  object_id cod(const arrow_id& f) const { return f.second; }
  arrow_id identity(object_id x) const { return {x, x}; }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.first == g.second; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (!composable(f, g)) throw std::logic_error("non-composable order arrows");
    return {g.first, f.second};
  }
  ExtReal norm(const arrow_id& f) const { return mu_(f.first, f.second); }
  std::string describe_object(object_id x) const {
    return label_ ? label_(x) : std::to_string(x);
  }
  std::string describe_arrow(const arrow_id& f) const {
    return describe_object(f.first) + "<=" + describe_object(f.second);
  }

 private:
  int n_;
  std::function<bool(int, int)> leq_;
  std::function<ExtReal(int, int)> mu_;
  std::function<std::string(int)> label_;
};

}  // namespace normcat
