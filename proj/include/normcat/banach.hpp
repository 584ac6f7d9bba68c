#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "normcat/audit.hpp"
#include "normcat/category.hpp"
#include "normcat/cauchy.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"
#include "normcat/metcat.hpp"
#include "normcat/report.hpp"

namespace normcat {

/// Endofunctor on a host category carrying its claimed contraction factor.
template <class F, class C>
concept EndofunctorOn = NormedCategory<C> &&
    requires(const F& fn, const object_id_t<C>& x, const arrow_id_t<C>& f) {
      { fn.map_object(x) } -> std::convertible_to<object_id_t<C>>;
      { fn.map_arrow(f) } -> std::convertible_to<arrow_id_t<C>>;
      { fn.factor() } -> std::convertible_to<double>;
    };

/// Functor-law and contraction check on a budgeted sample of arrows.
/// Reports FUNCTOR-LAWS, CONTRACTION (mu(F(f)) <= r mu(f)) and, as a
/// separate tag, NONEXPANSIVE (the r = 1 reading).
template <NormedCategory C, EndofunctorOn<C> F>
AuditReport verify_contraction(const C& host, const F& functor,
                               const std::vector<arrow_id_t<C>>& samples, double tol = 1e-9,
                               std::uint64_t seed = 20240501, std::size_t pair_budget = 512) {
  AuditReport rep;
  rep.tolerance = tol;
  for (Tag t : {Tag::FunctorLaws, Tag::Contraction, Tag::NonExpansive})
    rep.at(t).verdict = Verdict::Pass;
  double r = functor.factor();
  if (r < 0.0) throw InputError("contraction factor must be nonnegative");

  for (const auto& f : samples) {
    auto Ff = functor.map_arrow(f);
    if (!(host.dom(Ff) == functor.map_object(host.dom(f))) ||
        !(host.cod(Ff) == functor.map_object(host.cod(f))))
      rep.record_failure(Tag::FunctorLaws, {"arrow map endpoints disagree with object map on " +
                                                host.describe_arrow(f),
                                            ExtReal::zero(), ExtReal::zero(), {}});
    auto idd = host.identity(host.dom(f));
    if (!(functor.map_arrow(idd) == host.identity(functor.map_object(host.dom(f)))))
      rep.record_failure(Tag::FunctorLaws, {"identity not preserved at " +
                                                host.describe_object(host.dom(f)),
                                            ExtReal::zero(), ExtReal::zero(), {}});

    ExtReal mu = host.norm(f);
    ExtReal mu_F = host.norm(Ff);
    ExtReal contracted = mu.is_inf() ? ExtReal::infinity() : ExtReal(r * mu.raw());
    if (!leq_with_tol(mu_F, contracted, tol))
      rep.record_failure(Tag::Contraction, {"mu(F(f)) > r*mu(f) at " + host.describe_arrow(f),
                                            mu_F, contracted,
                                            {{"mu(f)", mu}, {"mu(F(f))", mu_F}}});
    if (!leq_with_tol(mu_F, mu, tol))
      rep.record_failure(Tag::NonExpansive, {"mu(F(f)) > mu(f) at " + host.describe_arrow(f),
                                             mu_F, mu, {}});
  }

  // composition preservation on composable sample pairs; random subset when
  // the full square exceeds the budget
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j)
      if (host.composable(samples[i], samples[j])) pairs.emplace_back(i, j);
  if (pairs.size() > pair_budget) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(pair_budget);
  }
  for (auto [i, j] : pairs) {
    auto composed = host.compose(samples[i], samples[j]);
    auto lhs = functor.map_arrow(composed);
    auto rhs = host.compose(functor.map_arrow(samples[i]), functor.map_arrow(samples[j]));
    if (!(lhs == rhs))
      rep.record_failure(Tag::FunctorLaws, {"composition not preserved on (" +
                                                host.describe_arrow(samples[i]) + ", " +
                                                host.describe_arrow(samples[j]) + ")",
                                            ExtReal::zero(), ExtReal::zero(), {}});
  }
  return rep;
}

/// The iteration a -> F(a) -> F^2(a) -> ... seeded by f : a -> F(a).
/// Bond (k, k+1) is F^k(f); longer bonds compose. Requires mu(f) finite.
template <NormedCategory C, EndofunctorOn<C> F>
Sequence<C> orbit(const C& host, const F& functor, const arrow_id_t<C>& f) {
  auto a = host.dom(f);
  if (!(host.cod(f) == functor.map_object(a)))
    throw InputError("seed arrow must run from a to F(a)");
  if (host.norm(f).is_inf())
    throw InputError("seed arrow has infinite norm; the orbit cannot be Cauchy");

  C hostc = host;
  F fn = functor;
  auto object_gen = [hostc, fn, a](int k) {
    auto x = a;
    for (int i = 0; i < k; ++i) x = fn.map_object(x);
    return x;
  };
  auto step_gen = [fn, f](int k) {
    auto g = f;
    for (int i = 0; i < k; ++i) g = fn.map_arrow(g);
    return g;
  };
  return sequence_from_steps<C>(host, object_gen, step_gen);
}

/// Geometric tail of the orbit: mu(f) r^n / (1 - r) bounds mu(bond(n, m))
/// for every m >= n by chaining the triangle inequality through the steps.
inline ExtReal tail_bound(ExtReal mu_f, double r, int n) {
  if (!(r >= 0.0) || r >= 1.0) throw InputError("tail bound needs r in [0, 1)");
  if (mu_f.is_inf()) throw InputError("tail bound needs a finite seed norm");
  if (n < 0) throw InputError("tail bound index must be nonnegative");
  return ExtReal(mu_f.raw() * std::pow(r, n) / (1.0 - r));
}

/// Certificate with thresholds N(eps) = least n such that the tail bound
/// at n+1 falls below eps.
inline CauchyCertificate tail_certificate(ExtReal mu_f, double r,
                                          const std::vector<double>& eps_ladder =
                                              default_eps_ladder(),
                                          int max_threshold = 4096) {
  std::vector<std::pair<double, int>> rows;
  for (double eps : eps_ladder) {
    int n = 0;
    while (n <= max_threshold && !(tail_bound(mu_f, r, n + 1).raw() < eps)) ++n;
    if (n > max_threshold) continue;
    rows.push_back({eps, n});
  }
  if (rows.empty()) throw InputError("tail bound certifies no ladder eps");
  return CauchyCertificate(std::move(rows));
}

/// Outcome of the contraction solver on the embedding-projection host.
struct FixedPointResult {
  FiniteMetricSpace approximant;
  int iterations = 0;
  ExtReal residual;             // a-priori tail bound at the stopping index
  ExtReal witness_norm;         // measured delta of the stopping arrow F^n(f)
  double colimit_matrix_error;  // stability bound on the materialized distances
  bool incomplete = false;
  EpPair seed;                  // the arrow the orbit was grown from
};

/// Iterates the orbit of a verified contraction until the a-priori tail
/// bound drops to eps, then materializes the stage as a metric colimit of
/// the chain of stage spaces along the orbit embeddings. The residual is
/// the tail bound -- a certificate, not a heuristic. Exceeding max_iter
/// returns the partial result flagged incomplete.
template <EndofunctorOn<EpCategory> F>
FixedPointResult solve_fixed_point(const EpCategory& host, const F& functor, const EpPair& f,
                                   double eps, int max_iter = 64) {
  if (!(eps > 0.0)) throw InputError("target residual must be positive");
  double r = functor.factor();
  if (r >= 1.0) throw InputError("functor is not a contraction (factor >= 1)");

  std::vector<EpPair> samples{f, functor.map_arrow(f)};
  samples.push_back(ep_compose(samples[1], samples[0]));
  auto audit = verify_contraction(host, functor, samples);
  if (!audit.passed()) throw InputError("contraction verification failed on the seed samples");

  ExtReal mu_f = ep_delta(f);
  auto seq = orbit(host, functor, f);

  int n = 0;
  while (n <= max_iter && !(tail_bound(mu_f, r, n).raw() <= eps)) ++n;
  bool incomplete = n > max_iter;
  if (incomplete) n = max_iter;

  std::vector<ColimitStage> chain;
  chain.push_back({seq.object_at(0), {}});
  for (int k = 1; k <= n; ++k)
    chain.push_back({seq.object_at(k), seq.bond(k - 1, k).embed});
  auto colim = metric_colimit(chain, {{0.0, -1}});
  if (!colim.ok())
    throw InputError("orbit stages are not distance-stable: colimit refuted between stages " +
                     std::to_string(colim.refutation->stage_m) + " and " +
                     std::to_string(colim.refutation->stage_n));

  FixedPointResult out{*colim.approximant,
                       n,
                       tail_bound(mu_f, r, n),
                       ep_delta(seq.bond(n, n + 1)),
                       colim.error_bound,
                       incomplete,
                       f};
  return out;
}

/// Certificate check for a solver result, carried out in the completion:
/// the orbit is the fixed point and the shift transformation h_k = F^k(f)
/// is the witness. Its inverse is the reindex-by-one transformation whose
/// components are identities; both composites must equal the orbit's own
/// bond transformations exactly, and every measured shift norm from the
/// stopping index out to the check depth must stay within tol.
struct OrbitFixedPointCheck {
  bool verified = false;
  ExtReal deepest_norm;  // mu(F^depth(f)), the best estimate of the limit norm
  std::string note;
};

template <NormedCategory C, EndofunctorOn<C> F>
OrbitFixedPointCheck verify_fixed_point(const C& host, const F& functor, const arrow_id_t<C>& f,
                                        int iterations, double tol, int depth = -1) {
  OrbitFixedPointCheck out;
  if (depth < iterations) depth = iterations;  // one stage past the stop is built either way
  auto seq = orbit(host, functor, f);

  for (int k = 0; k < depth; ++k) {
    // the functor shifts the orbit onto itself: objects and components alike
    if (!(functor.map_object(seq.object_at(k)) == seq.object_at(k + 1))) {
      out.note = "F does not shift the orbit objects at k=" + std::to_string(k);
      return out;
    }
    auto hk = seq.bond(k, k + 1);  // = F^k(f)
    if (!(functor.map_arrow(hk) == seq.bond(k + 1, k + 2))) {
      out.note = "shifted component differs from the orbit bond at k=" + std::to_string(k);
      return out;
    }
    // naturality square of the shift, the two routes composed independently
    auto lhs = host.compose(functor.map_arrow(hk), hk);
    auto rhs = host.compose(seq.bond(k + 1, k + 2), seq.bond(k, k + 1));
    if (!(lhs == rhs)) {
      out.note = "shift transformation not natural at k=" + std::to_string(k);
      return out;
    }
    // composites with the reindex-by-one identity transformation are the bonds
    auto gh = host.compose(host.identity(seq.object_at(k + 1)), hk);
    auto hg = host.compose(seq.bond(k + 1, k + 2), host.identity(seq.object_at(k + 1)));
    if (!(gh == seq.bond(k, k + 1)) || !(hg == seq.bond(k + 1, k + 2))) {
      out.note = "shift composed with its inverse misses the bonds at k=" + std::to_string(k);
      return out;
    }
  }

  out.deepest_norm = host.norm(seq.bond(depth, depth + 1));
  for (int k = iterations; k <= depth; ++k) {
    ExtReal mu = host.norm(seq.bond(k, k + 1));
    if (!(mu.raw() <= tol)) {
      out.note = "mu(F^" + std::to_string(k) + "(f)) = " + mu.str() + " exceeds tol";
      return out;
    }
  }
  out.verified = true;
  return out;
}

/// Strict host-level check: h itself is a 0-isomorphism s -> F(s) within
/// tol. For hosts where inverses can be found (by hom enumeration or by a
/// direct inverse search).
template <class C, class F>
  requires(HomEnumerable<C> || InverseSearchable<C>) && EndofunctorOn<F, C>
bool verify_fixed_point_object(const C& host, const F& functor, const object_id_t<C>& s,
                               const arrow_id_t<C>& h, double tol) {
  if (!(host.dom(h) == s) || !(host.cod(h) == functor.map_object(s)))
    throw InputError("witness arrow must run from s to F(s)");
  auto z = is_zero_isomorphism(host, h, tol);
  return static_cast<bool>(z);
}

// ---------------------------------------------------------------------------
// Built-in functor algebra on finite metric spaces with EP arrows
// ---------------------------------------------------------------------------

/// Expression tree over the grammar
///   expr := "X" | "point" | "alphabet(k)" | "scale(c, expr)"
///         | "sum(expr, expr)" | "product(expr, expr)"
/// interpreted on finite metric spaces: product carries the max metric,
/// scale multiplies distances by c in (0,1), sum is the disjoint union
/// with cross-distance 2, alphabet(k) is k points pairwise at distance 1.
/// All of it keeps diameters at or below 2, so the sum stays a metric.
class MetricFunctorExpr {
 public:
  static MetricFunctorExpr parse(const std::string& text) {
    std::size_t pos = 0;
    auto node = parse_expr(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw InputError("trailing input after functor expression", at(pos));
    return MetricFunctorExpr(std::move(node));
  }

  FiniteMetricSpace map_object(const FiniteMetricSpace& x) const { return eval(*root_, x); }

  EpPair map_arrow(const EpPair& f) const {
    auto src = eval(*root_, f.source);
    auto tgt = eval(*root_, f.target);
    auto maps = arrow_maps(*root_, f);
    return EpPair(std::move(src), std::move(tgt), std::move(maps.first), std::move(maps.second));
  }

  double factor() const { return node_factor(*root_); }

  std::string str() const { return render(*root_); }

 private:
  struct Node {
    enum class Kind { Var, Point, Alphabet, Scale, Sum, Product } kind;
    double c = 0.0;  // scale factor
    int k = 0;       // alphabet size
    std::unique_ptr<Node> left, right;
  };

  explicit MetricFunctorExpr(std::unique_ptr<Node> root) : root_(std::move(root)) {}

  static std::string at(std::size_t pos) { return "offset " + std::to_string(pos); }
  static void skip_ws(const std::string& s, std::size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
  }
  static void expect(const std::string& s, std::size_t& p, char c) {
    skip_ws(s, p);
    if (p >= s.size() || s[p] != c)
      throw InputError(std::string("expected '") + c + "' in functor expression", at(p));
    ++p;
  }
  static std::unique_ptr<Node> parse_expr(const std::string& s, std::size_t& p) {
    skip_ws(s, p);
    std::size_t start = p;
    while (p < s.size() && (std::isalpha(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
    std::string word = s.substr(start, p - start);
    if (word == "X") return make(Node::Kind::Var);
    if (word == "point") return make(Node::Kind::Point);
    if (word == "alphabet") {
      expect(s, p, '(');
      auto n = make(Node::Kind::Alphabet);
      n->k = static_cast<int>(parse_number(s, p));
      if (n->k < 1) throw InputError("alphabet size must be at least 1", at(p));
      expect(s, p, ')');
      return n;
    }
    if (word == "scale") {
      expect(s, p, '(');
      auto n = make(Node::Kind::Scale);
      n->c = parse_number(s, p);
      if (!(n->c > 0.0 && n->c < 1.0))
        throw InputError("scale factor must lie strictly between 0 and 1", at(p));
      expect(s, p, ',');
      n->left = parse_expr(s, p);
      expect(s, p, ')');
      return n;
    }
    if (word == "sum" || word == "product") {
      expect(s, p, '(');
      auto n = make(word == "sum" ? Node::Kind::Sum : Node::Kind::Product);
      n->left = parse_expr(s, p);
      expect(s, p, ',');
      n->right = parse_expr(s, p);
      expect(s, p, ')');
      return n;
    }
    throw InputError("unknown functor constructor '" + word + "'", at(start));
  }
  static double parse_number(const std::string& s, std::size_t& p) {
    skip_ws(s, p);
    std::size_t consumed = 0;
    double v;
    try {
      v = std::stod(s.substr(p), &consumed);
    } catch (const std::exception&) {
      throw InputError("expected a number in functor expression", at(p));
    }
    p += consumed;
    return v;
  }
  static std::unique_ptr<Node> make(typename Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
  }

  static FiniteMetricSpace point_space() { return FiniteMetricSpace({"pt"}, {{0.0}}); }
  static FiniteMetricSpace alphabet_space(int k) {
    std::vector<std::string> pts;
    for (int i = 0; i < k; ++i) pts.push_back("a" + std::to_string(i));
    std::vector<std::vector<double>> d(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(k), 1.0));
    for (int i = 0; i < k; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
    return FiniteMetricSpace(std::move(pts), std::move(d));
  }

  static FiniteMetricSpace eval(const Node& n, const FiniteMetricSpace& x) {
    switch (n.kind) {
      case Node::Kind::Var: return x;
      case Node::Kind::Point: return point_space();
      case Node::Kind::Alphabet: return alphabet_space(n.k);
      case Node::Kind::Scale: {
        auto sub = eval(*n.left, x);
        std::size_t m = sub.size();
        std::vector<std::string> pts;
        std::vector<double> d(m * m);
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(m); ++i) {
          pts.push_back(sub.label(i));
          for (std::int32_t j = 0; j < static_cast<std::int32_t>(m); ++j)
            d[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)] = n.c * sub.dist(i, j);
        }
        return FiniteMetricSpace::from_trusted(std::move(pts), std::move(d));
      }
      case Node::Kind::Product: {
        auto l = eval(*n.left, x);
        auto r = eval(*n.right, x);
        std::size_t nl = l.size(), nr = r.size(), m = nl * nr;
        std::vector<std::string> pts;
        pts.reserve(m);
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(nl); ++i)
          for (std::int32_t j = 0; j < static_cast<std::int32_t>(nr); ++j)
            pts.push_back(l.label(i) + "|" + r.label(j));
        std::vector<double> d(m * m);
        for (std::size_t a = 0; a < m; ++a) {
          std::int32_t ai = static_cast<std::int32_t>(a / nr), aj = static_cast<std::int32_t>(a % nr);
          for (std::size_t b = 0; b < m; ++b) {
            std::int32_t bi = static_cast<std::int32_t>(b / nr), bj = static_cast<std::int32_t>(b % nr);
            d[a * m + b] = std::max(l.dist(ai, bi), r.dist(aj, bj));
          }
        }
        return FiniteMetricSpace::from_trusted(std::move(pts), std::move(d));
      }
      case Node::Kind::Sum: {
        auto l = eval(*n.left, x);
        auto r = eval(*n.right, x);
        // cross distance 2 keeps the triangle inequality only while both
        // component diameters stay at or below 2; the algebra preserves
        // that bound, arbitrary seeds may not
        if (l.diameter() > 2.0 || r.diameter() > 2.0)
          throw InputError("sum needs component diameters <= 2, got " +
                           std::to_string(std::max(l.diameter(), r.diameter())));
        std::size_t nl = l.size(), nr = r.size(), m = nl + nr;
        std::vector<std::string> pts;
        pts.reserve(m);
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(nl); ++i)
          pts.push_back("L." + l.label(i));
        for (std::int32_t j = 0; j < static_cast<std::int32_t>(nr); ++j)
          pts.push_back("R." + r.label(j));
        std::vector<double> d(m * m, 2.0);
        for (std::size_t i = 0; i < nl; ++i)
          for (std::size_t j = 0; j < nl; ++j)
            d[i * m + j] = l.dist(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
        for (std::size_t i = 0; i < nr; ++i)
          for (std::size_t j = 0; j < nr; ++j)
            d[(nl + i) * m + (nl + j)] = r.dist(static_cast<std::int32_t>(i),
                                                static_cast<std::int32_t>(j));
        return FiniteMetricSpace::from_trusted(std::move(pts), std::move(d));
      }
    }
    throw std::logic_error("unreachable functor node");
  }

  // (embed, project) index maps of F(f) in terms of f's maps
  static std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>> arrow_maps(
      const Node& n, const EpPair& f) {
    switch (n.kind) {
      case Node::Kind::Var: return {f.embed, f.project};
      case Node::Kind::Point: return {{0}, {0}};
      case Node::Kind::Alphabet: {
        std::vector<std::int32_t> id(static_cast<std::size_t>(n.k));
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::int32_t>(i);
        return {id, id};
      }
      case Node::Kind::Scale: return arrow_maps(*n.left, f);
      case Node::Kind::Product: {
        auto lm = arrow_maps(*n.left, f);
        auto rm = arrow_maps(*n.right, f);
        std::size_t src_r = rm.first.size(), tgt_r = rm.second.size();
        std::vector<std::int32_t> e(lm.first.size() * src_r), p(lm.second.size() * tgt_r);
        for (std::size_t i = 0; i < lm.first.size(); ++i)
          for (std::size_t j = 0; j < src_r; ++j)
            e[i * src_r + j] = static_cast<std::int32_t>(lm.first[i] * static_cast<std::int32_t>(tgt_r) +
                                                         rm.first[j]);
        for (std::size_t i = 0; i < lm.second.size(); ++i)
          for (std::size_t j = 0; j < tgt_r; ++j)
            p[i * tgt_r + j] = static_cast<std::int32_t>(lm.second[i] * static_cast<std::int32_t>(src_r) +
                                                         rm.second[j]);
        return {std::move(e), std::move(p)};
      }
      case Node::Kind::Sum: {
        auto lm = arrow_maps(*n.left, f);
        auto rm = arrow_maps(*n.right, f);
        std::vector<std::int32_t> e, p;
        std::int32_t tgt_l = static_cast<std::int32_t>(lm.second.size());
        std::int32_t src_l = static_cast<std::int32_t>(lm.first.size());
        for (auto v : lm.first) e.push_back(v);
        for (auto v : rm.first) e.push_back(tgt_l + v);
        for (auto v : lm.second) p.push_back(v);
        for (auto v : rm.second) p.push_back(src_l + v);
        return {std::move(e), std::move(p)};
      }
    }
    throw std::logic_error("unreachable functor node");
  }

  static double node_factor(const Node& n) {
    switch (n.kind) {
      case Node::Kind::Var: return 1.0;
      case Node::Kind::Point:
      case Node::Kind::Alphabet: return 0.0;
      case Node::Kind::Scale: return n.c * node_factor(*n.left);
      case Node::Kind::Product:
      case Node::Kind::Sum: return std::max(node_factor(*n.left), node_factor(*n.right));
    }
    throw std::logic_error("unreachable functor node");
  }

  static std::string render(const Node& n) {
    switch (n.kind) {
      case Node::Kind::Var: return "X";
      case Node::Kind::Point: return "point";
      case Node::Kind::Alphabet: return "alphabet(" + std::to_string(n.k) + ")";
      case Node::Kind::Scale: {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", n.c);
        return std::string("scale(") + buf + ", " + render(*n.left) + ")";
      }
      case Node::Kind::Product: return "product(" + render(*n.left) + ", " + render(*n.right) + ")";
      case Node::Kind::Sum: return "sum(" + render(*n.left) + ", " + render(*n.right) + ")";
    }
    throw std::logic_error("unreachable functor node");
  }

  std::shared_ptr<const Node> root_;
};

/// Seed for the iteration from the one-point space: embeds the point at
/// index 0 of F(point) and projects everything back.
template <EndofunctorOn<EpCategory> F>
EpPair default_seed(const F& functor) {
  FiniteMetricSpace start({"pt"}, {{0.0}});
  auto next = functor.map_object(start);
  std::vector<std::int32_t> project(next.size(), 0);
  return EpPair(start, next, {0}, std::move(project));
}

/// Lambda-backed functor for fixtures on arbitrary hosts.
template <NormedCategory C>
struct CallbackFunctor {
  std::function<object_id_t<C>(const object_id_t<C>&)> omap;
  std::function<arrow_id_t<C>(const arrow_id_t<C>&)> amap;
  double r;

  object_id_t<C> map_object(const object_id_t<C>& x) const { return omap(x); }
  arrow_id_t<C> map_arrow(const arrow_id_t<C>& f) const { return amap(f); }
  double factor() const { return r; }
};

template <NormedCategory C>
CallbackFunctor<C> identity_functor(const C&, double claimed_factor = 1.0) {
  return {[](const object_id_t<C>& x) { return x; },
          [](const arrow_id_t<C>& f) { return f; }, claimed_factor};
}

template <NormedCategory C>
CallbackFunctor<C> constant_functor(const C& host, object_id_t<C> b) {
  auto id_b = host.identity(b);
  return {[b](const object_id_t<C>&) { return b; },
          [id_b](const arrow_id_t<C>&) { return id_b; }, 0.0};
}

}  // namespace normcat
