#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"

namespace normcat {

/// Finite metric space: positive symmetric distances, zero diagonal,
/// triangle inequality. The public constructor validates all of it (slack
/// 1e-12 on the triangle check; inputs here are constructed, not
/// measured). Storage is shared and immutable, so copies are handle-cheap
/// and orbit stages with thousands of points stay affordable.
///
/// from_trusted skips the cubic triangle scan for spaces whose validity is
/// structural (scalings, max-metric products, bounded disjoint sums of
/// valid spaces); shape, symmetry and positivity are still enforced.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> points, std::vector<std::vector<double>> dist)
      : FiniteMetricSpace(std::move(points), flatten(dist), full_check{}) {}

  static FiniteMetricSpace from_trusted(std::vector<std::string> points, std::vector<double> flat) {
    return FiniteMetricSpace(std::move(points), std::move(flat), shape_check{});
  }

  std::size_t size() const { return data_->labels.size(); }
  double dist(std::int32_t i, std::int32_t j) const {
    return data_->d[static_cast<std::size_t>(i) * data_->labels.size() + static_cast<std::size_t>(j)];
  }
  const std::string& label(std::int32_t i) const {
    return data_->labels.at(static_cast<std::size_t>(i));
  }
  std::int32_t index(const std::string& label) const {
    for (std::size_t i = 0; i < data_->labels.size(); ++i)
      if (data_->labels[i] == label) return static_cast<std::int32_t>(i);
    throw InputError("unknown point '" + label + "'");
  }
  double diameter() const {
    double m = 0.0;
    for (double v : data_->d) m = std::max(m, v);
    return m;
  }

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->labels == b.data_->labels && a.data_->d == b.data_->d;
  }
  friend bool operator!=(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return !(a == b);
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<double> d;  // row-major, size n*n
  };
  struct full_check {};
  struct shape_check {};

  static std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw InputError("distance matrix is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }

  FiniteMetricSpace(std::vector<std::string> points, std::vector<double> flat, shape_check)
      : data_(std::make_shared<Data>(Data{std::move(points), std::move(flat)})) {
    const auto& labels = data_->labels;
    const auto& d = data_->d;
    const std::size_t n = labels.size();
    if (n == 0) throw InputError("metric space needs at least one point");
    if (d.size() != n * n) throw InputError("distance matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i * n + i] != 0.0) throw InputError("nonzero diagonal at '" + labels[i] + "'");
      for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(d[i * n + j]) || d[i * n + j] < 0.0)
          throw InputError("distance (" + labels[i] + ", " + labels[j] + ") must be finite >= 0");
        if (i != j && d[i * n + j] <= 0.0)
          throw InputError("distinct points '" + labels[i] + "', '" + labels[j] +
                           "' at distance zero");
        if (d[i * n + j] != d[j * n + i])
          throw InputError("asymmetric distances at ('" + labels[i] + "', '" + labels[j] + "')");
      }
    }
  }

  FiniteMetricSpace(std::vector<std::string> points, std::vector<double> flat, full_check)
      : FiniteMetricSpace(std::move(points), std::move(flat), shape_check{}) {
    const auto& labels = data_->labels;
    const auto& d = data_->d;
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (d[i * n + j] > d[i * n + k] + d[k * n + j] + 1e-12)
            throw InputError("triangle inequality fails on ('" + labels[i] + "', '" + labels[j] +
                             "', '" + labels[k] + "')");
  }

  std::shared_ptr<const Data> data_;
};

/// Point map between finite metric spaces. Every such map is Lipschitz;
/// the constant just measures how badly it distorts.
struct LipschitzMap {
  FiniteMetricSpace source, target;
  std::vector<std::int32_t> assign;  // source index -> target index

  LipschitzMap(FiniteMetricSpace src, FiniteMetricSpace tgt, std::vector<std::int32_t> a)
      : source(std::move(src)), target(std::move(tgt)), assign(std::move(a)) {
    if (assign.size() != source.size()) throw InputError("assignment is not total");
    for (auto t : assign)
      if (t < 0 || static_cast<std::size_t>(t) >= target.size())
        throw InputError("assignment hits a point outside the target space");
  }

  std::int32_t operator()(std::int32_t i) const { return assign.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const LipschitzMap& a, const LipschitzMap& b) {
    return a.assign == b.assign && a.source == b.source && a.target == b.target;
  }
};

inline LipschitzMap compose_maps(const LipschitzMap& f, const LipschitzMap& g) {
  if (!(f.source == g.target)) throw InputError("maps do not compose");
  std::vector<std::int32_t> a(g.assign.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.assign[static_cast<std::size_t>(g.assign[i])];
  return LipschitzMap(g.source, f.target, std::move(a));
}

inline bool is_injective(const LipschitzMap& f) {
  std::vector<std::int32_t> seen;
  for (auto t : f.assign) {
    if (std::find(seen.begin(), seen.end(), t) != seen.end()) return false;
    seen.push_back(t);
  }
  return true;
}

/// sup over distinct point pairs of the image-to-source distance ratio;
/// 0 when the sup is empty (one-point domain).
inline ExtReal lip_constant(const LipschitzMap& f) {
  double lip = 0.0;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(f.source.size()); ++i)
    for (std::int32_t j = i + 1; j < static_cast<std::int32_t>(f.source.size()); ++j)
      lip = std::max(lip, f.target.dist(f(i), f(j)) / f.source.dist(i, j));
  return ExtReal(lip);
}

/// Lipschitz constant of the inverse: inf when f is not one-to-one,
/// otherwise the sup of the reciprocal ratios.
inline ExtReal inverse_lip_constant(const LipschitzMap& f) {
  if (!is_injective(f)) return ExtReal::infinity();
  double lip = 0.0;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(f.source.size()); ++i)
    for (std::int32_t j = i + 1; j < static_cast<std::int32_t>(f.source.size()); ++j)
      lip = std::max(lip, f.source.dist(i, j) / f.target.dist(f(i), f(j)));
  return ExtReal(lip);
}

/// log of the worse of the two Lipschitz constants. inf when f is not
/// one-to-one; exactly 0 iff f is an isometric embedding. A one-point
/// domain leaves both sups empty and gets 0 by convention.
inline ExtReal lipschitz_norm(const LipschitzMap& f) {
  ExtReal fwd = lip_constant(f);
  ExtReal bwd = inverse_lip_constant(f);
  if (bwd.is_inf()) return ExtReal::infinity();
  double worst = std::max(fwd.raw(), bwd.raw());
  if (worst == 0.0) return ExtReal::zero();
  return ExtReal(std::log(worst));
}

inline bool is_isometric_embedding(const LipschitzMap& f, double tol = 1e-12) {
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(f.source.size()); ++i)
    for (std::int32_t j = i + 1; j < static_cast<std::int32_t>(f.source.size()); ++j)
      if (std::fabs(f.target.dist(f(i), f(j)) - f.source.dist(i, j)) > tol) return false;
  return true;
}

/// All point maps among a fixed list of finite metric spaces, normed by the
/// Lipschitz norm. Hom-sets have |Y|^|X| arrows, so this materialized view
/// is for small audit fixtures; construction refuses anything that would
/// enumerate more than a million maps per hom-set.
class LipschitzCategory {
 public:
  using object_id = std::int32_t;
  struct arrow_id {
    std::int32_t src, dst;
    std::vector<std::int32_t> assign;
    friend bool operator==(const arrow_id& a, const arrow_id& b) {
      return a.src == b.src && a.dst == b.dst && a.assign == b.assign;
    }
  };

  explicit LipschitzCategory(std::vector<FiniteMetricSpace> spaces) : spaces_(std::move(spaces)) {
    for (const auto& x : spaces_)
      for (const auto& y : spaces_) {
        double count = std::pow(static_cast<double>(y.size()), static_cast<double>(x.size()));
        if (count > 1e6)
          throw InputError("hom-set too large to materialize (" + std::to_string(count) + " maps)");
      }
  }

  std::vector<object_id> objects() const {
    std::vector<object_id> out(spaces_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<object_id>(i);
    return out;
  }
  std::vector<arrow_id> arrows(object_id x, object_id y) const {
    const auto& X = spaces_.at(static_cast<std::size_t>(x));
    const auto& Y = spaces_.at(static_cast<std::size_t>(y));
    std::vector<arrow_id> out;
    std::vector<std::int32_t> assign(X.size(), 0);
    for (;;) {
      out.push_back({x, y, assign});
      std::size_t i = assign.size();
      while (i > 0) {
        --i;
        if (++assign[i] < static_cast<std::int32_t>(Y.size())) break;
        assign[i] = 0;
        if (i == 0) return out;
      }
    }
  }
  bool arrows_exhaustive(object_id, object_id) const { return true; }
  object_id dom(const arrow_id& f) const { return f.src; }
  object_id cod(const arrow_id& f) const { return f.dst; }
  arrow_id identity(object_id x) const {
    std::vector<std::int32_t> a(spaces_.at(static_cast<std::size_t>(x)).size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::int32_t>(i);
    return {x, x, std::move(a)};
  }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.src == g.dst; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (!composable(f, g)) throw std::logic_error("non-composable maps");
    std::vector<std::int32_t> a(g.assign.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] = f.assign.at(static_cast<std::size_t>(g.assign[i]));
    return {g.src, f.dst, std::move(a)};
  }
  ExtReal norm(const arrow_id& f) const { return lipschitz_norm(as_map(f)); }
  std::string describe_object(object_id x) const {
    return "X" + std::to_string(x) + "(n=" + std::to_string(spaces_[static_cast<std::size_t>(x)].size()) + ")";
  }
  std::string describe_arrow(const arrow_id& f) const {
    std::string s = "map X" + std::to_string(f.src) + "->X" + std::to_string(f.dst) + "[";
    for (std::size_t i = 0; i < f.assign.size(); ++i) {
      if (i) s += ",";
      s += spaces_[static_cast<std::size_t>(f.src)].label(static_cast<std::int32_t>(i)) + ">" +
           spaces_[static_cast<std::size_t>(f.dst)].label(f.assign[i]);
    }
    return s + "]";
  }

  LipschitzMap as_map(const arrow_id& f) const {
    return LipschitzMap(spaces_.at(static_cast<std::size_t>(f.src)),
                        spaces_.at(static_cast<std::size_t>(f.dst)), f.assign);
  }
  const FiniteMetricSpace& space(object_id x) const { return spaces_.at(static_cast<std::size_t>(x)); }

 private:
  std::vector<FiniteMetricSpace> spaces_;
};

// ---------------------------------------------------------------------------
// Embedding-projection pairs
// ---------------------------------------------------------------------------

/// Arrow X -> Y made of an isometric embedding e: X -> Y and a non-expansive
/// projection p: Y -> X with p . e = id. delta measures how far e . p sits
/// from the identity of Y, i.e. how well X approximates Y.
struct EpPair {
  FiniteMetricSpace source, target;
  std::vector<std::int32_t> embed;    // source -> target
  std::vector<std::int32_t> project;  // target -> source

  EpPair(FiniteMetricSpace src, FiniteMetricSpace tgt, std::vector<std::int32_t> e,
         std::vector<std::int32_t> p)
      : source(std::move(src)), target(std::move(tgt)), embed(std::move(e)), project(std::move(p)) {
    validate();
  }

  void validate(double tol = 1e-12) const {
    if (embed.size() != source.size() || project.size() != target.size())
      throw InputError("embedding/projection are not total");
    for (auto t : embed)
      if (t < 0 || static_cast<std::size_t>(t) >= target.size())
        throw InputError("embedding leaves the target space");
    for (auto s : project)
      if (s < 0 || static_cast<std::size_t>(s) >= source.size())
        throw InputError("projection leaves the source space");
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(source.size()); ++i)
      for (std::int32_t j = 0; j < static_cast<std::int32_t>(source.size()); ++j)
        if (std::fabs(target.dist(embed[static_cast<std::size_t>(i)], embed[static_cast<std::size_t>(j)]) -
                      source.dist(i, j)) > tol)
          throw InputError("embedding is not isometric at ('" + source.label(i) + "', '" +
                           source.label(j) + "')");
    for (std::int32_t y = 0; y < static_cast<std::int32_t>(target.size()); ++y)
      for (std::int32_t z = 0; z < static_cast<std::int32_t>(target.size()); ++z)
        if (source.dist(project[static_cast<std::size_t>(y)], project[static_cast<std::size_t>(z)]) >
            target.dist(y, z) + tol)
          throw InputError("projection is not non-expansive at ('" + target.label(y) + "', '" +
                           target.label(z) + "')");
    for (std::size_t i = 0; i < embed.size(); ++i)
      if (project[static_cast<std::size_t>(embed[i])] != static_cast<std::int32_t>(i))
        throw InputError("projection does not retract the embedding at '" +
                         source.label(static_cast<std::int32_t>(i)) + "'");
  }

  friend bool operator==(const EpPair& a, const EpPair& b) {
    return a.embed == b.embed && a.project == b.project && a.source == b.source &&
           a.target == b.target;
  }
};

/// sup over the target of the displacement e(p(y)) vs y. Zero exactly when
/// the pair is a two-sided isometry.
inline ExtReal ep_delta(const EpPair& f) {
  double worst = 0.0;
  for (std::int32_t y = 0; y < static_cast<std::int32_t>(f.target.size()); ++y)
    worst = std::max(worst, f.target.dist(f.embed[static_cast<std::size_t>(
                                              f.project[static_cast<std::size_t>(y)])],
                                          y));
  return ExtReal(worst);
}

inline EpPair ep_identity(const FiniteMetricSpace& x) {
  std::vector<std::int32_t> id(x.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::int32_t>(i);
  return EpPair(x, x, id, id);
}

/// f after g: embeddings compose forward, projections backward. The result
/// is revalidated, which for valid inputs cannot fail.
inline EpPair ep_compose(const EpPair& f, const EpPair& g) {
  if (!(g.target == f.source)) throw InputError("embedding-projection pairs do not compose");
  std::vector<std::int32_t> e(g.embed.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = f.embed.at(static_cast<std::size_t>(g.embed[i]));
  std::vector<std::int32_t> p(f.project.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = g.project.at(static_cast<std::size_t>(f.project[i]));
  return EpPair(g.source, f.target, std::move(e), std::move(p));
}

namespace detail {
inline std::string space_tag(const FiniteMetricSpace& s) {
  // FNV-1a over labels and distance bits; identifies a space in reports.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const void* data, std::size_t n) {
    const unsigned char* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(s.size()); ++i) {
    mix(s.label(i).data(), s.label(i).size());
    for (std::int32_t j = 0; j < static_cast<std::int32_t>(s.size()); ++j) {
      double d = s.dist(i, j);
      mix(&d, sizeof(d));
    }
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}
}  // namespace detail

/// The category of finite metric spaces with embedding-projection arrows
/// and the delta norm. Objects are space values; hom-sets are not
/// enumerable (there is no useful bound), but inverses can be searched
/// directly: an arrow is invertible exactly when its embedding is onto.
class EpCategory {
 public:
  using object_id = FiniteMetricSpace;
  using arrow_id = EpPair;

  object_id dom(const arrow_id& f) const { return f.source; }
  object_id cod(const arrow_id& f) const { return f.target; }
  arrow_id identity(const object_id& x) const { return ep_identity(x); }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.source == g.target; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const { return ep_compose(f, g); }
  ExtReal norm(const arrow_id& f) const { return ep_delta(f); }

  std::optional<arrow_id> invert(const arrow_id& f) const {
    if (f.source.size() != f.target.size()) return std::nullopt;
    std::vector<bool> hit(f.target.size(), false);
    for (auto t : f.embed) hit[static_cast<std::size_t>(t)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return std::nullopt;
    return EpPair(f.target, f.source, f.project, f.embed);
  }

  std::string describe_object(const object_id& x) const {
    return "space#" + detail::space_tag(x) + "(n=" + std::to_string(x.size()) + ")";
  }
  std::string describe_arrow(const arrow_id& f) const {
    return "ep:" + describe_object(f.source) + "->" + describe_object(f.target);
  }
};

// ---------------------------------------------------------------------------
// Metric colimits of chains
// ---------------------------------------------------------------------------

/// One link of a chain: the stage space plus the point injection from the
/// previous stage (empty for the first stage).
struct ColimitStage {
  FiniteMetricSpace space;
  std::vector<std::int32_t> inject;
};

struct ColimitRefutation {
  std::string point_a, point_b;
  int stage_m, stage_n;
  double delta;
  double eps;
};

struct ColimitOutcome {
  std::optional<FiniteMetricSpace> approximant;
  double error_bound = std::numeric_limits<double>::infinity();
  int stages = 0;
  std::optional<ColimitRefutation> refutation;

  bool ok() const { return approximant.has_value(); }
};

/// Horizon-bounded colimit of a chain of metric spaces along point
/// injections. Per-pair distance sequences must be Cauchy with the supplied
/// modulus (rows (eps, N) claim |rho_m - rho_n| < eps for N < m <= n); a
/// violation inside the horizon refutes the input with a witness. The
/// approximant is the final stage on the union point set; its matrix is
/// within error_bound of every later stage, where error_bound is the
/// smallest eps whose threshold the horizon has passed.
inline ColimitOutcome metric_colimit(const std::vector<ColimitStage>& chain,
                                     const std::vector<std::pair<double, int>>& modulus) {
  if (chain.empty()) throw InputError("empty chain");
  if (!chain.front().inject.empty()) throw InputError("first stage must not have an injection");
  const int H = static_cast<int>(chain.size()) - 1;

  // forward[k][i] = index of stage-k point i in the final stage
  std::vector<std::vector<std::int32_t>> forward(chain.size());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& st = chain[k];
    if (k > 0) {
      if (st.inject.size() != chain[k - 1].space.size())
        throw InputError("stage " + std::to_string(k) + " injection is not total");
      std::vector<bool> hit(st.space.size(), false);
      for (auto t : st.inject) {
        if (t < 0 || static_cast<std::size_t>(t) >= st.space.size())
          throw InputError("stage " + std::to_string(k) + " injection leaves the space");
        if (hit[static_cast<std::size_t>(t)])
          throw InputError("stage " + std::to_string(k) + " injection is not injective");
        hit[static_cast<std::size_t>(t)] = true;
      }
    }
  }
  forward[chain.size() - 1].resize(chain.back().space.size());
  for (std::size_t i = 0; i < chain.back().space.size(); ++i)
    forward[chain.size() - 1][i] = static_cast<std::int32_t>(i);
  for (std::size_t k = chain.size() - 1; k-- > 0;) {
    forward[k].resize(chain[k].space.size());
    for (std::size_t i = 0; i < chain[k].space.size(); ++i)
      forward[k][i] = forward[k + 1][static_cast<std::size_t>(chain[k + 1].inject[i])];
  }

  // Distance sequences per final-stage pair, defined from the first stage
  // where both points exist.
  const auto& last = chain.back().space;
  for (std::size_t k = 0; k < chain.size(); ++k)
    for (std::size_t m = k; m < chain.size(); ++m) {
      // compare rho_k with rho_m on stage-k points (mapped into stage m)
      std::vector<std::int32_t> to_m(chain[k].space.size());
      for (std::size_t i = 0; i < to_m.size(); ++i) {
        std::int32_t at = static_cast<std::int32_t>(i);
        for (std::size_t s = k; s < m; ++s) at = chain[s + 1].inject[static_cast<std::size_t>(at)];
        to_m[i] = at;
      }
      for (const auto& [eps, N] : modulus) {
        if (static_cast<int>(k) <= N) continue;  // row (eps, N) constrains N < k <= m only
        for (std::int32_t a = 0; a < static_cast<std::int32_t>(chain[k].space.size()); ++a)
          for (std::int32_t b = a + 1; b < static_cast<std::int32_t>(chain[k].space.size()); ++b) {
            double da = chain[k].space.dist(a, b);
            double db = chain[m].space.dist(to_m[static_cast<std::size_t>(a)],
                                            to_m[static_cast<std::size_t>(b)]);
            double delta = std::fabs(da - db);
            bool bad = eps == 0.0 ? delta > 0.0 : delta >= eps;
            if (bad) {
              ColimitOutcome out;
              out.stages = H + 1;
              out.refutation = ColimitRefutation{chain[k].space.label(a), chain[k].space.label(b),
                                                 static_cast<int>(k), static_cast<int>(m), delta,
                                                 eps};
              return out;
            }
          }
      }
    }

  ColimitOutcome out;
  out.approximant = last;
  out.stages = H + 1;
  for (const auto& [eps, N] : modulus)
    if (N <= H) out.error_bound = std::min(out.error_bound, eps);
  return out;
}

}  // namespace normcat
