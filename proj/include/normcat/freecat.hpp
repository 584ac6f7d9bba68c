#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"

namespace normcat {

/// Digraph with finite nonnegative arc weights. No axioms beyond that:
/// loops and parallel arcs are fine.
class WeightedDigraph {
 public:
  struct Arc {
    std::string id;
    std::string dom, cod;
    double weight;
  };

  WeightedDigraph(std::vector<std::string> vertices, std::vector<Arc> arcs)
      : vertex_labels_(std::move(vertices)) {
    std::sort(vertex_labels_.begin(), vertex_labels_.end());
    if (std::adjacent_find(vertex_labels_.begin(), vertex_labels_.end()) != vertex_labels_.end())
      throw InputError("duplicate vertex id");
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
      if (arcs[i].id == arcs[i + 1].id) throw InputError("duplicate arc id '" + arcs[i].id + "'");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Arc& a = arcs[i];
      if (!(a.weight >= 0.0) || !std::isfinite(a.weight))
        throw InputError("arc '" + a.id + "' has weight " + std::to_string(a.weight) +
                         "; weights must be finite and nonnegative");
      arc_ids_.push_back(a.id);
      dom_.push_back(vertex_index(a.dom));
      cod_.push_back(vertex_index(a.cod));
      weight_.push_back(a.weight);
    }
    out_.resize(vertex_labels_.size());
    in_.resize(vertex_labels_.size());
    for (std::size_t i = 0; i < arc_ids_.size(); ++i) {
      out_[static_cast<std::size_t>(dom_[i])].push_back(static_cast<std::int32_t>(i));
      in_[static_cast<std::size_t>(cod_[i])].push_back(static_cast<std::int32_t>(i));
    }
  }

  std::size_t vertex_count() const { return vertex_labels_.size(); }
  std::size_t arc_count() const { return arc_ids_.size(); }

  std::int32_t vertex_index(const std::string& label) const {
    auto it = std::lower_bound(vertex_labels_.begin(), vertex_labels_.end(), label);
    if (it == vertex_labels_.end() || *it != label)
      throw InputError("unknown vertex '" + label + "'");
    return static_cast<std::int32_t>(it - vertex_labels_.begin());
  }
  std::int32_t arc_index(const std::string& id) const {
    auto it = std::lower_bound(arc_ids_.begin(), arc_ids_.end(), id);
    if (it == arc_ids_.end() || *it != id) throw InputError("unknown arc '" + id + "'");
    return static_cast<std::int32_t>(it - arc_ids_.begin());
  }

  const std::string& vertex_label(std::int32_t v) const { return vertex_labels_.at(v); }
  const std::string& arc_id(std::int32_t a) const { return arc_ids_.at(a); }
  std::int32_t arc_dom(std::int32_t a) const { return dom_.at(a); }
  std::int32_t arc_cod(std::int32_t a) const { return cod_.at(a); }
  double arc_weight(std::int32_t a) const { return weight_.at(a); }
  const std::vector<std::int32_t>& out_arcs(std::int32_t v) const { return out_.at(v); }
  const std::vector<std::int32_t>& in_arcs(std::int32_t v) const { return in_.at(v); }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> arc_ids_;
  std::vector<std::int32_t> dom_, cod_;
  std::vector<double> weight_;
  std::vector<std::vector<std::int32_t>> out_, in_;
};

/// Arrow of the free category: a source vertex plus a finite run of
/// consecutive arcs. Empty runs are the identities.
struct PathArrow {
  std::int32_t source = 0;
  std::vector<std::int32_t> steps;
  std::int32_t target = 0;

  friend bool operator==(const PathArrow& a, const PathArrow& b) {
    return a.source == b.source && a.target == b.target && a.steps == b.steps;
  }
  friend bool operator<(const PathArrow& a, const PathArrow& b) {
    return std::tie(a.source, a.target, a.steps) < std::tie(b.source, b.target, b.steps);
  }
};

/// Checks a path's endpoint bookkeeping against the digraph.
inline void validate_path(const WeightedDigraph& g, const PathArrow& p) {
  if (p.source < 0 || static_cast<std::size_t>(p.source) >= g.vertex_count())
    throw InputError("path source out of range");
  std::int32_t at = p.source;
  for (auto a : p.steps) {
    if (a < 0 || static_cast<std::size_t>(a) >= g.arc_count())
      throw InputError("path step is not an arc of this digraph");
    if (g.arc_dom(a) != at)
      throw InputError("path steps do not chain at arc '" + g.arc_id(a) + "'");
    at = g.arc_cod(a);
  }
  if (at != p.target) throw InputError("path target does not match its steps");
}

/// Concatenation; f after g, so g's run comes first.
inline PathArrow compose_paths(const PathArrow& f, const PathArrow& g) {
  if (f.source != g.target)
    throw InputError("paths do not compose: f starts at a different vertex than g ends");
  PathArrow out;
  out.source = g.source;
  out.target = f.target;
  out.steps = g.steps;
  out.steps.insert(out.steps.end(), f.steps.begin(), f.steps.end());
  return out;
}

/// Total weight of the run. Exactly additive under composition: the norm of
/// a concatenation is the sum of the norms, which is strictly stronger than
/// the triangle axioms require.
inline ExtReal path_norm(const WeightedDigraph& g, const PathArrow& p) {
  validate_path(g, p);
  double s = 0.0;
  for (auto a : p.steps) s += g.arc_weight(a);
  return ExtReal(s);
}

/// The free category of paths over a weighted digraph, as a lazy view.
///
/// Hom-sets are generally infinite (any cycle generates arbitrarily long
/// paths), so enumeration is capped by a mandatory maximum path length
/// chosen at construction; arrows_exhaustive reports per pair whether the
/// cap truncated anything. Composition is untruncated: composing two
/// enumerated paths may well exceed the cap, and the result is still a
/// perfectly good arrow.
class FreeCategoryView {
 public:
  using object_id = std::int32_t;
  using arrow_id = PathArrow;

  FreeCategoryView(WeightedDigraph g, std::size_t max_path_len)
      : g_(std::move(g)), cap_(max_path_len) {}

  std::vector<object_id> objects() const {
    std::vector<object_id> out(g_.vertex_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<object_id>(i);
    return out;
  }

  /// Paths x -> y of length <= cap, ordered by (length, lexicographic arc
  /// indices) so enumeration is reproducible.
  std::vector<arrow_id> arrows(object_id x, object_id y) const {
    std::vector<arrow_id> out;
    std::vector<PathArrow> frontier;
    PathArrow empty{x, {}, x};
    if (x == y) out.push_back(empty);
    frontier.push_back(empty);
    for (std::size_t len = 1; len <= cap_ && !frontier.empty(); ++len) {
      std::vector<PathArrow> next;
      for (const auto& p : frontier)
        for (auto a : g_.out_arcs(p.target)) {
          PathArrow q = p;
          q.steps.push_back(a);
          q.target = g_.arc_cod(a);
          if (q.target == y) out.push_back(q);
          next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    return out;
  }

  /// Exhaustive iff every x -> y path fits under the cap: the portion of
  /// the digraph lying on some x -> y walk must be acyclic and its longest
  /// path no longer than the cap.
  bool arrows_exhaustive(object_id x, object_id y) const {
    auto relevant = walk_vertices(x, y);
    if (relevant.empty()) return true;  // no walk at all; hom-set is empty or just the identity
    // Longest-path DP over the induced subgraph; a cycle shows up as a
    // vertex revisited along the current DFS stack.
    std::vector<int> state(g_.vertex_count(), 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::size_t> longest(g_.vertex_count(), 0);
    bool cyclic = false;
    std::function<void(std::int32_t)> dfs = [&](std::int32_t v) {
      state[v] = 1;
      for (auto a : g_.out_arcs(v)) {
        std::int32_t w = g_.arc_cod(a);
        if (!relevant.count(w)) continue;
        if (state[w] == 1) {
          cyclic = true;
          continue;
        }
        if (state[w] == 0) dfs(w);
        longest[v] = std::max(longest[v], longest[w] + 1);
      }
      state[v] = 2;
    };
    dfs(x);
    return !cyclic && longest[x] <= cap_;
  }

  object_id dom(const arrow_id& p) const { return p.source; }
  object_id cod(const arrow_id& p) const { return p.target; }
  arrow_id identity(object_id x) const { return {x, {}, x}; }
  bool composable(const arrow_id& f, const arrow_id& g) const { return f.source == g.target; }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const { return compose_paths(f, g); }
  ExtReal norm(const arrow_id& p) const { return path_norm(g_, p); }

  std::string describe_object(object_id x) const { return g_.vertex_label(x); }
  std::string describe_arrow(const arrow_id& p) const {
    std::string s = g_.vertex_label(p.source) + ":[";
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      if (i) s += ",";
      s += g_.arc_id(p.steps[i]);
    }
    return s + "]";
  }

  const WeightedDigraph& digraph() const { return g_; }
  std::size_t cap() const { return cap_; }

 private:
  std::set<std::int32_t> walk_vertices(object_id x, object_id y) const {
    auto reach = [&](std::int32_t from, bool forward) {
      std::set<std::int32_t> seen{from};
      std::vector<std::int32_t> stack{from};
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto a : forward ? g_.out_arcs(v) : g_.in_arcs(v)) {
          auto w = forward ? g_.arc_cod(a) : g_.arc_dom(a);
          if (seen.insert(w).second) stack.push_back(w);
        }
      }
      return seen;
    };
    auto fwd = reach(x, true);
    auto bwd = reach(y, false);
    std::set<std::int32_t> both;
    std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                          std::inserter(both, both.begin()));
    return both;
  }

  WeightedDigraph g_;
  std::size_t cap_;
};

inline FreeCategoryView free_category(WeightedDigraph g, std::size_t max_path_len) {
  return FreeCategoryView(std::move(g), max_path_len);
}

/// Least total weight over all x -> y paths, with a witness path. The
/// infimum over the (infinite) free hom-set is attained by a simple path
/// because weights are nonnegative, so label-setting search is exact.
/// Unreachable pairs give inf and no witness.
struct ShortestPathResult {
  ExtReal distance;
  std::optional<PathArrow> path;
};

inline ShortestPathResult quasimetric_shortest_path(const WeightedDigraph& g, std::int32_t x,
                                                    std::int32_t y) {
  const std::size_t n = g.vertex_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::int32_t> pred_arc(n, -1);
  std::vector<bool> settled(n, false);
  // (distance, vertex); vertex order breaks ties so witnesses are stable.
  using Entry = std::pair<double, std::int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[static_cast<std::size_t>(x)] = 0.0;
  pq.push({0.0, x});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (settled[static_cast<std::size_t>(v)]) continue;
    settled[static_cast<std::size_t>(v)] = true;
    for (auto a : g.out_arcs(v)) {
      auto w = g.arc_cod(a);
      double nd = d + g.arc_weight(a);
      if (nd < dist[static_cast<std::size_t>(w)]) {
        dist[static_cast<std::size_t>(w)] = nd;
        pred_arc[static_cast<std::size_t>(w)] = a;
        pq.push({nd, w});
      }
    }
  }
  if (!std::isfinite(dist[static_cast<std::size_t>(y)]))
    return {ExtReal::infinity(), std::nullopt};
  PathArrow p{x, {}, y};
  for (std::int32_t v = y; v != x;) {
    auto a = pred_arc[static_cast<std::size_t>(v)];
    p.steps.push_back(a);
    v = g.arc_dom(a);
  }
  std::reverse(p.steps.begin(), p.steps.end());
  return {ExtReal(dist[static_cast<std::size_t>(y)]), p};
}

inline ShortestPathResult quasimetric_shortest_path(const WeightedDigraph& g,
                                                    const std::string& from,
                                                    const std::string& to) {
  return quasimetric_shortest_path(g, g.vertex_index(from), g.vertex_index(to));
}

/// Delegation for free categories: the induced object distance is the
/// shortest-path weight, computed exactly instead of enumerated under a cap.
inline QuasiMetricValue<FreeCategoryView> induced_quasimetric(const FreeCategoryView& cat,
                                                              std::int32_t x, std::int32_t y) {
  auto sp = quasimetric_shortest_path(cat.digraph(), x, y);
  return {sp.distance, true, sp.path};
}

/// A not-necessarily-symmetric distance matrix becomes a complete weighted
/// digraph with one arc per ordered pair; the free category over it carries
/// the original distances as the norms of the length-one paths.
inline WeightedDigraph asymmetric_space_to_digraph(const std::vector<std::string>& points,
                                                   const std::vector<std::vector<double>>& rho) {
  if (rho.size() != points.size()) throw InputError("distance matrix is not square");
  std::vector<WeightedDigraph::Arc> arcs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (rho[i].size() != points.size()) throw InputError("distance matrix is not square");
    if (rho[i][i] != 0.0) throw InputError("nonzero self-distance at '" + points[i] + "'");
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      if (!(rho[i][j] >= 0.0) || !std::isfinite(rho[i][j]))
        throw InputError("distance from '" + points[i] + "' to '" + points[j] +
                         "' must be finite and nonnegative");
      arcs.push_back({points[i] + ">" + points[j], points[i], points[j], rho[i][j]});
    }
  }
  return WeightedDigraph(points, std::move(arcs));
}

}  // namespace normcat
