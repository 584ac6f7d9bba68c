#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/extreal.hpp"

namespace normcat {

/// Disjoint sum of two copies of a host: objects and arrows carry a side
/// tag, composition stays within a side, and there are no arrows across.
/// Cross hom-sets are empty *exhaustively*, whatever the host can
/// enumerate, which is exactly what makes non-isomorphic duplicate fixed
/// points checkable.
template <NormedCategory C>
class SumCategory {
 public:
  using object_id = std::pair<int, object_id_t<C>>;  // side 0|1, payload
  using arrow_id = std::pair<int, arrow_id_t<C>>;

  explicit SumCategory(C base) : base_(std::move(base)) {}

  object_id dom(const arrow_id& f) const { return {f.first, base_.dom(f.second)}; }
  object_id cod(const arrow_id& f) const { return {f.first, base_.cod(f.second)}; }
  arrow_id identity(const object_id& x) const { return {x.first, base_.identity(x.second)}; }
  bool composable(const arrow_id& f, const arrow_id& g) const {
    return f.first == g.first && base_.composable(f.second, g.second);
  }
  arrow_id compose(const arrow_id& f, const arrow_id& g) const {
    if (f.first != g.first) throw std::logic_error("arrows on different sides never compose");
    return {f.first, base_.compose(f.second, g.second)};
  }
  ExtReal norm(const arrow_id& f) const { return base_.norm(f.second); }

  std::vector<arrow_id> arrows(const object_id& x, const object_id& y) const {
    std::vector<arrow_id> out;
    if (x.first != y.first) return out;  // empty, and exhaustively so
    if constexpr (HomEnumerable<C>) {
      for (auto& f : base_.arrows(x.second, y.second)) out.push_back({x.first, f});
    }
    return out;
  }
  bool arrows_exhaustive(const object_id& x, const object_id& y) const {
    if (x.first != y.first) return true;
    if constexpr (HomEnumerable<C>) return base_.arrows_exhaustive(x.second, y.second);
    return false;
  }

  std::vector<object_id> objects() const
    requires ObjectEnumerable<C>
  {
    std::vector<object_id> out;
    for (int side : {0, 1})
      for (auto& x : base_.objects()) out.push_back({side, x});
    return out;
  }

  std::optional<arrow_id> invert(const arrow_id& f) const
    requires InverseSearchable<C>
  {
    auto g = base_.invert(f.second);
    if (!g) return std::nullopt;
    return arrow_id{f.first, *g};
  }

  std::string describe_object(const object_id& x) const {
    return (x.first == 0 ? "left:" : "right:") + base_.describe_object(x.second);
  }
  std::string describe_arrow(const arrow_id& f) const {
    return (f.first == 0 ? "left:" : "right:") + base_.describe_arrow(f.second);
  }

  const C& base() const { return base_; }

 private:
  C base_;
};

/// F + F acting sidewise on a sum category.
template <class F>
struct SumFunctor {
  F left, right;

  template <class Obj>
  std::pair<int, Obj> map_object(const std::pair<int, Obj>& x) const {
    return {x.first, x.first == 0 ? left.map_object(x.second) : right.map_object(x.second)};
  }
  template <class Arr>
  std::pair<int, Arr> map_arrow(const std::pair<int, Arr>& f) const {
    return {f.first, f.first == 0 ? left.map_arrow(f.second) : right.map_arrow(f.second)};
  }
  double factor() const { return std::max(left.factor(), right.factor()); }
};

}  // namespace normcat
