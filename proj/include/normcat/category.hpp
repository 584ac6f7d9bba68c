#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "normcat/extreal.hpp"

namespace normcat {

/// Behavioral interface of a normed category, as a concept.
///
/// An instance supplies object and arrow handles (value types with
/// equality), the category structure on them, and a norm into [0, +inf].
/// compose(f, g) is f-after-g and is defined exactly when composable(f, g);
/// calling it on a non-composable pair is a logic error, never silence.
///
/// describe_object / describe_arrow render handles for reports and
/// counterexample witnesses; they carry no semantics.
template <class C>
concept NormedCategory = requires(const C& cat, const typename C::object_id& x,
                                  const typename C::arrow_id& f, const typename C::arrow_id& g) {
  typename C::object_id;
  typename C::arrow_id;
  requires std::equality_comparable<typename C::object_id>;
  requires std::equality_comparable<typename C::arrow_id>;
  { cat.dom(f) } -> std::convertible_to<typename C::object_id>;
  { cat.cod(f) } -> std::convertible_to<typename C::object_id>;
  { cat.identity(x) } -> std::convertible_to<typename C::arrow_id>;
  { cat.composable(f, g) } -> std::convertible_to<bool>;
  { cat.compose(f, g) } -> std::convertible_to<typename C::arrow_id>;
  { cat.norm(f) } -> std::convertible_to<ExtReal>;
  { cat.describe_object(x) } -> std::convertible_to<std::string>;
  { cat.describe_arrow(f) } -> std::convertible_to<std::string>;
};

/// Hom-sets can be listed pair by pair. arrows_exhaustive(x, y) reports
/// whether arrows(x, y) returned the whole hom-set or a truncation (free
/// categories truncate at a path-length cap).
template <class C>
concept HomEnumerable = NormedCategory<C> &&
    requires(const C& cat, const typename C::object_id& x, const typename C::object_id& y) {
      { cat.arrows(x, y) } -> std::convertible_to<std::vector<typename C::arrow_id>>;
      { cat.arrows_exhaustive(x, y) } -> std::convertible_to<bool>;
    };

/// The object collection itself is finite and listable.
template <class C>
concept ObjectEnumerable = NormedCategory<C> && requires(const C& cat) {
  { cat.objects() } -> std::convertible_to<std::vector<typename C::object_id>>;
};

/// Fully enumerable instance: what the exhaustive auditor consumes.
template <class C>
concept EnumerableNormedCategory = HomEnumerable<C> && ObjectEnumerable<C>;

/// Hosts that can produce a two-sided inverse directly (used where hom-set
/// enumeration is impractical, e.g. embedding-projection categories).
template <class C>
concept InverseSearchable = NormedCategory<C> && requires(const C& cat, const typename C::arrow_id& f) {
  { cat.invert(f) } -> std::convertible_to<std::optional<typename C::arrow_id>>;
};

template <NormedCategory C>
using object_id_t = typename C::object_id;
template <NormedCategory C>
using arrow_id_t = typename C::arrow_id;

}  // namespace normcat
