#pragma once

#include <map>
#include <optional>

#include "pachner/complex.hpp"

namespace pachner {

// A vertex bijection between two complexes.
class IsoMap {
 public:
  IsoMap() = default;
  explicit IsoMap(std::map<Vertex, Vertex> mapping) : map_(std::move(mapping)) {}

  // Labels absent from the map are passed through unchanged.
  Vertex operator()(Vertex v) const;
  Simplex operator()(const Simplex& s) const;
  Complex operator()(const Complex& c) const;

  IsoMap inverse() const;
  // (g.then(f))(x) == f(g(x))
  IsoMap then(const IsoMap& next) const;

  const std::map<Vertex, Vertex>& mapping() const noexcept { return map_; }
  friend bool operator==(const IsoMap&, const IsoMap&) = default;

 private:
  std::map<Vertex, Vertex> map_;
};

// Backtracking search for a vertex bijection carrying the facets of `a` onto
// the facets of `b`. Pruned by f-vectors and per-vertex incidence signatures;
// meant for complexes with a few dozen vertices.
std::optional<IsoMap> are_isomorphic(const Complex& a, const Complex& b);

}  // namespace pachner
