#pragma once

#include <optional>

#include "pachner/complex.hpp"
#include "pachner/moves.hpp"

namespace pachner {

// Replaces star(a) by v * bd(a) * link(a): every facet containing a becomes
// |a| facets, each with one vertex of a swapped for v. Rejects dim a = 0.
Complex stellar_subdivide(const Complex& c, const Simplex& a, Vertex v);

// Inverse of stellar_subdivide: removes v and restores the star of a.
// Requires link(v) = bd(a) * L and a not already a face.
Complex stellar_weld(const Complex& c, Vertex v, const Simplex& a);

// A move expressed as subdivide-at-`subdivided` with apex `apex`, followed by
// a weld of `apex` onto `welded`. Kind d moves are the subdivision alone; kind
// 0 moves are the weld alone, with the removed vertex as apex.
struct StellarFactorization {
  std::optional<Simplex> subdivided;
  Vertex apex = 0;
  std::optional<Simplex> welded;

  bool degenerate() const noexcept { return !subdivided || !welded; }
};

StellarFactorization factor_via_stellar(const Complex& c, const MoveSite& site);
// Composes the two stellar operations.
Complex compose(const Complex& c, const StellarFactorization& f);

}  // namespace pachner
