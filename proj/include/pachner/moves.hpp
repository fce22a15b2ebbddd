#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pachner/complex.hpp"

namespace pachner {

// A bistellar flip replacing star(a) = a * bd(b) by bd(a) * b.
// dim a + dim b = d; the kind of the move is dim a.
struct MoveSite {
  Simplex a;
  Simplex b;

  int kind() const noexcept { return a.dim(); }

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

// `k a | b`, the line format shared by `moves` output and trace files.
std::string format_site(const MoveSite& site);

// Why `site` cannot be applied to `c`, or nullopt when it can. Admissible
// means: a is a face, b is not, and link(a) is exactly the boundary of b.
std::optional<std::string> move_obstruction(const Complex& c, const MoveSite& site);

// The move at `a`, if any. For a facet the partner is a single new vertex,
// `fresh` if given, else c.fresh_vertex().
std::optional<MoveSite> admissible_move_at(const Complex& c, const Simplex& a,
                                           std::optional<Vertex> fresh = std::nullopt);

// Every admissible move, ordered lexicographically by a. Facet subdivisions
// all use c.fresh_vertex().
std::vector<MoveSite> enumerate_moves(const Complex& c);

// Number of sites of each kind 0..d.
std::vector<std::size_t> count_by_kind(const std::vector<MoveSite>& sites, int d);

// Re-verifies admissibility; throws InadmissibleMove with the reason.
Complex apply_move(const Complex& c, const MoveSite& site);

MoveSite inverse_site(const MoveSite& site);

// Net change in the number of facets caused by a move of kind k in dim d.
inline int facet_delta(int kind, int d) { return 2 * kind - d; }

}  // namespace pachner
