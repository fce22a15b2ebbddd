#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pachner/complex.hpp"
#include "pachner/moves.hpp"

namespace pachner {

struct Trace;

// A facet sigma = a * b whose removal is an elementary shelling. The ridges of
// sigma on the boundary are exactly a * bd(b); after removal, bd(a) * b is.
struct ShellingSite {
  Simplex sigma;
  Simplex a;
  Simplex b;

  friend bool operator==(const ShellingSite&, const ShellingSite&) = default;
  friend auto operator<=>(const ShellingSite&, const ShellingSite&) = default;
};

// `S sigma | a | b`
std::string format_shelling(const ShellingSite& site);

// The Pachner move a shelling induces on the boundary complex.
struct BoundaryMoveWitness {
  Complex before;
  Complex after;
  MoveSite site;

  // apply_move(before, site) == after
  bool verify() const;
};

struct ShellingResult {
  Complex complex;
  BoundaryMoveWitness witness;
};

struct ShellingEnumeration {
  std::vector<ShellingSite> sites;
  // Set only for a single-facet complex when requested: the last facet, whose
  // removal would leave the empty complex.
  std::optional<Simplex> terminal;
};

std::optional<std::string> shelling_obstruction(const Complex& c, const ShellingSite& site);

// Sites ordered by (sigma, a). Single-facet complexes yield no sites.
ShellingEnumeration enumerate_shellings(const Complex& c, bool include_terminal = false);

// Removes site.sigma; the witness is verified before returning.
ShellingResult apply_shelling(const Complex& c, const ShellingSite& site);

// Adds sigma_new along boundary ridges; the inverse of apply_shelling.
ShellingResult apply_inverse_shelling(const Complex& c, const Simplex& sigma_new);

struct ShellOptions {
  std::size_t attempts = 64;
};

// Randomized greedy search for a shelling order down to one facet. Returns
// nullopt when no order was found within the attempt budget (which does not
// prove non-shellability).
std::optional<Trace> shell_to_facet(const Complex& c, std::uint64_t seed, ShellOptions options = {});

}  // namespace pachner
