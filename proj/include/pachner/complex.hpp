#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pachner/simplex.hpp"

namespace pachner {

using NameTable = std::map<Vertex, std::string>;

// A pure d-dimensional abstract simplicial complex, stored by its facets.
//
// Complexes are immutable values. Face data (vertex incidence, per-dimension
// face lists) is derived lazily and shared between copies; population is
// guarded by std::call_once so concurrent readers are safe.
class Complex {
 public:
  // Validates purity and vertex distinctness; duplicate facets are merged.
  static Complex from_facets(std::vector<Simplex> facets);
  static Complex from_facets(const std::vector<std::vector<Vertex>>& facets);

  int dim() const noexcept { return dim_; }
  std::span<const Simplex> facets() const noexcept { return facets_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }

  const std::vector<Vertex>& vertices() const;
  std::size_t num_vertices() const { return vertices().size(); }
  bool has_vertex(Vertex v) const;
  // max label + 1; the default label for a newly introduced vertex.
  Vertex fresh_vertex() const;

  bool is_facet(const Simplex& s) const;
  bool is_face(const Simplex& s) const;
  // Indices into facets() of the facets containing s, ascending.
  std::vector<std::size_t> facets_containing(const Simplex& s) const;
  // Sorted list of k-faces, -1 <= k <= dim. Memoized.
  const std::vector<Simplex>& faces(int k) const;

  const NameTable& names() const;
  Complex with_names(NameTable names) const;

  // Facet-set equality; display names are not part of identity.
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  struct Cache;

  Complex(int dim, std::vector<Simplex> facets);
  const Cache& cache() const { return *cache_; }
  void ensure_index() const;

  int dim_ = 0;
  std::vector<Simplex> facets_;
  std::shared_ptr<const NameTable> names_;
  std::shared_ptr<Cache> cache_;
};

// Face counts f_{-1}, f_0, ..., f_d.
struct FVector {
  std::vector<std::size_t> counts;

  std::size_t operator()(int k) const { return counts.at(static_cast<std::size_t>(k + 1)); }
  int dim() const { return static_cast<int>(counts.size()) - 2; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

std::vector<Simplex> faces(const Complex& c, int k);
// Every face containing a (a itself included), sorted.
std::vector<Simplex> star(const Complex& c, const Simplex& a);
// { L : L disjoint from a, L u a a face }, sorted; contains the empty simplex.
std::vector<Simplex> link(const Complex& c, const Simplex& a);
// The link of a non-facet face as a pure (d - dim a - 1)-complex.
Complex link_complex(const Complex& c, const Simplex& a);
// All proper faces of s, the empty simplex included, sorted.
std::vector<Simplex> boundary_faces(const Simplex& s);

FVector f_vector(const Complex& c);
long long euler_characteristic(const Complex& c);

// Number of facets containing each ridge, keyed by ridge.
std::map<Simplex, std::size_t> ridge_degrees(const Complex& c);
bool is_pseudomanifold(const Complex& c);
// Ridges in exactly one facet; nullopt for a closed complex.
std::optional<Complex> boundary_complex(const Complex& c);
bool is_closed_pseudomanifold(const Complex& c);
bool facet_graph_connected(const Complex& c);
// Vertex links are spheres or balls; d <= 3 only.
bool is_combinatorial_manifold(const Complex& c);
bool is_orientable(const Complex& c);

}  // namespace pachner
