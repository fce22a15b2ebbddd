#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pachner {

// Vertex labels are arbitrary non-negative integers; they need not be contiguous.
using Vertex = std::uint32_t;

// A finite set of vertices stored as a strictly increasing sequence.
// The empty simplex (dimension -1) is a legal value.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);

  // Sorts the input; throws DegenerateFacet on a repeated vertex.
  static Simplex from_vertices(std::vector<Vertex> vertices);
  // Caller guarantees strictly increasing order.
  static Simplex from_sorted(std::vector<Vertex> vertices);

  int dim() const noexcept { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }

  std::span<const Vertex> vertices() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  Vertex front() const { return v_.front(); }
  Vertex back() const { return v_.back(); }

  bool contains(Vertex v) const noexcept;
  bool contains(const Simplex& other) const noexcept;
  bool disjoint(const Simplex& other) const noexcept;

  Simplex without(Vertex v) const;
  Simplex with(Vertex v) const;
  Simplex unite(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;

  // All subsets, including the empty simplex and the simplex itself.
  std::vector<Simplex> subsets() const;
  // Faces of codimension one.
  std::vector<Simplex> ridges() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<Vertex> v_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    h ^= s.size();
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pachner
