#include "pachner/simplex.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "pachner/error.hpp"

namespace pachner {

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(from_vertices(std::vector<Vertex>(vertices))) {}

Simplex Simplex::from_vertices(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    std::ostringstream msg;
    msg << "repeated vertex in {";
    for (std::size_t i = 0; i < vertices.size(); ++i) msg << (i ? " " : "") << vertices[i];
    msg << "}";
    throw Error(ErrorCode::DegenerateFacet, msg.str());
  }
  return from_sorted(std::move(vertices));
}

Simplex Simplex::from_sorted(std::vector<Vertex> vertices) {
  Simplex s;
  s.v_ = std::move(vertices);
  return s;
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::contains(const Simplex& other) const noexcept {
  return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Simplex::disjoint(const Simplex& other) const noexcept {
  auto a = v_.begin();
  auto b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

Simplex Simplex::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(v_.size());
  for (Vertex x : v_)
    if (x != v) out.push_back(x);
  return from_sorted(std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  std::vector<Vertex> out(v_);
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
  return from_sorted(std::move(out));
}

Simplex Simplex::unite(const Simplex& other) const {
  std::vector<Vertex> out;
  out.reserve(v_.size() + other.v_.size());
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
  std::vector<Vertex> out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::subsets() const {
  const std::size_t n = v_.size();
  std::vector<Simplex> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(v_[i]);
    out.push_back(from_sorted(std::move(sub)));
  }
  return out;
}

std::vector<Simplex> Simplex::ridges() const {
  std::vector<Simplex> out;
  out.reserve(v_.size());
  for (Vertex v : v_) out.push_back(without(v));
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os;
}

}  // namespace pachner
