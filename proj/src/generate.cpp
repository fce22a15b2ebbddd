#include "pachner/generate.hpp"

#include <string>

#include "pachner/error.hpp"

namespace pachner::gen {

namespace {

void require_dim(int d) {
  if (d < 0) throw Error(ErrorCode::DimensionOutOfRange, "dimension must be >= 0, got " + std::to_string(d));
}

}  // namespace

Complex simplex(int d) {
  require_dim(d);
  std::vector<Vertex> vs;
  for (int i = 1; i <= d + 1; ++i) vs.push_back(static_cast<Vertex>(i));
  return Complex::from_facets({Simplex::from_sorted(std::move(vs))});
}

Complex sphere(int d) {
  require_dim(d);
  const Simplex whole = simplex(d + 1).facets().front();
  return Complex::from_facets(whole.ridges());
}

Complex cone(const Complex& c) {
  const Vertex apex = c.fresh_vertex();
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) out.push_back(f.with(apex));
  return Complex::from_facets(std::move(out));
}

Complex suspension(const Complex& c) {
  const Vertex north = c.fresh_vertex();
  const Vertex south = north + 1;
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    out.push_back(f.with(north));
    out.push_back(f.with(south));
  }
  return Complex::from_facets(std::move(out));
}

Complex join(const Complex& a, const Complex& b) {
  for (Vertex v : a.vertices())
    if (b.has_vertex(v))
      throw Error(ErrorCode::LabelClash, "label " + std::to_string(v) + " appears in both operands");
  std::vector<Simplex> out;
  out.reserve(a.num_facets() * b.num_facets());
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) out.push_back(f.unite(g));
  return Complex::from_facets(std::move(out));
}

Complex relabel_shift(const Complex& c, Vertex offset) {
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    std::vector<Vertex> vs(f.begin(), f.end());
    for (auto& v : vs) v += offset;
    out.push_back(Simplex::from_sorted(std::move(vs)));
  }
  return Complex::from_facets(std::move(out));
}

Complex rp2_6() {
  return Complex::from_facets(std::vector<std::vector<Vertex>>{
      {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
      {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

Complex octahedron() { return suspension(suspension(sphere(0))); }

}  // namespace pachner::gen
