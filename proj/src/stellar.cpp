#include "pachner/stellar.hpp"

#include <algorithm>
#include <map>

#include "pachner/error.hpp"

namespace pachner {

Complex stellar_subdivide(const Complex& c, const Simplex& a, Vertex v) {
  if (a.empty()) throw Error(ErrorCode::EmptySimplexInput, "cannot subdivide the empty simplex");
  const auto containing = c.facets_containing(a);
  if (containing.empty()) throw Error(ErrorCode::NotAFace, "{" + a.to_string() + "} is not a face");
  if (a.size() == 1)
    throw Error(ErrorCode::SubdivisionAtVertex, "stellar subdivision at vertex " + a.to_string() + " is not defined");
  if (c.has_vertex(v)) throw Error(ErrorCode::VertexInUse, "vertex " + std::to_string(v) + " already in use");

  std::vector<Simplex> out;
  out.reserve(c.num_facets() + containing.size() * a.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < c.num_facets(); ++i) {
    const Simplex& f = c.facets()[i];
    if (next < containing.size() && containing[next] == i) {
      ++next;
      for (Vertex x : a) out.push_back(f.without(x).with(v));
    } else {
      out.push_back(f);
    }
  }
  return Complex::from_facets(std::move(out));
}

Complex stellar_weld(const Complex& c, Vertex v, const Simplex& a) {
  const auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::WeldInadmissible,
                 "weld of " + std::to_string(v) + " onto {" + a.to_string() + "}: " + why);
  };
  if (a.size() < 2) throw fail("target must have at least two vertices");
  if (!c.has_vertex(v)) throw fail("vertex not in complex");
  if (a.contains(v)) throw fail("target contains the welded vertex");
  if (c.is_face(a)) throw fail("target is already a face");

  // Group facets v * F by R = F \ a; each group must be exactly bd(a) * R.
  std::map<Simplex, std::vector<Vertex>> missing_by_rest;
  std::vector<Simplex> out;
  for (const auto& f : c.facets()) {
    if (!f.contains(v)) {
      out.push_back(f);
      continue;
    }
    const Simplex base = f.without(v);
    const Simplex missing = a.minus(base);
    if (missing.size() != 1) throw fail("facet {" + f.to_string() + "} does not meet a in a ridge");
    missing_by_rest[base.minus(a)].push_back(missing.front());
  }
  for (auto& [rest, missing] : missing_by_rest) {
    std::sort(missing.begin(), missing.end());
    if (missing.size() != a.size())
      throw fail("link of v is not bd(a) * L near {" + rest.to_string() + "}");
    out.push_back(a.unite(rest));
  }
  const std::size_t before = out.size();
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end() || out.size() != before)
    throw fail("rewriting produces duplicate facets");
  return Complex::from_facets(std::move(out));
}

StellarFactorization factor_via_stellar(const Complex& c, const MoveSite& site) {
  if (auto why = move_obstruction(c, site))
    throw Error(ErrorCode::InadmissibleMove, "move " + format_site(site) + ": " + *why);
  if (c.dim() == 0)
    throw Error(ErrorCode::UnsupportedDimension, "a 0-dimensional move is neither a subdivision nor a weld");
  if (site.kind() == c.dim()) return {site.a, site.b.front(), std::nullopt};
  if (site.kind() == 0) return {std::nullopt, site.a.front(), site.b};
  return {site.a, c.fresh_vertex(), site.b};
}

Complex compose(const Complex& c, const StellarFactorization& f) {
  Complex out = f.subdivided ? stellar_subdivide(c, *f.subdivided, f.apex) : c;
  return f.welded ? stellar_weld(out, f.apex, *f.welded) : out;
}

}  // namespace pachner
