#include "pachner/moves.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <unordered_map>

#include "pachner/error.hpp"

namespace pachner {

std::string format_site(const MoveSite& site) {
  std::ostringstream os;
  os << site.kind() << ' ' << site.a << " | " << site.b;
  return os.str();
}

namespace {

// The partner simplex determined by the facets containing `a`, provided those
// facets are exactly a * bd(B) for some B with |B| = count.
std::optional<Simplex> partner_from_star(const Complex& c, const Simplex& a,
                                         const std::vector<std::size_t>& containing) {
  const std::size_t partner_size = static_cast<std::size_t>(c.dim()) + 1 - a.size() + 1;
  if (containing.size() != partner_size) return std::nullopt;
  std::vector<Vertex> all;
  for (std::size_t i : containing) {
    const Simplex rest = c.facets()[i].minus(a);
    all.insert(all.end(), rest.begin(), rest.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  // Distinct (|B|-1)-subsets of a |B|-set, |B| of them: all of bd(B).
  if (all.size() != partner_size) return std::nullopt;
  return Simplex::from_sorted(std::move(all));
}

}  // namespace

std::optional<std::string> move_obstruction(const Complex& c, const MoveSite& site) {
  if (site.a.empty() || site.b.empty()) return "shape: both simplices must be nonempty";
  if (!site.a.disjoint(site.b)) return "shape: A and B share a vertex";
  if (site.a.dim() + site.b.dim() != c.dim())
    return "shape: dim A + dim B = " + std::to_string(site.a.dim() + site.b.dim()) +
           ", expected " + std::to_string(c.dim());
  const auto containing = c.facets_containing(site.a);
  if (containing.empty()) return "A absent: {" + site.a.to_string() + "} is not a face";
  if (c.is_face(site.b)) return "B present: {" + site.b.to_string() + "} is already a face";
  if (containing.size() != site.b.size())
    return "link mismatch: A lies in " + std::to_string(containing.size()) + " facets, bd(B) has " +
           std::to_string(site.b.size());
  for (std::size_t i : containing) {
    const Simplex rest = c.facets()[i].minus(site.a);
    if (!site.b.contains(rest))
      return "link mismatch: link simplex {" + rest.to_string() + "} is not in bd(B)";
  }
  return std::nullopt;
}

std::optional<MoveSite> admissible_move_at(const Complex& c, const Simplex& a,
                                           std::optional<Vertex> fresh) {
  if (a.empty()) throw Error(ErrorCode::EmptySimplexInput, "moves are not defined at the empty simplex");
  const auto containing = c.facets_containing(a);
  if (containing.empty()) throw Error(ErrorCode::NotAFace, "{" + a.to_string() + "} is not a face");
  if (a.dim() == c.dim()) {
    const Vertex v = fresh.value_or(c.fresh_vertex());
    if (c.has_vertex(v)) return std::nullopt;
    return MoveSite{a, Simplex{v}};
  }
  auto b = partner_from_star(c, a, containing);
  if (!b || c.is_face(*b)) return std::nullopt;
  return MoveSite{a, std::move(*b)};
}

std::vector<MoveSite> enumerate_moves(const Complex& c) {
  const auto facets = c.facets();
  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> containing;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (auto& sub : facets[i].subsets()) {
      if (!sub.empty()) containing[std::move(sub)].push_back(i);
    }
  }
  const Vertex fresh = c.fresh_vertex();
  std::vector<MoveSite> out;
  for (const auto& [a, where] : containing) {
    if (a.dim() == c.dim()) {
      out.push_back({a, Simplex{fresh}});
      continue;
    }
    auto b = partner_from_star(c, a, where);
    if (b && !containing.count(*b)) out.push_back({a, std::move(*b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> count_by_kind(const std::vector<MoveSite>& sites, int d) {
  std::vector<std::size_t> out(static_cast<std::size_t>(d + 1), 0);
  for (const auto& s : sites) ++out.at(static_cast<std::size_t>(s.kind()));
  return out;
}

Complex apply_move(const Complex& c, const MoveSite& site) {
  if (auto why = move_obstruction(c, site))
    throw Error(ErrorCode::InadmissibleMove, "move " + format_site(site) + ": " + *why);
  std::vector<Simplex> out;
  out.reserve(c.num_facets() + site.a.size());
  for (const auto& f : c.facets())
    if (!f.contains(site.a)) out.push_back(f);
  for (Vertex v : site.a) out.push_back(site.a.without(v).unite(site.b));
  return Complex::from_facets(std::move(out));
}

MoveSite inverse_site(const MoveSite& site) { return MoveSite{site.b, site.a}; }

}  // namespace pachner
