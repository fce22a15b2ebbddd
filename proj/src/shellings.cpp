#include "pachner/shellings.hpp"

#include <sstream>

#include "pachner/error.hpp"
#include "pachner/io.hpp"
#include "pachner/random.hpp"
#include "pachner/trace.hpp"

namespace pachner {

std::string format_shelling(const ShellingSite& site) {
  std::ostringstream os;
  os << "S " << site.sigma << " | " << site.a << " | " << site.b;
  return os.str();
}

bool BoundaryMoveWitness::verify() const {
  if (move_obstruction(before, site)) return false;
  return apply_move(before, site) == after;
}

namespace {

std::size_t ridge_degree(const Complex& c, const Simplex& ridge) {
  return c.facets_containing(ridge).size();
}

// Vertices x of sigma whose opposite ridge sigma \ x lies on the boundary.
Simplex free_side(const Complex& c, const Simplex& sigma) {
  std::vector<Vertex> out;
  for (Vertex x : sigma)
    if (ridge_degree(c, sigma.without(x)) == 1) out.push_back(x);
  return Simplex::from_sorted(std::move(out));
}

std::optional<std::string> obstruction_given_boundary(const Complex& c, const Complex& boundary,
                                                      const ShellingSite& site) {
  if (!c.is_facet(site.sigma)) return "sigma {" + site.sigma.to_string() + "} is not a facet";
  if (c.num_facets() < 2) return "sigma is the last facet";
  if (site.a.empty()) return "a must be nonempty";
  if (site.b.empty()) return "b must be nonempty";
  if (!site.a.disjoint(site.b) || site.a.unite(site.b) != site.sigma)
    return "a and b must partition sigma";
  if (free_side(c, site.sigma) != site.b)
    return "boundary ridges of sigma are not exactly a * bd(b)";
  if (auto why = move_obstruction(boundary, MoveSite{site.a, site.b}))
    return "induced boundary move inadmissible: " + *why;
  return std::nullopt;
}

Complex require_boundary(const Complex& c) {
  auto bd = boundary_complex(c);
  if (!bd) throw Error(ErrorCode::ClosedComplex, "complex has no boundary");
  return std::move(*bd);
}

}  // namespace

std::optional<std::string> shelling_obstruction(const Complex& c, const ShellingSite& site) {
  auto bd = boundary_complex(c);
  if (!bd) return "complex has no boundary";
  return obstruction_given_boundary(c, *bd, site);
}

ShellingEnumeration enumerate_shellings(const Complex& c, bool include_terminal) {
  const Complex boundary = require_boundary(c);
  ShellingEnumeration out;
  if (c.num_facets() == 1) {
    if (include_terminal) out.terminal = c.facets().front();
    return out;
  }
  for (const auto& sigma : c.facets()) {
    Simplex b = free_side(c, sigma);
    if (b.empty() || b.size() == sigma.size()) continue;
    ShellingSite site{sigma, sigma.minus(b), std::move(b)};
    if (!obstruction_given_boundary(c, boundary, site)) out.sites.push_back(std::move(site));
  }
  return out;
}

ShellingResult apply_shelling(const Complex& c, const ShellingSite& site) {
  auto bd = boundary_complex(c);
  if (!bd) throw Error(ErrorCode::InadmissibleShelling, format_shelling(site) + ": complex has no boundary");
  if (auto why = obstruction_given_boundary(c, *bd, site))
    throw Error(ErrorCode::InadmissibleShelling, format_shelling(site) + ": " + *why);

  std::vector<Simplex> rest;
  rest.reserve(c.num_facets() - 1);
  for (const auto& f : c.facets())
    if (f != site.sigma) rest.push_back(f);
  Complex shelled = Complex::from_facets(std::move(rest));
  BoundaryMoveWitness witness{std::move(*bd), require_boundary(shelled), MoveSite{site.a, site.b}};
  if (!witness.verify())
    throw Error(ErrorCode::InadmissibleShelling, format_shelling(site) + ": boundary witness failed");
  return {std::move(shelled), std::move(witness)};
}

ShellingResult apply_inverse_shelling(const Complex& c, const Simplex& sigma_new) {
  if (static_cast<int>(sigma_new.size()) != c.dim() + 1)
    throw Error(ErrorCode::MixedDimensions, "new facet {" + sigma_new.to_string() + "} has the wrong dimension");
  if (c.is_facet(sigma_new))
    throw Error(ErrorCode::FacetPresent, "{" + sigma_new.to_string() + "} is already a facet");

  std::vector<Vertex> glued;
  for (Vertex x : sigma_new) {
    const std::size_t n = ridge_degree(c, sigma_new.without(x));
    if (n >= 2)
      throw Error(ErrorCode::WouldBreakPseudomanifold,
                  "ridge {" + sigma_new.without(x).to_string() + "} is interior");
    if (n == 1) glued.push_back(x);
  }
  const Simplex a = Simplex::from_sorted(std::move(glued));
  if (a.empty())
    throw Error(ErrorCode::GluingNotOnBoundary, "{" + sigma_new.to_string() + "} shares no ridge with the complex");
  const Simplex b = sigma_new.minus(a);
  if (b.empty())
    throw Error(ErrorCode::GluingNotOnBoundary, "{" + sigma_new.to_string() + "} would close every ridge");

  Complex before = require_boundary(c);
  const MoveSite boundary_site{b, a};
  if (auto why = move_obstruction(before, boundary_site))
    throw Error(ErrorCode::GluingNotOnBoundary, "induced boundary move inadmissible: " + *why);

  std::vector<Simplex> facets(c.facets().begin(), c.facets().end());
  facets.push_back(sigma_new);
  Complex grown = Complex::from_facets(std::move(facets));
  auto after = boundary_complex(grown);
  if (!after)
    throw Error(ErrorCode::GluingNotOnBoundary, "adding {" + sigma_new.to_string() + "} closes the complex");
  BoundaryMoveWitness witness{std::move(before), std::move(*after), boundary_site};
  if (!witness.verify())
    throw Error(ErrorCode::GluingNotOnBoundary, "boundary witness failed for {" + sigma_new.to_string() + "}");
  return {std::move(grown), std::move(witness)};
}

std::optional<Trace> shell_to_facet(const Complex& c, std::uint64_t seed, ShellOptions options) {
  if (!boundary_complex(c)) throw Error(ErrorCode::ClosedComplex, "complex has no boundary");
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    Trace trace;
    trace.seed = seed;
    Complex current = c;
    while (current.num_facets() > 1) {
      const auto sites = enumerate_shellings(current).sites;
      if (sites.empty()) break;
      const ShellingSite& pick = sites[rng.index(sites.size())];
      current = apply_shelling(current, pick).complex;
      trace.steps.push_back({pick, false});
    }
    if (current.num_facets() == 1) {
      trace.end_digest = io::digest_hex(current);
      return trace;
    }
  }
  return std::nullopt;
}

}  // namespace pachner
