#include "pachner/complex.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pachner/error.hpp"

namespace pachner {

struct Complex::Cache {
  explicit Cache(int dim) : face_once(new std::once_flag[dim + 2]), face_lists(dim + 2) {}

  std::once_flag index_once;
  std::vector<Vertex> vertices;
  // incidence[i] = ascending facet indices containing vertices[i]
  std::vector<std::vector<std::uint32_t>> incidence;

  std::unique_ptr<std::once_flag[]> face_once;
  std::vector<std::vector<Simplex>> face_lists;
};

namespace {

const NameTable& empty_names() {
  static const NameTable table;
  return table;
}

void for_each_combination(const Simplex& s, std::size_t r,
                          const std::function<void(const Simplex&)>& fn) {
  const std::size_t n = s.size();
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> sub(r);
    for (std::size_t i = 0; i < r; ++i) sub[i] = s[idx[i]];
    fn(Simplex::from_sorted(std::move(sub)));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Complex::Complex(int dim, std::vector<Simplex> facets)
    : dim_(dim), facets_(std::move(facets)), cache_(std::make_shared<Cache>(dim)) {}

Complex Complex::from_facets(std::vector<Simplex> facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "facet list is empty");
  const std::size_t card = facets.front().size();
  for (const auto& f : facets) {
    if (f.size() != card) {
      std::ostringstream msg;
      msg << "facet {" << f << "} has " << f.size() << " vertices, expected " << card;
      throw Error(ErrorCode::MixedDimensions, msg.str());
    }
  }
  if (card == 0)
    throw Error(ErrorCode::DimensionOutOfRange, "facets must have at least one vertex");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return Complex(static_cast<int>(card) - 1, std::move(facets));
}

Complex Complex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (const auto& f : facets) simplices.push_back(Simplex::from_vertices(f));
  return from_facets(std::move(simplices));
}

void Complex::ensure_index() const {
  std::call_once(cache_->index_once, [this] {
    auto& c = *cache_;
    std::vector<Vertex> all;
    for (const auto& f : facets_) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    c.vertices = std::move(all);
    c.incidence.assign(c.vertices.size(), {});
    for (std::uint32_t i = 0; i < facets_.size(); ++i) {
      for (Vertex v : facets_[i]) {
        auto pos = std::lower_bound(c.vertices.begin(), c.vertices.end(), v) - c.vertices.begin();
        c.incidence[static_cast<std::size_t>(pos)].push_back(i);
      }
    }
  });
}

const std::vector<Vertex>& Complex::vertices() const {
  ensure_index();
  return cache_->vertices;
}

bool Complex::has_vertex(Vertex v) const {
  const auto& vs = vertices();
  return std::binary_search(vs.begin(), vs.end(), v);
}

Vertex Complex::fresh_vertex() const { return vertices().back() + 1; }

bool Complex::is_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool Complex::is_face(const Simplex& s) const {
  if (s.empty()) return true;
  if (static_cast<int>(s.size()) > dim_ + 1) return false;
  return !facets_containing(s).empty();
}

std::vector<std::size_t> Complex::facets_containing(const Simplex& s) const {
  std::vector<std::size_t> out;
  if (s.empty()) {
    out.resize(facets_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }
  ensure_index();
  const auto& c = *cache_;
  const std::vector<std::uint32_t>* smallest = nullptr;
  for (Vertex v : s) {
    auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), v);
    if (it == c.vertices.end() || *it != v) return out;
    const auto& inc = c.incidence[static_cast<std::size_t>(it - c.vertices.begin())];
    if (!smallest || inc.size() < smallest->size()) smallest = &inc;
  }
  for (std::uint32_t i : *smallest)
    if (facets_[i].contains(s)) out.push_back(i);
  return out;
}

const std::vector<Simplex>& Complex::faces(int k) const {
  if (k < -1 || k > dim_) {
    std::ostringstream msg;
    msg << "face dimension " << k << " outside [-1, " << dim_ << "]";
    throw Error(ErrorCode::DimensionOutOfRange, msg.str());
  }
  const auto slot = static_cast<std::size_t>(k + 1);
  std::call_once(cache_->face_once[slot], [this, k, slot] {
    std::vector<Simplex> out;
    if (k == dim_) {
      out = facets_;
    } else {
      std::set<Simplex> seen;
      for (const auto& f : facets_)
        for_each_combination(f, static_cast<std::size_t>(k + 1),
                             [&](const Simplex& s) { seen.insert(s); });
      out.assign(seen.begin(), seen.end());
    }
    cache_->face_lists[slot] = std::move(out);
  });
  return cache_->face_lists[slot];
}

const NameTable& Complex::names() const { return names_ ? *names_ : empty_names(); }

Complex Complex::with_names(NameTable names) const {
  Complex out = *this;
  out.names_ = names.empty() ? nullptr : std::make_shared<const NameTable>(std::move(names));
  return out;
}

std::vector<Simplex> faces(const Complex& c, int k) { return c.faces(k); }

std::vector<Simplex> star(const Complex& c, const Simplex& a) {
  auto containing = c.facets_containing(a);
  if (containing.empty()) throw Error(ErrorCode::NotAFace, "{" + a.to_string() + "} is not a face");
  std::set<Simplex> out;
  for (std::size_t i : containing) {
    const Simplex rest = c.facets()[i].minus(a);
    for (const auto& sub : rest.subsets()) out.insert(sub.unite(a));
  }
  return {out.begin(), out.end()};
}

std::vector<Simplex> link(const Complex& c, const Simplex& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySimplexInput, "link of the empty simplex");
  auto containing = c.facets_containing(a);
  if (containing.empty()) throw Error(ErrorCode::NotAFace, "{" + a.to_string() + "} is not a face");
  std::set<Simplex> out;
  for (std::size_t i : containing) {
    const Simplex rest = c.facets()[i].minus(a);
    for (const auto& sub : rest.subsets()) out.insert(sub);
  }
  return {out.begin(), out.end()};
}

Complex link_complex(const Complex& c, const Simplex& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySimplexInput, "link of the empty simplex");
  auto containing = c.facets_containing(a);
  if (containing.empty()) throw Error(ErrorCode::NotAFace, "{" + a.to_string() + "} is not a face");
  if (static_cast<int>(a.size()) == c.dim() + 1)
    throw Error(ErrorCode::DimensionOutOfRange, "link of a facet is {empty}, not a complex");
  std::vector<Simplex> out;
  out.reserve(containing.size());
  for (std::size_t i : containing) out.push_back(c.facets()[i].minus(a));
  return Complex::from_facets(std::move(out));
}

std::vector<Simplex> boundary_faces(const Simplex& s) {
  auto subs = s.subsets();
  subs.pop_back();  // the last mask is s itself
  std::sort(subs.begin(), subs.end());
  return subs;
}

FVector f_vector(const Complex& c) {
  FVector fv;
  fv.counts.reserve(static_cast<std::size_t>(c.dim() + 2));
  for (int k = -1; k <= c.dim(); ++k) fv.counts.push_back(c.faces(k).size());
  return fv;
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (int k = 0; k <= c.dim(); ++k) {
    const auto n = static_cast<long long>(c.faces(k).size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

std::map<Simplex, std::size_t> ridge_degrees(const Complex& c) {
  std::map<Simplex, std::size_t> out;
  for (const auto& f : c.facets())
    for (const auto& r : f.ridges()) ++out[r];
  return out;
}

bool is_pseudomanifold(const Complex& c) {
  for (const auto& [ridge, n] : ridge_degrees(c))
    if (n > 2) return false;
  return true;
}

std::optional<Complex> boundary_complex(const Complex& c) {
  std::vector<Simplex> free;
  for (const auto& [ridge, n] : ridge_degrees(c)) {
    if (n > 2)
      throw Error(ErrorCode::NotPseudomanifold,
                  "ridge {" + ridge.to_string() + "} lies in " + std::to_string(n) + " facets");
    if (n == 1) free.push_back(ridge);
  }
  if (free.empty()) return std::nullopt;
  if (c.dim() == 0)
    throw Error(ErrorCode::DimensionOutOfRange, "boundary of a single point is {empty}, not a complex");
  return Complex::from_facets(std::move(free));
}

bool facet_graph_connected(const Complex& c) {
  const auto facets = c.facets();
  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> by_ridge;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (const auto& r : facets[i].ridges()) by_ridge[r].push_back(i);
  std::vector<char> seen(facets.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& r : facets[i].ridges()) {
      for (std::size_t j : by_ridge[r]) {
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          queue.push_back(j);
        }
      }
    }
  }
  return reached == facets.size();
}

bool is_closed_pseudomanifold(const Complex& c) {
  for (const auto& [ridge, n] : ridge_degrees(c))
    if (n != 2) return false;
  return facet_graph_connected(c);
}

namespace {

// Link of a vertex in a combinatorial manifold of dimension <= 3; `l` has
// dimension <= 2.
bool is_sphere_or_ball(const Complex& l) {
  switch (l.dim()) {
    case 0:
      return l.num_facets() == 1 || l.num_facets() == 2;
    case 1: {
      if (!facet_graph_connected(l)) return false;
      std::size_t ends = 0;
      for (const auto& [v, n] : ridge_degrees(l)) {
        if (n > 2) return false;
        if (n == 1) ++ends;
      }
      return ends == 0 || ends == 2;
    }
    case 2: {
      if (!is_pseudomanifold(l) || !facet_graph_connected(l)) return false;
      for (Vertex v : l.vertices())
        if (!is_sphere_or_ball(link_complex(l, Simplex{v}))) return false;
      const auto bd = boundary_complex(l);
      const long long chi = euler_characteristic(l);
      if (!bd) return chi == 2;
      return chi == 1 && facet_graph_connected(*bd);
    }
    default:
      return false;
  }
}

}  // namespace

bool is_combinatorial_manifold(const Complex& c) {
  if (c.dim() > 3)
    throw Error(ErrorCode::UnsupportedDimension,
                "manifold recognition is supported for d <= 3, got d = " + std::to_string(c.dim()));
  if (c.dim() == 0) return true;
  for (Vertex v : c.vertices())
    if (!is_sphere_or_ball(link_complex(c, Simplex{v}))) return false;
  return true;
}

bool is_orientable(const Complex& c) {
  if (!is_closed_pseudomanifold(c))
    throw Error(ErrorCode::NotClosedPseudomanifold, "orientability needs a closed pseudomanifold");
  const auto facets = c.facets();
  // ridge -> (facet, index of the omitted vertex)
  std::unordered_map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>, SimplexHash> by_ridge;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets[i].size(); ++j)
      by_ridge[facets[i].without(facets[i][j])].emplace_back(i, j);

  // Facet F with sign s induces sign s * (-1)^j on the ridge omitting F[j];
  // neighbours across a ridge must induce opposite signs.
  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < facets[i].size(); ++j) {
      const int induced = sign[i] * ((j % 2 == 0) ? 1 : -1);
      for (const auto& [other, pos] : by_ridge[facets[i].without(facets[i][j])]) {
        if (other == i) continue;
        const int want = -induced * ((pos % 2 == 0) ? 1 : -1);
        if (sign[other] == 0) {
          sign[other] = want;
          queue.push_back(other);
        } else if (sign[other] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pachner
