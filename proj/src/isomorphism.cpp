#include "pachner/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pachner {

Vertex IsoMap::operator()(Vertex v) const {
  auto it = map_.find(v);
  return it == map_.end() ? v : it->second;
}

Simplex IsoMap::operator()(const Simplex& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back((*this)(v));
  return Simplex::from_vertices(std::move(out));
}

Complex IsoMap::operator()(const Complex& c) const {
  std::vector<Simplex> out;
  out.reserve(c.num_facets());
  for (const auto& f : c.facets()) out.push_back((*this)(f));
  return Complex::from_facets(std::move(out));
}

IsoMap IsoMap::inverse() const {
  std::map<Vertex, Vertex> inv;
  for (const auto& [from, to] : map_) inv.emplace(to, from);
  return IsoMap(std::move(inv));
}

IsoMap IsoMap::then(const IsoMap& next) const {
  std::map<Vertex, Vertex> out;
  for (const auto& [from, to] : map_) out.emplace(from, next(to));
  for (const auto& [from, to] : next.map_)
    if (!out.count(from) && !map_.count(from)) out.emplace(from, to);
  return IsoMap(std::move(out));
}

namespace {

// Complex re-indexed on 0..n-1 with dense adjacency, for the search.
struct Indexed {
  std::vector<Vertex> labels;
  std::vector<std::vector<int>> facets;
  std::vector<std::vector<char>> adjacent;
  std::vector<std::pair<std::size_t, std::size_t>> signature;  // (facet degree, edge degree)

  explicit Indexed(const Complex& c) : labels(c.vertices()) {
    const std::size_t n = labels.size();
    adjacent.assign(n, std::vector<char>(n, 0));
    std::vector<std::size_t> facet_deg(n, 0);
    for (const auto& f : c.facets()) {
      std::vector<int> idx;
      idx.reserve(f.size());
      for (Vertex v : f)
        idx.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
      for (int i : idx) ++facet_deg[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
          adjacent[idx[a]][idx[b]] = adjacent[idx[b]][idx[a]] = 1;
      facets.push_back(std::move(idx));
    }
    signature.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t deg = 0;
      for (std::size_t w = 0; w < n; ++w) deg += adjacent[v][w];
      signature[v] = {facet_deg[v], deg};
    }
  }
};

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

class Search {
 public:
  Search(const Indexed& a, const Indexed& b) : a_(a), b_(b) {
    for (const auto& f : b_.facets) b_facets_.insert(f);
    build_order();
  }

  std::optional<std::vector<int>> run() {
    image_.assign(a_.labels.size(), -1);
    used_.assign(b_.labels.size(), 0);
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Connectivity-first order: the next vertex has the most already-placed
  // neighbours, so adjacency constraints bite early.
  void build_order() {
    const std::size_t n = a_.labels.size();
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> placed_neighbours(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] && a_.signature[v] > a_.signature[best]))
          best = v;
      }
      placed[best] = 1;
      order_.push_back(static_cast<int>(best));
      for (std::size_t w = 0; w < n; ++w)
        if (a_.adjacent[best][w]) ++placed_neighbours[w];
    }
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(order_[i])] = i;
    completed_at_.assign(n, {});
    for (std::size_t f = 0; f < a_.facets.size(); ++f) {
      std::size_t last = 0;
      for (int v : a_.facets[f]) last = std::max(last, rank[static_cast<std::size_t>(v)]);
      completed_at_[last].push_back(f);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (std::size_t w = 0; w < b_.labels.size(); ++w) {
      if (used_[w] || b_.signature[w] != a_.signature[static_cast<std::size_t>(u)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int prev = order_[j];
        ok = a_.adjacent[u][prev] == b_.adjacent[w][image_[prev]];
      }
      if (!ok) continue;
      image_[u] = static_cast<int>(w);
      used_[w] = 1;
      for (std::size_t f : completed_at_[depth]) {
        std::vector<int> mapped;
        for (int v : a_.facets[f]) mapped.push_back(image_[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!b_facets_.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(depth + 1)) return true;
      image_[u] = -1;
      used_[w] = 0;
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::unordered_set<std::vector<int>, VectorHash> b_facets_;
  std::vector<int> order_;
  std::vector<std::vector<std::size_t>> completed_at_;
  std::vector<int> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<IsoMap> are_isomorphic(const Complex& a, const Complex& b) {
  if (a.dim() != b.dim() || a.num_facets() != b.num_facets() ||
      a.num_vertices() != b.num_vertices())
    return std::nullopt;
  if (f_vector(a) != f_vector(b)) return std::nullopt;

  const Indexed ia(a);
  const Indexed ib(b);
  auto sa = ia.signature;
  auto sb = ib.signature;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  auto image = Search(ia, ib).run();
  if (!image) return std::nullopt;
  std::map<Vertex, Vertex> mapping;
  for (std::size_t v = 0; v < ia.labels.size(); ++v)
    mapping.emplace(ia.labels[v], ib.labels[static_cast<std::size_t>((*image)[v])]);
  return IsoMap(std::move(mapping));
}

}  // namespace pachner
