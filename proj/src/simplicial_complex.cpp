#include "macp/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "macp/error.hpp"

namespace macp {

SimplicialComplex SimplicialComplex::from_faces(int num_vertices, std::vector<Simplex> generators) {
  SimplicialComplex k;
  k.num_vertices_ = num_vertices;
  for (auto& g : generators) {
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw std::invalid_argument("repeated vertex in a face");
    if (g.empty()) continue;
    if (g.front() < 0 || g.back() >= num_vertices) throw std::invalid_argument("face vertex out of range");
    if (g.size() > 24) throw LimitExceeded("face too large to expand");
    if (g.size() > k.faces_.size()) k.faces_.resize(g.size());
    const std::uint32_t full = (1u << g.size()) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex s;
      for (std::size_t t = 0; t < g.size(); ++t)
        if ((mask >> t) & 1u) s.push_back(g[t]);
      k.faces_[s.size() - 1].push_back(std::move(s));
    }
  }
  for (auto& level : k.faces_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  // A face is maximal iff it is not a facet of a face one dimension up.
  for (std::size_t d = 0; d < k.faces_.size(); ++d) {
    std::vector<Simplex> facets;
    if (d + 1 < k.faces_.size())
      for (const auto& s : k.faces_[d + 1])
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
          facets.push_back(std::move(f));
        }
    std::sort(facets.begin(), facets.end());
    for (const auto& s : k.faces_[d])
      if (!std::binary_search(facets.begin(), facets.end(), s)) k.maximal_.push_back(s);
  }
  return k;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> kNone;
  if (k < 0 || k >= static_cast<int>(faces_.size())) return kNone;
  return faces_[static_cast<std::size_t>(k)];
}

long long SimplicialComplex::index_of(const Simplex& face) const {
  const auto& level = faces(static_cast<int>(face.size()) - 1);
  const auto it = std::lower_bound(level.begin(), level.end(), face);
  if (it == level.end() || *it != face) return -1;
  return it - level.begin();
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& level : faces_) f.push_back(static_cast<long long>(level.size()));
  return f;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(maximal_.begin(), maximal_.end(),
                     [&](const Simplex& s) { return static_cast<int>(s.size()) - 1 == dimension(); });
}

}  // namespace macp
