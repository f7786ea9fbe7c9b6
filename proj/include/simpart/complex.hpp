#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simpart/face.hpp"
#include "simpart/vectors.hpp"

namespace simpart {

/// Inputs dropped while normalizing a facet list to an antichain.
struct BuildReport {
  std::vector<Face> duplicates;
  std::vector<Face> dominated;
  bool clean() const { return duplicates.empty() && dominated.empty(); }
};

/// A finite simplicial complex, stored as its facet antichain in canonical
/// order.  The face set is the downward closure of the facets.
///
/// The void complex (no faces at all) and the trivial complex {{}} (only the
/// empty face) are distinct values; links of facets return the latter, links
/// of non-faces the former.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return SimplicialComplex(); }

  static SimplicialComplex trivial_complex() {
    SimplicialComplex k;
    k.facets_.push_back(Face());
    return k;
  }

  /// Normalizes an arbitrary facet list: duplicates are merged and dominated
  /// faces removed, so the result is an antichain.  Dropped inputs are
  /// reported rather than rejected.
  static SimplicialComplex from_facets(std::vector<Face> facets,
                                       BuildReport* report = nullptr) {
    std::sort(facets.begin(), facets.end());
    SimplicialComplex k;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (i > 0 && facets[i] == facets[i - 1]) {
        if (report) report->duplicates.push_back(facets[i]);
        continue;
      }
      bool dominated = false;
      // canonical order sorts by dimension, so potential dominators lie ahead
      for (std::size_t j = facets.size(); j-- > i + 1;) {
        if (facets[i].size() < facets[j].size() && facets[i].subset_of(facets[j])) {
          dominated = true;
          break;
        }
      }
      if (dominated) {
        if (report) report->dominated.push_back(facets[i]);
        continue;
      }
      k.facets_.push_back(facets[i]);
    }
    return k;
  }

  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }

  /// -2 for the void complex, -1 for the trivial complex.
  int dimension() const {
    if (facets_.empty()) return -2;
    return facets_.back().dimension();
  }

  bool pure() const {
    if (facets_.empty()) return false;
    return facets_.front().dimension() == facets_.back().dimension();
  }

  bool is_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
  }

  bool contains(const Face& f) const {
    for (const Face& g : facets_)
      if (f.subset_of(g)) return true;
    return false;
  }

  /// Union of all facets, as a face.
  Face vertex_support() const {
    Face s;
    for (const Face& f : facets_) s = s.united(f);
    return s;
  }

  std::vector<int> vertices() const { return vertex_support().vertices(); }

  /// Every face exactly once, in canonical (dimension, lexicographic) order.
  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (const Face& facet : facets_) {
      std::vector<Face> subs = subsets_of(facet);
      out.insert(out.end(), subs.begin(), subs.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  FVector f_vector() const {
    FVector f;
    if (facets_.empty()) return f;
    f.entries.assign(static_cast<std::size_t>(dimension() + 2), 0);
    for (const Face& face : faces())
      ++f.entries[static_cast<std::size_t>(face.size())];
    return f;
  }

  HVector h_vector() const { return h_from_f(f_vector()); }

  /// link(sigma) = { tau : tau and sigma disjoint, their union a face }.
  /// For sigma not a face this is the void complex; for a facet it is the
  /// trivial complex.
  SimplicialComplex link(const Face& sigma) const {
    std::vector<Face> fs;
    for (const Face& facet : facets_)
      if (sigma.subset_of(facet)) fs.push_back(facet.minus(sigma));
    return from_facets(std::move(fs));
  }

  /// All faces contained in the vertex set w.
  SimplicialComplex induced(const Face& w) const {
    std::vector<Face> fs;
    for (const Face& facet : facets_) fs.push_back(facet.intersected(w));
    return from_facets(std::move(fs));
  }

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
  bool operator!=(const SimplicialComplex& o) const { return facets_ != o.facets_; }

 private:
  std::vector<Face> facets_;
};

/// A relative simplicial complex Phi = (Delta, Gamma), with face set
/// Delta \ Gamma.  The pair need not be canonical; canonical_pair() computes
/// the minimal presentation (combinatorial closure of Phi, its complement).
class RelativeComplex {
 public:
  RelativeComplex(SimplicialComplex closure, SimplicialComplex removed)
      : closure_(std::move(closure)), removed_(std::move(removed)) {
    for (const Face& f : removed_.facets())
      if (!closure_.contains(f))
        throw std::invalid_argument("removed part is not a subcomplex");
  }

  const SimplicialComplex& closure() const { return closure_; }
  const SimplicialComplex& removed() const { return removed_; }

  bool contains(const Face& f) const {
    return closure_.contains(f) && !removed_.contains(f);
  }

  /// Maximal faces of Phi: the facets of Delta that are not in Gamma.
  std::vector<Face> maximal_faces() const {
    std::vector<Face> out;
    for (const Face& f : closure_.facets())
      if (!removed_.contains(f)) out.push_back(f);
    return out;
  }

  bool empty() const { return maximal_faces().empty(); }

  int dimension() const {
    int d = -2;
    for (const Face& f : maximal_faces()) d = std::max(d, f.dimension());
    return d;
  }

  bool pure() const {
    std::vector<Face> m = maximal_faces();
    if (m.empty()) return false;
    for (const Face& f : m)
      if (f.dimension() != m.back().dimension()) return false;
    return true;
  }

  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (const Face& f : closure_.faces())
      if (!removed_.contains(f)) out.push_back(f);
    return out;
  }

  /// Faces of Phi none of whose codimension-1 subsets lie in Phi.
  std::vector<Face> minimal_faces() const {
    std::vector<Face> out;
    for (const Face& f : faces()) {
      bool minimal = true;
      for (int v : f.vertices()) {
        if (contains(f.without(v))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(f);
    }
    return out;
  }

  FVector f_vector() const {
    FVector f;
    int d = dimension();
    if (d < -1) return f;
    f.entries.assign(static_cast<std::size_t>(d + 2), 0);
    for (const Face& face : faces())
      ++f.entries[static_cast<std::size_t>(face.size())];
    return f;
  }

  HVector h_vector() const { return h_from_f(f_vector()); }

  /// Relative link: the pair of links.  Intrinsic to Phi (independent of the
  /// presenting pair), which the test suite checks directly.
  RelativeComplex link(const Face& sigma) const {
    return RelativeComplex(closure_.link(sigma), removed_.link(sigma));
  }

  /// Minimal presentation: (combinatorial closure of Phi, closure \ Phi).
  RelativeComplex canonical_pair() const {
    SimplicialComplex bar = SimplicialComplex::from_facets(maximal_faces());
    std::vector<Face> residue;
    for (const Face& f : bar.faces())
      if (removed_.contains(f)) residue.push_back(f);
    return RelativeComplex(std::move(bar), maximal_subfamily(residue));
  }

  bool operator==(const RelativeComplex& o) const {
    return closure_ == o.closure_ && removed_ == o.removed_;
  }

 private:
  SimplicialComplex closure_;
  SimplicialComplex removed_;

  static SimplicialComplex maximal_subfamily(const std::vector<Face>& faces) {
    std::vector<Face> keep;
    for (const Face& f : faces) {
      bool dominated = false;
      for (const Face& g : faces)
        if (f != g && f.subset_of(g)) {
          dominated = true;
          break;
        }
      if (!dominated) keep.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(keep));
  }
};

/// Result of the induced-subcomplex test; the witness is a minimal face of
/// X \ A of dimension >= 1 (equivalently a face showing A != X restricted to
/// A's vertices).
struct InducedCheck {
  bool induced = false;
  std::optional<Face> witness;
};

inline InducedCheck is_induced(const SimplicialComplex& x, const SimplicialComplex& a) {
  for (const Face& f : a.facets())
    if (!x.contains(f)) throw std::invalid_argument("A is not a subcomplex of X");
  InducedCheck r;
  if (x.induced(a.vertex_support()) == a) {
    r.induced = true;
    return r;
  }
  RelativeComplex phi(x, a);
  for (const Face& f : phi.minimal_faces()) {
    if (f.dimension() != 0) {
      r.witness = f;
      break;
    }
  }
  return r;
}

/// A (partial) permutation of vertex indices; unmentioned vertices are fixed.
class VertexPermutation {
 public:
  VertexPermutation() = default;

  static VertexPermutation from_cycles(
      std::initializer_list<std::initializer_list<int>> cycles) {
    VertexPermutation p;
    for (const auto& cycle : cycles) {
      std::vector<int> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i)
        p.map_[c[i]] = c[(i + 1) % c.size()];
    }
    return p;
  }

  static VertexPermutation from_map(std::map<int, int> m) {
    VertexPermutation p;
    p.map_ = std::move(m);
    return p;
  }

  int operator()(int v) const {
    auto it = map_.find(v);
    return it == map_.end() ? v : it->second;
  }

  Face apply(const Face& f) const {
    Face out;
    for (int v : f.vertices()) out = out.with((*this)(v));
    return out;
  }

  VertexPermutation inverse() const {
    VertexPermutation p;
    for (const auto& [k, v] : map_) p.map_[v] = k;
    return p;
  }

  /// Bijective on the given vertex set (image equals the set itself).
  bool permutes(const Face& support) const {
    Face image;
    for (int v : support.vertices()) {
      int w = (*this)(v);
      if (image.contains(w)) return false;
      image = image.with(w);
    }
    return image == support;
  }

 private:
  std::map<int, int> map_;
};

inline SimplicialComplex apply_permutation(const SimplicialComplex& k,
                                           const VertexPermutation& pi) {
  if (!pi.permutes(k.vertex_support()))
    throw std::invalid_argument("permutation is not a bijection on the vertex set");
  std::vector<Face> fs;
  fs.reserve(k.facets().size());
  for (const Face& f : k.facets()) fs.push_back(pi.apply(f));
  return SimplicialComplex::from_facets(std::move(fs));
}

inline RelativeComplex apply_permutation(const RelativeComplex& k,
                                         const VertexPermutation& pi) {
  return RelativeComplex(apply_permutation(k.closure(), pi),
                         apply_permutation(k.removed(), pi));
}

inline bool is_automorphism(const SimplicialComplex& k, const VertexPermutation& pi) {
  return apply_permutation(k, pi) == k;
}

inline bool is_automorphism(const RelativeComplex& k, const VertexPermutation& pi) {
  return apply_permutation(k, pi) == k;
}

/// Relabels vertices through an arbitrary map; must be injective on the
/// vertex support.  Unlike apply_permutation the image may be a fresh set.
template <typename MapFn>
SimplicialComplex relabel(const SimplicialComplex& k, MapFn&& fn) {
  Face image;
  for (int v : k.vertices()) {
    int w = fn(v);
    if (image.contains(w)) throw std::invalid_argument("relabeling is not injective");
    image = image.with(w);
  }
  std::vector<Face> fs;
  fs.reserve(k.facets().size());
  for (const Face& f : k.facets()) {
    Face g;
    for (int v : f.vertices()) g = g.with(fn(v));
    fs.push_back(g);
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

/// Proper-coloring certificate for balancedness: color per vertex index, -1
/// for vertices outside the support.
struct BalanceCheck {
  bool balanced = false;
  std::vector<int> coloring;
};

/// A pure d-complex is balanced when its 1-skeleton is properly
/// (d+1)-colorable; every facet is then automatically rainbow because its
/// vertices are pairwise adjacent.  Exhaustive backtracking, pruned by never
/// introducing more than one previously unused color.
inline BalanceCheck is_balanced(const SimplicialComplex& k) {
  if (k.is_void() || !k.pure())
    throw std::invalid_argument("balancedness requires a pure nonvoid complex");
  int colors = k.dimension() + 1;
  std::vector<int> vs = k.vertices();
  std::size_t n = vs.size();

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (k.contains(Face::of({vs[i], vs[j]}))) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }

  std::vector<int> color(n, -1);
  auto assign = [&](auto&& self, std::size_t i, int used) -> bool {
    if (i == n) return true;
    int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (std::size_t j : adj[i])
        if (color[j] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[i] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      color[i] = -1;
    }
    return false;
  };

  BalanceCheck r;
  if (assign(assign, 0, 0)) {
    r.balanced = true;
    std::size_t width = vs.empty() ? 0 : static_cast<std::size_t>(vs.back()) + 1;
    r.coloring.assign(width, -1);
    for (std::size_t i = 0; i < n; ++i)
      r.coloring[static_cast<std::size_t>(vs[i])] = color[i];
  }
  return r;
}

}  // namespace simpart
