#pragma once

// Shared test utilities: a deterministic RNG, complex generators, and
// independent oracles (kept free of the library's search/SNF machinery so
// they can vouch for it).

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/homology.hpp"
#include "simpart/partition.hpp"

namespace testsupport {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline std::vector<simpart::Face> k_subsets(int n, int k) {
  std::vector<simpart::Face> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(simpart::Face::from_range(idx));
      return;
    }
    for (int v = start; v <= n - (k - depth); ++v) {
      idx[static_cast<std::size_t>(depth)] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline simpart::SimplicialComplex random_pure_complex(Rng& rng, int max_vertices = 6,
                                                      int max_facets = 12) {
  int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices - 1)));
  int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(4, n))));
  std::vector<simpart::Face> pool = k_subsets(n, k);
  int m = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(
              static_cast<std::uint64_t>(max_facets), pool.size())));
  // partial shuffle, take the first m
  for (int i = 0; i < m; ++i) {
    std::size_t j = i + rng.below(pool.size() - static_cast<std::size_t>(i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(m));
  return simpart::SimplicialComplex::from_facets(pool);
}

/// Every pure complex whose facets use vertices from {0..3}: all nonempty
/// families of equal-size subsets.
inline std::vector<simpart::SimplicialComplex> all_pure_complexes_up_to_4() {
  std::vector<simpart::SimplicialComplex> out;
  for (int k = 1; k <= 4; ++k) {
    std::vector<simpart::Face> pool = k_subsets(4, k);
    std::uint64_t families = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 1; mask < families; ++mask) {
      std::vector<simpart::Face> facets;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) facets.push_back(pool[i]);
      out.push_back(simpart::SimplicialComplex::from_facets(facets));
    }
  }
  return out;
}

inline simpart::SimplicialComplex cone_over(const simpart::SimplicialComplex& k) {
  int apex = k.vertex_support().max_vertex() + 1;
  std::vector<simpart::Face> fs;
  for (const simpart::Face& f : k.facets()) fs.push_back(f.with(apex));
  return simpart::SimplicialComplex::from_facets(fs);
}

// --- brute-force partitionability oracle -----------------------------------
//
// Facet-major assignment enumeration over bitmasks: every facet picks a
// bottom face, masks must stay disjoint, and a face must be covered by the
// time its last containing facet has been assigned.  No exact-cover
// machinery, no item-selection heuristics.

struct BruteOracleResult {
  bool sat = false;
  std::optional<simpart::Partitioning> certificate;
};

inline BruteOracleResult brute_force_partitioning(
    const std::vector<simpart::Face>& phi_faces,
    const std::vector<simpart::Face>& facets) {
  using simpart::Face;
  if (phi_faces.size() > 63) throw std::logic_error("oracle supports at most 63 faces");
  std::unordered_map<Face, std::size_t, simpart::FaceHash> index;
  for (std::size_t i = 0; i < phi_faces.size(); ++i) index.emplace(phi_faces[i], i);

  const std::uint64_t full = (std::uint64_t{1} << phi_faces.size()) - 1;

  // candidate intervals per facet, skipping any whose span leaves Phi
  std::vector<std::vector<std::pair<Face, std::uint64_t>>> options(facets.size());
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    std::vector<Face> bottoms = simpart::subsets_of(facets[fi]);
    std::sort(bottoms.begin(), bottoms.end());
    for (const Face& r : bottoms) {
      std::uint64_t mask = 0;
      bool inside = true;
      for (const Face& s : simpart::subsets_of(facets[fi].minus(r))) {
        auto it = index.find(s.united(r));
        if (it == index.end()) {
          inside = false;
          break;
        }
        mask |= std::uint64_t{1} << it->second;
      }
      if (inside) options[fi].push_back({r, mask});
    }
  }

  // deadline[i]: faces that must be covered once facet i has been assigned
  std::vector<std::uint64_t> deadline(facets.size(), 0);
  for (std::size_t i = 0; i < phi_faces.size(); ++i) {
    std::size_t last = facets.size();
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
      if (phi_faces[i].subset_of(facets[fi])) last = fi;
    if (last == facets.size()) return {};  // a face no facet contains: unsatisfiable
    deadline[last] |= std::uint64_t{1} << i;
  }

  std::vector<Face> chosen(facets.size());
  std::function<bool(std::size_t, std::uint64_t)> assign =
      [&](std::size_t fi, std::uint64_t used) -> bool {
    if (fi == facets.size()) return used == full;
    for (const auto& [bottom, mask] : options[fi]) {
      if (used & mask) continue;
      std::uint64_t now = used | mask;
      if ((now & deadline[fi]) != deadline[fi]) continue;
      chosen[fi] = bottom;
      if (assign(fi + 1, now)) return true;
    }
    return false;
  };

  BruteOracleResult result;
  if (!assign(0, 0)) return result;
  result.sat = true;
  simpart::Partitioning p;
  for (std::size_t fi = 0; fi < facets.size(); ++fi)
    p.intervals.push_back({chosen[fi], facets[fi]});
  result.certificate = std::move(p);
  return result;
}

inline BruteOracleResult brute_force_partitioning(const simpart::SimplicialComplex& k) {
  return brute_force_partitioning(k.faces(), k.facets());
}

inline BruteOracleResult brute_force_partitioning(const simpart::RelativeComplex& k) {
  std::vector<simpart::Face> maximal = k.maximal_faces();
  std::sort(maximal.begin(), maximal.end());
  return brute_force_partitioning(k.faces(), maximal);
}

// --- independent rank / Smith-form oracles ----------------------------------

/// Fraction-free Gaussian elimination (Bareiss); exact rank over the
/// rationals.
inline int bareiss_rank(simpart::IntMatrix m) {
  using simpart::Int;
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c)
        m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

/// Determinantal-divisor Smith form: the k-th invariant factor is
/// gcd(k-minors)/gcd((k-1)-minors).  Exponential; for small matrices only.
inline std::vector<simpart::Int> minor_gcd_invariant_factors(const simpart::IntMatrix& m) {
  using simpart::Int;
  auto det = [](const simpart::IntMatrix& a) {
    simpart::IntMatrix w = a;
    Int prev = 1;
    Int sign = 1;
    for (int k = 0; k < w.rows; ++k) {
      if (w.at(k, k) == 0) {
        int swap_row = -1;
        for (int r = k + 1; r < w.rows; ++r)
          if (w.at(r, k) != 0) {
            swap_row = r;
            break;
          }
        if (swap_row < 0) return Int(0);
        for (int c = 0; c < w.cols; ++c) std::swap(w.at(k, c), w.at(swap_row, c));
        sign = -sign;
      }
      for (int r = k + 1; r < w.rows; ++r) {
        for (int c = k + 1; c < w.cols; ++c)
          w.at(r, c) = (w.at(k, k) * w.at(r, c) - w.at(r, k) * w.at(k, c)) / prev;
        w.at(r, k) = 0;
      }
      prev = w.at(k, k);
    }
    return Int(sign * w.at(w.rows - 1, w.cols - 1));
  };

  std::vector<std::vector<int>> row_sets, col_sets;
  std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)>
      combos = [&](int n, int k, int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == k) {
          out.push_back(cur);
          return;
        }
        for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
          cur.push_back(v);
          combos(n, k, v + 1, cur, out);
          cur.pop_back();
        }
      };

  std::vector<Int> factors;
  Int prev_gcd = 1;
  for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
    row_sets.clear();
    col_sets.clear();
    std::vector<int> cur;
    combos(m.rows, k, 0, cur, row_sets);
    combos(m.cols, k, 0, cur, col_sets);
    Int g = 0;
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        simpart::IntMatrix sub(k, k);
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(rs[r], cs[c]);
        g = boost::multiprecision::gcd(g, det(sub));
      }
    }
    if (g == 0) break;  // rank reached
    factors.push_back(g / prev_gcd);
    prev_gcd = g;
  }
  return factors;
}

inline simpart::IntMatrix matrix_product(const simpart::IntMatrix& a,
                                         const simpart::IntMatrix& b) {
  simpart::IntMatrix out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(r, k) == 0) continue;
      for (int c = 0; c < b.cols; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

inline bool is_zero_matrix(const simpart::IntMatrix& m) {
  for (const simpart::Int& v : m.data)
    if (v != 0) return false;
  return true;
}

}  // namespace testsupport
