#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simpart/complex.hpp"
#include "simpart/face.hpp"

namespace simpart {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  Int& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Faces grouped by dimension; the basis of the augmented chain complex.
/// by_dim[i + 1] holds the dimension-i faces (i = -1 is the empty face, when
/// present).  For a relative complex only the faces of Phi appear.
struct ChainBasis {
  std::vector<std::vector<Face>> by_dim;

  int top_dimension() const { return static_cast<int>(by_dim.size()) - 2; }

  const std::vector<Face>& at(int dim) const {
    static const std::vector<Face> kEmpty;
    int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(by_dim.size())) return kEmpty;
    return by_dim[static_cast<std::size_t>(idx)];
  }

  static ChainBasis group(const std::vector<Face>& faces, int top_dim) {
    ChainBasis b;
    if (top_dim < -1) return b;
    b.by_dim.assign(static_cast<std::size_t>(top_dim + 2), {});
    for (const Face& f : faces)
      b.by_dim[static_cast<std::size_t>(f.size())].push_back(f);
    return b;  // input already in canonical order
  }
};

inline ChainBasis chain_basis(const SimplicialComplex& k) {
  return ChainBasis::group(k.faces(), k.dimension());
}

inline ChainBasis chain_basis(const RelativeComplex& k) {
  return ChainBasis::group(k.faces(), k.dimension());
}

/// The boundary map from dimension-i chains to dimension-(i-1) chains, with
/// the usual alternating signs; columns and rows are labeled by the canonical
/// face lists.  Out-of-range dimensions give empty matrices.
struct BoundaryMatrix {
  IntMatrix matrix;
  std::vector<Face> domain;    // dimension-i faces (columns)
  std::vector<Face> codomain;  // dimension-(i-1) faces (rows)
};

inline BoundaryMatrix boundary_matrix(const ChainBasis& basis, int i) {
  BoundaryMatrix b;
  b.domain = basis.at(i);
  b.codomain = basis.at(i - 1);
  b.matrix = IntMatrix(static_cast<int>(b.codomain.size()),
                       static_cast<int>(b.domain.size()));
  std::unordered_map<Face, int, FaceHash> row_of;
  for (std::size_t r = 0; r < b.codomain.size(); ++r)
    row_of.emplace(b.codomain[r], static_cast<int>(r));
  for (std::size_t c = 0; c < b.domain.size(); ++c) {
    std::vector<int> vs = b.domain[c].vertices();
    int sign = 1;
    for (int v : vs) {
      auto it = row_of.find(b.domain[c].without(v));
      if (it != row_of.end()) b.matrix.at(it->second, static_cast<int>(c)) = sign;
      sign = -sign;
    }
  }
  return b;
}

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int i) {
  return boundary_matrix(chain_basis(k), i);
}

inline BoundaryMatrix boundary_matrix(const RelativeComplex& k, int i) {
  return boundary_matrix(chain_basis(k), i);
}

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix.
struct SmithForm {
  std::vector<Int> diagonal;
  int rank() const { return static_cast<int>(diagonal.size()); }
};

/// Exact integer Smith normal form.  Pivot selection: smallest nonzero
/// absolute value, ties broken by position; elimination by gcd-style
/// row/column swaps, then a divisibility sweep so the diagonal forms a chain.
inline SmithForm smith_normal_form(IntMatrix m) {
  const int rows = m.rows, cols = m.cols;
  auto entry = [&](int r, int c) -> Int& { return m.data[static_cast<std::size_t>(r) * cols + c]; };
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols; ++c) std::swap(entry(a, c), entry(b, c));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows; ++r) std::swap(entry(r, a), entry(r, b));
  };

  SmithForm result;
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r) {
      for (int c = t; c < cols; ++c) {
        const Int& v = entry(r, c);
        if (v == 0) continue;
        if (pr < 0 || abs(v) < abs(entry(pr, pc))) {
          pr = r;
          pc = c;
          if (abs(v) == 1) goto pivot_found;  // cannot improve
        }
      }
    }
  pivot_found:
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      // clear column t by gcd steps
      for (int r = t + 1; r < rows; ++r) {
        while (entry(r, t) != 0) {
          Int q = entry(r, t) / entry(t, t);
          if (q != 0)
            for (int c = t; c < cols; ++c) entry(r, c) -= q * entry(t, c);
          if (entry(r, t) != 0) swap_rows(r, t);
        }
      }
      // clear row t; column swaps here may repopulate column t
      for (int c = t + 1; c < cols; ++c) {
        while (entry(t, c) != 0) {
          Int q = entry(t, c) / entry(t, t);
          if (q != 0)
            for (int r = t; r < rows; ++r) entry(r, c) -= q * entry(r, t);
          if (entry(t, c) != 0) swap_cols(c, t);
        }
      }
      bool column_clear = true;
      for (int r = t + 1; r < rows; ++r)
        if (entry(r, t) != 0) {
          column_clear = false;
          break;
        }
      if (!column_clear) continue;

      // divisibility sweep: the pivot must divide the remaining submatrix
      bool divides = true;
      for (int r = t + 1; r < rows && divides; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (entry(r, c) % entry(t, t) != 0) {
            for (int cc = t; cc < cols; ++cc) entry(t, cc) += entry(r, cc);
            divides = false;
            break;
          }
      if (divides) break;
    }

    result.diagonal.push_back(abs(entry(t, t)));
    ++t;
  }
  return result;
}

/// One reduced homology group: free rank plus torsion coefficients (each
/// > 1, in divisibility order).
struct HomologyGroup {
  long long betti = 0;
  std::vector<Int> torsion;
  bool is_zero() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
};

inline std::string to_string(const HomologyGroup& g) {
  if (g.is_zero()) return "0";
  std::string s;
  if (g.betti > 0) s = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
  for (const Int& t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s;
}

/// Reduced homology, one group per dimension -1..d.
struct HomologyProfile {
  int top_dim = -2;
  std::vector<HomologyGroup> groups;  // index 0 is dimension -1

  const HomologyGroup& at(int dim) const {
    static const HomologyGroup kZero;
    int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(groups.size())) return kZero;
    return groups[static_cast<std::size_t>(idx)];
  }

  bool all_zero() const {
    for (const HomologyGroup& g : groups)
      if (!g.is_zero()) return false;
    return true;
  }

  bool zero_below(int dim) const {
    for (int i = -1; i < dim; ++i)
      if (!at(i).is_zero()) return false;
    return true;
  }
};

inline HomologyProfile homology_from_basis(const ChainBasis& basis) {
  HomologyProfile p;
  int d = basis.top_dimension();
  if (d < -1) return p;  // void: all groups zero
  p.top_dim = d;
  p.groups.assign(static_cast<std::size_t>(d + 2), {});

  std::vector<SmithForm> snf(static_cast<std::size_t>(d + 3));
  for (int i = -1; i <= d + 1; ++i)
    snf[static_cast<std::size_t>(i + 1)] = smith_normal_form(boundary_matrix(basis, i).matrix);

  for (int i = -1; i <= d; ++i) {
    HomologyGroup& g = p.groups[static_cast<std::size_t>(i + 1)];
    long long faces_i = static_cast<long long>(basis.at(i).size());
    g.betti = faces_i - snf[static_cast<std::size_t>(i + 1)].rank() -
              snf[static_cast<std::size_t>(i + 2)].rank();
    for (const Int& v : snf[static_cast<std::size_t>(i + 2)].diagonal)
      if (v > 1) g.torsion.push_back(v);
  }
  return p;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& k) {
  return homology_from_basis(chain_basis(k));
}

inline HomologyProfile reduced_homology(const RelativeComplex& k) {
  return homology_from_basis(chain_basis(k));
}

}  // namespace simpart
