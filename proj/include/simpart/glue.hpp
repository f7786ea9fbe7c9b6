#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simpart/cohen_macaulay.hpp"
#include "simpart/complex.hpp"

namespace simpart {

/// N disjoint copies of X identified along the subcomplex A.
struct GlueSpec {
  SimplicialComplex x;
  SimplicialComplex a;
  int copies = 1;
};

/// Where a glued vertex came from: copy 0 means the shared subcomplex.
struct VertexProvenance {
  int copy = 0;
  int original = 0;
};

struct GlueResult {
  SimplicialComplex complex;
  std::vector<VertexProvenance> provenance;  // by glued vertex index
  std::vector<std::string> labels;           // "v" for shared, "v_i" for copy i
};

/// Identifies `copies` relabeled copies of X along A.  Shared vertices keep
/// their names; vertex v of copy i becomes "v_i".  Indices are assigned
/// densely: shared vertices first (ascending), then each copy's private
/// vertices.
inline GlueResult glue(const GlueSpec& spec) {
  if (spec.copies < 1) throw std::invalid_argument("copies must be at least 1");
  for (const Face& f : spec.a.facets())
    if (!spec.x.contains(f)) throw std::invalid_argument("A is not a subcomplex of X");

  GlueResult out;
  Face shared = spec.a.vertex_support();
  std::map<int, int> shared_index;
  for (int v : shared.vertices()) {
    shared_index[v] = static_cast<int>(out.provenance.size());
    out.provenance.push_back({0, v});
    out.labels.push_back(std::to_string(v));
  }

  std::vector<int> private_vertices;
  for (int v : spec.x.vertices())
    if (!shared.contains(v)) private_vertices.push_back(v);

  std::vector<Face> facets;
  for (int copy = 1; copy <= spec.copies; ++copy) {
    std::map<int, int> to_glued = shared_index;
    for (int v : private_vertices) {
      to_glued[v] = static_cast<int>(out.provenance.size());
      out.provenance.push_back({copy, v});
      out.labels.push_back(std::to_string(v) + "_" + std::to_string(copy));
    }
    for (const Face& f : spec.x.facets()) {
      Face g;
      for (int v : f.vertices()) g = g.with(to_glued.at(v));
      facets.push_back(g);
    }
  }
  out.complex = SimplicialComplex::from_facets(std::move(facets));
  return out;
}

struct GlueHypothesesReport {
  bool x_cohen_macaulay = false;
  bool a_cohen_macaulay = false;
  bool a_induced = false;
  std::optional<Face> induced_witness;
  int codimension = 0;
  long long a_total_faces = 0;  // counts the empty face
  int copies = 0;
  bool pigeonhole_ok = false;  // copies exceed the face count of A

  /// The structural hypotheses on the pair (X, A); the pigeonhole bound on
  /// the copy count is reported separately since undersized families are
  /// legitimate constructions in their own right.
  bool all_hold() const {
    return x_cohen_macaulay && a_cohen_macaulay && a_induced && codimension <= 1;
  }
};

/// Reports each hypothesis of the gluing construction separately; glue()
/// itself never enforces them, since deliberately undersized copy counts are
/// part of the corpus.
inline GlueHypothesesReport check_glue_hypotheses(const GlueSpec& spec) {
  GlueHypothesesReport r;
  r.copies = spec.copies;
  r.x_cohen_macaulay = is_cohen_macaulay(spec.x).cohen_macaulay;
  r.a_cohen_macaulay = is_cohen_macaulay(spec.a).cohen_macaulay;
  InducedCheck ic = is_induced(spec.x, spec.a);
  r.a_induced = ic.induced;
  r.induced_witness = ic.witness;
  r.codimension = spec.x.dimension() - spec.a.dimension();
  r.a_total_faces = static_cast<long long>(spec.a.faces().size());
  r.pigeonhole_ok = spec.copies > r.a_total_faces;
  return r;
}

}  // namespace simpart
