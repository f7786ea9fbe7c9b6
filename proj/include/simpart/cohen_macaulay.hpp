#pragma once

#include <optional>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/homology.hpp"

namespace simpart {

/// A face whose link has nonvanishing reduced homology below its dimension.
struct ReisnerWitness {
  Face face;
  int degree = 0;
  HomologyGroup group;
};

struct CmVerdict {
  bool cohen_macaulay = false;
  std::optional<ReisnerWitness> witness;
};

namespace detail {

template <typename LinkFn>
CmVerdict reisner_scan(const std::vector<Face>& faces, LinkFn&& link_of) {
  CmVerdict v;
  for (const Face& sigma : faces) {  // canonical order: dimension, then lex
    auto [link_dim, profile] = link_of(sigma);
    for (int i = -1; i < link_dim; ++i) {
      if (!profile.at(i).is_zero()) {
        v.witness = ReisnerWitness{sigma, i, profile.at(i)};
        return v;
      }
    }
  }
  v.cohen_macaulay = true;
  return v;
}

}  // namespace detail

/// Reisner's criterion: every face's link (the empty face included) must have
/// vanishing reduced homology below the link's dimension.
inline CmVerdict is_cohen_macaulay(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("void complex");
  return detail::reisner_scan(k.faces(), [&](const Face& sigma) {
    SimplicialComplex link = k.link(sigma);
    return std::pair<int, HomologyProfile>(link.dimension(), reduced_homology(link));
  });
}

/// Relative version: sigma ranges over all of Delta and the link is the pair
/// (link in Delta, link in Gamma); degrees below dim link_Delta(sigma) must
/// vanish.
inline CmVerdict is_cohen_macaulay(const RelativeComplex& k) {
  if (k.closure().is_void()) throw std::invalid_argument("void complex");
  return detail::reisner_scan(k.closure().faces(), [&](const Face& sigma) {
    RelativeComplex link = k.link(sigma);
    return std::pair<int, HomologyProfile>(link.closure().dimension(),
                                           reduced_homology(link));
  });
}

struct CmReportRow {
  Face face;
  int link_dim = -2;
  HomologyProfile profile;
};

inline std::vector<CmReportRow> cm_report(const SimplicialComplex& k) {
  std::vector<CmReportRow> rows;
  for (const Face& sigma : k.faces()) {
    SimplicialComplex link = k.link(sigma);
    rows.push_back({sigma, link.dimension(), reduced_homology(link)});
  }
  return rows;
}

inline std::vector<CmReportRow> cm_report(const RelativeComplex& k) {
  std::vector<CmReportRow> rows;
  for (const Face& sigma : k.closure().faces()) {
    RelativeComplex link = k.link(sigma);
    rows.push_back({sigma, link.closure().dimension(), reduced_homology(link)});
  }
  return rows;
}

}  // namespace simpart
