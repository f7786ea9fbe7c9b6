#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/shelling.hpp"

namespace simpart {

/// Recursive constructibility certificate: a leaf claims a single simplex; a
/// node claims its complex is the union of two constructible parts of equal
/// dimension d meeting in a constructible complex of dimension d-1.  Only
/// leaves carry facets; every intermediate complex is derived bottom-up, so
/// the verifier checks the union/intersection identities literally.
struct ConstructibilityCert {
  bool leaf = true;
  Face facet;
  std::vector<ConstructibilityCert> parts;  // [first, second, intersection]

  static ConstructibilityCert make_leaf(Face f) {
    ConstructibilityCert c;
    c.facet = f;
    return c;
  }

  static ConstructibilityCert make_node(ConstructibilityCert a, ConstructibilityCert b,
                                        ConstructibilityCert intersection) {
    ConstructibilityCert c;
    c.leaf = false;
    c.parts.reserve(3);
    c.parts.push_back(std::move(a));
    c.parts.push_back(std::move(b));
    c.parts.push_back(std::move(intersection));
    return c;
  }

  SimplicialComplex complex() const {
    if (leaf) return SimplicialComplex::from_facets({facet});
    SimplicialComplex left = parts[0].complex();
    SimplicialComplex right = parts[1].complex();
    std::vector<Face> fs = left.facets();
    fs.insert(fs.end(), right.facets().begin(), right.facets().end());
    return SimplicialComplex::from_facets(std::move(fs));
  }

  std::size_t internal_nodes() const {
    if (leaf) return 0;
    std::size_t n = 1;
    for (const ConstructibilityCert& p : parts) n += p.internal_nodes();
    return n;
  }
};

struct ConstructibilityVerifyResult {
  bool valid = false;
  std::string violation;
};

/// Face-set intersection of two complexes, as a complex.
inline SimplicialComplex intersection_complex(const SimplicialComplex& a,
                                              const SimplicialComplex& b) {
  std::vector<Face> common;
  for (const Face& f : a.faces())
    if (b.contains(f)) common.push_back(f);
  std::vector<Face> maximal;
  for (const Face& f : common) {
    bool dominated = false;
    for (const Face& g : common)
      if (f != g && f.subset_of(g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(maximal));
}

namespace detail {

inline bool check_cert(const ConstructibilityCert& cert, std::string& violation) {
  if (cert.leaf) return true;
  if (cert.parts.size() != 3) {
    violation = "malformed node: expected exactly three children";
    return false;
  }
  SimplicialComplex d1 = cert.parts[0].complex();
  SimplicialComplex d2 = cert.parts[1].complex();
  SimplicialComplex m = cert.parts[2].complex();
  int d = std::max(d1.dimension(), d2.dimension());
  if (d1.dimension() != d || d2.dimension() != d) {
    violation = "union parts differ in dimension";
    return false;
  }
  if (m.dimension() != d - 1) {
    violation = "intersection part does not have dimension d-1";
    return false;
  }
  if (intersection_complex(d1, d2) != m) {
    violation = "certified intersection differs from the actual intersection";
    return false;
  }
  for (const ConstructibilityCert& p : cert.parts)
    if (!check_cert(p, violation)) return false;
  return true;
}

}  // namespace detail

inline ConstructibilityVerifyResult verify_constructibility(
    const SimplicialComplex& k, const ConstructibilityCert& cert) {
  ConstructibilityVerifyResult r;
  if (cert.complex() != k) {
    r.violation = "certificate root complex differs from the input complex";
    return r;
  }
  r.valid = detail::check_cert(cert, r.violation);
  return r;
}

namespace detail {

inline ConstructibilityCert cert_from_order(const std::vector<Face>& order,
                                            const std::vector<Face>& restrictions);

/// The complex generated by the codimension-1 faces F-v, v in R.  Any order
/// of these facets is a shelling, so a certificate follows recursively.
inline ConstructibilityCert boundary_fan_cert(const Face& top, const Face& r) {
  std::vector<Face> facets;
  for (int v : r.vertices()) facets.push_back(top.without(v));
  std::sort(facets.begin(), facets.end());
  SimplicialComplex fan = SimplicialComplex::from_facets(facets);
  ShellingVerifyResult sv = verify_shelling(fan, facets);
  if (!sv.valid) throw std::logic_error("boundary fan is not shellable: " + sv.violation);
  return cert_from_order(sv.shelling.order, sv.shelling.restrictions);
}

inline ConstructibilityCert cert_from_order(const std::vector<Face>& order,
                                            const std::vector<Face>& restrictions) {
  ConstructibilityCert cert = ConstructibilityCert::make_leaf(order[0]);
  for (std::size_t j = 1; j < order.size(); ++j) {
    ConstructibilityCert step = ConstructibilityCert::make_leaf(order[j]);
    ConstructibilityCert mid = boundary_fan_cert(order[j], restrictions[j]);
    cert = ConstructibilityCert::make_node(std::move(cert), std::move(step), std::move(mid));
  }
  return cert;
}

}  // namespace detail

/// Left-deep certificate following a shelling: step j attaches facet F_j along
/// the fan generated by its restriction face.
inline ConstructibilityCert shelling_to_constructibility(const SimplicialComplex& k,
                                                         const std::vector<Face>& order) {
  ShellingVerifyResult sv = verify_shelling(k, order);
  if (!sv.valid) throw std::invalid_argument("not a shelling: " + sv.violation);
  return detail::cert_from_order(sv.shelling.order, sv.shelling.restrictions);
}

}  // namespace simpart
