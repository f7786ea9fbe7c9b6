#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/glue.hpp"
#include "simpart/partition.hpp"
#include "simpart/shelling.hpp"
#include "simpart/vectors.hpp"

namespace simpart {

/// Reference values a corpus entry is expected to satisfy; the regression
/// and acceptance suites run every applicable checker against these.
struct ExpectedProperties {
  std::optional<FVector> f;
  std::optional<HVector> h;
  std::optional<bool> cohen_macaulay;
  std::optional<bool> partitionable;
  std::optional<bool> shellable;
  std::optional<bool> balanced;
  std::vector<Face> known_shelling;  // verified facet order, when one is known
  std::optional<double> partition_budget_seconds;
  std::optional<double> shelling_budget_seconds;
  bool partition_search_slow = false;  // excluded by --skip-slow
  bool shelling_search_slow = false;
  std::string notes;
};

using CorpusObject =
    std::variant<SimplicialComplex, RelativeComplex, GlueSpec, VertexPermutation>;

struct CorpusEntry {
  std::string name;
  CorpusObject object;
  ExpectedProperties expected;
};

namespace detail {

inline Face face_of(std::initializer_list<int> vs) { return Face::of(vs); }

inline std::vector<Face> faces_from(std::initializer_list<std::initializer_list<int>> ls) {
  std::vector<Face> out;
  for (const auto& l : ls) out.push_back(Face::of(l));
  return out;
}

inline FVector fv(std::initializer_list<long long> es) { return FVector{es}; }
inline HVector hv(std::initializer_list<long long> es) { return HVector{es}; }

inline std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries;

  const std::vector<Face> z_facets = faces_from(
      {{0, 1, 2, 3}, {0, 1, 2, 5}, {0, 2, 3, 7}, {0, 2, 5, 6}, {0, 2, 6, 7},
       {1, 2, 3, 4}, {1, 2, 4, 9}, {1, 2, 5, 6}, {1, 2, 6, 9}, {1, 3, 4, 7},
       {1, 4, 5, 7}, {1, 4, 5, 8}, {1, 4, 8, 9}, {1, 5, 6, 9}, {1, 5, 8, 9},
       {2, 3, 4, 8}, {2, 3, 6, 7}, {2, 3, 6, 8}, {3, 4, 7, 8}, {3, 6, 7, 8},
       {4, 5, 7, 8}});
  const std::vector<Face> b_facets =
      faces_from({{0, 2, 3, 7}, {0, 2, 6, 7}, {2, 3, 6, 7}, {2, 3, 6, 8},
                  {2, 3, 4, 8}, {3, 6, 7, 8}, {3, 4, 7, 8}});
  // the 14 facets of the relative complex, in shelling order
  const std::vector<Face> qbar_order =
      faces_from({{1, 2, 4, 9}, {1, 2, 6, 9}, {1, 5, 6, 9}, {1, 5, 8, 9},
                  {1, 4, 8, 9}, {1, 4, 5, 8}, {1, 4, 5, 7}, {4, 5, 7, 8},
                  {1, 2, 5, 6}, {0, 1, 2, 5}, {0, 2, 5, 6}, {0, 1, 2, 3},
                  {1, 2, 3, 4}, {1, 3, 4, 7}});
  const std::vector<Face> a_order =
      faces_from({{0, 2, 6}, {0, 2, 3}, {2, 3, 4}, {3, 4, 7}, {4, 7, 8}});
  const std::vector<Face> xprime_order = faces_from(
      {{1, 5, 8, 9}, {1, 4, 8, 9}, {1, 4, 5, 8}, {1, 4, 5, 7}, {4, 5, 7, 8}});
  const std::vector<Face> aprime_order =
      faces_from({{4, 8, 9}, {5, 8, 9}, {5, 7, 8}, {1, 5, 7}});
  const std::vector<Face> bjorner_facets =
      faces_from({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 5, 6}});

  SimplicialComplex z = SimplicialComplex::from_facets(z_facets);
  SimplicialComplex b = SimplicialComplex::from_facets(b_facets);
  SimplicialComplex qbar = SimplicialComplex::from_facets(qbar_order);
  SimplicialComplex a = SimplicialComplex::from_facets(a_order);
  SimplicialComplex xprime = SimplicialComplex::from_facets(xprime_order);
  SimplicialComplex aprime = SimplicialComplex::from_facets(aprime_order);
  SimplicialComplex bjorner = SimplicialComplex::from_facets(bjorner_facets);

  {
    CorpusEntry e{"ziegler-Z", z, {}};
    e.expected.cohen_macaulay = true;
    e.expected.partitionable = true;
    e.expected.partition_budget_seconds = 60.0;
    e.expected.shellable = false;
    e.expected.shelling_budget_seconds = 3600.0;
    e.expected.shelling_search_slow = true;
    e.expected.notes =
        "nonshellable triangulation of the 3-ball on 10 vertices; "
        "partitionable, Cohen-Macaulay and constructible";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"B", b, {}};
    e.expected.cohen_macaulay = true;
    e.expected.shellable = true;
    e.expected.known_shelling = b_facets;
    e.expected.notes = "induced subcomplex of ziegler-Z on {0,2,3,4,6,7,8}; shellable 3-ball";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"Qbar", qbar, {}};
    e.expected.f = fv({1, 10, 31, 36, 14});
    e.expected.h = hv({1, 6, 7, 0, 0});
    e.expected.cohen_macaulay = true;
    e.expected.shellable = true;
    e.expected.known_shelling = qbar_order;
    e.expected.balanced = false;
    e.expected.notes =
        "closure of the relative complex Q; shellable 3-ball whose 1-skeleton "
        "is not 4-colorable";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"A", a, {}};
    e.expected.f = fv({1, 7, 11, 5, 0});
    e.expected.h = hv({1, 4, 0, 0, 0});
    e.expected.cohen_macaulay = true;
    e.expected.shellable = true;
    e.expected.known_shelling = a_order;
    e.expected.notes = "Qbar restricted to {0,2,3,4,6,7,8}; shellable 2-ball with 24 faces";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"Q", RelativeComplex(z, b), {}};
    e.expected.f = fv({0, 3, 20, 31, 14});
    e.expected.h = hv({0, 3, 11, 0, 0});
    e.expected.cohen_macaulay = true;
    e.expected.partitionable = false;
    e.expected.partition_budget_seconds = 300.0;
    e.expected.notes =
        "relative complex (ziegler-Z, B), equivalently (Qbar, A); "
        "Cohen-Macaulay and not partitionable; minimal faces are the vertices 1, 5, 9";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"C2", GlueSpec{qbar, a, 2}, {}};
    e.expected.cohen_macaulay = true;
    e.expected.partitionable = true;
    e.expected.partition_budget_seconds = 60.0;
    e.expected.notes = "two copies of Qbar glued along A; partitionable";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"C3", GlueSpec{qbar, a, 3}, {}};
    e.expected.f = fv({1, 16, 71, 98, 42});
    e.expected.h = hv({1, 12, 29, 0, 0});
    e.expected.cohen_macaulay = true;
    e.expected.partitionable = false;
    e.expected.partition_budget_seconds = 7200.0;
    e.expected.partition_search_slow = true;
    e.expected.notes =
        "three copies of Qbar glued along A; Cohen-Macaulay, constructible, "
        "not partitionable; depth 4 and Stanley depth 3 are known values, "
        "documented here but not computed by this tool";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"C25", GlueSpec{qbar, a, 25}, {}};
    e.expected.f = fv({1, 82, 511, 780, 350});
    e.expected.cohen_macaulay = true;
    e.expected.notes =
        "25 copies of Qbar glued along A (A has 24 faces, so the pigeonhole "
        "bound applies); Cohen-Macaulay and not partitionable";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"Xprime", xprime, {}};
    e.expected.cohen_macaulay = true;
    e.expected.shellable = true;
    e.expected.known_shelling = xprime_order;
    e.expected.notes = "ziegler-Z restricted to {1,4,5,7,8,9}; shellable 3-ball";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"Aprime", aprime, {}};
    e.expected.cohen_macaulay = true;
    e.expected.shellable = true;
    e.expected.known_shelling = aprime_order;
    e.expected.notes =
        "shellable 2-ball inside the boundary of Xprime; not an induced subcomplex";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"Qprime", RelativeComplex(xprime, aprime), {}};
    e.expected.f = fv({0, 0, 5, 10, 5});
    e.expected.cohen_macaulay = true;
    e.expected.partitionable = false;
    e.expected.partition_budget_seconds = 10.0;
    e.expected.notes =
        "relative pair (Xprime, Aprime); Cohen-Macaulay and not partitionable; "
        "depth 4 and Stanley depth 3 are known values, documented here but not "
        "computed by this tool";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"bjorner", bjorner, {}};
    e.expected.h = hv({1, 3, 0, 1});
    e.expected.cohen_macaulay = false;
    e.expected.partitionable = true;
    e.expected.partition_budget_seconds = 60.0;
    e.expected.notes =
        "partitionable but not Cohen-Macaulay (vertex 1 fails the link "
        "condition); h-vector (1,3,0,1) has an internal zero";
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e{"tau", VertexPermutation::from_cycles({{0, 7}, {2, 4}, {6, 8}}), {}};
    e.expected.notes =
        "triple transposition (0 7)(2 4)(6 8); an automorphism of Qbar fixing A "
        "setwise and exchanging the edges 48 and 26";
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace detail

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = detail::build_corpus();
  return entries;
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const CorpusEntry& e : corpus()) names.push_back(e.name);
  return names;
}

inline const CorpusEntry& corpus_get(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown corpus entry: " + name);
}

/// A corpus object materialized as a complex (glue specs are expanded).
struct RealizedComplex {
  bool relative = false;
  SimplicialComplex closure;
  SimplicialComplex removed;  // meaningful when relative
  std::vector<std::string> labels;

  RelativeComplex as_relative() const { return RelativeComplex(closure, removed); }

  FVector f_vector() const {
    return relative ? as_relative().f_vector() : closure.f_vector();
  }
  HVector h_vector() const {
    return relative ? as_relative().h_vector() : closure.h_vector();
  }
};

inline RealizedComplex corpus_realize(const CorpusEntry& entry) {
  RealizedComplex r;
  if (const auto* k = std::get_if<SimplicialComplex>(&entry.object)) {
    r.closure = *k;
  } else if (const auto* rel = std::get_if<RelativeComplex>(&entry.object)) {
    r.relative = true;
    r.closure = rel->closure();
    r.removed = rel->removed();
  } else if (const auto* spec = std::get_if<GlueSpec>(&entry.object)) {
    GlueResult g = glue(*spec);
    r.closure = g.complex;
    r.labels = g.labels;
    return r;
  } else {
    throw std::invalid_argument("corpus entry has no complex: " + entry.name);
  }
  for (int v = 0; v <= r.closure.vertex_support().max_vertex(); ++v)
    r.labels.push_back(std::to_string(v));
  return r;
}

struct CheckOutcome {
  std::string entry;
  std::string check;
  std::string expected;
  std::string got;
  bool pass = false;
  bool skipped = false;
  double seconds = 0.0;
};

struct CorpusVerifyOptions {
  bool skip_slow = false;
  int threads = 1;
};

namespace detail {

template <typename Fn>
CheckOutcome run_check(const std::string& entry, const std::string& check, Fn&& fn) {
  CheckOutcome out;
  out.entry = entry;
  out.check = check;
  Stopwatch timer;
  fn(out);
  out.seconds = timer.seconds();
  return out;
}

inline std::string describe(const SearchReport& r) {
  switch (r.status) {
    case SearchStatus::sat:
      return "certificate found (" + std::to_string(r.nodes_explored) + " nodes)";
    case SearchStatus::unsat:
      return "UNSAT, tree exhausted (" + std::to_string(r.nodes_explored) + " nodes)";
    default:
      return "budget exceeded";
  }
}

inline void verify_tau(const CorpusEntry& entry, std::vector<CheckOutcome>& out) {
  const auto& tau = std::get<VertexPermutation>(entry.object);
  const auto& qbar = std::get<SimplicialComplex>(corpus_get("Qbar").object);
  const auto& a = std::get<SimplicialComplex>(corpus_get("A").object);
  out.push_back(run_check(entry.name, "automorphism of Qbar", [&](CheckOutcome& c) {
    c.expected = "yes";
    c.pass = is_automorphism(qbar, tau);
    c.got = c.pass ? "yes" : "no";
  }));
  out.push_back(run_check(entry.name, "fixes A setwise", [&](CheckOutcome& c) {
    c.expected = "yes";
    c.pass = apply_permutation(a, tau) == a;
    c.got = c.pass ? "yes" : "no";
  }));
  out.push_back(run_check(entry.name, "maps edge 48 to edge 26", [&](CheckOutcome& c) {
    c.expected = "{2 6}";
    Face image = tau.apply(Face::of({4, 8}));
    c.got = to_string(image);
    c.pass = image == Face::of({2, 6});
  }));
}

}  // namespace detail

/// Runs every checker applicable to the entry's expected record.  Searches
/// use the budgets pinned in the corpus; slow searches are marked skipped
/// when skip_slow is set.
inline std::vector<CheckOutcome> corpus_verify(const CorpusEntry& entry,
                                               const CorpusVerifyOptions& opts = {}) {
  std::vector<CheckOutcome> out;
  if (std::holds_alternative<VertexPermutation>(entry.object)) {
    detail::verify_tau(entry, out);
    return out;
  }

  RealizedComplex rc = corpus_realize(entry);
  const ExpectedProperties& exp = entry.expected;

  if (exp.f) {
    out.push_back(detail::run_check(entry.name, "f-vector", [&](CheckOutcome& c) {
      FVector got = rc.f_vector().padded(exp.f->entries.size());
      c.expected = to_string(*exp.f);
      c.got = to_string(got);
      c.pass = got == *exp.f;
    }));
  }
  if (exp.h) {
    out.push_back(detail::run_check(entry.name, "h-vector", [&](CheckOutcome& c) {
      HVector got = rc.h_vector().padded(exp.h->entries.size());
      c.expected = to_string(*exp.h);
      c.got = to_string(got);
      c.pass = got == *exp.h;
    }));
  }
  if (exp.cohen_macaulay) {
    out.push_back(detail::run_check(entry.name, "Cohen-Macaulay", [&](CheckOutcome& c) {
      c.expected = *exp.cohen_macaulay ? "yes" : "no";
      CmVerdict v = rc.relative ? is_cohen_macaulay(rc.as_relative())
                                : is_cohen_macaulay(rc.closure);
      c.got = v.cohen_macaulay
                  ? "yes"
                  : "no (witness " + to_string(v.witness->face) + ", degree " +
                        std::to_string(v.witness->degree) + ")";
      c.pass = v.cohen_macaulay == *exp.cohen_macaulay;
    }));
  }
  if (!exp.known_shelling.empty()) {
    out.push_back(detail::run_check(entry.name, "known shelling order", [&](CheckOutcome& c) {
      c.expected = "valid shelling";
      ShellingVerifyResult v = verify_shelling(rc.closure, exp.known_shelling);
      if (!v.valid) {
        c.got = v.violation;
        return;
      }
      HVector interp = h_from_restrictions(v.shelling.restrictions, rc.closure.dimension());
      if (interp != rc.closure.h_vector()) {
        c.got = "restriction histogram " + to_string(interp) + " != h-vector";
        return;
      }
      c.got = "valid shelling (histogram = h-vector)";
      c.pass = true;
    }));
  }
  if (exp.shellable && !*exp.shellable) {
    out.push_back(detail::run_check(entry.name, "shellability search", [&](CheckOutcome& c) {
      c.expected = "UNSAT (exhaustive)";
      if (opts.skip_slow && exp.shelling_search_slow) {
        c.skipped = true;
        c.got = "skipped (slow)";
        return;
      }
      SearchLimits limits;
      limits.budget_seconds = exp.shelling_budget_seconds;
      limits.threads = opts.threads;
      ShellingSearchResult r = find_shelling(rc.closure, limits);
      c.got = detail::describe(r.report);
      c.pass = r.report.status == SearchStatus::unsat;
    }));
  }
  if (exp.partitionable) {
    out.push_back(detail::run_check(entry.name, "partitionability", [&](CheckOutcome& c) {
      c.expected = *exp.partitionable ? "certificate found" : "UNSAT (exhaustive)";
      if (opts.skip_slow && exp.partition_search_slow) {
        c.skipped = true;
        c.got = "skipped (slow)";
        return;
      }
      SearchLimits limits;
      limits.budget_seconds = exp.partition_budget_seconds;
      limits.threads = opts.threads;
      PartitionSearchResult r = rc.relative ? find_partitioning(rc.as_relative(), limits)
                                            : find_partitioning(rc.closure, limits);
      c.got = detail::describe(r.report);
      if (*exp.partitionable) {
        c.pass = r.report.status == SearchStatus::sat &&
                 (rc.relative ? verify_partitioning(rc.as_relative(), *r.certificate).valid
                              : verify_partitioning(rc.closure, *r.certificate).valid);
      } else {
        c.pass = r.report.status == SearchStatus::unsat;
      }
    }));
  }
  if (exp.balanced) {
    out.push_back(detail::run_check(entry.name, "balancedness", [&](CheckOutcome& c) {
      c.expected = *exp.balanced ? "balanced" : "not balanced";
      BalanceCheck bc = is_balanced(rc.closure);
      c.got = bc.balanced ? "balanced" : "not balanced";
      c.pass = bc.balanced == *exp.balanced;
    }));
  }
  return out;
}

inline std::vector<CheckOutcome> corpus_verify_all(const CorpusVerifyOptions& opts = {}) {
  std::vector<CheckOutcome> out;
  for (const CorpusEntry& e : corpus()) {
    std::vector<CheckOutcome> rows = corpus_verify(e, opts);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace simpart
