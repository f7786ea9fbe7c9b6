// Acceptance suite: one pass/fail line per criterion, each with its budget
// pinned in code.  Exit status is zero only if every criterion passes.
//
// SIMPART_THREADS sets the worker count for the exhaustive searches (the
// results are deterministic regardless).

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "simpart/cohen_macaulay.hpp"
#include "simpart/constructibility.hpp"
#include "simpart/corpus.hpp"
#include "simpart/glue.hpp"
#include "simpart/homology.hpp"
#include "simpart/partition.hpp"
#include "simpart/shelling.hpp"
#include "support.hpp"

using namespace simpart;

namespace {

int search_threads() {
  if (const char* env = std::getenv("SIMPART_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

struct Criterion {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

const SimplicialComplex& cc(const char* name) {
  return std::get<SimplicialComplex>(corpus_get(name).object);
}

RelativeComplex rc(const char* name) {
  return std::get<RelativeComplex>(corpus_get(name).object);
}

// 1. f- and h-vectors of the closure, the removed part, and the relative complex
void criterion_vectors(Criterion& c) {
  c.require(to_string(cc("Qbar").f_vector()) == "(1, 10, 31, 36, 14)", "f(Qbar)");
  c.require(to_string(cc("Qbar").h_vector()) == "(1, 6, 7, 0, 0)", "h(Qbar)");
  c.require(to_string(cc("A").f_vector().padded(5)) == "(1, 7, 11, 5, 0)", "f(A)");
  c.require(to_string(cc("A").h_vector().padded(5)) == "(1, 4, 0, 0, 0)", "h(A)");
  c.require(to_string(rc("Q").f_vector()) == "(0, 3, 20, 31, 14)", "f(Q)");
  c.require(to_string(rc("Q").h_vector()) == "(0, 3, 11, 0, 0)", "h(Q)");
}

// 2. the glued family and its f-vector identity
void criterion_glued_family(Criterion& c) {
  FVector fa = cc("A").f_vector().padded(5);
  FVector fq = rc("Q").f_vector().padded(5);
  for (int n : {2, 3, 25}) {
    GlueResult g = glue({cc("Qbar"), cc("A"), n});
    FVector expected;
    for (std::size_t i = 0; i < 5; ++i)
      expected.entries.push_back(fa.entries[i] + n * fq.entries[i]);
    c.require(g.complex.f_vector().padded(5) == expected,
              "f(C_" + std::to_string(n) + ") = f(A) + " + std::to_string(n) + " f(Q)");
    if (n == 3) {
      c.require(to_string(g.complex.f_vector()) == "(1, 16, 71, 98, 42)", "f(C3)");
      c.require(to_string(g.complex.h_vector()) == "(1, 12, 29, 0, 0)", "h(C3)");
    }
    if (n == 25)
      c.require(to_string(g.complex.f_vector()) == "(1, 82, 511, 780, 350)", "f(C25)");
  }
}

// 3. Cohen-Macaulay verdicts across the corpus
void criterion_cm(Criterion& c) {
  auto timed_cm_absolute = [&](const SimplicialComplex& k, const std::string& name,
                               double budget) {
    detail::Stopwatch t;
    bool verdict = is_cohen_macaulay(k).cohen_macaulay;
    double s = t.seconds();
    c.require(verdict, name + " should be CM");
    c.require(s < budget, name + " CM check exceeded " + std::to_string(budget) + " s");
  };
  for (const char* name : {"ziegler-Z", "B", "Qbar", "A", "Xprime"})
    timed_cm_absolute(cc(name), name, 30.0);
  for (const char* name : {"Q", "Qprime"}) {
    detail::Stopwatch t;
    bool verdict = is_cohen_macaulay(rc(name)).cohen_macaulay;
    c.require(verdict, std::string(name) + " should be CM");
    c.require(t.seconds() < 30.0, std::string(name) + " CM check exceeded 30 s");
  }
  for (int n : {2, 3}) {
    GlueResult g = glue({cc("Qbar"), cc("A"), n});
    timed_cm_absolute(g.complex, "C" + std::to_string(n), 30.0);
  }
  {
    GlueResult g = glue({cc("Qbar"), cc("A"), 25});
    timed_cm_absolute(g.complex, "C25", 300.0);
  }
  CmVerdict bj = is_cohen_macaulay(cc("bjorner"));
  c.require(!bj.cohen_macaulay, "the motivating 2-complex should fail");
  c.require(bj.witness && bj.witness->face == Face::of({1}),
            "CM witness should be vertex 1");
}

// 4. partitionability: exhaustive UNSAT for the relative pair, certificates
// for the partitionable corpus entries, and the C3 stretch search
void criterion_partitionability(Criterion& c) {
  int threads = search_threads();
  auto unsat_within = [&](const RelativeComplex& k, const std::string& name,
                          double budget) {
    PartitionSearchResult r = find_partitioning(k, SearchLimits{budget, threads});
    c.require(r.report.status == SearchStatus::unsat,
              name + " should be UNSAT within " + std::to_string(budget) + " s");
    if (r.report.status == SearchStatus::unsat)
      c.note(name + ": UNSAT, " + std::to_string(r.report.nodes_explored) + " nodes");
  };
  unsat_within(rc("Q"), "Q", 300.0);
  unsat_within(rc("Qprime"), "Qprime", 10.0);

  auto sat_within = [&](const SimplicialComplex& k, const std::string& name) {
    PartitionSearchResult r = find_partitioning(k, SearchLimits{60.0, threads});
    bool ok = r.report.status == SearchStatus::sat &&
              verify_partitioning(k, *r.certificate).valid;
    c.require(ok, name + " should have a verifier-passing partitioning within 60 s");
  };
  sat_within(cc("ziegler-Z"), "ziegler-Z");
  sat_within(glue({cc("Qbar"), cc("A"), 2}).complex, "C2");
  sat_within(cc("bjorner"), "bjorner");

  // stretch: exhaustive non-partitionability of the three-copy complex;
  // a budget overrun is reported, not failed
  {
    GlueResult g = glue({cc("Qbar"), cc("A"), 3});
    detail::Stopwatch t;
    PartitionSearchResult r = find_partitioning(g.complex, SearchLimits{7200.0, threads});
    std::ostringstream note;
    note << "stretch C3: ";
    switch (r.report.status) {
      case SearchStatus::unsat:
        note << "UNSAT, " << r.report.nodes_explored << " nodes, " << std::fixed
             << std::setprecision(1) << t.seconds() << " s";
        break;
      case SearchStatus::budget_exceeded:
        note << "budget of 7200 s exceeded (reported, not a failure)";
        break;
      case SearchStatus::sat:
        note << "found a partitioning (unexpected)";
        c.require(false, "C3 must not be partitionable");
        break;
    }
    c.note(note.str());
  }
}

// 5. shellability: the known orders, their h-interpretation, and the
// exhaustive nonshellability of the 21-facet ball
void criterion_shellability(Criterion& c) {
  for (const char* name : {"B", "Qbar", "A", "Xprime", "Aprime"}) {
    const CorpusEntry& entry = corpus_get(name);
    const SimplicialComplex& k = std::get<SimplicialComplex>(entry.object);
    ShellingVerifyResult v = verify_shelling(k, entry.expected.known_shelling);
    c.require(v.valid, std::string(name) + " known order should be a shelling");
    if (v.valid)
      c.require(h_from_restrictions(v.shelling.restrictions, k.dimension()) ==
                    k.h_vector(),
                std::string(name) + " restriction histogram should equal its h-vector");
  }
  detail::Stopwatch t;
  ShellingSearchResult r =
      find_shelling(cc("ziegler-Z"), SearchLimits{3600.0, search_threads()});
  c.require(r.report.status == SearchStatus::unsat,
            "ziegler-Z should be UNSAT within 3600 s");
  if (r.report.status == SearchStatus::unsat) {
    std::ostringstream note;
    note << "ziegler-Z: no shelling, " << r.report.nodes_explored << " nodes, "
         << std::fixed << std::setprecision(1) << t.seconds() << " s";
    c.note(note.str());
  }
}

// 6. homology sanity: acyclic balls, the 2-sphere, dd = 0, Euler-Poincare
void criterion_homology(Criterion& c) {
  for (const char* name : {"ziegler-Z", "B", "Qbar", "A", "Xprime", "Aprime"})
    c.require(reduced_homology(cc(name)).all_zero(),
              std::string(name) + " should be acyclic");
  SimplicialComplex sphere = SimplicialComplex::from_facets(
      {Face::of({0, 1, 2}), Face::of({0, 1, 3}), Face::of({0, 2, 3}), Face::of({1, 2, 3})});
  HomologyProfile p = reduced_homology(sphere);
  c.require(p.at(2).betti == 1 && p.at(2).torsion.empty(), "sphere should have H~_2 = Z");
  c.require(p.at(0).is_zero() && p.at(1).is_zero() && p.at(-1).is_zero(),
            "sphere should vanish below the top");

  for (const CorpusEntry& entry : corpus()) {
    if (std::holds_alternative<VertexPermutation>(entry.object)) continue;
    RealizedComplex realized = corpus_realize(entry);
    ChainBasis basis = realized.relative ? chain_basis(realized.as_relative())
                                         : chain_basis(realized.closure);
    for (int i = 0; i <= basis.top_dimension(); ++i)
      c.require(testsupport::is_zero_matrix(testsupport::matrix_product(
                    boundary_matrix(basis, i).matrix, boundary_matrix(basis, i + 1).matrix)),
                entry.name + ": dd != 0 at dimension " + std::to_string(i));

    FVector f = realized.f_vector();
    long long chi_f = 0;
    int sign = -1;
    for (long long e : f.entries) {
      chi_f += sign * e;
      sign = -sign;
    }
    HomologyProfile profile = realized.relative
                                  ? reduced_homology(realized.as_relative())
                                  : reduced_homology(realized.closure);
    long long chi_h = 0;
    for (int i = -1; i <= profile.top_dim; ++i)
      chi_h += (i % 2 == 0 ? 1 : -1) * profile.at(i).betti;
    c.require(chi_f == chi_h, entry.name + ": Euler-Poincare mismatch");
  }
}

// 7. the symmetry of the closure
void criterion_symmetry(Criterion& c) {
  VertexPermutation tau = std::get<VertexPermutation>(corpus_get("tau").object);
  c.require(is_automorphism(cc("Qbar"), tau), "tau should be an automorphism of Qbar");
  c.require(apply_permutation(cc("A"), tau) == cc("A"), "tau should fix A setwise");
  c.require(tau.apply(Face::of({4, 8})) == Face::of({2, 6}),
            "tau should send edge 48 to edge 26");
}

// 8. balancedness
void criterion_balancedness(Criterion& c) {
  c.require(!is_balanced(cc("Qbar")).balanced, "Qbar should not be balanced");
  SimplicialComplex tetra = SimplicialComplex::from_facets({Face::of({0, 1, 2, 3})});
  c.require(is_balanced(tetra).balanced, "a single tetrahedron should be balanced");
}

// 9. the exact-cover search against the brute-force assignment oracle
void criterion_oracle_equivalence(Criterion& c) {
  int mismatches = 0;
  for (const SimplicialComplex& k : testsupport::all_pure_complexes_up_to_4()) {
    PartitionSearchResult mine = find_partitioning(k);
    testsupport::BruteOracleResult oracle = testsupport::brute_force_partitioning(k);
    bool agree = (mine.report.status == SearchStatus::sat) == oracle.sat;
    bool certified =
        !oracle.sat || (verify_partitioning(k, *mine.certificate).valid &&
                        verify_partitioning(k, *oracle.certificate).valid);
    if (!(agree && certified)) ++mismatches;
  }
  c.require(mismatches == 0, "disagreement on the full enumeration up to 4 vertices");

  testsupport::Rng rng(2026);
  int random_mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex k = testsupport::random_pure_complex(rng, 6);
    PartitionSearchResult mine = find_partitioning(k);
    testsupport::BruteOracleResult oracle = testsupport::brute_force_partitioning(k);
    if ((mine.report.status == SearchStatus::sat) != oracle.sat) ++random_mismatches;
  }
  c.require(random_mismatches == 0, "disagreement on the random 6-vertex sample");
}

// 10. constructibility certificates
void criterion_constructibility(Criterion& c) {
  for (const char* name : {"A", "Qbar", "B"}) {
    const CorpusEntry& entry = corpus_get(name);
    const SimplicialComplex& k = std::get<SimplicialComplex>(entry.object);
    ConstructibilityCert cert =
        shelling_to_constructibility(k, entry.expected.known_shelling);
    c.require(verify_constructibility(k, cert).valid,
              std::string(name) + " shelling-derived certificate should verify");
  }

  GlueSpec spec = std::get<GlueSpec>(corpus_get("C3").object);
  GlueResult g = glue(spec);
  auto copy_map = [&](int copy) {
    std::map<int, int> m;
    for (std::size_t v = 0; v < g.provenance.size(); ++v)
      if (g.provenance[v].copy == 0 || g.provenance[v].copy == copy)
        m[g.provenance[v].original] = static_cast<int>(v);
    return m;
  };
  auto relabel_order = [&](const std::vector<Face>& order, const std::map<int, int>& m) {
    std::vector<Face> out;
    for (const Face& f : order) {
      Face image;
      for (int v : f.vertices()) image = image.with(m.at(v));
      out.push_back(image);
    }
    return out;
  };

  std::vector<ConstructibilityCert> copy_certs;
  for (int copy = 1; copy <= 3; ++copy) {
    std::map<int, int> m = copy_map(copy);
    SimplicialComplex relabeled = relabel(spec.x, [&](int v) { return m.at(v); });
    copy_certs.push_back(shelling_to_constructibility(
        relabeled, relabel_order(corpus_get("Qbar").expected.known_shelling, m)));
  }
  std::map<int, int> shared = copy_map(0);
  SimplicialComplex a_shared = relabel(spec.a, [&](int v) { return shared.at(v); });
  ConstructibilityCert a_cert = shelling_to_constructibility(
      a_shared, relabel_order(corpus_get("A").expected.known_shelling, shared));

  ConstructibilityCert cert = ConstructibilityCert::make_node(
      ConstructibilityCert::make_node(std::move(copy_certs[0]), std::move(copy_certs[1]),
                                      a_cert),
      std::move(copy_certs[2]), a_cert);
  c.require(verify_constructibility(g.complex, cert).valid,
            "the assembled certificate for C3 should verify");
}

struct Runner {
  int index = 0;
  int passed = 0;
  bool all_pass = true;

  void run(const std::string& title, double budget_seconds,
           void (*fn)(Criterion&)) {
    ++index;
    Criterion c;
    detail::Stopwatch timer;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = timer.seconds();
    if (budget_seconds > 0 && elapsed >= budget_seconds)
      c.require(false, "criterion exceeded its overall budget of " +
                           std::to_string(budget_seconds) + " s");
    if (c.pass)
      ++passed;
    else
      all_pass = false;
    std::cout << '[' << std::setw(2) << index << "] " << (c.pass ? "PASS" : "FAIL")
              << "  " << title << "  (" << std::fixed << std::setprecision(2) << elapsed
              << " s)\n";
    for (const std::string& f : c.failures) std::cout << "      failure: " << f << '\n';
    for (const std::string& n : c.notes) std::cout << "      " << n << '\n';
  }
};

}  // namespace

int main() {
  Runner r;
  r.run("vector table: f and h of Qbar, A, Q", 1.0, criterion_vectors);
  r.run("glued family: f(C_N) = f(A) + N f(Q), values for C3 and C25", 1.0,
        criterion_glued_family);
  r.run("Cohen-Macaulay verdicts across the corpus", 0.0, criterion_cm);
  r.run("partitionability verdicts with exhaustive UNSAT proofs", 0.0,
        criterion_partitionability);
  r.run("shellability: known orders verify; the 21-facet ball has none", 0.0,
        criterion_shellability);
  r.run("homology sanity: acyclic balls, the 2-sphere, dd = 0, Euler-Poincare", 10.0,
        criterion_homology);
  r.run("symmetry: the triple transposition", 1.0, criterion_symmetry);
  r.run("balancedness", 10.0, criterion_balancedness);
  r.run("oracle equivalence for the partitionability search", 120.0,
        criterion_oracle_equivalence);
  r.run("constructibility certificates, including the assembled one for C3", 10.0,
        criterion_constructibility);

  std::cout << "ACCEPTANCE: " << r.passed << "/" << r.index << " criteria passed\n";
  std::cout << "note: the depth and Stanley-depth values recorded for C3 and Qprime\n"
               "      are documentation from the literature, not computed here.\n";
  return r.all_pass ? 0 : 1;
}
