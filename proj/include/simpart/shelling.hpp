#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/search.hpp"
#include "simpart/vectors.hpp"

namespace simpart {

/// A facet order together with the restriction face of each step (the unique
/// minimal face newly introduced by that facet).
struct ShellingOrder {
  std::vector<Face> order;
  std::vector<Face> restrictions;
};

struct ShellingVerifyResult {
  bool valid = false;
  ShellingOrder shelling;          // filled when valid
  std::size_t violation_step = 0;  // first step without a unique minimal new face
  std::string violation;
};

namespace detail {

/// Incremental shelling state over the face list of a pure complex.  The set
/// of already-covered faces is downward closed, so step j is legal iff its
/// candidate restriction face R = {v in F : F-v covered} is itself uncovered.
class ShellingFrontier {
 public:
  explicit ShellingFrontier(const SimplicialComplex& k) : facets_(k.facets()) {
    std::vector<Face> faces = k.faces();
    for (std::size_t i = 0; i < faces.size(); ++i)
      index_.emplace(faces[i], static_cast<int>(i));
    covered_.assign(faces.size(), 0);
    subsets_.resize(facets_.size());
    codim1_.resize(facets_.size());
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      for (const Face& s : subsets_of(facets_[f])) subsets_[f].push_back(index_.at(s));
      for (int v : facets_[f].vertices())
        codim1_[f].push_back({v, index_.at(facets_[f].without(v))});
    }
  }

  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<Face>& facets() const { return facets_; }

  /// Restriction face if placing facet f next is a legal shelling step.
  std::optional<Face> restriction_if_legal(std::size_t f) const {
    Face r;
    for (const auto& [v, idx] : codim1_[f])
      if (covered_[static_cast<std::size_t>(idx)]) r = r.with(v);
    if (covered_[static_cast<std::size_t>(index_.at(r))]) return std::nullopt;
    return r;
  }

  /// Marks all subsets of facet f covered; returns an undo token.
  std::vector<int> place(std::size_t f) {
    std::vector<int> added;
    for (int idx : subsets_[f]) {
      if (!covered_[static_cast<std::size_t>(idx)]) {
        covered_[static_cast<std::size_t>(idx)] = 1;
        added.push_back(idx);
      }
    }
    return added;
  }

  void unplace(const std::vector<int>& added) {
    for (int idx : added) covered_[static_cast<std::size_t>(idx)] = 0;
  }

 private:
  std::vector<Face> facets_;
  std::unordered_map<Face, int, FaceHash> index_;
  std::vector<char> covered_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::vector<std::pair<int, int>>> codim1_;
};

}  // namespace detail

/// Checks a facet order against the unique-minimal-new-face condition and
/// returns the restriction faces.  The order must be a permutation of the
/// facet set of a pure complex.
inline ShellingVerifyResult verify_shelling(const SimplicialComplex& k,
                                            const std::vector<Face>& order) {
  if (k.is_void() || !k.pure())
    throw std::invalid_argument("shellings are defined for pure nonvoid complexes");
  std::vector<Face> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != k.facets())
    throw std::invalid_argument("order is not a permutation of the facet set");

  detail::ShellingFrontier frontier(k);
  std::unordered_map<Face, std::size_t, FaceHash> facet_pos;
  for (std::size_t i = 0; i < frontier.facets().size(); ++i)
    facet_pos.emplace(frontier.facets()[i], i);

  ShellingVerifyResult result;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::size_t f = facet_pos.at(order[j]);
    std::optional<Face> r = frontier.restriction_if_legal(f);
    if (!r) {
      result.violation_step = j;
      result.violation = "no unique minimal new face at step " + std::to_string(j + 1) +
                         " (facet " + to_string(order[j]) + ")";
      return result;
    }
    frontier.place(f);
    result.shelling.order.push_back(order[j]);
    result.shelling.restrictions.push_back(*r);
  }
  result.valid = true;
  return result;
}

/// Combinatorial h-vector: the histogram of restriction-face sizes,
/// padded to length d+2.
inline HVector h_from_restrictions(const std::vector<Face>& bottoms, int dim) {
  HVector h;
  h.entries.assign(static_cast<std::size_t>(dim + 2), 0);
  for (const Face& r : bottoms) ++h.entries[static_cast<std::size_t>(r.size())];
  return h;
}

struct ShellingSearchResult {
  SearchReport report;
  std::optional<ShellingOrder> certificate;
};

namespace detail {

struct ShellingWorkerOutcome {
  bool sat = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  ShellingOrder certificate;
};

inline bool shelling_dfs(ShellingFrontier& frontier, std::vector<char>& used,
                         ShellingOrder& partial, std::uint64_t& nodes,
                         SearchControl& control, std::uint64_t my_branch) {
  if (partial.order.size() == frontier.facet_count()) return true;
  for (std::size_t f = 0; f < frontier.facet_count(); ++f) {
    if (used[f]) continue;
    ++nodes;
    if ((nodes & 1023) == 0) {
      if (control.out_of_budget()) throw SearchAbort{};
      if (my_branch > control.cancel_after.load(std::memory_order_relaxed))
        throw SearchAbort{};
    }
    std::optional<Face> r = frontier.restriction_if_legal(f);
    if (!r) continue;
    used[f] = 1;
    partial.order.push_back(frontier.facets()[f]);
    partial.restrictions.push_back(*r);
    std::vector<int> undo = frontier.place(f);
    if (shelling_dfs(frontier, used, partial, nodes, control, my_branch)) return true;
    frontier.unplace(undo);
    partial.order.pop_back();
    partial.restrictions.pop_back();
    used[f] = 0;
  }
  return false;
}

}  // namespace detail

/// Exhaustive backtracking over facet orders, pruned only by the
/// unique-minimal-new-face test.  UNSAT means the whole tree was explored;
/// hitting the budget is reported as its own status.  With threads > 1 the
/// first-facet branches run in parallel and the combined certificate and node
/// count match the sequential run exactly.
inline ShellingSearchResult find_shelling(const SimplicialComplex& k,
                                          const SearchLimits& limits = {}) {
  if (k.is_void() || !k.pure())
    throw std::invalid_argument("shellings are defined for pure nonvoid complexes");

  detail::Stopwatch timer;
  detail::SearchControl control;
  if (limits.budget_seconds)
    control.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*limits.budget_seconds));

  detail::ShellingFrontier frontier(k);
  std::size_t n = frontier.facet_count();
  ShellingSearchResult result;
  result.report.options_generated = n;

  int threads = std::max(1, limits.threads);
  if (threads == 1 || n <= 1) {
    std::vector<char> used(n, 0);
    ShellingOrder partial;
    std::uint64_t nodes = 0;
    bool sat = false;
    try {
      sat = detail::shelling_dfs(frontier, used, partial, nodes, control, 0);
    } catch (const detail::SearchAbort&) {
      result.report.status = SearchStatus::budget_exceeded;
      result.report.nodes_explored = nodes;
      result.report.wall_seconds = timer.seconds();
      return result;
    }
    result.report.nodes_explored = nodes;
    result.report.status = sat ? SearchStatus::sat : SearchStatus::unsat;
    if (sat) result.certificate = partial;
    result.report.wall_seconds = timer.seconds();
    return result;
  }

  // one branch per first facet, combined in canonical order
  std::vector<detail::ShellingWorkerOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= n) return;
      detail::ShellingWorkerOutcome& out = outcomes[b];
      if (b > control.cancel_after.load(std::memory_order_relaxed)) {
        out.aborted = true;
        continue;
      }
      detail::ShellingFrontier local = frontier;
      std::vector<char> used(n, 0);
      ShellingOrder partial;
      ++out.nodes;  // the trial of placing facet b first
      std::optional<Face> r = local.restriction_if_legal(b);
      if (!r) continue;
      used[b] = 1;
      partial.order.push_back(local.facets()[b]);
      partial.restrictions.push_back(*r);
      local.place(b);
      try {
        out.sat = detail::shelling_dfs(local, used, partial, out.nodes, control, b);
      } catch (const detail::SearchAbort&) {
        out.aborted = true;
        continue;
      }
      if (out.sat) {
        out.certificate = partial;
        std::uint64_t prev = control.cancel_after.load();
        while (prev > b && !control.cancel_after.compare_exchange_weak(prev, b)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(threads, static_cast<int>(n)); ++t)
    pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  if (control.budget_hit.load()) {
    result.report.status = SearchStatus::budget_exceeded;
    result.report.wall_seconds = timer.seconds();
    return result;
  }
  result.report.status = SearchStatus::unsat;
  for (std::size_t b = 0; b < n; ++b) {
    result.report.nodes_explored += outcomes[b].nodes;
    if (outcomes[b].sat) {
      result.report.status = SearchStatus::sat;
      result.certificate = outcomes[b].certificate;
      break;
    }
  }
  result.report.wall_seconds = timer.seconds();
  return result;
}

}  // namespace simpart
