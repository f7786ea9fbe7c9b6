#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/search.hpp"

namespace simpart {

/// A Boolean interval [bottom, top] inside a complex.
struct Interval {
  Face bottom;
  Face top;
};

/// A decomposition of the face set into pairwise-disjoint intervals whose
/// tops are exactly the facets.
struct Partitioning {
  std::vector<Interval> intervals;
};

struct PartitionVerifyResult {
  bool valid = false;
  std::string violation;
  std::optional<Face> offending;
};

namespace detail {

inline PartitionVerifyResult verify_partitioning_impl(
    const std::vector<Face>& phi_faces, const std::vector<Face>& maximal,
    const Partitioning& p, const SimplicialComplex* removed) {
  PartitionVerifyResult r;

  std::vector<Face> tops;
  for (const Interval& iv : p.intervals) {
    if (!iv.bottom.subset_of(iv.top))
      throw std::invalid_argument("malformed interval: bottom is not a subset of top");
    tops.push_back(iv.top);
  }
  std::sort(tops.begin(), tops.end());
  if (tops != maximal) {
    r.violation = "interval tops are not exactly the facets";
    return r;
  }

  std::unordered_map<Face, int, FaceHash> seen;
  for (const Face& f : phi_faces) seen.emplace(f, 0);
  for (const Interval& iv : p.intervals) {
    for (const Face& s : subsets_of(iv.top.minus(iv.bottom))) {
      Face face = s.united(iv.bottom);
      auto it = seen.find(face);
      if (it == seen.end()) {
        r.violation = "interval face " + to_string(face) + " lies outside the complex" +
                      (removed ? " (in the removed part)" : "");
        r.offending = face;
        return r;
      }
      if (++it->second > 1) {
        r.violation = "face " + to_string(face) + " is covered twice";
        r.offending = face;
        return r;
      }
    }
  }
  for (const Face& f : phi_faces) {
    if (seen.at(f) == 0) {
      r.violation = "face " + to_string(f) + " is not covered";
      r.offending = f;
      return r;
    }
  }
  r.valid = true;
  return r;
}

}  // namespace detail

inline PartitionVerifyResult verify_partitioning(const SimplicialComplex& k,
                                                 const Partitioning& p) {
  if (k.is_void() || !k.pure())
    throw std::invalid_argument("partitionings are defined for pure nonvoid complexes");
  return detail::verify_partitioning_impl(k.faces(), k.facets(), p, nullptr);
}

inline PartitionVerifyResult verify_partitioning(const RelativeComplex& k,
                                                 const Partitioning& p) {
  if (!k.pure())
    throw std::invalid_argument("partitionings are defined for pure nonvoid complexes");
  std::vector<Face> maximal = k.maximal_faces();
  std::sort(maximal.begin(), maximal.end());
  return detail::verify_partitioning_impl(k.faces(), maximal, p, &k.removed());
}

namespace detail {

/// Dancing-links exact cover (Algorithm X).  Items are face indices; options
/// are Boolean intervals.  Item selection: fewest remaining options, ties by
/// canonical order; options tried in insertion (canonical) order.
class DancingLinks {
 public:
  // node ids: 0..n-1 column headers, n the ring root, options afterwards
  explicit DancingLinks(int n_items) : n_items_(n_items) {
    std::size_t base = static_cast<std::size_t>(n_items) + 1;
    left_.resize(base);
    right_.resize(base);
    up_.resize(base);
    down_.resize(base);
    col_.resize(base);
    row_.assign(base, -1);
    len_.assign(static_cast<std::size_t>(n_items), 0);
    for (int i = 0; i <= n_items; ++i) {
      left_[i] = (i + n_items) % (n_items + 1);
      right_[i] = (i + 1) % (n_items + 1);
      up_[i] = i;
      down_[i] = i;
      col_[i] = i;
    }
  }

  int add_option(const std::vector<int>& items) {
    int option = n_options_++;
    int first = -1, prev = -1;
    for (int item : items) {
      int node = static_cast<int>(up_.size());
      int old_up = up_[item];
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(old_up);
      down_.push_back(item);
      col_.push_back(item);
      row_.push_back(option);
      down_[old_up] = node;
      up_[item] = node;
      ++len_[item];
      if (first < 0) {
        first = node;
      } else {
        right_[prev] = node;
        left_[node] = prev;
      }
      prev = node;
    }
    if (first >= 0) {
      right_[prev] = first;
      left_[first] = prev;
    }
    return option;
  }

  int option_count() const { return n_options_; }

  /// Fewest-options item among those still active; -1 when none remain.
  /// Ring order is canonical item order, so ties pick the first.
  int choose_item() const {
    int best = -1;
    for (int c = right_[n_items_]; c != n_items_; c = right_[c])
      if (best < 0 || len_[c] < len_[best]) best = c;
    return best;
  }

  /// Option nodes of an item's column, top to bottom (insertion order).
  std::vector<int> column_nodes(int item) const {
    std::vector<int> nodes;
    for (int i = down_[item]; i != item; i = down_[i]) nodes.push_back(i);
    return nodes;
  }

  void cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = down_[c]; i != c; i = down_[i]) {
      for (int j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --len_[col_[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[c]; i != c; i = up_[i]) {
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++len_[col_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  void apply_row_node(int node) {
    for (int j = right_[node]; j != node; j = right_[j]) cover(col_[j]);
  }

  void undo_row_node(int node) {
    for (int j = left_[node]; j != node; j = left_[j]) uncover(col_[j]);
  }

  int row_of_node(int node) const { return row_[node]; }

  /// First-solution DFS; returns true and fills `chosen` with option ids.
  bool search(std::vector<int>& chosen, std::uint64_t& nodes, SearchControl& control,
              std::uint64_t my_branch) {
    int c = choose_item();
    if (c < 0) return true;
    cover(c);
    for (int i = down_[c]; i != c; i = down_[i]) {
      ++nodes;
      if ((nodes & 1023) == 0) {
        if (control.out_of_budget()) throw SearchAbort{};
        if (my_branch > control.cancel_after.load(std::memory_order_relaxed))
          throw SearchAbort{};
      }
      apply_row_node(i);
      chosen.push_back(row_[i]);
      if (search(chosen, nodes, control, my_branch)) return true;
      chosen.pop_back();
      undo_row_node(i);
    }
    uncover(c);
    return false;
  }

 private:
  int n_items_;
  int n_options_ = 0;
  std::vector<int> left_, right_, up_, down_, col_, row_, len_;
};

}  // namespace detail

struct PartitionSearchResult {
  SearchReport report;
  std::optional<Partitioning> certificate;
};

namespace detail {

struct PartitionProblem {
  std::vector<Face> faces;                    // items, canonical order
  std::vector<Interval> options;              // canonical (facet, bottom) order
  std::vector<std::vector<int>> option_items; // covered face indices per option
};

inline PartitionProblem build_partition_problem(const std::vector<Face>& phi_faces,
                                                const std::vector<Face>& maximal,
                                                const SimplicialComplex* removed) {
  PartitionProblem prob;
  prob.faces = phi_faces;
  std::unordered_map<Face, int, FaceHash> item_of;
  for (std::size_t i = 0; i < phi_faces.size(); ++i)
    item_of.emplace(phi_faces[i], static_cast<int>(i));

  for (const Face& facet : maximal) {
    std::vector<Face> bottoms = subsets_of(facet);
    std::sort(bottoms.begin(), bottoms.end());
    for (const Face& r : bottoms) {
      if (removed && removed->contains(r)) continue;  // interval would leave Phi
      std::vector<int> items;
      for (const Face& s : subsets_of(facet.minus(r)))
        items.push_back(item_of.at(s.united(r)));
      std::sort(items.begin(), items.end());
      prob.options.push_back({r, facet});
      prob.option_items.push_back(std::move(items));
    }
  }
  return prob;
}

inline PartitionSearchResult solve_partition_problem(const PartitionProblem& prob,
                                                     const SearchLimits& limits) {
  Stopwatch timer;
  SearchControl control;
  if (limits.budget_seconds)
    control.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*limits.budget_seconds));

  PartitionSearchResult result;
  result.report.options_generated = static_cast<std::uint64_t>(prob.options.size());

  DancingLinks root(static_cast<int>(prob.faces.size()));
  for (const std::vector<int>& items : prob.option_items) root.add_option(items);

  auto finish_sat = [&](const std::vector<int>& chosen) {
    Partitioning p;
    for (int opt : chosen) p.intervals.push_back(prob.options[static_cast<std::size_t>(opt)]);
    std::sort(p.intervals.begin(), p.intervals.end(),
              [](const Interval& a, const Interval& b) { return a.top < b.top; });
    result.certificate = std::move(p);
    result.report.status = SearchStatus::sat;
  };

  int threads = std::max(1, limits.threads);
  if (prob.faces.empty()) {  // nothing to cover
    result.report.status = SearchStatus::sat;
    result.certificate = Partitioning{};
    result.report.wall_seconds = timer.seconds();
    return result;
  }

  if (threads == 1) {
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    bool sat = false;
    try {
      sat = root.search(chosen, nodes, control, 0);
    } catch (const SearchAbort&) {
      result.report.status = SearchStatus::budget_exceeded;
      result.report.nodes_explored = nodes;
      result.report.wall_seconds = timer.seconds();
      return result;
    }
    result.report.nodes_explored = nodes;
    result.report.status = SearchStatus::unsat;
    if (sat) finish_sat(chosen);
    result.report.wall_seconds = timer.seconds();
    return result;
  }

  // parallel over the options of the first selected item, combined canonically
  int c0 = root.choose_item();
  std::vector<int> branch_nodes_list = root.column_nodes(c0);
  std::size_t n_branches = branch_nodes_list.size();
  struct Outcome {
    bool sat = false;
    bool aborted = false;
    std::uint64_t nodes = 0;
    std::vector<int> chosen;
  };
  std::vector<Outcome> outcomes(n_branches);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= n_branches) return;
      Outcome& out = outcomes[b];
      if (b > control.cancel_after.load(std::memory_order_relaxed)) {
        out.aborted = true;
        continue;
      }
      DancingLinks local = root;
      local.cover(c0);
      int node = branch_nodes_list[b];
      ++out.nodes;
      local.apply_row_node(node);
      out.chosen.push_back(local.row_of_node(node));
      try {
        out.sat = local.search(out.chosen, out.nodes, control, b);
      } catch (const SearchAbort&) {
        out.aborted = true;
        continue;
      }
      if (out.sat) {
        std::uint64_t prev = control.cancel_after.load();
        while (prev > b && !control.cancel_after.compare_exchange_weak(prev, b)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(threads, static_cast<int>(std::max<std::size_t>(n_branches, 1)));
       ++t)
    pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  if (control.budget_hit.load()) {
    result.report.status = SearchStatus::budget_exceeded;
    result.report.wall_seconds = timer.seconds();
    return result;
  }
  result.report.status = SearchStatus::unsat;
  for (std::size_t b = 0; b < n_branches; ++b) {
    result.report.nodes_explored += outcomes[b].nodes;
    if (outcomes[b].sat) {
      finish_sat(outcomes[b].chosen);
      break;
    }
  }
  result.report.wall_seconds = timer.seconds();
  return result;
}

}  // namespace detail

/// Exact-cover search for a partitioning: items are the faces, options the
/// intervals [R, F] with F a facet (and, for relative complexes, R outside
/// the removed part, which by convexity keeps the whole interval inside).
/// UNSAT is exhaustion-backed; budget overruns are a separate status.
inline PartitionSearchResult find_partitioning(const SimplicialComplex& k,
                                               const SearchLimits& limits = {}) {
  if (k.is_void() || !k.pure())
    throw std::invalid_argument("partitionings are defined for pure nonvoid complexes");
  return detail::solve_partition_problem(
      detail::build_partition_problem(k.faces(), k.facets(), nullptr), limits);
}

inline PartitionSearchResult find_partitioning(const RelativeComplex& k,
                                               const SearchLimits& limits = {}) {
  if (!k.pure())
    throw std::invalid_argument("partitionings are defined for pure nonvoid complexes");
  std::vector<Face> maximal = k.maximal_faces();
  std::sort(maximal.begin(), maximal.end());
  return detail::solve_partition_problem(
      detail::build_partition_problem(k.faces(), maximal, &k.removed()), limits);
}

}  // namespace simpart
