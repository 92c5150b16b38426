#ifndef CATPATHS_CATEGORY_HPP
#define CATPATHS_CATEGORY_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catpaths/bitset.hpp"
#include "catpaths/errors.hpp"

namespace catpaths {

// Elements are interned; El indexes into Category::names. -1 means "undefined".
using El = int;
inline constexpr El kNoEl = -1;

struct Graph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string id;
    int src; // source vertex index, s(e)
    int dst; // range vertex index, r(e)
  };
  std::vector<Edge> edges;

  std::unordered_map<std::string, int> vertex_index;
  std::unordered_map<std::string, int> edge_index;

  static Graph make(const std::vector<std::string> &vertices,
                    const std::vector<std::tuple<std::string, std::string,
                                                 std::string>> &edges);
  // Length of the longest directed walk of morphisms starting at source
  // vertex v (following e1 after e2 when s(e1) = r(e2) is length of the
  // composite path); -1 if unbounded (a cycle is reachable).
  int longest_path_from(int v) const;
};

enum class Provenance { ExplicitTable, PathCategory, ZappaSzep };

struct Category {
  std::vector<std::string> names;
  std::unordered_map<std::string, El> index;
  std::vector<bool> vertex_flag;
  std::vector<El> range_of;
  std::vector<El> source_of;
  // Dense composition table, kNoEl where undefined.
  std::vector<El> compose_tab;

  Provenance provenance = Provenance::ExplicitTable;

  // Path-category extras (also set on Zappa-Szep products of path systems).
  int horizon = 0;
  std::vector<int> path_len;               // per element; vertices are 0
  std::vector<std::vector<int>> path_edges; // edge indexes of underlying graph
  std::shared_ptr<const Graph> graph;

  // Zappa-Szep extras: decomposition of each element as (base element, group).
  struct ZsPair {
    El base;
    int g;
  };
  std::vector<ZsPair> zs_pairs;

  std::size_t size() const { return names.size(); }

  El element(const std::string &id) const;
  std::optional<El> find(const std::string &id) const;

  El compose(El a, El b) const { return compose_tab[a * size() + b]; }
  bool is_vertex(El a) const { return vertex_flag[a]; }
  El range(El a) const { return range_of[a]; }
  El source(El a) const { return source_of[a]; }

  std::vector<El> vertices() const;

  // vC as element list / bitset; lazily cached.
  const std::vector<El> &fiber(El v) const;
  const Bitset &right_ideal_set(El a) const; // aC
  std::vector<El> right_ideal_members(El a) const;

  // True when the materialized table is the whole category: always for
  // explicit tables, and for truncated path data only when no fiber is cut
  // off by the horizon.
  bool complete() const;
  // aC unaffected by truncation (always true for explicit tables).
  bool ideal_horizon_stable(El a) const;
  bool fiber_horizon_stable(El v) const;

  // Equivalence a ~ b (aC = bC) and its canonical representatives
  // (lexicographically smallest id in the class).
  bool equivalent(El a, El b) const;
  El canonical_rep(El a) const;

  static Category from_table(
      const std::vector<std::string> &elements,
      const std::vector<std::string> &vertices,
      const std::unordered_map<std::string, std::string> &range,
      const std::unordered_map<std::string, std::string> &source,
      const std::vector<std::array<std::string, 3>> &compose_triples);

  static Category path_category(std::shared_ptr<const Graph> graph,
                                int horizon);

private:
  mutable std::vector<std::vector<El>> fiber_cache_;
  mutable std::vector<Bitset> ideal_cache_;
  mutable std::vector<char> ideal_cached_;
  mutable std::vector<El> canon_cache_;
  void ensure_fibers() const;
};

struct RightIdeal {
  std::vector<El> members; // sorted
  std::optional<El> range_vertex;
  bool horizon_stable = true;

  bool empty() const { return members.empty(); }
  Bitset to_bitset(std::size_t n) const;
  static RightIdeal from_bitset(const Category &cat, const Bitset &b,
                                bool stable = true);
};

struct IndependentSet {
  std::vector<El> members; // sorted canonical representatives
};

struct ValidationReport {
  struct Violation {
    std::string axiom; // "axiom-1-range", "axiom-1-source", "axiom-2", ...
    std::vector<std::string> witness;
    std::string detail;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool names_axiom(const std::string &prefix) const;
};

// Axioms of a small category, each violation with a concrete witness.
ValidationReport validate_category(const Category &cat);

struct CancellationResult {
  bool left_cancellative = true;
  // alpha*beta == alpha*gamma with beta != gamma
  std::optional<std::array<El, 3>> witness;
};
CancellationResult check_left_cancellative(const Category &cat);

Bitset invertibles(const Category &cat);
bool has_no_inverses(const Category &cat);

RightIdeal right_ideal(const Category &cat, El a);

// alpha v beta: independent set L with LC = aC n bC, canonical representatives.
IndependentSet join(const Category &cat, El a, El b);
IndependentSet join_family(const Category &cat, const std::vector<El> &f);

struct AlignmentResult {
  bool finitely_aligned = true;
  bool singly_aligned = true;
  // For the first pair witnessing non-single alignment.
  std::optional<std::pair<El, El>> non_single_witness;
};
AlignmentResult check_alignment(const Category &cat);

bool is_exhaustive(const Category &cat, const std::vector<El> &f, El v);
// All subset-minimal exhaustive subsets of vC with at most max_size members,
// deduplicated up to equivalence.
std::vector<std::vector<El>> minimal_exhaustive_sets(const Category &cat, El v,
                                                     std::size_t max_size);

} // namespace catpaths

#endif
