#ifndef CATPATHS_SYSTEM_HPP
#define CATPATHS_SYSTEM_HPP

#include <memory>
#include <string>
#include <vector>

#include "catpaths/category.hpp"
#include "catpaths/group.hpp"

namespace catpaths {

// A group acting on a category together with a category cocycle.
struct CategorySystem {
  Category cat;
  FiniteGroup grp;
  std::vector<El> action;  // g * |C| + x  ->  g.x
  std::vector<int> cocycle; // g * |C| + x  ->  phi(g, x)

  El act(int g, El x) const { return action[g * cat.size() + x]; }
  int coc(int g, El x) const { return cocycle[g * cat.size() + x]; }
};

// A group acting on a directed graph with an edge cocycle.
struct GraphSystem {
  std::shared_ptr<const Graph> graph;
  FiniteGroup grp;
  std::vector<int> vertex_action; // g * |V| + v
  std::vector<int> edge_action;   // g * |E| + e
  std::vector<int> edge_cocycle;  // g * |E| + e

  int act_vertex(int g, int v) const {
    return vertex_action[g * graph->vertices.size() + v];
  }
  int act_edge(int g, int e) const {
    return edge_action[g * graph->edges.size() + e];
  }
  int coc_edge(int g, int e) const {
    return edge_cocycle[g * graph->edges.size() + e];
  }
};

struct SystemReport {
  struct Item {
    std::string condition; // "action-permutation", "cocycle-iv", ...
    bool pass = true;
    std::vector<std::string> witness;
  };
  std::vector<Item> items;
  bool ok() const {
    for (const auto &i : items)
      if (!i.pass) return false;
    return true;
  }
  const Item *find(const std::string &condition) const;
};

// Checks the action axioms, r/s-equivariance, the cocycle identity and the
// four category-cocycle conditions. For horizon-truncated path data the
// composition-quantified conditions range over horizon-composable pairs, and
// for truncated groups the (g,h)-quantified identities range over
// non-wrapping pairs.
SystemReport validate_system(const CategorySystem &sys);
SystemReport validate_graph_system(const GraphSystem &gs);

// The Zappa-Szep product D = C x G with (a,g)(b,h) = (a(g.b), phi(g,b)h).
Category zs_product(const CategorySystem &sys);

// The subcategory {(a,g) : a not a vertex, or g = 1} of the product, for
// systems whose category has no inverses.
Category restricted_zs_product(const CategorySystem &sys);

// Extends an edge-level system to the path category of its graph.
CategorySystem ep_extend(const GraphSystem &gs, int horizon);

struct ZsJoinResult {
  IndependentSet join_in_product;
  IndependentSet lifted_base_join; // (alpha v beta) x {1}
  bool matches = false;            // equal up to equivalence in D
};
ZsJoinResult zs_join_check(const CategorySystem &sys, const Category &product,
                           El a, int g, El b, int h);

// F is a subset of (v,1)D; returns exhaustiveness of F at (v,1) in D and of
// H = {alpha : (alpha,g) in F} at v in C. The two agree on valid systems.
std::pair<bool, bool> exhaustive_transfer(const CategorySystem &sys,
                                          const Category &product,
                                          const std::vector<El> &f_in_product,
                                          El v_in_base);

// Helpers tying product elements to their (base, group) decomposition.
El zs_element(const Category &product, El base, int g);

} // namespace catpaths

#endif
