#ifndef CATPATHS_ZIGZAG_HPP
#define CATPATHS_ZIGZAG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "catpaths/category.hpp"

namespace catpaths {

// A finite partial bijection of category elements, kept as a sorted
// association list so equal maps have equal representations.
struct PartialBijection {
  std::vector<std::pair<El, El>> map; // sorted by domain element

  static PartialBijection empty() { return {}; }
  static PartialBijection identity_on(const std::vector<El> &xs);

  bool is_empty() const { return map.empty(); }
  std::size_t size() const { return map.size(); }

  std::optional<El> apply(El x) const;
  std::vector<El> domain() const;
  std::vector<El> range() const;
  Bitset domain_set(std::size_t n) const;
  Bitset range_set(std::size_t n) const;

  // this after inner, on the largest possible domain.
  PartialBijection compose(const PartialBijection &inner) const;
  PartialBijection inverse() const;

  bool is_idempotent() const; // identity on its domain

  bool operator==(const PartialBijection &o) const { return map == o.map; }
  std::size_t hash() const;
};

// An even tuple (a1, b1, ..., an, bn) with r(ai) = r(bi) and
// s(bi) = s(a_{i+1}).
struct Zigzag {
  std::vector<std::pair<El, El>> pairs;

  Zigzag reversed() const;
  El source(const Category &cat) const { return cat.source(pairs.back().second); }
  El range(const Category &cat) const { return cat.source(pairs.front().first); }
};

void validate_zigzag(const Category &cat, const Zigzag &z);

// tau_a : s(a)C -> aC, b |-> ab, and its inverse sigma_a.
PartialBijection shift(const Category &cat, El a);
PartialBijection co_shift(const Category &cat, El a);

// phi_z = sigma_{a1} tau_{b1} ... sigma_{an} tau_{bn}.
PartialBijection zigzag_map(const Category &cat, const Zigzag &z);

// a X = tau_a(s(a)C n X) and a^{-1} X = sigma_a(aC n X).
RightIdeal left_mul(const Category &cat, El a, const RightIdeal &x);
RightIdeal left_div(const Category &cat, El a, const RightIdeal &x);

// A(z) = b_n^{-1} a_n ... b_1^{-1} a_1 C, computed on ideals only.
RightIdeal domain_formula(const Category &cat, const Zigzag &z);

struct ZMSemigroup {
  const Category *cat = nullptr;
  std::vector<PartialBijection> elements;
  int empty_index = -1;
  // Indexes of the generators tau_a / sigma_a inside elements.
  std::vector<int> generator_indices;
  // One witness zigzag per nonempty element.
  std::vector<Zigzag> witnesses;
  bool complete = true;

  int find(const PartialBijection &f) const;
  std::vector<int> idempotents() const;
  int product(int f, int g) const;  // index of composition
  int inverse_of(int f) const;
};

// Breadth-first closure of the shift maps under composition. When the cap is
// exceeded the partial result is returned with complete = false.
ZMSemigroup enumerate_zm(const Category &cat, std::size_t max_elements);

struct IdealFamily {
  std::vector<RightIdeal> ideals; // deduplicated, sorted by member lists
  std::vector<Zigzag> witnesses;  // parallel; empty zigzag marks the empty ideal
  bool closed_under_intersection = true;

  int find(const std::vector<El> &members) const;
  std::vector<int> at_vertex(const Category &cat, El v) const; // nonempty, range v
};

IdealFamily enumerate_ideals(const Category &cat, std::size_t max_zm);
// Closure of the family under finite unions.
std::vector<std::vector<El>> enumerate_union_ideals(const IdealFamily &fam,
                                                    std::size_t n);

// Covering: h is a subset of l and every member of l has a common
// extension with some member of h.
bool is_cover(const Category &cat, const std::vector<El> &h,
              const std::vector<El> &l);

// Donsig-Milan cover of one ZM element by others, decided on domains.
bool is_dm_cover(const Category &cat, const ZMSemigroup &zm,
                 const std::vector<int> &cover, int target,
                 const IdealFamily &fam);

bool is_foundation_set(const Category &cat, const IdealFamily &fam,
                       const std::vector<int> &f, El v);
std::vector<std::vector<int>> foundation_sets(const Category &cat,
                                              const IdealFamily &fam, El v,
                                              std::size_t max_size);

// s <= t iff s = s s* t.
bool natural_order(const PartialBijection &f, const PartialBijection &g);

} // namespace catpaths

#endif
