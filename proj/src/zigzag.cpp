#include "catpaths/zigzag.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace catpaths {

// ------------------------------------------------------ PartialBijection

PartialBijection PartialBijection::identity_on(const std::vector<El> &xs) {
  PartialBijection f;
  for (El x : xs) f.map.emplace_back(x, x);
  std::sort(f.map.begin(), f.map.end());
  return f;
}

std::optional<El> PartialBijection::apply(El x) const {
  auto it = std::lower_bound(map.begin(), map.end(),
                             std::make_pair(x, kNoEl));
  if (it != map.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::vector<El> PartialBijection::domain() const {
  std::vector<El> d;
  for (const auto &[x, y] : map) d.push_back(x);
  return d;
}

std::vector<El> PartialBijection::range() const {
  std::vector<El> r;
  for (const auto &[x, y] : map) r.push_back(y);
  std::sort(r.begin(), r.end());
  return r;
}

Bitset PartialBijection::domain_set(std::size_t n) const {
  Bitset b(n);
  for (const auto &[x, y] : map) b.set(x);
  return b;
}

Bitset PartialBijection::range_set(std::size_t n) const {
  Bitset b(n);
  for (const auto &[x, y] : map) b.set(y);
  return b;
}

PartialBijection PartialBijection::compose(const PartialBijection &inner) const {
  PartialBijection out;
  for (const auto &[x, y] : inner.map) {
    auto z = apply(y);
    if (z) out.map.emplace_back(x, *z);
  }
  std::sort(out.map.begin(), out.map.end());
  return out;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection out;
  for (const auto &[x, y] : map) out.map.emplace_back(y, x);
  std::sort(out.map.begin(), out.map.end());
  return out;
}

bool PartialBijection::is_idempotent() const {
  for (const auto &[x, y] : map)
    if (x != y) return false;
  return true;
}

std::size_t PartialBijection::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (const auto &[x, y] : map) {
    h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    h = (h ^ static_cast<std::size_t>(y)) * 1099511628211ULL;
  }
  return h;
}

// -------------------------------------------------------------- zigzags

Zigzag Zigzag::reversed() const {
  Zigzag r;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    r.pairs.emplace_back(it->second, it->first);
  return r;
}

void validate_zigzag(const Category &cat, const Zigzag &z) {
  if (z.pairs.empty()) throw input_error("zigzag must have at least one pair");
  for (std::size_t i = 0; i < z.pairs.size(); ++i) {
    auto [a, b] = z.pairs[i];
    if (cat.range(a) != cat.range(b))
      throw input_error("zigzag pair " + std::to_string(i) +
                        ": r(a) != r(b)");
    if (i + 1 < z.pairs.size() &&
        cat.source(b) != cat.source(z.pairs[i + 1].first))
      throw input_error("zigzag chain broken after pair " + std::to_string(i));
  }
}

PartialBijection shift(const Category &cat, El a) {
  if (!cat.ideal_horizon_stable(a))
    throw horizon_error("shift by " + cat.names[a] +
                        " is not enumerable at this horizon");
  PartialBijection f;
  for (El b : cat.fiber(cat.source(a))) {
    El p = cat.compose(a, b);
    if (p != kNoEl) f.map.emplace_back(b, p);
  }
  std::sort(f.map.begin(), f.map.end());
  return f;
}

PartialBijection co_shift(const Category &cat, El a) {
  return shift(cat, a).inverse();
}

PartialBijection zigzag_map(const Category &cat, const Zigzag &z) {
  if (z.pairs.empty())
    throw input_error("zigzag must have at least one pair");
  // Tuples breaking the range or chain constraints are tolerated; their
  // factor products collapse to the empty map.
  PartialBijection acc;
  bool first = true;
  // phi_z applies tau_{b_n} first; build right-to-left.
  for (auto it = z.pairs.rbegin(); it != z.pairs.rend(); ++it) {
    PartialBijection step = co_shift(cat, it->first).compose(shift(cat, it->second));
    acc = first ? step : step.compose(acc);
    first = false;
  }
  return acc;
}

RightIdeal left_mul(const Category &cat, El a, const RightIdeal &x) {
  RightIdeal out;
  out.horizon_stable = x.horizon_stable && cat.ideal_horizon_stable(a);
  for (El b : x.members) {
    if (cat.range(b) != cat.source(a)) continue;
    El p = cat.compose(a, b);
    if (p != kNoEl) out.members.push_back(p);
  }
  std::sort(out.members.begin(), out.members.end());
  if (!out.members.empty()) out.range_vertex = cat.range(out.members.front());
  return out;
}

RightIdeal left_div(const Category &cat, El a, const RightIdeal &x) {
  RightIdeal out;
  out.horizon_stable = x.horizon_stable && cat.ideal_horizon_stable(a);
  PartialBijection sigma = co_shift(cat, a);
  for (El b : x.members) {
    auto y = sigma.apply(b);
    if (y) out.members.push_back(*y);
  }
  std::sort(out.members.begin(), out.members.end());
  if (!out.members.empty()) out.range_vertex = cat.range(out.members.front());
  return out;
}

RightIdeal domain_formula(const Category &cat, const Zigzag &z) {
  if (z.pairs.empty())
    throw input_error("zigzag must have at least one pair");
  RightIdeal x;
  for (std::size_t i = 0; i < cat.size(); ++i)
    x.members.push_back(static_cast<El>(i));
  for (const auto &[a, b] : z.pairs) {
    x = left_mul(cat, a, x);
    x = left_div(cat, b, x);
  }
  return x;
}

// ---------------------------------------------------------- ZMSemigroup

int ZMSemigroup::find(const PartialBijection &f) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == f) return static_cast<int>(i);
  return -1;
}

std::vector<int> ZMSemigroup::idempotents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].is_idempotent()) out.push_back(static_cast<int>(i));
  return out;
}

int ZMSemigroup::product(int f, int g) const {
  return find(elements[f].compose(elements[g]));
}

int ZMSemigroup::inverse_of(int f) const { return find(elements[f].inverse()); }

namespace {

struct PbHash {
  std::size_t operator()(const PartialBijection &f) const { return f.hash(); }
};

// Turns a word of generators (tau/sigma factors in operator order, leftmost
// applied last) into an alternating zigzag inducing the same map, padding
// with identities tau_{r(x)} / sigma_{r(y)} where needed.
Zigzag word_to_zigzag(const Category &cat,
                      const std::vector<std::pair<bool, El>> &word) {
  Zigzag z;
  std::size_t i = 0;
  while (i < word.size()) {
    auto [is_sigma, x] = word[i];
    if (is_sigma) {
      if (i + 1 < word.size() && !word[i + 1].first) {
        z.pairs.emplace_back(x, word[i + 1].second);
        i += 2;
      } else {
        z.pairs.emplace_back(x, cat.range(x));
        i += 1;
      }
    } else {
      z.pairs.emplace_back(cat.range(x), x);
      i += 1;
    }
  }
  return z;
}

} // namespace

ZMSemigroup enumerate_zm(const Category &cat, std::size_t max_elements) {
  if (!cat.complete())
    throw horizon_error("zigzag semigroup enumeration requires a complete "
                        "finite category (some fiber exceeds the horizon)");
  if (max_elements == 0)
    throw input_error("zigzag semigroup cap must be positive");
  ZMSemigroup zm;
  zm.cat = &cat;

  // Generators tau_a, sigma_a, tagged (is_sigma, a).
  std::vector<std::pair<bool, El>> gens;
  for (std::size_t a = 0; a < cat.size(); ++a) {
    gens.emplace_back(false, static_cast<El>(a));
    gens.emplace_back(true, static_cast<El>(a));
  }
  std::vector<PartialBijection> gen_maps;
  for (auto [is_sigma, a] : gens)
    gen_maps.push_back(is_sigma ? co_shift(cat, a) : shift(cat, a));

  std::unordered_map<PartialBijection, int, PbHash> seen;
  std::vector<std::vector<std::pair<bool, El>>> words;
  std::deque<int> todo;

  auto add = [&](const PartialBijection &f,
                 std::vector<std::pair<bool, El>> word) -> int {
    auto it = seen.find(f);
    if (it != seen.end()) return it->second;
    if (zm.elements.size() >= max_elements) {
      zm.complete = false;
      return -1;
    }
    int idx = static_cast<int>(zm.elements.size());
    seen.emplace(f, idx);
    zm.elements.push_back(f);
    words.push_back(std::move(word));
    todo.push_back(idx);
    return idx;
  };

  add(PartialBijection::empty(), {});
  for (std::size_t i = 0; i < gens.size(); ++i)
    zm.generator_indices.push_back(add(gen_maps[i], {gens[i]}));

  while (!todo.empty() && zm.complete) {
    int cur = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      // Words grow on the right: new = cur o gen (gen applied first).
      PartialBijection f = zm.elements[cur].compose(gen_maps[i]);
      auto w = words[cur];
      w.push_back(gens[i]);
      add(f, std::move(w));
    }
  }

  zm.empty_index = seen.at(PartialBijection::empty());
  zm.witnesses.resize(zm.elements.size());
  for (std::size_t i = 0; i < zm.elements.size(); ++i) {
    if (static_cast<int>(i) == zm.empty_index) continue;
    zm.witnesses[i] = word_to_zigzag(cat, words[i]);
  }
  return zm;
}

// ---------------------------------------------------------- IdealFamily

int IdealFamily::find(const std::vector<El> &members) const {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i].members == members) return static_cast<int>(i);
  return -1;
}

std::vector<int> IdealFamily::at_vertex(const Category &cat, El v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto &id = ideals[i];
    if (!id.empty() && cat.range(id.members.front()) == v)
      out.push_back(static_cast<int>(i));
  }
  return out;
}

IdealFamily enumerate_ideals(const Category &cat, std::size_t max_zm) {
  ZMSemigroup zm = enumerate_zm(cat, max_zm);
  if (!zm.complete)
    throw size_limit_error("zigzag semigroup exceeded " +
                           std::to_string(max_zm) + " elements");
  IdealFamily fam;
  // The empty ideal, by convention.
  fam.ideals.push_back(RightIdeal{});
  fam.witnesses.push_back(Zigzag{});
  for (std::size_t i = 0; i < zm.elements.size(); ++i) {
    if (static_cast<int>(i) == zm.empty_index) continue;
    std::vector<El> dom = zm.elements[i].domain();
    if (dom.empty()) continue;
    bool dup = false;
    for (const auto &id : fam.ideals)
      if (id.members == dom) {
        dup = true;
        break;
      }
    if (dup) continue;
    RightIdeal id;
    id.members = dom;
    id.range_vertex = cat.range(dom.front());
    fam.ideals.push_back(std::move(id));
    fam.witnesses.push_back(zm.witnesses[i]);
  }
  // Sort nonempty ideals for reproducible reports (empty first).
  std::vector<std::size_t> order(fam.ideals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fam.ideals[a].members < fam.ideals[b].members;
  });
  IdealFamily sorted;
  for (std::size_t i : order) {
    sorted.ideals.push_back(fam.ideals[i]);
    sorted.witnesses.push_back(fam.witnesses[i]);
  }

  // J(C) is closed under finite intersections; verify.
  for (std::size_t i = 0; i < sorted.ideals.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.ideals.size(); ++j) {
      std::vector<El> inter;
      std::set_intersection(sorted.ideals[i].members.begin(),
                            sorted.ideals[i].members.end(),
                            sorted.ideals[j].members.begin(),
                            sorted.ideals[j].members.end(),
                            std::back_inserter(inter));
      if (sorted.find(inter) < 0) sorted.closed_under_intersection = false;
    }
  return sorted;
}

std::vector<std::vector<El>> enumerate_union_ideals(const IdealFamily &fam,
                                                    std::size_t limit) {
  std::vector<std::vector<El>> out;
  for (const auto &id : fam.ideals) out.push_back(id.members);
  std::sort(out.begin(), out.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        std::vector<El> u;
        std::set_union(out[i].begin(), out[i].end(), out[j].begin(),
                       out[j].end(), std::back_inserter(u));
        if (!std::binary_search(out.begin(), out.end(), u)) {
          out.push_back(u);
          std::sort(out.begin(), out.end());
          grew = true;
          if (out.size() > limit)
            throw size_limit_error("union closure exceeded limit");
        }
      }
  }
  return out;
}

bool is_cover(const Category &cat, const std::vector<El> &h,
              const std::vector<El> &l) {
  for (El x : h)
    if (std::find(l.begin(), l.end(), x) == l.end())
      throw input_error("cover candidate not inside the covered set");
  for (El a : l) {
    bool met = false;
    for (El b : h)
      if (cat.right_ideal_set(a).intersects(cat.right_ideal_set(b))) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

bool is_dm_cover(const Category &cat, const ZMSemigroup &zm,
                 const std::vector<int> &cover, int target,
                 const IdealFamily &fam) {
  const PartialBijection &t = zm.elements[target];
  Bitset tdom = t.domain_set(cat.size());
  // Each member must lie below the target: a restriction of it.
  for (int c : cover) {
    const PartialBijection &f = zm.elements[c];
    if (!natural_order(f, t)) return false;
  }
  // Every nonzero s <= target is a restriction of target to an ideal Z in
  // J(C); it meets the cover iff Z intersects some member's domain in a
  // nonempty constructible ideal, which (J closed under intersections)
  // reduces to plain intersection.
  for (std::size_t zi = 0; zi < fam.ideals.size(); ++zi) {
    const auto &z = fam.ideals[zi];
    if (z.empty()) continue;
    Bitset zb = z.to_bitset(cat.size());
    if (!zb.is_subset_of(tdom)) continue;
    bool met = false;
    for (int c : cover)
      if (zb.intersects(zm.elements[c].domain_set(cat.size()))) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

bool is_foundation_set(const Category &cat, const IdealFamily &fam,
                       const std::vector<int> &f, El v) {
  if (f.empty()) return false;
  std::vector<int> all = fam.at_vertex(cat, v);
  for (int yi : all) {
    Bitset yb = fam.ideals[yi].to_bitset(cat.size());
    bool met = false;
    for (int xi : f)
      if (yb.intersects(fam.ideals[xi].to_bitset(cat.size()))) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

std::vector<std::vector<int>> foundation_sets(const Category &cat,
                                              const IdealFamily &fam, El v,
                                              std::size_t max_size) {
  std::vector<int> all = fam.at_vertex(cat, v);
  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t k) {
    if (cur.size() == k) {
      for (const auto &s : found)
        if (std::includes(cur.begin(), cur.end(), s.begin(), s.end())) return;
      if (is_foundation_set(cat, fam, cur, v)) found.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < all.size(); ++i) {
      cur.push_back(all[i]);
      rec(i + 1, k);
      cur.pop_back();
    }
  };
  for (std::size_t k = 1; k <= std::min(max_size, all.size()); ++k) rec(0, k);
  return found;
}

bool natural_order(const PartialBijection &f, const PartialBijection &g) {
  // f <= g iff f = f f^{-1} g.
  return f == f.compose(f.inverse()).compose(g);
}

} // namespace catpaths
