#include "catpaths/category.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace catpaths {

// ---------------------------------------------------------------- Graph

Graph Graph::make(
    const std::vector<std::string> &vertices,
    const std::vector<std::tuple<std::string, std::string, std::string>>
        &edges) {
  Graph g;
  g.vertices = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.vertex_index.emplace(vertices[i], static_cast<int>(i)).second)
      throw input_error("duplicate vertex id: " + vertices[i]);
  }
  for (const auto &[id, src, dst] : edges) {
    auto is = g.vertex_index.find(src);
    auto id_it = g.vertex_index.find(dst);
    if (is == g.vertex_index.end())
      throw input_error("edge " + id + ": unknown source vertex " + src);
    if (id_it == g.vertex_index.end())
      throw input_error("edge " + id + ": unknown range vertex " + dst);
    if (g.vertex_index.count(id) || g.edge_index.count(id))
      throw input_error("duplicate edge id: " + id);
    g.edge_index.emplace(id, static_cast<int>(g.edges.size()));
    g.edges.push_back(Edge{id, is->second, id_it->second});
  }
  return g;
}

int Graph::longest_path_from(int v) const {
  // Walks proceed range-ward: after reaching source vertex w of an edge we
  // may continue with any edge whose range is w.  Equivalently, longest
  // chain e1 e2 ... with s(e_i) = r(e_{i+1}) and r(e1) = v.
  const int n = static_cast<int>(vertices.size());
  std::vector<int> memo(n, -2); // -2 unvisited, -3 on stack, >=0 done, -1 inf
  std::function<int(int)> go = [&](int u) -> int {
    if (memo[u] == -3) {
      memo[u] = -1;
      return -1;
    }
    if (memo[u] != -2) return memo[u];
    memo[u] = -3;
    int best = 0;
    for (const auto &e : edges) {
      if (e.dst != u) continue;
      int rest = go(e.src);
      if (rest < 0) {
        best = -1;
        break;
      }
      best = std::max(best, 1 + rest);
    }
    if (memo[u] == -3) memo[u] = best;
    return memo[u];
  };
  return go(v);
}

// ---------------------------------------------------------------- Category

El Category::element(const std::string &id) const {
  auto it = index.find(id);
  if (it == index.end()) throw input_error("unknown element id: " + id);
  return it->second;
}

std::optional<El> Category::find(const std::string &id) const {
  auto it = index.find(id);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<El> Category::vertices() const {
  std::vector<El> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (vertex_flag[i]) out.push_back(static_cast<El>(i));
  return out;
}

void Category::ensure_fibers() const {
  if (!fiber_cache_.empty()) return;
  fiber_cache_.resize(size());
  for (std::size_t i = 0; i < size(); ++i)
    fiber_cache_[range_of[i]].push_back(static_cast<El>(i));
}

const std::vector<El> &Category::fiber(El v) const {
  ensure_fibers();
  return fiber_cache_[v];
}

const Bitset &Category::right_ideal_set(El a) const {
  if (ideal_cache_.empty()) {
    ideal_cache_.assign(size(), Bitset{});
    ideal_cached_.assign(size(), 0);
  }
  if (!ideal_cached_[a]) {
    Bitset b(size());
    for (El x : fiber(source_of[a])) {
      El p = compose(a, x);
      if (p != kNoEl) b.set(p);
    }
    ideal_cache_[a] = std::move(b);
    ideal_cached_[a] = 1;
  }
  return ideal_cache_[a];
}

std::vector<El> Category::right_ideal_members(El a) const {
  return right_ideal_set(a).to_vector();
}

bool Category::complete() const {
  if (provenance == Provenance::ExplicitTable) return true;
  if (!graph) return true;
  for (std::size_t v = 0; v < graph->vertices.size(); ++v) {
    int L = graph->longest_path_from(static_cast<int>(v));
    if (L < 0 || L > horizon) return false;
  }
  return true;
}

bool Category::fiber_horizon_stable(El v) const {
  if (provenance == Provenance::ExplicitTable || !graph) return true;
  // Vertices of a path category are indexed like the graph's vertices; for
  // a ZS product over a path system consult the base vertex.
  int gv = (provenance == Provenance::ZappaSzep) ? zs_pairs[v].base : v;
  int L = graph->longest_path_from(gv);
  return L >= 0 && L <= horizon;
}

bool Category::ideal_horizon_stable(El a) const {
  if (provenance == Provenance::ExplicitTable || !graph) return true;
  int len = path_len.empty() ? 0 : path_len[a];
  int src = (provenance == Provenance::ZappaSzep) ? zs_pairs[source_of[a]].base
                                                  : source_of[a];
  int L = graph->longest_path_from(src);
  return L >= 0 && len + L <= horizon;
}

bool Category::equivalent(El a, El b) const {
  return right_ideal_set(a) == right_ideal_set(b);
}

El Category::canonical_rep(El a) const {
  if (canon_cache_.empty()) {
    canon_cache_.assign(size(), kNoEl);
    // Group elements by their right ideal; pick the lexicographically
    // smallest name per class.
    std::unordered_map<std::size_t, std::vector<El>> buckets;
    for (std::size_t i = 0; i < size(); ++i)
      buckets[right_ideal_set(static_cast<El>(i)).hash()].push_back(
          static_cast<El>(i));
    for (auto &[h, elems] : buckets) {
      (void)h;
      for (El x : elems) {
        if (canon_cache_[x] != kNoEl) continue;
        El best = x;
        for (El y : elems)
          if (y != x && right_ideal_set(x) == right_ideal_set(y) &&
              names[y] < names[best])
            best = y;
        // Assign to the whole class.
        for (El y : elems)
          if (right_ideal_set(x) == right_ideal_set(y)) canon_cache_[y] = best;
      }
    }
  }
  return canon_cache_[a];
}

Category Category::from_table(
    const std::vector<std::string> &elements,
    const std::vector<std::string> &vertices,
    const std::unordered_map<std::string, std::string> &range,
    const std::unordered_map<std::string, std::string> &source,
    const std::vector<std::array<std::string, 3>> &compose_triples) {
  Category c;
  c.names = elements;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!c.index.emplace(elements[i], static_cast<El>(i)).second)
      throw input_error("duplicate element id: " + elements[i]);
  c.vertex_flag.assign(c.size(), false);
  for (const auto &v : vertices) c.vertex_flag[c.element(v)] = true;
  c.range_of.assign(c.size(), kNoEl);
  c.source_of.assign(c.size(), kNoEl);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto rit = range.find(elements[i]);
    auto sit = source.find(elements[i]);
    if (rit == range.end())
      throw input_error("missing range for " + elements[i]);
    if (sit == source.end())
      throw input_error("missing source for " + elements[i]);
    El r = c.element(rit->second);
    El s = c.element(sit->second);
    if (!c.vertex_flag[r])
      throw input_error("range of " + elements[i] + " is not a vertex");
    if (!c.vertex_flag[s])
      throw input_error("source of " + elements[i] + " is not a vertex");
    c.range_of[i] = r;
    c.source_of[i] = s;
  }
  c.compose_tab.assign(c.size() * c.size(), kNoEl);
  for (const auto &t : compose_triples) {
    El a = c.element(t[0]), b = c.element(t[1]), ab = c.element(t[2]);
    El &slot = c.compose_tab[a * c.size() + b];
    if (slot != kNoEl && slot != ab)
      throw input_error("conflicting products for (" + t[0] + "," + t[1] + ")");
    slot = ab;
  }
  return c;
}

Category Category::path_category(std::shared_ptr<const Graph> graph,
                                 int horizon) {
  if (horizon < 1) throw input_error("path category horizon must be >= 1");
  Category c;
  c.provenance = Provenance::PathCategory;
  c.horizon = horizon;
  c.graph = graph;
  const Graph &g = *graph;

  // Vertices first, in graph order, so element index == graph vertex index.
  for (const auto &v : g.vertices) {
    c.index.emplace(v, static_cast<El>(c.names.size()));
    c.names.push_back(v);
    c.path_edges.push_back({});
  }
  // Paths by increasing length; a path is a range-ward chain e1 e2 ... em
  // with s(e_i) = r(e_{i+1}); name is the edge ids joined with a middle dot.
  struct P {
    std::vector<int> edges;
    int r, s;
  };
  std::vector<P> frontier;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    frontier.push_back(P{{static_cast<int>(e)}, g.edges[e].dst, g.edges[e].src});
  std::vector<P> all;
  while (!frontier.empty()) {
    std::vector<P> next;
    for (auto &p : frontier) {
      all.push_back(p);
      if (static_cast<int>(p.edges.size()) >= horizon) continue;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].dst != p.s) continue;
        P q = p;
        q.edges.push_back(static_cast<int>(e));
        q.s = g.edges[e].src;
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const P &a, const P &b) {
    return a.edges.size() < b.edges.size();
  });
  for (auto &p : all) {
    std::string nm;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (i) nm += "·";
      nm += g.edges[p.edges[i]].id;
    }
    if (c.index.count(nm)) throw input_error("path name collision: " + nm);
    c.index.emplace(nm, static_cast<El>(c.names.size()));
    c.names.push_back(nm);
    c.path_edges.push_back(p.edges);
  }

  const std::size_t n = c.size();
  c.vertex_flag.assign(n, false);
  c.range_of.assign(n, kNoEl);
  c.source_of.assign(n, kNoEl);
  c.path_len.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &pe = c.path_edges[i];
    c.path_len[i] = static_cast<int>(pe.size());
    if (pe.empty()) {
      c.vertex_flag[i] = true;
      c.range_of[i] = static_cast<El>(i);
      c.source_of[i] = static_cast<El>(i);
    } else {
      c.range_of[i] = static_cast<El>(g.edges[pe.front()].dst);
      c.source_of[i] = static_cast<El>(g.edges[pe.back()].src);
    }
  }
  // Composition by concatenation within the horizon.
  c.compose_tab.assign(n * n, kNoEl);
  std::unordered_map<std::string, El> by_name = c.index;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (c.source_of[a] != c.range_of[b]) continue;
      if (c.path_len[a] + c.path_len[b] > horizon) continue;
      std::vector<int> cat = c.path_edges[a];
      cat.insert(cat.end(), c.path_edges[b].begin(), c.path_edges[b].end());
      if (cat.empty()) {
        c.compose_tab[a * n + b] = static_cast<El>(a);
        continue;
      }
      std::string nm;
      for (std::size_t i = 0; i < cat.size(); ++i) {
        if (i) nm += "·";
        nm += g.edges[cat[i]].id;
      }
      c.compose_tab[a * n + b] = by_name.at(nm);
    }
  }
  return c;
}

// ------------------------------------------------------------ RightIdeal

Bitset RightIdeal::to_bitset(std::size_t n) const {
  Bitset b(n);
  for (El x : members) b.set(x);
  return b;
}

RightIdeal RightIdeal::from_bitset(const Category &cat, const Bitset &b,
                                   bool stable) {
  RightIdeal out;
  out.members = b.to_vector();
  out.horizon_stable = stable;
  if (!out.members.empty()) out.range_vertex = cat.range(out.members.front());
  return out;
}

// ------------------------------------------------------------ Validation

bool ValidationReport::names_axiom(const std::string &prefix) const {
  for (const auto &v : violations)
    if (v.axiom.rfind(prefix, 0) == 0) return true;
  return false;
}

ValidationReport validate_category(const Category &cat) {
  ValidationReport rep;
  const std::size_t n = cat.size();
  auto name = [&](El x) { return cat.names[x]; };
  auto add = [&](std::string ax, std::vector<std::string> w, std::string d) {
    rep.violations.push_back({std::move(ax), std::move(w), std::move(d)});
  };

  bool any_vertex = false;
  for (std::size_t i = 0; i < n; ++i) any_vertex |= cat.vertex_flag[i];
  if (!any_vertex) add("vertices-nonempty", {}, "category has no vertices");

  // Axiom (3): r(v) = s(v) = v for vertices.
  for (std::size_t v = 0; v < n; ++v) {
    if (!cat.vertex_flag[v]) continue;
    if (cat.range_of[v] != static_cast<El>(v) ||
        cat.source_of[v] != static_cast<El>(v))
      add("axiom-3", {name(v)}, "r(v) or s(v) differs from v");
  }

  const bool truncated = cat.provenance != Provenance::ExplicitTable &&
                         !cat.path_len.empty();
  auto within = [&](El a, El b) {
    return !truncated || cat.path_len[a] + cat.path_len[b] <= cat.horizon;
  };

  // Definedness: compose(a,b) exists iff s(a) = r(b) (and the horizon
  // permits it for truncated path data).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El p = cat.compose_tab[a * n + b];
      bool should = cat.source_of[a] == cat.range_of[b] && within(a, b);
      if (p != kNoEl && cat.source_of[a] != cat.range_of[b])
        add("definedness", {name(a), name(b)},
            "product defined although s(a) != r(b)");
      else if (p == kNoEl && should)
        add("definedness", {name(a), name(b)},
            "product missing although s(a) = r(b)");
    }

  // Axiom (1): r(ab) = r(a), s(ab) = s(b).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El p = cat.compose_tab[a * n + b];
      if (p == kNoEl) continue;
      if (cat.range_of[p] != cat.range_of[a])
        add("axiom-1-range", {name(a), name(b)}, "r(ab) != r(a)");
      if (cat.source_of[p] != cat.source_of[b])
        add("axiom-1-source", {name(a), name(b)}, "s(ab) != s(b)");
    }

  // Axiom (4): identity law.
  for (std::size_t a = 0; a < n; ++a) {
    El ra = cat.compose_tab[cat.range_of[a] * n + a];
    El as = cat.compose_tab[a * n + cat.source_of[a]];
    if (ra != static_cast<El>(a))
      add("axiom-4", {name(a)}, "r(a)a != a");
    if (as != static_cast<El>(a))
      add("axiom-4", {name(a)}, "a s(a) != a");
  }

  // Axiom (2): associativity on composable triples.
  for (std::size_t a = 0; a < n && rep.violations.size() < 1000; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (cat.source_of[a] != cat.range_of[b]) continue;
      El ab = cat.compose_tab[a * n + b];
      for (std::size_t g = 0; g < n; ++g) {
        if (cat.source_of[b] != cat.range_of[g]) continue;
        if (truncated &&
            cat.path_len[a] + cat.path_len[b] + cat.path_len[g] > cat.horizon)
          continue;
        El bg = cat.compose_tab[b * n + g];
        El lhs = (ab == kNoEl) ? kNoEl : cat.compose_tab[ab * n + g];
        El rhs = (bg == kNoEl) ? kNoEl : cat.compose_tab[a * n + bg];
        if (lhs == kNoEl || rhs == kNoEl || lhs != rhs)
          add("axiom-2", {name(a), name(b), name(g)},
              "(ab)g and a(bg) disagree or are undefined");
      }
    }

  return rep;
}

CancellationResult check_left_cancellative(const Category &cat) {
  const std::size_t n = cat.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::unordered_map<El, El> seen; // product -> right factor
    for (El b : cat.fiber(cat.source(static_cast<El>(a)))) {
      El p = cat.compose_tab[a * n + b];
      if (p == kNoEl) continue;
      auto [it, fresh] = seen.emplace(p, b);
      if (!fresh)
        return {false, std::array<El, 3>{static_cast<El>(a), it->second, b}};
    }
  }
  return {true, std::nullopt};
}

Bitset invertibles(const Category &cat) {
  const std::size_t n = cat.size();
  Bitset inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El p = cat.compose_tab[a * n + b];
      if (p != kNoEl && cat.is_vertex(p)) {
        // In a left cancellative category a one-sided vertex product
        // already forces invertibility; record it.
        inv.set(a);
        break;
      }
    }
  return inv;
}

bool has_no_inverses(const Category &cat) {
  Bitset inv = invertibles(cat);
  for (std::size_t a = 0; a < cat.size(); ++a)
    if (inv.test(a) != cat.is_vertex(static_cast<El>(a))) return false;
  return true;
}

RightIdeal right_ideal(const Category &cat, El a) {
  RightIdeal out = RightIdeal::from_bitset(cat, cat.right_ideal_set(a));
  out.range_vertex = cat.range(a);
  out.horizon_stable = cat.ideal_horizon_stable(a);
  return out;
}

namespace {

IndependentSet covering_reps(const Category &cat, const Bitset &x) {
  // x is a right ideal; pick canonical representatives of the maximal
  // equivalence classes under gamma <= gamma' iff gamma in gamma'C.
  IndependentSet out;
  std::vector<int> elems = x.to_vector();
  for (El g : elems) {
    bool keep = true;
    for (El h : elems) {
      if (h == g) continue;
      const Bitset &hg = cat.right_ideal_set(h);
      if (hg.test(g)) {
        const Bitset &gg = cat.right_ideal_set(g);
        if (!gg.test(h)) {
          keep = false; // strictly below h
          break;
        }
      }
    }
    if (keep && cat.canonical_rep(g) == g) out.members.push_back(g);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

} // namespace

IndependentSet join(const Category &cat, El a, El b) {
  if (cat.provenance == Provenance::PathCategory) {
    // Free path categories: a C n b C is nonempty iff one path extends the
    // other, and then equals the longer one's ideal. Exact at any horizon.
    const auto &pa = cat.path_edges[a];
    const auto &pb = cat.path_edges[b];
    auto prefix = [](const std::vector<int> &p, const std::vector<int> &q) {
      if (p.size() > q.size()) return false;
      return std::equal(p.begin(), p.end(), q.begin());
    };
    IndependentSet out;
    if (cat.range(a) == cat.range(b)) {
      if (prefix(pa, pb))
        out.members.push_back(b);
      else if (prefix(pb, pa))
        out.members.push_back(a);
    }
    return out;
  }
  Bitset x = cat.right_ideal_set(a);
  x &= cat.right_ideal_set(b);
  return covering_reps(cat, x);
}

IndependentSet join_family(const Category &cat, const std::vector<El> &f) {
  if (f.empty()) throw input_error("join_family requires a nonempty family");
  Bitset x = cat.right_ideal_set(f[0]);
  for (std::size_t i = 1; i < f.size(); ++i) x &= cat.right_ideal_set(f[i]);
  return covering_reps(cat, x);
}

AlignmentResult check_alignment(const Category &cat) {
  AlignmentResult res;
  if (cat.provenance == Provenance::PathCategory) {
    // Graph path categories are singly aligned; prefix logic, no horizon
    // dependence.
    return res;
  }
  const std::size_t n = cat.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      IndependentSet j = join(cat, static_cast<El>(a), static_cast<El>(b));
      if (j.members.size() > 1) {
        res.singly_aligned = false;
        if (!res.non_single_witness)
          res.non_single_witness = {static_cast<El>(a), static_cast<El>(b)};
      }
    }
  return res;
}

bool is_exhaustive(const Category &cat, const std::vector<El> &f, El v) {
  if (!cat.is_vertex(v)) throw input_error("not a vertex");
  if (!cat.fiber_horizon_stable(v))
    throw horizon_error("fiber " + cat.names[v] +
                        "C is not enumerable at this horizon");
  for (El b : f)
    if (cat.range(b) != v)
      throw input_error("exhaustive candidate " + cat.names[b] +
                        " lies outside " + cat.names[v] + "C");
  if (f.empty()) return false; // vC always contains v
  for (El a : cat.fiber(v)) {
    bool met = false;
    for (El b : f)
      if (cat.right_ideal_set(a).intersects(cat.right_ideal_set(b))) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

std::vector<std::vector<El>> minimal_exhaustive_sets(const Category &cat, El v,
                                                     std::size_t max_size) {
  if (!cat.fiber_horizon_stable(v))
    throw horizon_error("fiber " + cat.names[v] +
                        "C is not enumerable at this horizon");
  // Work on canonical class representatives (Lemma: exhaustiveness is
  // invariant under replacing members by equivalent elements).
  std::vector<El> reps;
  for (El a : cat.fiber(v))
    if (cat.canonical_rep(a) == a) reps.push_back(a);
  std::sort(reps.begin(), reps.end());

  std::vector<std::vector<El>> found;
  std::vector<El> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t k) {
    if (cur.size() == k) {
      for (const auto &s : found) {
        if (std::includes(cur.begin(), cur.end(), s.begin(), s.end()))
          return; // a smaller exhaustive subset exists
      }
      if (is_exhaustive(cat, cur, v)) found.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < reps.size(); ++i) {
      cur.push_back(reps[i]);
      rec(i + 1, k);
      cur.pop_back();
    }
  };
  for (std::size_t k = 1; k <= std::min(max_size, reps.size()); ++k)
    rec(0, k);
  return found;
}

} // namespace catpaths
