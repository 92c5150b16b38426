#include "catpaths/system.hpp"

#include <algorithm>

namespace catpaths {

const SystemReport::Item *SystemReport::find(const std::string &c) const {
  for (const auto &i : items)
    if (i.condition == c) return &i;
  return nullptr;
}

namespace {

SystemReport::Item &item(SystemReport &rep, const std::string &cond) {
  for (auto &i : rep.items)
    if (i.condition == cond) return i;
  rep.items.push_back({cond, true, {}});
  return rep.items.back();
}

void fail(SystemReport &rep, const std::string &cond,
          std::vector<std::string> witness) {
  auto &it = item(rep, cond);
  if (it.pass) {
    it.pass = false;
    it.witness = std::move(witness);
  }
}

} // namespace

SystemReport validate_system(const CategorySystem &sys) {
  SystemReport rep;
  const Category &c = sys.cat;
  const FiniteGroup &g = sys.grp;
  const std::size_t n = c.size();
  const std::size_t m = g.size();
  for (const char *cond :
       {"action-permutation", "action-compatibility", "equivariance",
        "cocycle-unit", "cocycle-identity", "cocycle-i", "cocycle-ii",
        "cocycle-iii", "cocycle-iv"})
    item(rep, cond);

  // Each g acts by a permutation.
  for (std::size_t gi = 0; gi < m; ++gi) {
    std::vector<char> hit(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      El y = sys.act(gi, static_cast<El>(x));
      if (y < 0 || y >= static_cast<El>(n) || hit[y]) {
        fail(rep, "action-permutation", {g.names[gi], c.names[x]});
        break;
      }
      hit[y] = 1;
    }
  }

  // Identity acts trivially; g(hx) = (gh)x on checked pairs.
  for (std::size_t x = 0; x < n; ++x)
    if (sys.act(g.identity, static_cast<El>(x)) != static_cast<El>(x))
      fail(rep, "action-compatibility", {g.names[g.identity], c.names[x]});
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (!g.pair_checked(gi, hi)) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (sys.act(gi, sys.act(hi, static_cast<El>(x))) !=
            sys.act(g.mul(gi, hi), static_cast<El>(x)))
          fail(rep, "action-compatibility",
               {g.names[gi], g.names[hi], c.names[x]});
    }

  // r(gx) = g r(x), s(gx) = g s(x).
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t x = 0; x < n; ++x) {
      El y = sys.act(gi, static_cast<El>(x));
      if (c.range(y) != sys.act(gi, c.range(static_cast<El>(x))) ||
          c.source(y) != sys.act(gi, c.source(static_cast<El>(x))))
        fail(rep, "equivariance", {g.names[gi], c.names[x]});
    }

  // phi(1,x) = 1.
  for (std::size_t x = 0; x < n; ++x)
    if (sys.coc(g.identity, static_cast<El>(x)) != g.identity)
      fail(rep, "cocycle-unit", {c.names[x]});

  // phi(gh,x) = phi(g,hx) phi(h,x) on checked pairs.
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (!g.pair_checked(gi, hi)) continue;
      for (std::size_t x = 0; x < n; ++x) {
        int lhs = sys.coc(g.mul(gi, hi), static_cast<El>(x));
        int rhs = g.mul(sys.coc(gi, sys.act(hi, static_cast<El>(x))),
                        sys.coc(hi, static_cast<El>(x)));
        if (lhs != rhs)
          fail(rep, "cocycle-identity",
               {g.names[gi], g.names[hi], c.names[x]});
      }
    }

  // (i) phi(g,v) = g.
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t v = 0; v < n; ++v)
      if (c.is_vertex(static_cast<El>(v)) &&
          sys.coc(gi, static_cast<El>(v)) != static_cast<int>(gi))
        fail(rep, "cocycle-i", {g.names[gi], c.names[v]});

  // (ii) phi(g,a) s(a) = g s(a).
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t a = 0; a < n; ++a) {
      El s = c.source(static_cast<El>(a));
      if (sys.act(sys.coc(gi, static_cast<El>(a)), s) != sys.act(gi, s))
        fail(rep, "cocycle-ii", {g.names[gi], c.names[a]});
    }

  // (iii) g(ab) = (ga)(phi(g,a) b) and (iv) phi(g,ab) = phi(phi(g,a), b),
  // over pairs whose product is materialized.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El ab = c.compose_tab[a * n + b];
      if (ab == kNoEl) continue;
      for (std::size_t gi = 0; gi < m; ++gi) {
        El ga = sys.act(gi, static_cast<El>(a));
        int pga = sys.coc(gi, static_cast<El>(a));
        El gb = sys.act(pga, static_cast<El>(b));
        El lhs = sys.act(gi, ab);
        El rhs = c.compose(ga, gb);
        if (rhs == kNoEl || lhs != rhs)
          fail(rep, "cocycle-iii", {g.names[gi], c.names[a], c.names[b]});
        if (sys.coc(gi, ab) != sys.coc(pga, static_cast<El>(b)))
          fail(rep, "cocycle-iv", {g.names[gi], c.names[a], c.names[b]});
      }
    }

  return rep;
}

SystemReport validate_graph_system(const GraphSystem &gs) {
  SystemReport rep;
  const Graph &gr = *gs.graph;
  const FiniteGroup &g = gs.grp;
  const std::size_t nv = gr.vertices.size(), ne = gr.edges.size();
  for (const char *cond : {"action-permutation", "action-compatibility",
                           "equivariance", "cocycle-unit", "cocycle-identity",
                           "graph-cocycle-source"})
    item(rep, cond);

  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    std::vector<char> hv(nv, 0), he(ne, 0);
    for (std::size_t v = 0; v < nv; ++v) {
      int y = gs.act_vertex(gi, v);
      if (y < 0 || y >= static_cast<int>(nv) || hv[y])
        fail(rep, "action-permutation", {g.names[gi], gr.vertices[v]});
      else
        hv[y] = 1;
    }
    for (std::size_t e = 0; e < ne; ++e) {
      int y = gs.act_edge(gi, e);
      if (y < 0 || y >= static_cast<int>(ne) || he[y])
        fail(rep, "action-permutation", {g.names[gi], gr.edges[e].id});
      else
        he[y] = 1;
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (gs.act_vertex(g.identity, v) != static_cast<int>(v))
      fail(rep, "action-compatibility", {gr.vertices[v]});
  for (std::size_t e = 0; e < ne; ++e)
    if (gs.act_edge(g.identity, e) != static_cast<int>(e))
      fail(rep, "action-compatibility", {gr.edges[e].id});
  for (std::size_t gi = 0; gi < g.size(); ++gi)
    for (std::size_t hi = 0; hi < g.size(); ++hi) {
      if (!g.pair_checked(gi, hi)) continue;
      for (std::size_t v = 0; v < nv; ++v)
        if (gs.act_vertex(gi, gs.act_vertex(hi, v)) !=
            gs.act_vertex(g.mul(gi, hi), v))
          fail(rep, "action-compatibility",
               {g.names[gi], g.names[hi], gr.vertices[v]});
      for (std::size_t e = 0; e < ne; ++e)
        if (gs.act_edge(gi, gs.act_edge(hi, e)) !=
            gs.act_edge(g.mul(gi, hi), e))
          fail(rep, "action-compatibility",
               {g.names[gi], g.names[hi], gr.edges[e].id});
    }

  // r(ge) = g r(e), s(ge) = g s(e).
  for (std::size_t gi = 0; gi < g.size(); ++gi)
    for (std::size_t e = 0; e < ne; ++e) {
      const auto &edge = gr.edges[e];
      const auto &ge = gr.edges[gs.act_edge(gi, e)];
      if (ge.dst != gs.act_vertex(gi, edge.dst) ||
          ge.src != gs.act_vertex(gi, edge.src))
        fail(rep, "equivariance", {g.names[gi], edge.id});
    }

  for (std::size_t e = 0; e < ne; ++e)
    if (gs.coc_edge(g.identity, e) != g.identity)
      fail(rep, "cocycle-unit", {gr.edges[e].id});

  for (std::size_t gi = 0; gi < g.size(); ++gi)
    for (std::size_t hi = 0; hi < g.size(); ++hi) {
      if (!g.pair_checked(gi, hi)) continue;
      for (std::size_t e = 0; e < ne; ++e) {
        int lhs = gs.coc_edge(g.mul(gi, hi), e);
        int rhs = g.mul(gs.coc_edge(gi, gs.act_edge(hi, e)),
                        gs.coc_edge(hi, e));
        if (lhs != rhs)
          fail(rep, "cocycle-identity",
               {g.names[gi], g.names[hi], gr.edges[e].id});
      }
    }

  // phi(g,e) s(e) = g s(e).
  for (std::size_t gi = 0; gi < g.size(); ++gi)
    for (std::size_t e = 0; e < ne; ++e)
      if (gs.act_vertex(gs.coc_edge(gi, e), gr.edges[e].src) !=
          gs.act_vertex(gi, gr.edges[e].src))
        fail(rep, "graph-cocycle-source", {g.names[gi], gr.edges[e].id});

  return rep;
}

El zs_element(const Category &product, El base, int g) {
  if (product.provenance != Provenance::ZappaSzep)
    throw input_error("not a Zappa-Szep product category");
  std::size_t m = 0;
  for (const auto &p : product.zs_pairs)
    m = std::max<std::size_t>(m, p.g + 1);
  El idx = static_cast<El>(base * static_cast<El>(m) + g);
  if (idx < 0 || idx >= static_cast<El>(product.size()) ||
      product.zs_pairs[idx].base != base || product.zs_pairs[idx].g != g)
    throw input_error("no such product element");
  return idx;
}

Category zs_product(const CategorySystem &sys) {
  SystemReport rep = validate_system(sys);
  if (!rep.ok()) {
    std::string what = "invalid category system:";
    for (const auto &i : rep.items)
      if (!i.pass) what += " " + i.condition;
    throw input_error(what);
  }
  const Category &c = sys.cat;
  const FiniteGroup &g = sys.grp;
  const std::size_t n = c.size(), m = g.size();

  Category d;
  d.provenance = Provenance::ZappaSzep;
  d.horizon = c.horizon;
  d.graph = c.graph;
  const std::size_t N = n * m;
  d.names.reserve(N);
  d.zs_pairs.reserve(N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t gi = 0; gi < m; ++gi) {
      d.names.push_back("(" + c.names[a] + "|" + g.names[gi] + ")");
      d.index.emplace(d.names.back(), static_cast<El>(d.names.size() - 1));
      d.zs_pairs.push_back({static_cast<El>(a), static_cast<int>(gi)});
    }
  auto pe = [&](El a, int gi) { return static_cast<El>(a * m + gi); };

  d.vertex_flag.assign(N, false);
  d.range_of.assign(N, kNoEl);
  d.source_of.assign(N, kNoEl);
  if (!c.path_len.empty()) d.path_len.assign(N, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t gi = 0; gi < m; ++gi) {
      El x = pe(a, gi);
      d.vertex_flag[x] =
          c.is_vertex(static_cast<El>(a)) && static_cast<int>(gi) == g.identity;
      d.range_of[x] = pe(c.range(static_cast<El>(a)), g.identity);
      d.source_of[x] =
          pe(sys.act(g.inv(gi), c.source(static_cast<El>(a))), g.identity);
      if (!c.path_len.empty()) d.path_len[x] = c.path_len[a];
    }

  d.compose_tab.assign(N * N, kNoEl);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      if (d.source_of[x] != d.range_of[y]) continue;
      El a = d.zs_pairs[x].base, b = d.zs_pairs[y].base;
      int gi = d.zs_pairs[x].g, hi = d.zs_pairs[y].g;
      El gb = sys.act(gi, b);
      El prod = c.compose(a, gb);
      if (prod == kNoEl) continue; // beyond a truncation horizon
      d.compose_tab[x * N + y] = pe(prod, g.mul(sys.coc(gi, b), hi));
    }
  return d;
}

Category restricted_zs_product(const CategorySystem &sys) {
  if (!has_no_inverses(sys.cat))
    throw input_error("restricted product requires a path system "
                      "(category with no inverses)");
  Category d = zs_product(sys);
  const FiniteGroup &g = sys.grp;

  std::vector<El> keep;
  std::vector<El> remap(d.size(), kNoEl);
  for (std::size_t x = 0; x < d.size(); ++x) {
    const auto &p = d.zs_pairs[x];
    if (!sys.cat.is_vertex(p.base) || p.g == g.identity) {
      remap[x] = static_cast<El>(keep.size());
      keep.push_back(static_cast<El>(x));
    }
  }

  Category e;
  e.provenance = d.provenance;
  e.horizon = d.horizon;
  e.graph = d.graph;
  for (El x : keep) {
    e.index.emplace(d.names[x], static_cast<El>(e.names.size()));
    e.names.push_back(d.names[x]);
    e.zs_pairs.push_back(d.zs_pairs[x]);
    if (!d.path_len.empty()) e.path_len.push_back(d.path_len[x]);
  }
  const std::size_t N = keep.size();
  e.vertex_flag.assign(N, false);
  e.range_of.assign(N, kNoEl);
  e.source_of.assign(N, kNoEl);
  e.compose_tab.assign(N * N, kNoEl);
  for (std::size_t i = 0; i < N; ++i) {
    El x = keep[i];
    e.vertex_flag[i] = d.vertex_flag[x];
    e.range_of[i] = remap[d.range_of[x]];
    e.source_of[i] = remap[d.source_of[x]];
    for (std::size_t j = 0; j < N; ++j) {
      El p = d.compose_tab[x * d.size() + keep[j]];
      if (p != kNoEl) e.compose_tab[i * N + j] = remap[p];
    }
  }
  return e;
}

CategorySystem ep_extend(const GraphSystem &gs, int horizon) {
  SystemReport rep = validate_graph_system(gs);
  if (!rep.ok()) {
    std::string what = "invalid Exel-Pardo system:";
    for (const auto &i : rep.items)
      if (!i.pass) what += " " + i.condition;
    throw input_error(what);
  }
  CategorySystem sys;
  sys.cat = Category::path_category(gs.graph, horizon);
  sys.grp = gs.grp;
  const Category &c = sys.cat;
  const FiniteGroup &g = sys.grp;
  const std::size_t n = c.size(), m = g.size();
  sys.action.assign(m * n, kNoEl);
  sys.cocycle.assign(m * n, -1);

  // Elements are ordered by path length, so the induction g(e a) =
  // (ge)(phi(g,e) a), phi(g,ea) = phi(phi(g,e), a) can fill the tables in
  // one pass.
  std::vector<El> by_len(n);
  for (std::size_t i = 0; i < n; ++i) by_len[i] = static_cast<El>(i);
  std::stable_sort(by_len.begin(), by_len.end(), [&](El a, El b) {
    return c.path_len[a] < c.path_len[b];
  });
  // Name lookup for a path given graph edge indexes.
  auto path_of = [&](const std::vector<int> &edges) -> El {
    if (edges.empty()) throw input_error("internal: empty path lookup");
    std::string nm;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) nm += "·";
      nm += gs.graph->edges[edges[i]].id;
    }
    return c.element(nm);
  };

  for (El x : by_len) {
    int len = c.path_len[x];
    for (std::size_t gi = 0; gi < m; ++gi) {
      if (len == 0) {
        sys.action[gi * n + x] = static_cast<El>(gs.act_vertex(gi, x));
        sys.cocycle[gi * n + x] = static_cast<int>(gi); // vertices restrict a g to itself
      } else if (len == 1) {
        int e = c.path_edges[x][0];
        sys.action[gi * n + x] = path_of({gs.act_edge(gi, e)});
        sys.cocycle[gi * n + x] = gs.coc_edge(gi, e);
      } else {
        int e = c.path_edges[x][0];
        std::vector<int> rest(c.path_edges[x].begin() + 1,
                              c.path_edges[x].end());
        El tail = path_of(rest);
        int ge = gs.act_edge(gi, e);
        int pge = gs.coc_edge(gi, e);
        El gtail = sys.action[pge * n + tail];
        std::vector<int> edges = {ge};
        edges.insert(edges.end(), c.path_edges[gtail].begin(),
                     c.path_edges[gtail].end());
        sys.action[gi * n + x] = path_of(edges);
        sys.cocycle[gi * n + x] = sys.cocycle[pge * n + tail];
      }
    }
  }
  return sys;
}

ZsJoinResult zs_join_check(const CategorySystem &sys, const Category &product,
                           El a, int g, El b, int h) {
  ZsJoinResult res;
  El x = zs_element(product, a, g);
  El y = zs_element(product, b, h);
  res.join_in_product = join(product, x, y);
  IndependentSet base = join(sys.cat, a, b);
  for (El r : base.members)
    res.lifted_base_join.members.push_back(
        zs_element(product, r, sys.grp.identity));
  std::sort(res.lifted_base_join.members.begin(),
            res.lifted_base_join.members.end());

  // Compare up to equivalence in the product.
  auto covered = [&](const std::vector<El> &lhs, const std::vector<El> &rhs) {
    for (El u : lhs) {
      bool ok = false;
      for (El w : rhs)
        if (product.equivalent(u, w)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  res.matches = covered(res.join_in_product.members,
                        res.lifted_base_join.members) &&
                covered(res.lifted_base_join.members,
                        res.join_in_product.members);
  return res;
}

std::pair<bool, bool> exhaustive_transfer(const CategorySystem &sys,
                                          const Category &product,
                                          const std::vector<El> &f_in_product,
                                          El v_in_base) {
  El v1 = zs_element(product, v_in_base, sys.grp.identity);
  bool in_product = is_exhaustive(product, f_in_product, v1);
  std::vector<El> h;
  for (El x : f_in_product) {
    El base = product.zs_pairs[x].base;
    if (std::find(h.begin(), h.end(), base) == h.end()) h.push_back(base);
  }
  bool in_base = is_exhaustive(sys.cat, h, v_in_base);
  return {in_product, in_base};
}

} // namespace catpaths
