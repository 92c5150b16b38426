#include "catpaths/fixtures.hpp"

#include <algorithm>

namespace catpaths {

namespace {

struct CatBuilder {
  std::vector<std::string> elements, vertices;
  std::unordered_map<std::string, std::string> range, source;
  std::vector<std::array<std::string, 3>> compose;

  void vertex(const std::string &v) {
    elements.push_back(v);
    vertices.push_back(v);
    range[v] = v;
    source[v] = v;
  }
  void arrow(const std::string &a, const std::string &r,
             const std::string &s) {
    elements.push_back(a);
    range[a] = r;
    source[a] = s;
  }
  void prod(const std::string &a, const std::string &b,
            const std::string &ab) {
    compose.push_back({a, b, ab});
  }
  Category build() {
    // Identity compositions are forced by the axioms; add them here.
    for (const auto &e : elements) {
      compose.push_back({range[e], e, e});
      compose.push_back({e, source[e], e});
    }
    return Category::from_table(elements, vertices, range, source, compose);
  }
};

// A block-structured partial isometry: every named slot is a K-summand of
// dimension d, and the operator maps slot pairs with a scalar coefficient.
Mat slot_matrix(int slot_count, int d,
                const std::vector<std::tuple<int, int, std::complex<double>>>
                    &moves) {
  Mat m = Mat::Zero(slot_count * d, slot_count * d);
  for (const auto &[to, from, coef] : moves)
    for (int i = 0; i < d; ++i) m(to * d + i, from * d + i) = coef;
  return m;
}

Category make_ex3_9_category() {
  CatBuilder b;
  b.vertex("u");
  b.vertex("v");
  b.vertex("w");
  b.vertex("z");
  b.arrow("alpha", "u", "v");
  b.arrow("beta", "u", "w");
  b.arrow("gamma", "v", "z");
  b.arrow("delta", "w", "z");
  b.arrow("alpha·gamma", "u", "z");
  b.prod("alpha", "gamma", "alpha·gamma");
  b.prod("beta", "delta", "alpha·gamma");
  return b.build();
}

std::shared_ptr<const Graph> make_ex3_9_graph() {
  return std::make_shared<Graph>(Graph::make(
      {"u", "v", "w", "z"},
      {{"alpha", "v", "u"}, {"beta", "w", "u"}, {"gamma", "z", "v"},
       {"delta", "z", "w"}}));
}

Category make_thm7_9_4_category() {
  CatBuilder b;
  b.vertex("u");
  b.vertex("x");
  b.vertex("y");
  b.vertex("v");
  b.arrow("alpha", "u", "x");
  b.arrow("beta", "u", "y");
  for (int i = 1; i <= 2; ++i) {
    b.arrow("gamma_" + std::to_string(i), "x", "v");
    b.arrow("delta_" + std::to_string(i), "y", "v");
    b.arrow("alpha·gamma_" + std::to_string(i), "u", "v");
    b.prod("alpha", "gamma_" + std::to_string(i),
           "alpha·gamma_" + std::to_string(i));
    b.prod("beta", "delta_" + std::to_string(i),
           "alpha·gamma_" + std::to_string(i));
  }
  return b.build();
}

Category make_thm7_9_5_category(int n) {
  CatBuilder b;
  b.vertex("u_1");
  b.vertex("u_2");
  b.vertex("x");
  b.vertex("y");
  b.vertex("v");
  for (int j = 1; j <= 2; ++j) {
    b.arrow("alpha_" + std::to_string(j), "u_" + std::to_string(j), "x");
    b.arrow("beta_" + std::to_string(j), "u_" + std::to_string(j), "y");
  }
  for (int i = 1; i <= n; ++i) {
    b.arrow("gamma_" + std::to_string(i), "x", "v");
    b.arrow("delta_" + std::to_string(i), "y", "v");
  }
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= n; ++i) {
      std::string comp = "alpha_" + std::to_string(j) + "·gamma_" +
                         std::to_string(i);
      b.arrow(comp, "u_" + std::to_string(j), "v");
      b.prod("alpha_" + std::to_string(j), "gamma_" + std::to_string(i), comp);
      b.prod("beta_" + std::to_string(j), "delta_" + std::to_string(i), comp);
    }
  return b.build();
}

} // namespace

RepFamily ex3_9_family(std::shared_ptr<const Category> cat, int d,
                       double tol) {
  // Slots: u1 u2 u3 u4 | v1 v2 v3 | w1 w2 w3 | z.
  const int U1 = 0, U2 = 1, U3 = 2, U4 = 3, V1 = 4, V2 = 5, V3 = 6, W1 = 7,
            W2 = 8, W3 = 9, Z = 10;
  const int slots = 11;
  RepFamily fam;
  fam.cat = cat;
  fam.dim = slots * d;
  fam.tol = tol;
  fam.assign.assign(cat->size(), Mat::Zero(fam.dim, fam.dim));
  auto set = [&](const std::string &nm,
                 std::vector<std::tuple<int, int, std::complex<double>>> mv) {
    fam.assign[cat->element(nm)] = slot_matrix(slots, d, mv);
  };
  set("u", {{U1, U1, 1}, {U2, U2, 1}, {U3, U3, 1}, {U4, U4, 1}});
  set("v", {{V1, V1, 1}, {V2, V2, 1}, {V3, V3, 1}});
  set("w", {{W1, W1, 1}, {W2, W2, 1}, {W3, W3, 1}});
  set("z", {{Z, Z, 1}});
  set("alpha", {{U1, V1, 1}, {U2, V2, 1}, {U3, V3, 1}});
  set("gamma", {{V1, Z, 1}});
  set("delta", {{W1, Z, 1}});
  // T_beta agrees with T_alpha T_gamma T_delta^* on the first summand of H_w.
  set("beta", {{U1, W1, 1}, {U2, W2, 1}, {U4, W3, 1}});
  set("alpha·gamma", {{U1, Z, 1}});
  return fam;
}

namespace {

LiRep make_thm7_9_4_li(std::shared_ptr<const Category> cat, double tol) {
  // Slots: u:(ag1 ag2 u') x:(g1 g2 x') y:(d1 d2 y') v.
  const int AG1 = 0, AG2 = 1, UP = 2, G1 = 3, G2 = 4, XP = 5, D1 = 6, D2 = 7,
            YP = 8, V = 9;
  const int slots = 10;
  LiRep r;
  r.cat = cat;
  r.dim = slots;
  r.tol = tol;
  r.v.assign(cat->size(), Mat::Zero(slots, slots));
  auto set = [&](const std::string &nm,
                 std::vector<std::tuple<int, int, std::complex<double>>> mv) {
    r.v[cat->element(nm)] = slot_matrix(slots, 1, mv);
  };
  set("u", {{AG1, AG1, 1}, {AG2, AG2, 1}, {UP, UP, 1}});
  set("x", {{G1, G1, 1}, {G2, G2, 1}, {XP, XP, 1}});
  set("y", {{D1, D1, 1}, {D2, D2, 1}, {YP, YP, 1}});
  set("v", {{V, V, 1}});
  set("gamma_1", {{G1, V, 1}});
  set("gamma_2", {{G2, V, 1}});
  set("delta_1", {{D1, V, 1}});
  set("delta_2", {{D2, V, 1}});
  set("alpha", {{AG1, G1, 1}, {AG2, G2, 1}, {UP, XP, 1}});
  set("beta", {{AG1, D1, 1}, {AG2, D2, 1}, {UP, YP, 1}});
  set("alpha·gamma_1", {{AG1, V, 1}});
  set("alpha·gamma_2", {{AG2, V, 1}});

  r.ideals = enumerate_ideals(*cat, 100000);
  r.p.assign(r.ideals.ideals.size(), Mat::Zero(slots, slots));
  auto members_of = [&](std::initializer_list<const char *> names) {
    std::vector<El> m;
    for (const char *nm : names) m.push_back(cat->element(nm));
    std::sort(m.begin(), m.end());
    return m;
  };
  Mat pu = r.v[cat->element("u")], px = r.v[cat->element("x")],
      py = r.v[cat->element("y")];
  for (std::size_t i = 0; i < r.ideals.ideals.size(); ++i) {
    const auto &id = r.ideals.ideals[i];
    if (id.empty()) continue; // p_empty = 0
    bool principal = false;
    for (std::size_t a = 0; a < cat->size() && !principal; ++a)
      if (right_ideal(*cat, static_cast<El>(a)).members == id.members) {
        const Mat &va = r.v[a];
        r.p[i] = va * va.adjoint();
        principal = true;
      }
    if (principal) continue;
    if (id.members ==
        members_of({"gamma_1", "gamma_2"}))
      r.p[i] = px;
    else if (id.members == members_of({"delta_1", "delta_2"}))
      r.p[i] = py;
    else if (id.members ==
             members_of({"alpha·gamma_1", "alpha·gamma_2"}))
      r.p[i] = pu;
    else
      throw input_error("unexpected constructible ideal in thm7_9_4");
  }
  return r;
}

LiRep make_thm7_9_5_li(std::shared_ptr<const Category> cat, int n,
                       double tol) {
  // Slots: u1:(a1g_i..., u1') u2:(a2g_i..., u2') x:(g_i..., x')
  // y:(d_i..., y') v.
  const int slots = 4 * (n + 1) + 1;
  auto u_slot = [&](int j, int i) { return (j - 1) * (n + 1) + i; }; // i<n
  auto up_slot = [&](int j) { return (j - 1) * (n + 1) + n; };
  auto x_slot = [&](int i) { return 2 * (n + 1) + i; };
  const int XP = 2 * (n + 1) + n;
  auto y_slot = [&](int i) { return 3 * (n + 1) + i; };
  const int YP = 3 * (n + 1) + n;
  const int V = 4 * (n + 1);

  LiRep r;
  r.cat = cat;
  r.dim = slots;
  r.tol = tol;
  r.v.assign(cat->size(), Mat::Zero(slots, slots));
  auto set = [&](const std::string &nm,
                 std::vector<std::tuple<int, int, std::complex<double>>> mv) {
    r.v[cat->element(nm)] = slot_matrix(slots, 1, mv);
  };

  for (int j = 1; j <= 2; ++j) {
    std::vector<std::tuple<int, int, std::complex<double>>> mu;
    for (int i = 0; i < n; ++i) mu.push_back({u_slot(j, i), u_slot(j, i), 1});
    mu.push_back({up_slot(j), up_slot(j), 1});
    set("u_" + std::to_string(j), mu);
  }
  {
    std::vector<std::tuple<int, int, std::complex<double>>> mx, my;
    for (int i = 0; i < n; ++i) {
      mx.push_back({x_slot(i), x_slot(i), 1});
      my.push_back({y_slot(i), y_slot(i), 1});
    }
    mx.push_back({XP, XP, 1});
    my.push_back({YP, YP, 1});
    set("x", mx);
    set("y", my);
    set("v", {{V, V, 1}});
  }
  for (int i = 0; i < n; ++i) {
    set("gamma_" + std::to_string(i + 1), {{x_slot(i), V, 1}});
    set("delta_" + std::to_string(i + 1), {{y_slot(i), V, 1}});
  }
  for (int j = 1; j <= 2; ++j) {
    std::vector<std::tuple<int, int, std::complex<double>>> ma;
    for (int i = 0; i < n; ++i) ma.push_back({u_slot(j, i), x_slot(i), 1});
    ma.push_back({up_slot(j), XP, 1});
    set("alpha_" + std::to_string(j), ma);
    std::vector<std::tuple<int, int, std::complex<double>>> mb;
    for (int i = 0; i < n; ++i) mb.push_back({u_slot(j, i), y_slot(i), 1});
    // V_{beta_2} carries the nontrivial unitary U = -1 on H_y'.
    mb.push_back({up_slot(j), YP, j == 2 ? -1.0 : 1.0});
    set("beta_" + std::to_string(j), mb);
    for (int i = 0; i < n; ++i)
      set("alpha_" + std::to_string(j) + "·gamma_" + std::to_string(i + 1),
          {{u_slot(j, i), V, 1}});
  }

  r.ideals = enumerate_ideals(*cat, 100000);
  r.p.assign(r.ideals.ideals.size(), Mat::Zero(slots, slots));
  auto gamma_set = [&]() {
    std::vector<El> m;
    for (int i = 1; i <= n; ++i)
      m.push_back(cat->element("gamma_" + std::to_string(i)));
    std::sort(m.begin(), m.end());
    return m;
  };
  auto delta_set = [&]() {
    std::vector<El> m;
    for (int i = 1; i <= n; ++i)
      m.push_back(cat->element("delta_" + std::to_string(i)));
    std::sort(m.begin(), m.end());
    return m;
  };
  auto comp_set = [&](int j) {
    std::vector<El> m;
    for (int i = 1; i <= n; ++i)
      m.push_back(cat->element("alpha_" + std::to_string(j) + "·gamma_" +
                               std::to_string(i)));
    std::sort(m.begin(), m.end());
    return m;
  };
  for (std::size_t i = 0; i < r.ideals.ideals.size(); ++i) {
    const auto &id = r.ideals.ideals[i];
    if (id.empty()) continue;
    bool principal = false;
    for (std::size_t a = 0; a < cat->size() && !principal; ++a)
      if (right_ideal(*cat, static_cast<El>(a)).members == id.members) {
        const Mat &va = r.v[a];
        r.p[i] = va * va.adjoint();
        principal = true;
      }
    if (principal) continue;
    if (id.members == gamma_set())
      r.p[i] = r.v[cat->element("x")];
    else if (id.members == delta_set())
      r.p[i] = r.v[cat->element("y")];
    else if (id.members == comp_set(1))
      r.p[i] = r.v[cat->element("u_1")];
    else if (id.members == comp_set(2))
      r.p[i] = r.v[cat->element("u_2")];
    else
      throw input_error("unexpected constructible ideal in thm7_9_5");
  }
  return r;
}

std::shared_ptr<const GraphSystem> make_adding_machine(int k) {
  if (k < 1 || k > 16) throw input_error("adding machine wants 1 <= k <= 16");
  auto graph = std::make_shared<Graph>(
      Graph::make({"v"}, {{"e0", "v", "v"}, {"e1", "v", "v"}}));
  auto gs = std::make_shared<GraphSystem>();
  gs->graph = graph;
  gs->grp = FiniteGroup::cyclic(1 << k);
  // The integer odometer modulo 2^k; identities are only exact where no
  // wrap-around occurs, which the truncation marker records.
  FiniteGroup::Truncation tr;
  tr.modulus = 1 << k;
  for (int i = 0; i < (1 << k); ++i) tr.lift.push_back(i);
  gs->grp.truncation = tr;
  const int m = 1 << k;
  gs->vertex_action.assign(m, 0);
  gs->edge_action.assign(m * 2, 0);
  gs->edge_cocycle.assign(m * 2, 0);
  for (int gexp = 0; gexp < m; ++gexp)
    for (int d = 0; d < 2; ++d) {
      gs->edge_action[gexp * 2 + d] = (gexp + d) % 2;
      gs->edge_cocycle[gexp * 2 + d] = ((gexp + d) / 2) % m;
    }
  return gs;
}

std::shared_ptr<const CategorySystem> make_trivial_cocycle_system() {
  auto sys = std::make_shared<CategorySystem>();
  sys->cat = make_ex3_9_category();
  sys->grp = FiniteGroup::cyclic(2);
  const Category &c = sys->cat;
  const std::size_t n = c.size();
  sys->action.assign(2 * n, kNoEl);
  sys->cocycle.assign(2 * n, -1);
  auto swap_of = [&](const std::string &nm) -> std::string {
    if (nm == "v") return "w";
    if (nm == "w") return "v";
    if (nm == "alpha") return "beta";
    if (nm == "beta") return "alpha";
    if (nm == "gamma") return "delta";
    if (nm == "delta") return "gamma";
    return nm;
  };
  for (std::size_t x = 0; x < n; ++x) {
    sys->action[0 * n + x] = static_cast<El>(x);
    sys->action[1 * n + x] = c.element(swap_of(c.names[x]));
    sys->cocycle[0 * n + x] = 0;
    sys->cocycle[1 * n + x] = 1;
  }
  return sys;
}

std::shared_ptr<const CategorySystem> make_dihedral_system() {
  auto sys = std::make_shared<CategorySystem>();
  CatBuilder b;
  b.vertex("v");
  b.arrow("a", "v", "v");
  b.prod("a", "a", "v");
  sys->cat = b.build();
  sys->grp = FiniteGroup::cyclic(4);
  const std::size_t n = sys->cat.size();
  El a = sys->cat.element("a");
  sys->action.assign(4 * n, kNoEl);
  sys->cocycle.assign(4 * n, -1);
  for (int g = 0; g < 4; ++g)
    for (std::size_t x = 0; x < n; ++x) {
      sys->action[g * n + x] = static_cast<El>(x); // trivial action
      // The cocycle inverts the group along the flip a.
      sys->cocycle[g * n + x] =
          (static_cast<El>(x) == a) ? (4 - g) % 4 : g;
    }
  return sys;
}

SystemRep make_trivial_cocycle_rep(std::shared_ptr<const CategorySystem> sys) {
  SystemRep r;
  r.sys = sys;
  auto cat = std::shared_ptr<const Category>(sys, &sys->cat);
  r.t = regular_representation(cat);
  const std::size_t n = sys->cat.size();
  for (std::size_t g = 0; g < sys->grp.size(); ++g) {
    Mat u = Mat::Zero(n, n);
    for (std::size_t x = 0; x < n; ++x)
      u(sys->act(static_cast<int>(g), static_cast<El>(x)), x) = 1.0;
    r.u.push_back(std::move(u));
  }
  return r;
}

SystemRep make_dihedral_rep(std::shared_ptr<const CategorySystem> sys) {
  SystemRep r;
  r.sys = sys;
  r.t.cat = std::shared_ptr<const Category>(sys, &sys->cat);
  r.t.dim = 2;
  r.t.tol = 1e-9;
  Mat tv = Mat::Identity(2, 2);
  Mat ta = Mat::Zero(2, 2);
  ta(0, 0) = 1.0;
  ta(1, 1) = -1.0;
  r.t.assign.resize(2);
  r.t.assign[sys->cat.element("v")] = tv;
  r.t.assign[sys->cat.element("a")] = ta;
  Mat rot = Mat::Zero(2, 2);
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  Mat u = Mat::Identity(2, 2);
  for (int g = 0; g < 4; ++g) {
    r.u.push_back(u);
    u = rot * u;
  }
  return r;
}

} // namespace

std::vector<std::string> fixture_names() {
  return {"ex3_9",          "thm7_9_4",           "thm7_9_5",
          "adding_machine", "trivial_cocycle_demo", "dihedral_demo"};
}

NamedFixture build_fixture(const std::string &full_name) {
  std::string name = full_name;
  int param = -1;
  if (auto pos = full_name.find(':'); pos != std::string::npos) {
    name = full_name.substr(0, pos);
    param = std::stoi(full_name.substr(pos + 1));
  }

  NamedFixture fx;
  fx.name = name;
  if (name == "ex3_9") {
    auto cat = std::make_shared<const Category>(make_ex3_9_category());
    fx.category = cat;
    fx.graph = make_ex3_9_graph();
    fx.rep = ex3_9_family(cat, param > 0 ? param : 1);
    fx.expected_verdicts = {
        {"rep.rep-1", true},     {"rep.rep-2", true},
        {"rep.rep-3", false},    {"exel.Exe1", true},
        {"exel.Exe2", true},      {"exel.Exe3", true},
        {"exel.Exe4", true},      {"exel.Exe5", true},
        {"exel.Exe6", false},     {"covariant.covariance", false},
        {"covariant.nondegenerate", true},
        {"tight.tight-by-covariance", false},
    };
  } else if (name == "thm7_9_4") {
    auto cat = std::make_shared<const Category>(make_thm7_9_4_category());
    fx.category = cat;
    fx.li_rep = make_thm7_9_4_li(cat, 1e-9);
    fx.expected_verdicts = {
        {"li.L1", true},  {"li.L2", true}, {"li.L3", true}, {"li.L4", true},
        {"li.L5", true},  {"li.L6", false}, {"li.L7", true},
    };
  } else if (name == "thm7_9_5") {
    int n = param > 0 ? param : 2;
    auto cat = std::make_shared<const Category>(make_thm7_9_5_category(n));
    fx.category = cat;
    fx.li_rep = make_thm7_9_5_li(cat, n, 1e-9);
    fx.expected_verdicts = {
        {"li.L1", true},  {"li.L2", true}, {"li.L3", true}, {"li.L4", true},
        {"li.L5", true},  {"li.L6", false}, {"li.L7", false},
    };
  } else if (name == "adding_machine") {
    int k = param > 0 ? param : 3;
    fx.graph_system = make_adding_machine(k);
    fx.graph = fx.graph_system->graph;
    auto sys =
        std::make_shared<const CategorySystem>(ep_extend(*fx.graph_system, 4));
    fx.system = sys;
    fx.category = std::shared_ptr<const Category>(sys, &sys->cat);
  } else if (name == "trivial_cocycle_demo") {
    auto sys = make_trivial_cocycle_system();
    fx.system = sys;
    fx.category = std::shared_ptr<const Category>(sys, &sys->cat);
    fx.system_rep = make_trivial_cocycle_rep(sys);
    fx.expected_verdicts = {
        {"sysrep.U-unitary", true},
        {"sysrep.U-homomorphism", true},
        {"sysrep.intertwining", true},
        {"sysrep.T-nondegenerate", true},
    };
  } else if (name == "dihedral_demo") {
    auto sys = make_dihedral_system();
    fx.system = sys;
    fx.category = std::shared_ptr<const Category>(sys, &sys->cat);
    fx.system_rep = make_dihedral_rep(sys);
    fx.expected_verdicts = {
        {"sysrep.U-unitary", true},
        {"sysrep.U-homomorphism", true},
        {"sysrep.intertwining", true},
        {"sysrep.T-nondegenerate", true},
    };
  } else {
    throw input_error("unknown fixture name: " + full_name);
  }
  return fx;
}

} // namespace catpaths
