#include "catpaths/repcheck.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace catpaths {

namespace {

struct Acc {
  RelationCheck c;
  double tol;
  explicit Acc(std::string relation, double tol_) : tol(tol_) {
    c.relation = std::move(relation);
  }
  void observe(double r, std::vector<std::string> witness) {
    if (r > c.residual) {
      c.residual = r;
      c.witness = std::move(witness);
    }
    if (r > tol) c.pass = false;
  }
  void fail_note(std::string note, std::vector<std::string> witness) {
    c.pass = false;
    if (c.note.empty()) {
      c.note = std::move(note);
      if (c.witness.empty()) c.witness = std::move(witness);
    }
  }
};

void require_family_shape(const RepFamily &t) {
  if (!t.cat) throw input_error("representation family has no category");
  if (t.tol <= 0) throw input_error("tolerance must be positive");
  if (t.assign.size() != t.cat->size())
    throw input_error("family does not assign a matrix to every element");
  for (std::size_t i = 0; i < t.assign.size(); ++i) {
    if (t.assign[i].rows() != t.dim || t.assign[i].cols() != t.dim)
      throw input_error("dimension mismatch at " + t.cat->names[i]);
    if (!all_finite(t.assign[i]))
      throw input_error("non-finite entries at " + t.cat->names[i]);
  }
}

Mat final_projection(const RepFamily &t, El a) {
  return t.at(a) * t.at(a).adjoint();
}

} // namespace

RelationReport check_representation(const RepFamily &t) {
  require_family_shape(t);
  const Category &c = *t.cat;
  const std::size_t n = c.size();
  RelationReport rep;
  Acc a1("rep-1", t.tol), a2("rep-2", t.tol), a3("rep-3", t.tol);

  for (std::size_t a = 0; a < n; ++a)
    a1.observe(op_norm(t.at(a).adjoint() * t.at(a) - t.at(c.source(a))),
               {c.names[a]});

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El p = c.compose_tab[a * n + b];
      if (p == kNoEl) continue;
      a2.observe(op_norm(t.at(a) * t.at(b) - t.at(p)),
                 {c.names[a], c.names[b]});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      IndependentSet j = join(c, static_cast<El>(a), static_cast<El>(b));
      std::vector<Mat> ps;
      for (El g : j.members) ps.push_back(final_projection(t, g));
      try {
        Mat rhs = commuting_join(ps, t.dim, t.tol);
        Mat lhs = final_projection(t, static_cast<El>(a)) *
                  final_projection(t, static_cast<El>(b));
        a3.observe(op_norm(lhs - rhs), {c.names[a], c.names[b]});
      } catch (const noncommuting_error &e) {
        a3.fail_note("range projections of the join do not commute "
                     "(commutator norm " +
                         std::to_string(e.commutator_norm) + ")",
                     {c.names[a], c.names[b]});
      }
    }

  rep.checks = {a1.c, a2.c, a3.c};
  return rep;
}

RelationReport check_exel_conditions(const RepFamily &t) {
  require_family_shape(t);
  const Category &c = *t.cat;
  const std::size_t n = c.size();
  RelationReport rep;
  Acc e1("Exe1", t.tol), e2("Exe2", t.tol), e3("Exe3", t.tol),
      e4("Exe4", t.tol), e5("Exe5", t.tol), e6("Exe6", t.tol);

  for (std::size_t a = 0; a < n; ++a)
    e1.observe(partial_isometry_residual(t.at(a)), {c.names[a]});

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El p = c.compose_tab[a * n + b];
      Mat prod = t.at(a) * t.at(b);
      if (c.source(a) == c.range(b) && p != kNoEl)
        e2.observe(op_norm(prod - t.at(p)), {c.names[a], c.names[b]});
      else if (c.source(a) != c.range(b))
        e2.observe(op_norm(prod), {c.names[a], c.names[b]});
    }

  std::vector<Mat> initial(n), fin(n);
  for (std::size_t a = 0; a < n; ++a) {
    initial[a] = t.at(a).adjoint() * t.at(a);
    fin[a] = final_projection(t, static_cast<El>(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      e3.observe(commutator_norm(initial[a], initial[b]),
                 {c.names[a], c.names[b], "initial"});
      e3.observe(commutator_norm(fin[a], fin[b]),
                 {c.names[a], c.names[b], "final"});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (c.right_ideal_set(a).intersects(c.right_ideal_set(b))) continue;
      e4.observe(op_norm(Mat(fin[a] * fin[b])), {c.names[a], c.names[b]});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (c.source(a) != c.range(b)) continue;
      e5.observe(op_norm(initial[a] * fin[b] - fin[b]),
                 {c.names[a], c.names[b]});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      IndependentSet j = join(c, static_cast<El>(a), static_cast<El>(b));
      std::vector<Mat> ps;
      for (El g : j.members) ps.push_back(fin[g]);
      try {
        Mat rhs = commuting_join(ps, t.dim, t.tol);
        e6.observe(op_norm(fin[a] * fin[b] - rhs), {c.names[a], c.names[b]});
      } catch (const noncommuting_error &err) {
        e6.fail_note("join projections do not commute (commutator norm " +
                         std::to_string(err.commutator_norm) + ")",
                     {c.names[a], c.names[b]});
      }
    }

  rep.checks = {e1.c, e2.c, e3.c, e4.c, e5.c, e6.c};
  return rep;
}

double nondegeneracy_residual(const RepFamily &t) {
  require_family_shape(t);
  Mat sum = Mat::Zero(t.dim, t.dim);
  for (El v : t.cat->vertices()) sum += t.at(v);
  return op_norm(sum - Mat::Identity(t.dim, t.dim));
}

bool check_nondegenerate(const RepFamily &t) {
  return nondegeneracy_residual(t) <= t.tol;
}

RelationReport check_covariant(const RepFamily &t) {
  require_family_shape(t);
  const Category &c = *t.cat;
  RelationReport rep;
  Acc cov("covariance", t.tol), nd("nondegenerate", t.tol);

  for (El v : c.vertices()) {
    auto sets = minimal_exhaustive_sets(c, v, c.fiber(v).size());
    for (const auto &f : sets) {
      std::vector<Mat> ps;
      std::vector<std::string> w = {c.names[v], "{"};
      for (El a : f) {
        ps.push_back(final_projection(t, a));
        w.push_back(c.names[a]);
      }
      w.push_back("}");
      try {
        Mat joined = commuting_join(ps, t.dim, t.tol);
        cov.observe(op_norm(t.at(v) - joined), std::move(w));
      } catch (const noncommuting_error &e) {
        cov.fail_note("exhaustive-set projections do not commute "
                      "(commutator norm " +
                          std::to_string(e.commutator_norm) + ")",
                      std::move(w));
      }
    }
  }
  nd.observe(nondegeneracy_residual(t), {});
  rep.checks = {cov.c, nd.c};
  return rep;
}

RelationReport check_tight(const RepFamily &t, const TightOptions &opts) {
  require_family_shape(t);
  const Category &c = *t.cat;
  const std::size_t n = c.size();
  RelationReport covrep = check_covariant(t);
  bool covariant = covrep.find("covariance")->pass;
  bool nondeg = covrep.find("nondegenerate")->pass;

  Acc direct("tight-direct", t.tol);
  Mat id = Mat::Identity(t.dim, t.dim);

  // Subsets of C up to a size bound, as index vectors.
  auto subsets_up_to = [&](std::size_t k) {
    std::vector<std::vector<El>> out = {{}};
    std::vector<El> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t want) {
      if (cur.size() == want) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(static_cast<El>(i));
        rec(i + 1, want);
        cur.pop_back();
      }
    };
    for (std::size_t want = 1; want <= k; ++want) rec(0, want);
    return out;
  };
  auto fs = subsets_up_to(opts.max_f);
  auto ks = subsets_up_to(opts.max_k);

  // Coverings of each distinct C^{F,K}, cached.
  struct XInfo {
    Bitset x;
    std::vector<std::vector<El>> coverings;
    std::vector<Mat> joins;
    bool join_defined = true;
  };
  std::unordered_map<std::size_t, std::vector<XInfo>> xcache;
  auto coverings_of = [&](const Bitset &x) -> XInfo & {
    auto &bucket = xcache[x.hash()];
    for (auto &cand : bucket)
      if (cand.x == x) return cand;
    bucket.push_back(XInfo{x, {}, {}, true});
    XInfo &info = bucket.back();
    std::vector<El> members;
    for (std::size_t i = 0; i < n; ++i)
      if (x.test(i)) members.push_back(static_cast<El>(i));
    std::vector<El> cur;
    std::function<void(std::size_t, std::size_t)> rec =
        [&](std::size_t start, std::size_t want) {
          if (cur.size() == want) {
            bool cover = true;
            for (El a : members) {
              bool met = false;
              for (El b : cur)
                if (c.right_ideal_set(a).intersects(c.right_ideal_set(b))) {
                  met = true;
                  break;
                }
              if (!met) {
                cover = false;
                break;
              }
            }
            if (!cover) return;
            info.coverings.push_back(cur);
            std::vector<Mat> ps;
            for (El b : cur) ps.push_back(final_projection(t, b));
            try {
              info.joins.push_back(commuting_join(ps, t.dim, t.tol));
            } catch (const noncommuting_error &) {
              info.join_defined = false;
              info.joins.push_back(Mat::Zero(t.dim, t.dim));
            }
            return;
          }
          for (std::size_t i = start; i < members.size(); ++i) {
            cur.push_back(members[i]);
            rec(i + 1, want);
            cur.pop_back();
          }
        };
    if (members.empty()) {
      info.coverings.push_back({});
      info.joins.push_back(Mat::Zero(t.dim, t.dim));
    } else {
      for (std::size_t want = 1;
           want <= std::min<std::size_t>(opts.max_h, members.size()); ++want)
        rec(0, want);
    }
    return info;
  };

  // (X, RHS) classes already verified; both sides of the equation depend on
  // the pair only, so repeats are skipped after an exact key match.
  std::unordered_map<std::size_t, std::vector<std::pair<Bitset, Mat>>> done;
  auto rhs_key = [&](const Bitset &x, const Mat &rhs) {
    std::size_t h = x.hash();
    for (Eigen::Index j = 0; j < rhs.cols(); ++j)
      for (Eigen::Index i = 0; i < rhs.rows(); ++i) {
        auto v = rhs(i, j);
        h = h * 1099511628211ULL + std::hash<double>{}(v.real());
        h = h * 1099511628211ULL + std::hash<double>{}(v.imag());
      }
    return h;
  };
  auto already_done = [&](const Bitset &x, const Mat &rhs) {
    auto &bucket = done[rhs_key(x, rhs)];
    for (const auto &[bx, bm] : bucket)
      if (bx == x && (bm - rhs).squaredNorm() == 0.0) return true;
    bucket.emplace_back(x, rhs);
    return false;
  };

  for (const auto &f : fs) {
    Mat prod_f = id;
    Bitset x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i);
    for (El b : f) {
      prod_f = prod_f * (t.at(b).adjoint() * t.at(b));
      x &= c.right_ideal_set(c.source(b)); // s(b)C
    }
    for (const auto &k : ks) {
      Mat rhs = prod_f;
      Bitset xk = x;
      for (El g : k) {
        rhs = rhs * (id - t.at(g).adjoint() * t.at(g));
        const Bitset &sg = c.right_ideal_set(c.source(g));
        for (std::size_t i = 0; i < n; ++i)
          if (sg.test(i)) xk.reset(i);
      }
      if (already_done(xk, rhs)) continue;
      XInfo &info = coverings_of(xk);
      if (!info.join_defined) {
        direct.fail_note("covering projections do not commute", {});
        continue;
      }
      for (std::size_t ci = 0; ci < info.coverings.size(); ++ci) {
        Mat diff = info.joins[ci] - rhs;
        double fr = frob_norm(diff);
        if (fr <= t.tol) continue; // operator norm is below tol too
        std::vector<std::string> w = {"F={"};
        for (El b : f) w.push_back(c.names[b]);
        w.push_back("} K={");
        for (El g : k) w.push_back(c.names[g]);
        w.push_back("} H={");
        for (El b : info.coverings[ci]) w.push_back(c.names[b]);
        w.push_back("}");
        direct.observe(op_norm(diff), std::move(w));
      }
    }
  }

  RelationCheck thm;
  thm.relation = "tight-by-covariance";
  thm.pass = covariant && nondeg;
  thm.note = std::string("covariant=") + (covariant ? "true" : "false") +
             " nondegenerate=" + (nondeg ? "true" : "false");

  RelationCheck agree;
  agree.relation = "tight-agreement";
  agree.pass = (direct.c.pass == thm.pass);
  if (!agree.pass)
    agree.note = "bounded direct check disagrees with the covariance verdict";

  RelationReport rep;
  rep.checks = {direct.c, thm, agree};
  return rep;
}

RelationReport validate_system_rep(const SystemRep &r) {
  const CategorySystem &sys = *r.sys;
  const FiniteGroup &g = sys.grp;
  const std::size_t m = g.size();
  if (r.u.size() != m) throw input_error("missing group unitaries");
  RelationReport rep;
  double tol = r.t.tol;
  Acc uu("U-unitary", tol), uh("U-homomorphism", tol), d5("intertwining", tol),
      nd("T-nondegenerate", tol);
  Mat id = Mat::Identity(r.t.dim, r.t.dim);
  for (std::size_t gi = 0; gi < m; ++gi) {
    uu.observe(op_norm(r.u[gi] * r.u[gi].adjoint() - id), {g.names[gi]});
    uu.observe(op_norm(r.u[gi].adjoint() * r.u[gi] - id), {g.names[gi]});
  }
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t hi = 0; hi < m; ++hi)
      uh.observe(op_norm(r.u[gi] * r.u[hi] - r.u[g.mul(gi, hi)]),
                 {g.names[gi], g.names[hi]});
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t a = 0; a < sys.cat.size(); ++a) {
      Mat lhs = r.u[gi] * r.t.at(static_cast<El>(a));
      Mat rhs = r.t.at(sys.act(gi, static_cast<El>(a))) *
                r.u[sys.coc(gi, static_cast<El>(a))];
      d5.observe(op_norm(lhs - rhs), {g.names[gi], sys.cat.names[a]});
    }
  nd.observe(nondegeneracy_residual(r.t), {});
  rep.checks = {uu.c, uh.c, d5.c, nd.c};
  return rep;
}

RepFamily combine(const SystemRep &r,
                  std::shared_ptr<const Category> product) {
  RelationReport v = validate_system_rep(r);
  if (!v.all_pass()) {
    std::string what = "system representation violates";
    for (const auto &cchk : v.checks)
      if (!cchk.pass) {
        what += " " + cchk.relation + " at (";
        for (const auto &wi : cchk.witness) what += wi + " ";
        what += ")";
      }
    throw input_error(what);
  }
  RepFamily out;
  out.cat = product;
  out.dim = r.t.dim;
  out.tol = r.t.tol;
  out.assign.resize(product->size());
  for (std::size_t x = 0; x < product->size(); ++x) {
    const auto &pr = product->zs_pairs[x];
    out.assign[x] = r.t.at(pr.base) * r.u[pr.g];
  }
  return out;
}

SystemRep split(std::shared_ptr<const CategorySystem> sys,
                std::shared_ptr<const Category> product, const RepFamily &r) {
  require_family_shape(r);
  if (nondegeneracy_residual(r) > r.tol)
    throw input_error("split requires a nondegenerate representation of the "
                      "product");
  SystemRep out;
  out.sys = sys;
  out.t.cat = std::shared_ptr<const Category>(sys, &sys->cat);
  out.t.dim = r.dim;
  out.t.tol = r.tol;
  out.t.assign.resize(sys->cat.size());
  const int one = sys->grp.identity;
  for (std::size_t a = 0; a < sys->cat.size(); ++a)
    out.t.assign[a] = r.at(zs_element(*product, static_cast<El>(a), one));
  out.u.resize(sys->grp.size());
  for (std::size_t g = 0; g < sys->grp.size(); ++g) {
    Mat sum = Mat::Zero(r.dim, r.dim);
    for (El v : sys->cat.vertices())
      sum += r.at(zs_element(*product, v, static_cast<int>(g)));
    out.u[g] = sum;
  }
  return out;
}

RepFamily regular_representation(std::shared_ptr<const Category> cat,
                                 double tol) {
  if (!cat->complete())
    throw horizon_error("regular representation requires a complete finite "
                        "category");
  RepFamily out;
  out.cat = cat;
  out.dim = static_cast<int>(cat->size());
  out.tol = tol;
  const std::size_t n = cat->size();
  out.assign.assign(n, Mat::Zero(n, n));
  for (std::size_t a = 0; a < n; ++a)
    for (El b : cat->fiber(cat->source(static_cast<El>(a)))) {
      El p = cat->compose(static_cast<El>(a), b);
      if (p != kNoEl) out.assign[a](p, b) = 1.0;
    }
  return out;
}

namespace {

void graph_common_checks(const GraphRep &g, Acc &proj, Acc &init) {
  const Graph &gr = *g.graph;
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    proj.observe(projection_residual(g.p[v]), {gr.vertices[v]});
    for (std::size_t w = v + 1; w < gr.vertices.size(); ++w)
      proj.observe(op_norm(Mat(g.p[v] * g.p[w])),
                   {gr.vertices[v], gr.vertices[w]});
  }
  for (std::size_t e = 0; e < gr.edges.size(); ++e)
    init.observe(op_norm(g.s[e].adjoint() * g.s[e] - g.p[gr.edges[e].src]),
                 {gr.edges[e].id});
}

double positivity_defect(const Mat &m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat((m + m.adjoint()) / 2.0),
                                        Eigen::EigenvaluesOnly);
  double lo = es.eigenvalues().minCoeff();
  return lo < 0 ? -lo : 0.0;
}

} // namespace

RelationReport check_toeplitz_family(const GraphRep &g) {
  const Graph &gr = *g.graph;
  RelationReport rep;
  Acc proj("P-orthogonal-projections", g.tol), init("S-initial", g.tol),
      bound("toeplitz-dominance", g.tol);
  graph_common_checks(g, proj, init);
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    Mat sum = Mat::Zero(g.dim, g.dim);
    bool nonempty = false;
    for (std::size_t e = 0; e < gr.edges.size(); ++e)
      if (gr.edges[e].dst == static_cast<int>(v)) {
        sum += g.s[e] * g.s[e].adjoint();
        nonempty = true;
      }
    if (!nonempty) continue;
    bound.observe(positivity_defect(g.p[v] - sum), {gr.vertices[v]});
  }
  rep.checks = {proj.c, init.c, bound.c};
  return rep;
}

RelationReport check_ck_family(const GraphRep &g) {
  RelationReport rep = check_toeplitz_family(g);
  const Graph &gr = *g.graph;
  Acc ck("cuntz-krieger", g.tol);
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    Mat sum = Mat::Zero(g.dim, g.dim);
    bool nonempty = false;
    for (std::size_t e = 0; e < gr.edges.size(); ++e)
      if (gr.edges[e].dst == static_cast<int>(v)) {
        sum += g.s[e] * g.s[e].adjoint();
        nonempty = true;
      }
    if (!nonempty) continue; // sources carry no Cuntz-Krieger condition
    ck.observe(op_norm(g.p[v] - sum), {gr.vertices[v]});
  }
  rep.checks.push_back(ck.c);
  return rep;
}

RelationReport check_ep_rep(const GraphRep &g) {
  if (!g.u || !g.gsys)
    throw input_error("Exel-Pardo check requires group unitaries");
  RelationReport rep = check_toeplitz_family(g);
  const Graph &gr = *g.graph;
  const GraphSystem &gs = *g.gsys;
  const FiniteGroup &grp = gs.grp;
  Acc uu("U-unitary", g.tol), uh("U-homomorphism", g.tol),
      pv("ep-vertex", g.tol), se("ep-edge", g.tol), nd("nondegenerate", g.tol);
  Mat id = Mat::Identity(g.dim, g.dim);
  const auto &u = *g.u;
  for (std::size_t gi = 0; gi < grp.size(); ++gi) {
    uu.observe(op_norm(u[gi] * u[gi].adjoint() - id), {grp.names[gi]});
    uu.observe(op_norm(u[gi].adjoint() * u[gi] - id), {grp.names[gi]});
    for (std::size_t hi = 0; hi < grp.size(); ++hi)
      if (grp.pair_checked(gi, hi))
        uh.observe(op_norm(u[gi] * u[hi] - u[grp.mul(gi, hi)]),
                   {grp.names[gi], grp.names[hi]});
  }
  for (std::size_t gi = 0; gi < grp.size(); ++gi) {
    for (std::size_t v = 0; v < gr.vertices.size(); ++v)
      pv.observe(op_norm(u[gi] * g.p[v] - g.p[gs.act_vertex(gi, v)] * u[gi]),
                 {grp.names[gi], gr.vertices[v]});
    for (std::size_t e = 0; e < gr.edges.size(); ++e)
      se.observe(op_norm(u[gi] * g.s[e] -
                         g.s[gs.act_edge(gi, e)] * u[gs.coc_edge(gi, e)]),
                 {grp.names[gi], gr.edges[e].id});
  }
  Mat sum = Mat::Zero(g.dim, g.dim);
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) sum += g.p[v];
  nd.observe(op_norm(sum - id), {});
  rep.checks.push_back(uu.c);
  rep.checks.push_back(uh.c);
  rep.checks.push_back(pv.c);
  rep.checks.push_back(se.c);
  rep.checks.push_back(nd.c);
  return rep;
}

ZmRep regular_zm_rep(std::shared_ptr<const Category> cat,
                     std::shared_ptr<const ZMSemigroup> zm, double tol) {
  ZmRep out;
  out.cat = cat;
  out.zm = zm;
  out.dim = static_cast<int>(cat->size());
  out.tol = tol;
  out.assign.reserve(zm->elements.size());
  for (const auto &f : zm->elements) {
    Mat m = Mat::Zero(out.dim, out.dim);
    for (const auto &[x, y] : f.map) m(y, x) = 1.0;
    out.assign.push_back(std::move(m));
  }
  return out;
}

RelationReport check_zm_rep(const ZmRep &r, const IdealFamily &fam,
                            const ZmCheckOptions &opts) {
  const ZMSemigroup &zm = *r.zm;
  const Category &c = *r.cat;
  if (r.assign.size() != zm.elements.size())
    throw input_error("zigzag family does not cover the semigroup");
  RelationReport rep;
  Acc zero("zero-element", r.tol), s1("S1", r.tol), s2("S2", r.tol),
      s3("S3", r.tol), s4("S4", r.tol), s5("S5", r.tol),
      ctj("cover-to-join", r.tol);

  zero.observe(op_norm(r.assign[zm.empty_index]), {});

  const std::size_t m = zm.elements.size();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      int p = zm.product(static_cast<int>(f), static_cast<int>(g));
      if (p < 0) {
        s1.fail_note("semigroup is not closed under products", {});
        continue;
      }
      s1.observe(op_norm(r.assign[f] * r.assign[g] - r.assign[p]),
                 {std::to_string(f), std::to_string(g)});
    }
  for (std::size_t f = 0; f < m; ++f) {
    int inv = zm.inverse_of(static_cast<int>(f));
    if (inv < 0) {
      s2.fail_note("semigroup is not closed under inverses", {});
      continue;
    }
    s2.observe(op_norm(Mat(r.assign[f].adjoint()) - r.assign[inv]),
               {std::to_string(f)});
  }

  // Idempotent index by domain.
  auto idem_of = [&](const std::vector<El> &members) -> int {
    return zm.find(PartialBijection::identity_on(members));
  };
  std::vector<int> idem_by_ideal(fam.ideals.size(), -1);
  for (std::size_t i = 0; i < fam.ideals.size(); ++i) {
    if (fam.ideals[i].empty())
      idem_by_ideal[i] = zm.empty_index;
    else
      idem_by_ideal[i] = idem_of(fam.ideals[i].members);
  }

  // (S3): unions A = A_1 u ... u A_k realized inside the ideal family.
  for (std::size_t xi = 0; xi < fam.ideals.size(); ++xi) {
    if (fam.ideals[xi].empty()) continue;
    Bitset xb = fam.ideals[xi].to_bitset(c.size());
    std::vector<std::size_t> subs;
    for (std::size_t yi = 0; yi < fam.ideals.size(); ++yi)
      if (yi != xi && !fam.ideals[yi].empty() &&
          fam.ideals[yi].to_bitset(c.size()).is_subset_of(xb))
        subs.push_back(yi);
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec =
        [&](std::size_t start, std::size_t want) {
          if (cur.size() == want) {
            Bitset un(c.size());
            for (std::size_t yi : cur)
              un |= fam.ideals[yi].to_bitset(c.size());
            if (un != xb) return;
            std::vector<Mat> ps;
            std::vector<std::string> w = {"A=" +
                                          std::to_string(xi)};
            for (std::size_t yi : cur) {
              const Mat &my = r.assign[idem_by_ideal[yi]];
              ps.push_back(my.adjoint() * my);
              w.push_back(std::to_string(yi));
            }
            const Mat &mx = r.assign[idem_by_ideal[xi]];
            try {
              Mat rhs = commuting_join(ps, r.dim, r.tol);
              s3.observe(op_norm(mx.adjoint() * mx - rhs), std::move(w));
            } catch (const noncommuting_error &) {
              s3.fail_note("idempotent images do not commute", std::move(w));
            }
            return;
          }
          for (std::size_t i = start; i < subs.size(); ++i) {
            cur.push_back(subs[i]);
            rec(i + 1, want);
            cur.pop_back();
          }
        };
    for (std::size_t k = 1; k <= std::min(opts.max_union_arity, subs.size());
         ++k)
      rec(0, k);
  }

  for (std::size_t f = 0; f < m; ++f) {
    if (!zm.elements[f].is_idempotent()) continue;
    s4.observe(op_norm(r.assign[f] -
                       Mat(r.assign[f].adjoint() * r.assign[f])),
               {std::to_string(f)});
  }

  if (r.bindings.empty()) {
    s5.c.note = "elements are canonical maps; no redundant bindings supplied";
  } else {
    for (const auto &[z, mat] : r.bindings) {
      PartialBijection f = zigzag_map(c, z);
      int idx = zm.find(f);
      if (idx < 0) {
        s5.fail_note("binding outside the enumerated semigroup", {});
        continue;
      }
      s5.observe(op_norm(mat - r.assign[idx]), {"binding"});
    }
  }

  // Cover-to-join over idempotent targets.
  for (std::size_t xi = 0; xi < fam.ideals.size(); ++xi) {
    if (fam.ideals[xi].empty()) continue;
    int target = idem_by_ideal[xi];
    if (target < 0) continue;
    Bitset xb = fam.ideals[xi].to_bitset(c.size());
    std::vector<int> below;
    for (std::size_t yi = 0; yi < fam.ideals.size(); ++yi)
      if (!fam.ideals[yi].empty() &&
          fam.ideals[yi].to_bitset(c.size()).is_subset_of(xb))
        below.push_back(static_cast<int>(yi));
    std::vector<int> cur;
    std::function<void(std::size_t, std::size_t)> rec =
        [&](std::size_t start, std::size_t want) {
          if (cur.size() == want) {
            std::vector<int> cover_elems;
            for (int yi : cur) cover_elems.push_back(idem_by_ideal[yi]);
            if (!is_dm_cover(c, zm, cover_elems, target, fam)) return;
            std::vector<Mat> ps;
            std::vector<std::string> w = {"target=" + std::to_string(xi)};
            for (int yi : cur) {
              ps.push_back(r.assign[idem_by_ideal[yi]]);
              w.push_back(std::to_string(yi));
            }
            try {
              Mat joined = commuting_join(ps, r.dim, r.tol);
              ctj.observe(op_norm(r.assign[target] - joined), std::move(w));
            } catch (const noncommuting_error &) {
              ctj.fail_note("cover images do not commute", std::move(w));
            }
            return;
          }
          for (std::size_t i = start; i < below.size(); ++i) {
            cur.push_back(below[i]);
            rec(i + 1, want);
            cur.pop_back();
          }
        };
    for (std::size_t k = 1; k <= std::min(opts.max_cover_size, below.size());
         ++k)
      rec(0, k);
  }

  rep.checks = {zero.c, s1.c, s2.c, s3.c, s4.c, s5.c, ctj.c};
  return rep;
}

namespace {

Mat zigzag_monomial(const LiRep &r, const Zigzag &z) {
  Mat acc = Mat::Identity(r.dim, r.dim);
  for (const auto &[a, b] : z.pairs)
    acc = acc * r.v[a].adjoint() * r.v[b];
  return acc;
}

} // namespace

double li_l7_residual(const LiRep &r, const Zigzag &z) {
  const Category &c = *r.cat;
  PartialBijection f = zigzag_map(c, z);
  if (!f.is_idempotent())
    throw input_error("zigzag does not induce an identity map");
  RightIdeal a = domain_formula(c, z);
  int idx = r.ideals.find(a.members);
  if (idx < 0) throw input_error("ideal missing from the projection index");
  return op_norm(zigzag_monomial(r, z) - r.p[idx]);
}

RelationReport check_li_relations(const LiRep &r, const LiCheckOptions &opts) {
  const Category &c = *r.cat;
  const std::size_t n = c.size();
  if (r.v.size() != n || r.p.size() != r.ideals.ideals.size())
    throw input_error("Li family shape mismatch");
  RelationReport rep;
  Acc l1("L1", r.tol), l2("L2", r.tol), l3("L3", r.tol), l4("L4", r.tol),
      l5("L5", r.tol), l6("L6", r.tol), l7("L7", r.tol);

  auto ideal_index = [&](const std::vector<El> &members) {
    int idx = r.ideals.find(members);
    if (idx < 0)
      throw input_error("missing ideal index for a required ideal");
    return idx;
  };

  for (std::size_t a = 0; a < n; ++a) {
    RightIdeal sa = right_ideal(c, c.source(static_cast<El>(a)));
    l1.observe(op_norm(r.v[a].adjoint() * r.v[a] - r.p[ideal_index(sa.members)]),
               {c.names[a]});
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      El p = c.compose_tab[a * n + b];
      Mat prod = r.v[a] * r.v[b];
      if (c.source(a) == c.range(b) && p != kNoEl)
        l2.observe(op_norm(prod - r.v[p]), {c.names[a], c.names[b]});
      else if (c.source(a) != c.range(b))
        l2.observe(op_norm(prod), {c.names[a], c.names[b]});
    }

  for (std::size_t i = 0; i < r.ideals.ideals.size(); ++i)
    if (r.ideals.ideals[i].empty()) l3.observe(op_norm(r.p[i]), {});

  const auto &ideals = r.ideals.ideals;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      std::vector<El> inter;
      std::set_intersection(ideals[i].members.begin(), ideals[i].members.end(),
                            ideals[j].members.begin(), ideals[j].members.end(),
                            std::back_inserter(inter));
      int k = r.ideals.find(inter);
      if (k < 0) continue; // family was not intersection-closed
      l4.observe(op_norm(r.p[i] * r.p[j] - r.p[k]),
                 {std::to_string(i), std::to_string(j)});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      RightIdeal ax = left_mul(c, static_cast<El>(a), ideals[i]);
      int k = r.ideals.find(ax.members);
      if (k < 0)
        throw input_error("missing ideal index for a left translate");
      l5.observe(op_norm(r.v[a] * r.p[i] * r.v[a].adjoint() - r.p[k]),
                 {c.names[a], std::to_string(i)});
    }

  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i; j < ideals.size(); ++j) {
      std::vector<El> un;
      std::set_union(ideals[i].members.begin(), ideals[i].members.end(),
                     ideals[j].members.begin(), ideals[j].members.end(),
                     std::back_inserter(un));
      int k = r.ideals.find(un);
      if (k < 0) continue; // union lies outside the indexed family
      l6.observe(op_norm(r.p[k] - (r.p[i] + r.p[j] - r.p[i] * r.p[j])),
                 {std::to_string(i), std::to_string(j)});
    }

  // (L7) over all identity zigzags of bounded length.
  std::vector<std::vector<std::pair<El, El>>> stubs = {{}};
  for (std::size_t depth = 0; depth < opts.max_zigzag_pairs; ++depth) {
    std::vector<std::vector<std::pair<El, El>>> next;
    for (const auto &stub : stubs) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!stub.empty() &&
            c.source(stub.back().second) != c.source(static_cast<El>(a)))
          continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (c.range(static_cast<El>(a)) != c.range(static_cast<El>(b)))
            continue;
          auto z = stub;
          z.emplace_back(static_cast<El>(a), static_cast<El>(b));
          Zigzag zz{z};
          PartialBijection f = zigzag_map(c, zz);
          if (f.is_idempotent()) {
            RightIdeal dom = domain_formula(c, zz);
            int k = r.ideals.find(dom.members);
            if (k < 0)
              throw input_error("missing ideal index for an L7 witness");
            std::vector<std::string> w;
            for (auto [x, y] : z) {
              w.push_back(c.names[x]);
              w.push_back(c.names[y]);
            }
            l7.observe(op_norm(zigzag_monomial(r, zz) - r.p[k]), std::move(w));
          }
          next.push_back(std::move(z));
        }
      }
    }
    stubs = std::move(next);
  }

  rep.checks = {l1.c, l2.c, l3.c, l4.c, l5.c, l6.c, l7.c};
  return rep;
}

} // namespace catpaths
