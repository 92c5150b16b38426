#include "catpaths/io.hpp"

#include <fstream>

namespace catpaths {

namespace {

std::vector<std::string> string_list(const Json &j, const char *what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto &x : j) out.push_back(x.get<std::string>());
  return out;
}

} // namespace

Json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw input_error("parse failure in " + path + ": " + e.what());
  }
}

Category category_from_json(const Json &j) {
  if (!j.contains("elements"))
    throw input_error("category JSON needs an \"elements\" field");
  if (j.contains("path")) {
    // Horizon-truncated path category: rebuild from the generating graph so
    // the truncation semantics survive the round trip.
    auto graph = graph_from_json(j.at("path").at("graph"));
    int horizon = j.at("path").at("horizon").get<int>();
    Category c = Category::path_category(graph, horizon);
    for (const auto &nm : j.at("elements"))
      if (!c.find(nm.get<std::string>()))
        throw input_error("path annotation disagrees with element list");
    if (c.size() != j.at("elements").size())
      throw input_error("path annotation disagrees with element count");
    return c;
  }
  std::vector<std::string> elements = string_list(j.at("elements"), "elements");
  std::vector<std::string> vertices = string_list(j.at("vertices"), "vertices");
  std::unordered_map<std::string, std::string> range, source;
  for (auto it = j.at("range").begin(); it != j.at("range").end(); ++it)
    range[it.key()] = it.value().get<std::string>();
  for (auto it = j.at("source").begin(); it != j.at("source").end(); ++it)
    source[it.key()] = it.value().get<std::string>();
  std::vector<std::array<std::string, 3>> triples;
  for (const auto &t : j.at("compose")) {
    if (!t.is_array() || t.size() != 3)
      throw input_error("compose entries must be [a, b, ab] triples");
    triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                       t[2].get<std::string>()});
  }
  return Category::from_table(elements, vertices, range, source, triples);
}

Json category_to_json(const Category &c) {
  Json j;
  j["elements"] = c.names;
  Json verts = Json::array();
  for (El v : c.vertices()) verts.push_back(c.names[v]);
  j["vertices"] = verts;
  Json range = Json::object(), source = Json::object();
  for (std::size_t i = 0; i < c.size(); ++i) {
    range[c.names[i]] = c.names[c.range_of[i]];
    source[c.names[i]] = c.names[c.source_of[i]];
  }
  j["range"] = range;
  j["source"] = source;
  Json comp = Json::array();
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) {
      El p = c.compose_tab[a * c.size() + b];
      if (p != kNoEl)
        comp.push_back(Json::array({c.names[a], c.names[b], c.names[p]}));
    }
  j["compose"] = comp;
  if (c.provenance == Provenance::PathCategory && c.graph) {
    Json p;
    p["graph"] = graph_to_json(*c.graph);
    p["horizon"] = c.horizon;
    j["path"] = p;
  }
  return j;
}

std::shared_ptr<const Graph> graph_from_json(const Json &j) {
  std::vector<std::string> vertices = string_list(j.at("vertices"), "vertices");
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto &e : j.at("edges"))
    edges.emplace_back(e.at("id").get<std::string>(),
                       e.at("src").get<std::string>(),
                       e.at("dst").get<std::string>());
  return std::make_shared<Graph>(Graph::make(vertices, edges));
}

Json graph_to_json(const Graph &g) {
  Json j;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto &e : g.edges) {
    Json je;
    je["id"] = e.id;
    je["src"] = g.vertices[e.src];
    je["dst"] = g.vertices[e.dst];
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

FiniteGroup group_from_json(const Json &j) {
  std::vector<std::string> elements = string_list(j.at("elements"), "elements");
  std::vector<std::array<std::string, 3>> triples;
  for (const auto &t : j.at("cayley"))
    triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                       t[2].get<std::string>()});
  FiniteGroup g = FiniteGroup::from_table(
      elements, j.at("identity").get<std::string>(), triples);
  if (j.contains("truncation")) {
    FiniteGroup::Truncation tr;
    tr.modulus = j.at("truncation").at("modulus").get<long>();
    for (const auto &x : j.at("truncation").at("lift"))
      tr.lift.push_back(x.get<long>());
    g.truncation = tr;
  }
  return g;
}

Json group_to_json(const FiniteGroup &g) {
  Json j;
  j["elements"] = g.names;
  j["identity"] = g.names[g.identity];
  Json cay = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      cay.push_back(
          Json::array({g.names[a], g.names[b], g.names[g.mul(a, b)]}));
  j["cayley"] = cay;
  if (g.truncation) {
    Json tr;
    tr["modulus"] = g.truncation->modulus;
    tr["lift"] = g.truncation->lift;
    j["truncation"] = tr;
  }
  return j;
}

CategorySystem system_from_json(const Json &j) {
  CategorySystem s;
  s.cat = category_from_json(j.at("category"));
  s.grp = group_from_json(j.at("group"));
  const std::size_t n = s.cat.size(), m = s.grp.size();
  s.action.assign(m * n, kNoEl);
  s.cocycle.assign(m * n, -1);
  for (const auto &t : j.at("action")) {
    int g = s.grp.element(t[0].get<std::string>());
    El x = s.cat.element(t[1].get<std::string>());
    s.action[g * n + x] = s.cat.element(t[2].get<std::string>());
  }
  for (const auto &t : j.at("cocycle")) {
    int g = s.grp.element(t[0].get<std::string>());
    El x = s.cat.element(t[1].get<std::string>());
    s.cocycle[g * n + x] = s.grp.element(t[2].get<std::string>());
  }
  for (El v : s.action)
    if (v == kNoEl) throw input_error("action table is not total");
  for (int v : s.cocycle)
    if (v < 0) throw input_error("cocycle table is not total");
  return s;
}

Json system_to_json(const CategorySystem &s) {
  Json j;
  j["category"] = category_to_json(s.cat);
  j["group"] = group_to_json(s.grp);
  Json act = Json::array(), coc = Json::array();
  for (std::size_t g = 0; g < s.grp.size(); ++g)
    for (std::size_t x = 0; x < s.cat.size(); ++x) {
      act.push_back(Json::array({s.grp.names[g], s.cat.names[x],
                                 s.cat.names[s.act(g, static_cast<El>(x))]}));
      coc.push_back(Json::array({s.grp.names[g], s.cat.names[x],
                                 s.grp.names[s.coc(g, static_cast<El>(x))]}));
    }
  j["action"] = act;
  j["cocycle"] = coc;
  return j;
}

GraphSystem graph_system_from_json(const Json &j) {
  GraphSystem s;
  s.graph = graph_from_json(j.at("graph"));
  s.grp = group_from_json(j.at("group"));
  const Graph &gr = *s.graph;
  const std::size_t nv = gr.vertices.size(), ne = gr.edges.size(),
                    m = s.grp.size();
  s.vertex_action.assign(m * nv, -1);
  s.edge_action.assign(m * ne, -1);
  s.edge_cocycle.assign(m * ne, -1);
  for (const auto &t : j.at("action")) {
    int g = s.grp.element(t[0].get<std::string>());
    std::string x = t[1].get<std::string>(), y = t[2].get<std::string>();
    if (auto it = gr.vertex_index.find(x); it != gr.vertex_index.end())
      s.vertex_action[g * nv + it->second] = gr.vertex_index.at(y);
    else if (auto ie = gr.edge_index.find(x); ie != gr.edge_index.end())
      s.edge_action[g * ne + ie->second] = gr.edge_index.at(y);
    else
      throw input_error("action on unknown id " + x);
  }
  for (const auto &t : j.at("cocycle")) {
    int g = s.grp.element(t[0].get<std::string>());
    std::string x = t[1].get<std::string>();
    auto ie = gr.edge_index.find(x);
    if (ie == gr.edge_index.end())
      throw input_error("cocycle on unknown edge " + x);
    s.edge_cocycle[g * ne + ie->second] =
        s.grp.element(t[2].get<std::string>());
  }
  for (int v : s.vertex_action)
    if (v < 0) throw input_error("vertex action table is not total");
  for (int v : s.edge_action)
    if (v < 0) throw input_error("edge action table is not total");
  for (int v : s.edge_cocycle)
    if (v < 0) throw input_error("edge cocycle table is not total");
  return s;
}

Json graph_system_to_json(const GraphSystem &s) {
  Json j;
  j["graph"] = graph_to_json(*s.graph);
  j["group"] = group_to_json(s.grp);
  Json act = Json::array(), coc = Json::array();
  const Graph &gr = *s.graph;
  for (std::size_t g = 0; g < s.grp.size(); ++g) {
    for (std::size_t v = 0; v < gr.vertices.size(); ++v)
      act.push_back(Json::array({s.grp.names[g], gr.vertices[v],
                                 gr.vertices[s.act_vertex(g, v)]}));
    for (std::size_t e = 0; e < gr.edges.size(); ++e) {
      act.push_back(Json::array(
          {s.grp.names[g], gr.edges[e].id, gr.edges[s.act_edge(g, e)].id}));
      coc.push_back(Json::array({s.grp.names[g], gr.edges[e].id,
                                 s.grp.names[s.coc_edge(g, e)]}));
    }
  }
  j["action"] = act;
  j["cocycle"] = coc;
  return j;
}

Mat matrix_from_json(const Json &j) {
  if (!j.is_array() || j.empty())
    throw input_error("matrix JSON must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw input_error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto &e = j[r][c];
      if (e.is_array() && e.size() == 2)
        m(r, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
      else if (e.is_number())
        m(r, c) = std::complex<double>(e.get<double>(), 0.0);
      else
        throw input_error("matrix entries must be numbers or [re, im]");
    }
  }
  return m;
}

Json matrix_to_json(const Mat &m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

RepFamily family_from_json(std::shared_ptr<const Category> cat,
                           const Json &j) {
  RepFamily f;
  f.cat = cat;
  f.dim = j.at("dim").get<int>();
  f.tol = j.value("tol", 1e-9);
  f.assign.assign(cat->size(), Mat());
  std::vector<char> got(cat->size(), 0);
  const auto &assign = j.at("assign");
  for (auto it = assign.begin(); it != assign.end(); ++it) {
    El a = cat->element(it.key());
    f.assign[a] = matrix_from_json(it.value());
    got[a] = 1;
  }
  for (std::size_t i = 0; i < cat->size(); ++i)
    if (!got[i])
      throw input_error("family misses a matrix for " + cat->names[i]);
  return f;
}

Json family_to_json(const RepFamily &f) {
  Json j;
  j["dim"] = f.dim;
  j["tol"] = f.tol;
  Json assign = Json::object();
  for (std::size_t i = 0; i < f.cat->size(); ++i)
    assign[f.cat->names[i]] = matrix_to_json(f.assign[i]);
  j["assign"] = assign;
  return j;
}

SystemRep system_rep_from_json(std::shared_ptr<const CategorySystem> sys,
                               const Json &j) {
  SystemRep r;
  r.sys = sys;
  auto cat = std::shared_ptr<const Category>(sys, &sys->cat);
  r.t = family_from_json(cat, j.at("T"));
  r.u.assign(sys->grp.size(), Mat());
  std::vector<char> got(sys->grp.size(), 0);
  const auto &uj = j.at("U");
  for (auto it = uj.begin(); it != uj.end(); ++it) {
    int g = sys->grp.element(it.key());
    r.u[g] = matrix_from_json(it.value());
    got[g] = 1;
  }
  for (std::size_t g = 0; g < sys->grp.size(); ++g)
    if (!got[g])
      throw input_error("missing unitary for " + sys->grp.names[g]);
  return r;
}

Json system_rep_to_json(const SystemRep &r) {
  Json j;
  j["T"] = family_to_json(r.t);
  Json u = Json::object();
  for (std::size_t g = 0; g < r.sys->grp.size(); ++g)
    u[r.sys->grp.names[g]] = matrix_to_json(r.u[g]);
  j["U"] = u;
  return j;
}

GraphRep graph_rep_from_json(std::shared_ptr<const Graph> graph,
                             std::shared_ptr<const GraphSystem> gsys,
                             const Json &j) {
  GraphRep r;
  r.graph = graph;
  r.gsys = gsys;
  r.dim = j.at("dim").get<int>();
  r.tol = j.value("tol", 1e-9);
  r.p.assign(graph->vertices.size(), Mat());
  r.s.assign(graph->edges.size(), Mat());
  for (auto it = j.at("P").begin(); it != j.at("P").end(); ++it)
    r.p[graph->vertex_index.at(it.key())] = matrix_from_json(it.value());
  for (auto it = j.at("S").begin(); it != j.at("S").end(); ++it)
    r.s[graph->edge_index.at(it.key())] = matrix_from_json(it.value());
  for (const auto &m : r.p)
    if (m.size() == 0) throw input_error("missing vertex projection");
  for (const auto &m : r.s)
    if (m.size() == 0) throw input_error("missing edge operator");
  if (j.contains("U")) {
    if (!gsys) throw input_error("unitaries supplied without a graph system");
    std::vector<Mat> u(gsys->grp.size(), Mat());
    for (auto it = j.at("U").begin(); it != j.at("U").end(); ++it)
      u[gsys->grp.element(it.key())] = matrix_from_json(it.value());
    for (const auto &m : u)
      if (m.size() == 0) throw input_error("missing group unitary");
    r.u = std::move(u);
  }
  return r;
}

LiRep li_rep_from_json(std::shared_ptr<const Category> cat, const Json &j,
                       std::size_t max_zm) {
  LiRep r;
  r.cat = cat;
  r.dim = j.at("dim").get<int>();
  r.tol = j.value("tol", 1e-9);
  r.v.assign(cat->size(), Mat());
  std::vector<char> got(cat->size(), 0);
  for (auto it = j.at("v").begin(); it != j.at("v").end(); ++it) {
    El a = cat->element(it.key());
    r.v[a] = matrix_from_json(it.value());
    got[a] = 1;
  }
  for (std::size_t i = 0; i < cat->size(); ++i)
    if (!got[i])
      throw input_error("missing partial isometry for " + cat->names[i]);
  r.ideals = enumerate_ideals(*cat, max_zm);
  r.p.assign(r.ideals.ideals.size(), Mat());
  std::vector<char> gotp(r.p.size(), 0);
  for (const auto &entry : j.at("p")) {
    std::vector<El> members;
    for (const auto &nm : entry.at("members"))
      members.push_back(cat->element(nm.get<std::string>()));
    std::sort(members.begin(), members.end());
    int idx = r.ideals.find(members);
    if (idx < 0)
      throw input_error("projection given for a non-constructible ideal");
    r.p[idx] = matrix_from_json(entry.at("matrix"));
    gotp[idx] = 1;
  }
  for (std::size_t i = 0; i < r.p.size(); ++i) {
    if (gotp[i]) continue;
    if (r.ideals.ideals[i].empty())
      r.p[i] = Mat::Zero(r.dim, r.dim); // p_empty defaults to zero
    else
      throw input_error("missing projection for a constructible ideal");
  }
  return r;
}

Json li_rep_to_json(const LiRep &r) {
  Json j;
  j["dim"] = r.dim;
  j["tol"] = r.tol;
  Json v = Json::object();
  for (std::size_t i = 0; i < r.cat->size(); ++i)
    v[r.cat->names[i]] = matrix_to_json(r.v[i]);
  j["v"] = v;
  Json ps = Json::array();
  for (std::size_t i = 0; i < r.ideals.ideals.size(); ++i) {
    Json entry;
    Json members = Json::array();
    for (El a : r.ideals.ideals[i].members) members.push_back(r.cat->names[a]);
    entry["members"] = members;
    entry["matrix"] = matrix_to_json(r.p[i]);
    ps.push_back(entry);
  }
  j["p"] = ps;
  return j;
}

ZmRep zm_rep_from_json(std::shared_ptr<const Category> cat,
                       std::shared_ptr<const ZMSemigroup> zm, const Json &j) {
  ZmRep r;
  r.cat = cat;
  r.zm = zm;
  r.dim = j.at("dim").get<int>();
  r.tol = j.value("tol", 1e-9);
  r.assign.assign(zm->elements.size(), Mat());
  std::vector<char> got(zm->elements.size(), 0);
  for (const auto &entry : j.at("assign")) {
    const auto &zj = entry.at("zigzag");
    Zigzag z;
    for (std::size_t i = 0; i + 1 < zj.size(); i += 2)
      z.pairs.emplace_back(cat->element(zj[i].get<std::string>()),
                           cat->element(zj[i + 1].get<std::string>()));
    PartialBijection f = zigzag_map(*cat, z);
    int idx = zm->find(f);
    if (idx < 0) throw input_error("zigzag outside the enumerated semigroup");
    Mat m = matrix_from_json(entry.at("matrix"));
    if (got[idx])
      r.bindings.emplace_back(z, m); // redundant binding, checked by (S5)
    else {
      r.assign[idx] = m;
      got[idx] = 1;
    }
  }
  if (!got[zm->empty_index]) {
    r.assign[zm->empty_index] = Mat::Zero(r.dim, r.dim);
    got[zm->empty_index] = 1;
  }
  for (std::size_t i = 0; i < got.size(); ++i)
    if (!got[i]) throw input_error("zigzag family misses a semigroup element");
  return r;
}

Json relation_report_to_json(const RelationReport &r) {
  Json arr = Json::array();
  for (const auto &c : r.checks) {
    Json jc;
    jc["relation"] = c.relation;
    jc["pass"] = c.pass;
    jc["residual"] = c.residual;
    jc["witness"] = c.witness;
    if (!c.note.empty()) jc["note"] = c.note;
    arr.push_back(jc);
  }
  return arr;
}

Json validation_report_to_json(const ValidationReport &r) {
  Json arr = Json::array();
  for (const auto &v : r.violations) {
    Json jv;
    jv["axiom"] = v.axiom;
    jv["witness"] = v.witness;
    jv["detail"] = v.detail;
    arr.push_back(jv);
  }
  return arr;
}

Json system_report_to_json(const SystemReport &r) {
  Json arr = Json::array();
  for (const auto &i : r.items) {
    Json ji;
    ji["condition"] = i.condition;
    ji["pass"] = i.pass;
    ji["witness"] = i.witness;
    arr.push_back(ji);
  }
  return arr;
}

Json ideal_family_to_json(const Category &cat, const IdealFamily &fam) {
  Json j;
  Json ideals = Json::array();
  std::size_t nonempty = 0;
  for (const auto &id : fam.ideals) {
    Json members = Json::array();
    for (El a : id.members) members.push_back(cat.names[a]);
    ideals.push_back(members);
    if (!id.empty()) ++nonempty;
  }
  j["ideals"] = ideals;
  j["nonempty_count"] = nonempty;
  j["closed_under_intersection"] = fam.closed_under_intersection;
  return j;
}

Json zm_to_json(const Category &cat, const ZMSemigroup &zm) {
  Json j;
  j["size"] = zm.elements.size();
  Json elems = Json::array();
  for (const auto &f : zm.elements) {
    Json je;
    Json dom = Json::array(), map = Json::array();
    for (const auto &[x, y] : f.map) {
      dom.push_back(cat.names[x]);
      map.push_back(Json::array({cat.names[x], cat.names[y]}));
    }
    je["dom"] = dom;
    je["map"] = map;
    elems.push_back(je);
  }
  j["elements"] = elems;
  return j;
}

} // namespace catpaths
