#include "catpaths/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace catpaths {

namespace {

const char *kUsage = R"(usage: catpaths <subcommand> [inputs] [flags]

subcommands:
  validate <category.json>             category axioms with witnesses
  cancellative <category.json>         left cancellation check
  joins <category.json> [--pair a,b]   joins alpha v beta
  align <category.json>                finite / single alignment
  exhaustive <category.json> --vertex v [--set a,b | --max-size N]
  system-validate <system.json>        category-system conditions
  zs-product <system.json>             Zappa-Szep product category
  zs-restricted <system.json>          restricted product category
  ep-extend <graph-system.json>        extend an edge system to paths
  zm <category.json>                   zigzag inverse semigroup
  ideals <category.json>               constructible right ideals
  covers <category.json> --target a,b --set x,y
  foundations <category.json> --vertex v [--max-size N]
  rep-check <category.json> <family.json>
  exel-check <category.json> <family.json>
  covariant <category.json> <family.json>
  tight <category.json> <family.json>
  toeplitz <graph.json> <family.json>
  ck <graph.json> <family.json>
  ep-rep <graph-system.json> <family.json>
  li-check <category.json> <li-family.json>
  zm-rep <category.json> <zm-family.json>
  regular <category.json> [--check]
  combine <system.json> <system-rep.json>
  split <system.json> <family.json>
  examples export <name> [--dir D] | examples run <name> --check <which>

flags: --tol X --horizon N --max-zm N --bounds F,K,H --out FILE
fixture names: ex3_9 thm7_9_4 thm7_9_5[:n] adding_machine[:k]
               trivial_cocycle_demo dihedral_demo
)";

struct Args {
  std::vector<std::string> positional;
  std::unordered_map<std::string, std::string> flags;
  bool has(const std::string &f) const { return flags.count(f) > 0; }
  std::string get(const std::string &f, const std::string &dflt = "") const {
    auto it = flags.find(f);
    return it == flags.end() ? dflt : it->second;
  }
};

Args parse_args(const std::vector<std::string> &argv) {
  Args a;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const std::string &s = argv[i];
    if (s.rfind("--", 0) == 0) {
      std::string key = s.substr(2), val = "true";
      if (auto eq = key.find('='); eq != std::string::npos) {
        val = key.substr(eq + 1);
        key = key.substr(0, eq);
      } else if (i + 1 < argv.size() && argv[i + 1].rfind("--", 0) != 0 &&
                 (key == "tol" || key == "horizon" || key == "max-zm" ||
                  key == "bounds" || key == "out" || key == "pair" ||
                  key == "family" || key == "vertex" || key == "set" ||
                  key == "target" || key == "max-size" || key == "dir" ||
                  key == "check")) {
        val = argv[++i];
      }
      a.flags[key] = val;
    } else {
      a.positional.push_back(s);
    }
  }
  return a;
}

RunConfig config_from(const Args &a) {
  RunConfig cfg;
  if (const char *env = std::getenv("CATPATHS_TOL")) cfg.tol = std::stod(env);
  if (a.has("tol")) cfg.tol = std::stod(a.get("tol"));
  if (a.has("horizon")) cfg.horizon = std::stoi(a.get("horizon"));
  if (a.has("max-zm")) cfg.max_zm = std::stoul(a.get("max-zm"));
  if (a.has("bounds")) {
    std::string b = a.get("bounds");
    std::size_t c1 = b.find(','), c2 = b.rfind(',');
    if (c1 == std::string::npos || c2 == c1)
      throw input_error("--bounds wants F,K,H");
    cfg.bound_f = std::stoul(b.substr(0, c1));
    cfg.bound_k = std::stoul(b.substr(c1 + 1, c2 - c1 - 1));
    cfg.bound_h = std::stoul(b.substr(c2 + 1));
  }
  if (cfg.tol <= 0) throw input_error("tolerance must be positive");
  if (cfg.horizon < 1) throw input_error("horizon must be positive");
  cfg.out = a.get("out");
  return cfg;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<El> elements_of(const Category &c,
                            const std::vector<std::string> &names) {
  std::vector<El> out;
  for (const auto &nm : names) out.push_back(c.element(nm));
  return out;
}

Json names_of(const Category &c, const std::vector<El> &els) {
  Json arr = Json::array();
  for (El a : els) arr.push_back(c.names[a]);
  return arr;
}

int exit_for(const RelationReport &rep) { return rep.all_pass() ? 0 : 1; }

RepFamily load_family(const Args &args, const RunConfig &cfg,
                      std::shared_ptr<const Category> cat,
                      const std::string &path) {
  Json j = load_json_file(path);
  RepFamily f = family_from_json(cat, j);
  // Tolerance priority: --tol flag, then the family's own field, then the
  // configured default (which CATPATHS_TOL may override).
  if (args.has("tol") || !j.contains("tol")) f.tol = cfg.tol;
  return f;
}

CliResult run_examples(const Args &args, const RunConfig &cfg) {
  CliResult res;
  if (args.positional.size() < 3)
    throw input_error("examples wants: export|run <name>");
  const std::string &mode = args.positional[1];
  const std::string &name = args.positional[2];
  NamedFixture fx = build_fixture(name);

  if (mode == "export") {
    std::string dir = args.get("dir", ".");
    auto write = [&](const std::string &suffix, const Json &j) {
      std::string path = dir + "/" + fx.name + "." + suffix + ".json";
      std::ofstream out(path);
      if (!out) throw input_error("cannot write " + path);
      out << j.dump(2) << "\n";
      res.report["written"].push_back(path);
    };
    res.report["command"] = "examples export";
    res.report["written"] = Json::array();
    if (fx.category) write("category", category_to_json(*fx.category));
    if (fx.graph) write("graph", graph_to_json(*fx.graph));
    if (fx.system) write("system", system_to_json(*fx.system));
    if (fx.graph_system)
      write("graph-system", graph_system_to_json(*fx.graph_system));
    if (fx.rep) write("family", family_to_json(*fx.rep));
    if (fx.system_rep) write("system-rep", system_rep_to_json(*fx.system_rep));
    if (fx.li_rep) write("li-family", li_rep_to_json(*fx.li_rep));
    res.report["ok"] = true;
    return res;
  }

  if (mode != "run") throw input_error("examples wants export or run");
  std::string which = args.get("check", "all");
  res.report["command"] = "examples run";
  res.report["fixture"] = fx.name;
  bool ok = true;
  auto add = [&](const std::string &tag, const RelationReport &rep) {
    res.report[tag] = relation_report_to_json(rep);
    ok = ok && rep.all_pass();
  };
  if (fx.rep) {
    if (which == "rep" || which == "all") add("rep", check_representation(*fx.rep));
    if (which == "exel" || which == "all")
      add("exel", check_exel_conditions(*fx.rep));
    if (which == "covariant" || which == "all")
      add("covariant", check_covariant(*fx.rep));
    if (which == "tight" || which == "all")
      add("tight",
          check_tight(*fx.rep, TightOptions{cfg.bound_f, cfg.bound_k,
                                            cfg.bound_h}));
  }
  if (fx.li_rep && (which == "li" || which == "all"))
    add("li", check_li_relations(*fx.li_rep));
  if (fx.system_rep && (which == "sysrep" || which == "all"))
    add("sysrep", validate_system_rep(*fx.system_rep));
  if (fx.system && (which == "system" || which == "all")) {
    SystemReport sr = validate_system(*fx.system);
    res.report["system"] = system_report_to_json(sr);
    ok = ok && sr.ok();
  }
  res.report["ok"] = ok;
  res.exit_code = ok ? 0 : 1;
  return res;
}

CliResult dispatch_inner(const std::vector<std::string> &argv) {
  if (argv.empty()) {
    CliResult res;
    res.exit_code = 2;
    res.report["error"] = "missing subcommand";
    res.report["usage"] = kUsage;
    return res;
  }
  Args args = parse_args(argv);
  RunConfig cfg = config_from(args);
  const std::string &cmd = args.positional[0];
  CliResult res;
  res.report["command"] = cmd;

  auto need_file = [&](std::size_t i) -> std::string {
    if (args.positional.size() <= i)
      throw input_error(cmd + " is missing an input file");
    return args.positional[i];
  };
  auto load_cat = [&](std::size_t i) {
    return std::make_shared<const Category>(
        category_from_json(load_json_file(need_file(i))));
  };

  if (cmd == "validate") {
    auto cat = load_cat(1);
    ValidationReport rep = validate_category(*cat);
    res.report["violations"] = validation_report_to_json(rep);
    res.report["ok"] = rep.ok();
    res.exit_code = rep.ok() ? 0 : 1;
  } else if (cmd == "cancellative") {
    auto cat = load_cat(1);
    CancellationResult r = check_left_cancellative(*cat);
    res.report["left_cancellative"] = r.left_cancellative;
    if (r.witness)
      res.report["witness"] =
          names_of(*cat, {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
    res.report["ok"] = r.left_cancellative;
    res.exit_code = r.left_cancellative ? 0 : 1;
  } else if (cmd == "joins") {
    auto cat = load_cat(1);
    if (args.has("pair")) {
      auto p = split_list(args.get("pair"));
      if (p.size() != 2) throw input_error("--pair wants a,b");
      IndependentSet j = join(*cat, cat->element(p[0]), cat->element(p[1]));
      res.report["join"] = names_of(*cat, j.members);
    } else if (args.has("family")) {
      IndependentSet j =
          join_family(*cat, elements_of(*cat, split_list(args.get("family"))));
      res.report["join"] = names_of(*cat, j.members);
    } else {
      Json all = Json::array();
      for (std::size_t a = 0; a < cat->size(); ++a)
        for (std::size_t b = a; b < cat->size(); ++b) {
          IndependentSet j =
              join(*cat, static_cast<El>(a), static_cast<El>(b));
          Json e;
          e["pair"] = Json::array({cat->names[a], cat->names[b]});
          e["join"] = names_of(*cat, j.members);
          all.push_back(e);
        }
      res.report["joins"] = all;
    }
    res.report["ok"] = true;
  } else if (cmd == "align") {
    auto cat = load_cat(1);
    AlignmentResult r = check_alignment(*cat);
    res.report["finitely_aligned"] = r.finitely_aligned;
    res.report["singly_aligned"] = r.singly_aligned;
    if (r.non_single_witness)
      res.report["witness"] = Json::array(
          {cat->names[r.non_single_witness->first],
           cat->names[r.non_single_witness->second]});
    if (args.has("joins")) {
      Json all = Json::array();
      for (std::size_t a = 0; a < cat->size(); ++a)
        for (std::size_t b = a; b < cat->size(); ++b) {
          Json e;
          e["pair"] = Json::array({cat->names[a], cat->names[b]});
          e["join"] = names_of(
              *cat, join(*cat, static_cast<El>(a), static_cast<El>(b)).members);
          all.push_back(e);
        }
      res.report["joins"] = all;
    }
    res.report["ok"] = true;
  } else if (cmd == "exhaustive") {
    auto cat = load_cat(1);
    if (!args.has("vertex")) throw input_error("exhaustive wants --vertex");
    El v = cat->element(args.get("vertex"));
    if (args.has("set")) {
      std::vector<El> f = elements_of(*cat, split_list(args.get("set")));
      res.report["exhaustive"] = is_exhaustive(*cat, f, v);
    } else {
      std::size_t cap = args.has("max-size")
                            ? std::stoul(args.get("max-size"))
                            : cat->fiber(v).size();
      Json sets = Json::array();
      for (const auto &f : minimal_exhaustive_sets(*cat, v, cap))
        sets.push_back(names_of(*cat, f));
      res.report["minimal_exhaustive_sets"] = sets;
    }
    res.report["ok"] = true;
  } else if (cmd == "system-validate") {
    CategorySystem sys = system_from_json(load_json_file(need_file(1)));
    SystemReport rep = validate_system(sys);
    res.report["conditions"] = system_report_to_json(rep);
    res.report["ok"] = rep.ok();
    res.exit_code = rep.ok() ? 0 : 1;
  } else if (cmd == "zs-product" || cmd == "zs-restricted") {
    CategorySystem sys = system_from_json(load_json_file(need_file(1)));
    Category d =
        cmd == "zs-product" ? zs_product(sys) : restricted_zs_product(sys);
    res.report["category"] = category_to_json(d);
    res.report["ok"] = true;
  } else if (cmd == "ep-extend") {
    GraphSystem gs = graph_system_from_json(load_json_file(need_file(1)));
    CategorySystem sys = ep_extend(gs, cfg.horizon);
    res.report["system"] = system_to_json(sys);
    res.report["ok"] = true;
  } else if (cmd == "zm") {
    auto cat = load_cat(1);
    ZMSemigroup zm = enumerate_zm(*cat, cfg.max_zm);
    res.report.update(zm_to_json(*cat, zm));
    res.report["complete"] = zm.complete;
    res.report["ok"] = zm.complete;
    if (!zm.complete) {
      res.report["error"] = "size limit hit; partial semigroup reported";
      res.exit_code = 2;
    }
  } else if (cmd == "ideals") {
    auto cat = load_cat(1);
    IdealFamily fam = enumerate_ideals(*cat, cfg.max_zm);
    res.report.update(ideal_family_to_json(*cat, fam));
    if (args.has("unions")) {
      Json uj = Json::array();
      for (const auto &u : enumerate_union_ideals(fam, cfg.max_zm))
        uj.push_back(names_of(*cat, u));
      res.report["union_ideals"] = uj;
    }
    res.report["ok"] = true;
  } else if (cmd == "covers") {
    auto cat = load_cat(1);
    if (!args.has("target") || !args.has("set"))
      throw input_error("covers wants --target and --set");
    std::vector<El> l = elements_of(*cat, split_list(args.get("target")));
    std::vector<El> h = elements_of(*cat, split_list(args.get("set")));
    res.report["cover"] = is_cover(*cat, h, l);
    res.report["ok"] = true;
  } else if (cmd == "foundations") {
    auto cat = load_cat(1);
    if (!args.has("vertex")) throw input_error("foundations wants --vertex");
    El v = cat->element(args.get("vertex"));
    IdealFamily fam = enumerate_ideals(*cat, cfg.max_zm);
    std::size_t cap =
        args.has("max-size") ? std::stoul(args.get("max-size")) : 4;
    Json sets = Json::array();
    for (const auto &f : foundation_sets(*cat, fam, v, cap)) {
      Json fs = Json::array();
      for (int idx : f) fs.push_back(names_of(*cat, fam.ideals[idx].members));
      sets.push_back(fs);
    }
    res.report["foundation_sets"] = sets;
    res.report["ok"] = true;
  } else if (cmd == "rep-check" || cmd == "exel-check" || cmd == "covariant" ||
             cmd == "tight") {
    auto cat = load_cat(1);
    RepFamily fam = load_family(args, cfg, cat, need_file(2));
    RelationReport rep;
    if (cmd == "rep-check") rep = check_representation(fam);
    else if (cmd == "exel-check") rep = check_exel_conditions(fam);
    else if (cmd == "covariant") rep = check_covariant(fam);
    else
      rep = check_tight(fam,
                        TightOptions{cfg.bound_f, cfg.bound_k, cfg.bound_h});
    res.report["relations"] = relation_report_to_json(rep);
    res.report["ok"] = rep.all_pass();
    res.exit_code = exit_for(rep);
  } else if (cmd == "toeplitz" || cmd == "ck") {
    auto graph = graph_from_json(load_json_file(need_file(1)));
    GraphRep g = graph_rep_from_json(graph, nullptr,
                                     load_json_file(need_file(2)));
    RelationReport rep =
        cmd == "toeplitz" ? check_toeplitz_family(g) : check_ck_family(g);
    res.report["relations"] = relation_report_to_json(rep);
    res.report["ok"] = rep.all_pass();
    res.exit_code = exit_for(rep);
  } else if (cmd == "ep-rep") {
    auto gs = std::make_shared<const GraphSystem>(
        graph_system_from_json(load_json_file(need_file(1))));
    GraphRep g =
        graph_rep_from_json(gs->graph, gs, load_json_file(need_file(2)));
    RelationReport rep = check_ep_rep(g);
    res.report["relations"] = relation_report_to_json(rep);
    res.report["ok"] = rep.all_pass();
    res.exit_code = exit_for(rep);
  } else if (cmd == "li-check") {
    auto cat = load_cat(1);
    LiRep r = li_rep_from_json(cat, load_json_file(need_file(2)), cfg.max_zm);
    RelationReport rep = check_li_relations(r);
    res.report["relations"] = relation_report_to_json(rep);
    res.report["ok"] = rep.all_pass();
    res.exit_code = exit_for(rep);
  } else if (cmd == "zm-rep") {
    auto cat = load_cat(1);
    auto zm = std::make_shared<const ZMSemigroup>(
        enumerate_zm(*cat, cfg.max_zm));
    ZmRep r = zm_rep_from_json(cat, zm, load_json_file(need_file(2)));
    IdealFamily fam = enumerate_ideals(*cat, cfg.max_zm);
    RelationReport rep = check_zm_rep(r, fam);
    res.report["relations"] = relation_report_to_json(rep);
    res.report["ok"] = rep.all_pass();
    res.exit_code = exit_for(rep);
  } else if (cmd == "regular") {
    auto cat = load_cat(1);
    RepFamily fam = regular_representation(cat, cfg.tol);
    res.report["family"] = family_to_json(fam);
    if (args.has("check")) {
      RelationReport rep = check_representation(fam);
      res.report["relations"] = relation_report_to_json(rep);
      res.report["ok"] = rep.all_pass();
      res.exit_code = exit_for(rep);
    } else {
      res.report["ok"] = true;
    }
  } else if (cmd == "combine") {
    auto sys = std::make_shared<const CategorySystem>(
        system_from_json(load_json_file(need_file(1))));
    SystemRep r = system_rep_from_json(sys, load_json_file(need_file(2)));
    RelationReport pre = validate_system_rep(r);
    res.report["relations"] = relation_report_to_json(pre);
    if (!pre.all_pass()) {
      res.report["ok"] = false;
      res.exit_code = 1;
    } else {
      auto product = std::make_shared<const Category>(zs_product(*sys));
      RepFamily d = combine(r, product);
      res.report["family"] = family_to_json(d);
      res.report["ok"] = true;
    }
  } else if (cmd == "split") {
    auto sys = std::make_shared<const CategorySystem>(
        system_from_json(load_json_file(need_file(1))));
    auto product = std::make_shared<const Category>(zs_product(*sys));
    RepFamily d = family_from_json(product, load_json_file(need_file(2)));
    SystemRep r = split(sys, product, d);
    res.report.update(system_rep_to_json(r));
    res.report["ok"] = true;
  } else if (cmd == "examples") {
    return run_examples(args, cfg);
  } else {
    res.exit_code = 2;
    res.report["error"] = "unknown subcommand: " + cmd;
    res.report["usage"] = kUsage;
  }
  return res;
}

} // namespace

CliResult dispatch(const std::vector<std::string> &args) {
  try {
    return dispatch_inner(args);
  } catch (const input_error &e) {
    CliResult res;
    res.exit_code = 2;
    res.report["error"] = e.what();
    return res;
  } catch (const horizon_error &e) {
    CliResult res;
    res.exit_code = 2;
    res.report["error"] = std::string("horizon: ") + e.what();
    return res;
  } catch (const size_limit_error &e) {
    CliResult res;
    res.exit_code = 2;
    res.report["error"] = std::string("size limit: ") + e.what();
    return res;
  } catch (const std::exception &e) {
    CliResult res;
    res.exit_code = 2;
    res.report["error"] = e.what();
    return res;
  }
}

int run_cli(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out;
  CliResult res = dispatch(args);
  std::string text = res.report.dump(2) + "\n";
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--out") out = args[i + 1];
  for (const auto &a : args)
    if (a.rfind("--out=", 0) == 0) out = a.substr(6);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return res.exit_code;
}

} // namespace catpaths
