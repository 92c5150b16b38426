#ifndef CATPATHS_REPCHECK_HPP
#define CATPATHS_REPCHECK_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catpaths/category.hpp"
#include "catpaths/matrix.hpp"
#include "catpaths/system.hpp"
#include "catpaths/zigzag.hpp"

namespace catpaths {

struct RelationCheck {
  std::string relation;
  bool pass = true;
  double residual = 0.0; // worst operator-norm residual observed
  std::vector<std::string> witness;
  std::string note;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto &c : checks)
      if (!c.pass) return false;
    return true;
  }
  const RelationCheck *find(const std::string &relation) const {
    for (const auto &c : checks)
      if (c.relation == relation) return &c;
    return nullptr;
  }
};

// A family of matrices indexed by category elements.
struct RepFamily {
  std::shared_ptr<const Category> cat;
  std::vector<Mat> assign; // per element
  int dim = 0;
  double tol = 1e-9;

  const Mat &at(El a) const { return assign[a]; }
};

struct SystemRep {
  std::shared_ptr<const CategorySystem> sys;
  RepFamily t;
  std::vector<Mat> u; // per group element
};

struct GraphRep {
  std::shared_ptr<const Graph> graph;
  std::vector<Mat> p; // per vertex
  std::vector<Mat> s; // per edge
  std::optional<std::vector<Mat>> u;      // per group element
  std::shared_ptr<const GraphSystem> gsys; // set when u is
  int dim = 0;
  double tol = 1e-9;
};

struct ZmRep {
  std::shared_ptr<const Category> cat;
  std::shared_ptr<const ZMSemigroup> zm;
  std::vector<Mat> assign; // per semigroup element
  // Optional redundant bindings; equal zigzag maps must get equal matrices.
  std::vector<std::pair<Zigzag, Mat>> bindings;
  int dim = 0;
  double tol = 1e-9;
};

struct LiRep {
  std::shared_ptr<const Category> cat;
  std::vector<Mat> v; // per element
  IdealFamily ideals;
  std::vector<Mat> p; // parallel to ideals
  int dim = 0;
  double tol = 1e-9;
};

// The three defining conditions of a representation: initial projections,
// multiplicativity, and the join condition on range projections.
RelationReport check_representation(const RepFamily &t);

// Exel's (Exe1)-(Exe5) plus the join condition (Exe6).
RelationReport check_exel_conditions(const RepFamily &t);

// Condition (4) over all minimal finite exhaustive sets, plus nondegeneracy.
RelationReport check_covariant(const RepFamily &t);
double nondegeneracy_residual(const RepFamily &t);
bool check_nondegenerate(const RepFamily &t);

struct TightOptions {
  std::size_t max_f = 2;
  std::size_t max_k = 2;
  std::size_t max_h = 4;
};
// Tightness: primary verdict via covariant & nondegenerate, a bounded direct
// check of the defining equation, and an agreement row.
RelationReport check_tight(const RepFamily &t, const TightOptions &opts);

// Unitarity, homomorphism property and U_g T_a = T_{ga} U_{phi(g,a)}.
RelationReport validate_system_rep(const SystemRep &r);

// R_{(a,g)} = T_a U_g over the Zappa-Szep product; throws input_error when
// the system representation itself is invalid.
RepFamily combine(const SystemRep &r, std::shared_ptr<const Category> product);
SystemRep split(std::shared_ptr<const CategorySystem> sys,
                std::shared_ptr<const Category> product, const RepFamily &r);

RepFamily regular_representation(std::shared_ptr<const Category> cat,
                                 double tol = 1e-9);

RelationReport check_toeplitz_family(const GraphRep &g);
RelationReport check_ck_family(const GraphRep &g);
RelationReport check_ep_rep(const GraphRep &g);

struct ZmCheckOptions {
  std::size_t max_union_arity = 4;
  std::size_t max_cover_size = 4;
};
RelationReport check_zm_rep(const ZmRep &r, const IdealFamily &fam,
                            const ZmCheckOptions &opts = {});

// Matrices of the partial bijections acting on l2(C).
ZmRep regular_zm_rep(std::shared_ptr<const Category> cat,
                     std::shared_ptr<const ZMSemigroup> zm,
                     double tol = 1e-9);

struct LiCheckOptions {
  std::size_t max_zigzag_pairs = 2;
};
RelationReport check_li_relations(const LiRep &r,
                                  const LiCheckOptions &opts = {});
// Residual of the single (L7) instance for one zigzag.
double li_l7_residual(const LiRep &r, const Zigzag &z);

} // namespace catpaths

#endif
