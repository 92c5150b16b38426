#ifndef CATPATHS_FIXTURES_HPP
#define CATPATHS_FIXTURES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "catpaths/repcheck.hpp"

namespace catpaths {

// A named desk-scale object with everything the checkers need, plus the
// verdicts the construction is supposed to produce. Tests recompute the
// verdicts; nothing is trusted blindly.
struct NamedFixture {
  std::string name;
  std::shared_ptr<const Category> category;
  std::shared_ptr<const Graph> graph;
  std::shared_ptr<const CategorySystem> system;
  std::shared_ptr<const GraphSystem> graph_system;
  std::optional<RepFamily> rep;         // matrix family over the category
  std::optional<SystemRep> system_rep;  // (T, U) over the system
  std::optional<LiRep> li_rep;
  std::map<std::string, bool> expected_verdicts;
};

// Known names: ex3_9, thm7_9_4, thm7_9_5 (optional ":n"), adding_machine
// (optional ":k"), trivial_cocycle_demo, dihedral_demo.
NamedFixture build_fixture(const std::string &name);

std::vector<std::string> fixture_names();

// Dimension-parameterized variant of the ex3_9 family (every summand gets
// dimension d).
RepFamily ex3_9_family(std::shared_ptr<const Category> cat, int d,
                       double tol = 1e-9);

} // namespace catpaths

#endif
