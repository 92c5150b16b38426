#ifndef CATPATHS_GROUP_HPP
#define CATPATHS_GROUP_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catpaths/errors.hpp"

namespace catpaths {

struct FiniteGroup {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  int identity = 0;
  std::vector<int> cayley; // n*n
  std::vector<int> inverse;

  // Set when the group stands in for an infinite group modulo m (the adding
  // machine's integers). Identities quantified over pairs (g,h) are then only
  // required where lift(g)+lift(h) < modulus, i.e. where no wrap occurs.
  struct Truncation {
    std::vector<long> lift;
    long modulus = 0;
  };
  std::optional<Truncation> truncation;

  std::size_t size() const { return names.size(); }
  int mul(int g, int h) const { return cayley[g * size() + h]; }
  int inv(int g) const { return inverse[g]; }
  int element(const std::string &id) const;

  // True when the pair (g,h) is inside the trusted range of a truncated
  // group; always true for honest groups.
  bool pair_checked(int g, int h) const {
    if (!truncation) return true;
    return truncation->lift[g] + truncation->lift[h] < truncation->modulus;
  }

  static FiniteGroup from_table(
      const std::vector<std::string> &elements, const std::string &identity,
      const std::vector<std::array<std::string, 3>> &cayley_triples);
  static FiniteGroup cyclic(int m, const std::string &prefix = "g");
  static FiniteGroup symmetric3();
};

struct GroupReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};
GroupReport validate_group(const FiniteGroup &g);

} // namespace catpaths

#endif
