#include "catpaths/group.hpp"

#include <array>

namespace catpaths {

int FiniteGroup::element(const std::string &id) const {
  auto it = index.find(id);
  if (it == index.end()) throw input_error("unknown group element: " + id);
  return it->second;
}

FiniteGroup FiniteGroup::from_table(
    const std::vector<std::string> &elements, const std::string &identity,
    const std::vector<std::array<std::string, 3>> &cayley_triples) {
  FiniteGroup g;
  g.names = elements;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!g.index.emplace(elements[i], static_cast<int>(i)).second)
      throw input_error("duplicate group element: " + elements[i]);
  g.identity = g.element(identity);
  const std::size_t n = g.size();
  g.cayley.assign(n * n, -1);
  for (const auto &t : cayley_triples)
    g.cayley[g.element(t[0]) * n + g.element(t[1])] = g.element(t[2]);
  for (std::size_t i = 0; i < n * n; ++i)
    if (g.cayley[i] == -1) throw input_error("incomplete Cayley table");
  g.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.cayley[a * n + b] == g.identity &&
          g.cayley[b * n + a] == g.identity)
        g.inverse[a] = static_cast<int>(b);
  for (std::size_t a = 0; a < n; ++a)
    if (g.inverse[a] == -1)
      throw input_error("group element without inverse: " + g.names[a]);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int m, const std::string &prefix) {
  if (m < 1) throw input_error("cyclic group order must be positive");
  FiniteGroup g;
  for (int i = 0; i < m; ++i) {
    g.names.push_back(i == 0 ? "1" : prefix + std::to_string(i));
    g.index.emplace(g.names.back(), i);
  }
  g.identity = 0;
  g.cayley.resize(m * m);
  g.inverse.resize(m);
  for (int a = 0; a < m; ++a) {
    g.inverse[a] = (m - a) % m;
    for (int b = 0; b < m; ++b) g.cayley[a * m + b] = (a + b) % m;
  }
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} in one-line notation.
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                    {1, 0, 2},
                                                    {0, 2, 1},
                                                    {2, 1, 0},
                                                    {1, 2, 0},
                                                    {2, 0, 1}}};
  FiniteGroup g;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::string nm = "p";
    for (int v : perms[i]) nm += std::to_string(v);
    g.names.push_back(nm);
    g.index.emplace(nm, static_cast<int>(i));
  }
  g.identity = 0;
  const int n = 6;
  g.cayley.assign(n * n, -1);
  auto compose = [&](int a, int b) {
    std::array<int, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
    for (int k = 0; k < n; ++k)
      if (perms[k] == r) return k;
    return -1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.cayley[a * n + b] = compose(a, b);
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.cayley[a * n + b] == 0 && g.cayley[b * n + a] == 0) g.inverse[a] = b;
  return g;
}

GroupReport validate_group(const FiniteGroup &g) {
  GroupReport rep;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(g.identity, static_cast<int>(a)) != static_cast<int>(a) ||
        g.mul(static_cast<int>(a), g.identity) != static_cast<int>(a))
      rep.problems.push_back("identity law fails at " + g.names[a]);
    int b = g.inv(static_cast<int>(a));
    if (g.mul(static_cast<int>(a), b) != g.identity ||
        g.mul(b, static_cast<int>(a)) != g.identity)
      rep.problems.push_back("inverse inconsistent at " + g.names[a]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), static_cast<int>(c)) !=
            g.mul(static_cast<int>(a), g.mul(b, c))) {
          rep.problems.push_back("associativity fails at (" + g.names[a] +
                                 "," + g.names[b] + "," + g.names[c] + ")");
          return rep;
        }
  return rep;
}

} // namespace catpaths
