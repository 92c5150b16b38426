#ifndef CATPATHS_ERRORS_HPP
#define CATPATHS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catpaths {

// Malformed or structurally inconsistent input (bad JSON, unknown ids,
// non-square tables, invalid preconditions).
struct input_error : std::runtime_error {
  explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A result would depend on paths longer than the configured horizon of a
// truncated path category.
struct horizon_error : std::runtime_error {
  explicit horizon_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A closure or enumeration exceeded its configured size cap.
struct size_limit_error : std::runtime_error {
  explicit size_limit_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Join of projections requested for a non-commuting family.
struct noncommuting_error : std::runtime_error {
  noncommuting_error(const std::string &msg, int lhs, int rhs, double norm)
      : std::runtime_error(msg), lhs_index(lhs), rhs_index(rhs),
        commutator_norm(norm) {}
  int lhs_index;
  int rhs_index;
  double commutator_norm;
};

} // namespace catpaths

#endif
