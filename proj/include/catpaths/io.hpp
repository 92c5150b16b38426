#ifndef CATPATHS_IO_HPP
#define CATPATHS_IO_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "catpaths/fixtures.hpp"
#include "catpaths/repcheck.hpp"

namespace catpaths {

using Json = nlohmann::ordered_json;

Category category_from_json(const Json &j);
Json category_to_json(const Category &c);

std::shared_ptr<const Graph> graph_from_json(const Json &j);
Json graph_to_json(const Graph &g);

FiniteGroup group_from_json(const Json &j);
Json group_to_json(const FiniteGroup &g);

CategorySystem system_from_json(const Json &j);
Json system_to_json(const CategorySystem &s);
GraphSystem graph_system_from_json(const Json &j);
Json graph_system_to_json(const GraphSystem &s);

Mat matrix_from_json(const Json &j);
Json matrix_to_json(const Mat &m);

RepFamily family_from_json(std::shared_ptr<const Category> cat, const Json &j);
Json family_to_json(const RepFamily &f);

SystemRep system_rep_from_json(std::shared_ptr<const CategorySystem> sys,
                               const Json &j);
Json system_rep_to_json(const SystemRep &r);

GraphRep graph_rep_from_json(std::shared_ptr<const Graph> graph,
                             std::shared_ptr<const GraphSystem> gsys,
                             const Json &j);

LiRep li_rep_from_json(std::shared_ptr<const Category> cat, const Json &j,
                       std::size_t max_zm);
Json li_rep_to_json(const LiRep &r);

ZmRep zm_rep_from_json(std::shared_ptr<const Category> cat,
                       std::shared_ptr<const ZMSemigroup> zm, const Json &j);

Json relation_report_to_json(const RelationReport &r);
Json validation_report_to_json(const ValidationReport &r);
Json system_report_to_json(const SystemReport &r);
Json ideal_family_to_json(const Category &cat, const IdealFamily &fam);
Json zm_to_json(const Category &cat, const ZMSemigroup &zm);

Json load_json_file(const std::string &path);

} // namespace catpaths

#endif
