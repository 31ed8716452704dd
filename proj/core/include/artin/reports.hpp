#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "artin/cayley.hpp"
#include "artin/criteria.hpp"
#include "artin/deligne.hpp"
#include "artin/group.hpp"
#include "artin/presentation.hpp"

namespace artin::reports {

using json = nlohmann::ordered_json;

// Every top-level report carries "schema": "artin/<kind>/1" and the bounds
// it ran with, so published numbers can be reproduced byte for byte.

json word_json(const Word& w, const std::vector<std::string>& names);
json verdict_json(const BoundedVerdict& v, const std::vector<std::string>& names);
json bounds_json(const Bounds& b);
json graph_json(const DefiningGraph& graph);

json classify_json(const DefiningGraph& graph, const TheoremCase& c);
json distance_json(const MDistanceReport& r, const std::vector<std::string>& names);
json diameter2_json(const Diameter2Report& r, const std::vector<std::string>& names);
json embedding_json(const EmbeddingReport& r, const std::vector<std::string>& names);
json criterion1_json(const BoundedVerdict& v, std::size_t L,
                     const std::vector<std::string>& names);
json blocking_pair_json(const BlockingPairQuery& q, const BoundedVerdict& v,
                        const std::vector<std::string>& names);
json sequence_json(const SequenceCheckReport& r, const std::vector<std::string>& names);
json obstruction_json(const SphericalObstruction& r, const std::vector<std::string>& names);
json wn_json(const WnGeodesicReport& r, const std::vector<std::string>& names);
json qi_json(const QiReport& r, const ComplexBall& ball);
json poset_json(const ComplexBall& ball);

}  // namespace artin::reports
