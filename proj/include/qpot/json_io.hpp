#pragma once

#include <json.hpp>
#include <string>

#include "qpot/git_reduction.hpp"
#include "qpot/lifting.hpp"
#include "qpot/novikov.hpp"
#include "qpot/polytope.hpp"

namespace qpot {

using Json = nlohmann::json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json affine_to_json(const AffineFunctional& f);
AffineFunctional affine_from_json(const Json& j);

Json potential_to_json(const Potential& p);
Potential potential_from_json(const Json& j);

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, bool allow_unbounded = false);

SubtorusAction action_from_json(const Json& j);
NamingConfig naming_from_json(const Json& j);  // reads the "naming" key if present

LiftSpec liftspec_from_json(const Json& j);

Json report_to_json(const StabilityReport& r);

// Reads a whole file; throws Error("MalformedSpec") when unreadable.
std::string read_file(const std::string& path);
Json load_json_file(const std::string& path);

}  // namespace qpot
