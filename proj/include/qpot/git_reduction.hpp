#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpot/lattice.hpp"
#include "qpot/novikov.hpp"
#include "qpot/polytope.hpp"

namespace qpot {

enum class Verdict { Semistable, Unstable };

// Moment-map data of a subtorus action: rows of `matrix` are both the linear
// parts of the moment map components in the action parameters and the
// generators of ker(q_*) in the exponent lattice.
struct SubtorusAction {
  IntMatrix matrix;   // r x m
  RatVec offsets;     // length r
  RatVec level;       // length r
  std::map<std::string, Verdict> overrides;  // per class tag; "*" = default
  std::optional<std::vector<Constraint>> explicit_constraints;
};

struct FaceReport {
  std::vector<int> active_facets;
  int dim = -1;
  bool meets_level = false;
  bool free_action = true;  // meaningful only when meets_level
  std::vector<IntVec> residual_isotropy;  // basis of (row lattice ∩ stabilizer) if nontrivial
};

struct StabilityReport {
  std::map<std::string, Verdict> class_verdicts;
  std::vector<FaceReport> faces;
  bool level_meets_interior = false;
};

// Facet class i is semistable iff the level lies in the projection of the
// face; free-action verdicts are computed on every face meeting the level by
// intersecting the action row lattice with the face stabilizer lattice.
// Overrides are applied on top of the combinatorial verdicts.
StabilityReport classify_classes(const Polytope& p, const SubtorusAction& act);

// Report assembled from overrides alone (non-toric potentials supply verdicts).
StabilityReport report_from_overrides(const Potential& w, const SubtorusAction& act);

// Drop terms whose classes are unstable. Throws Error("MissingVerdict") when a
// term has no covered class tag.
Potential semistable_potential(const Potential& w, const StabilityReport& report);

// Output naming. Defaults: variables z1..zs, surviving parameters renamed
// v1, v2, ... in declared order.
struct NamingConfig {
  std::optional<std::vector<std::string>> variables;
  bool keep_parameters = false;
  std::map<std::string, std::string> parameter_map;  // overrides the default
};

// The full reduction pipeline: semistable restriction, adapted-basis exponent
// substitution, level-constraint parameter elimination, collection.
Potential quotient_potential(const Potential& w, const SubtorusAction& act,
                             const StabilityReport& report, const NamingConfig& naming = {},
                             const AdaptedBasis* basis_override = nullptr);

std::string render_report(const StabilityReport& report);

}  // namespace qpot
