#pragma once

#include "qaf/family.hpp"
#include "qaf/solver.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qaf {

enum class PierceAction {
    Descend,       // the family already has the (level-1,3)-property
    Pencil,        // take the best intersection point of a 3-free witness
    CommonPoint,   // level 3: every member shares one point
    TriplePoint,   // level 4: point of a triple, plus one point of the only outsider
    OnePerMember,  // few enough members left to take one point each
    Fallback,      // exact solver within the remaining budget
};

std::string_view to_string(PierceAction a);

struct PierceStep {
    PierceAction action = PierceAction::Descend;
    std::size_t level = 0;      // current (level,3)-property
    std::size_t budget = 0;     // points still allowed
    std::size_t remaining = 0;  // members not yet pierced
    std::vector<Point> points;  // points added by this step
    // Pencil steps only. Witness indices refer to the input family.
    Subfamily witness;
    std::size_t w_size = 0;
    std::size_t pencil_size = 0;
    std::uint64_t guarantee = 0;  // C(level-2,2)+2
    bool guarantee_met = true;
    /// Family size the guarantee needs at this level, and the size the
    /// inductive step assumes. Recorded, not enforced.
    std::uint64_t size_threshold = 0;
    std::uint64_t proof_threshold = 0;
};

struct PierceTrace {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t reduced_level = 0;  // p - q + 3
    std::vector<PierceStep> steps;
    std::size_t fallbacks = 0;
    Transversal result;
};

/// Pierces a linear family with the (p,q)-property and at least
/// thm4_threshold(p,q) members using at most p-q+1 points, following the
/// pencil-removal induction. Each inductive step is re-checked on the
/// concrete family; a step that cannot be justified hands the remainder to
/// the exact solver and is recorded. Throws InvalidArgument on unmet
/// preconditions and InconsistencyError if no small transversal is found.
PierceTrace pierce_pq(const SetFamily& f, std::size_t p, std::size_t q);

/// p members of which no three share a point, if any. Requires p >= 3.
std::optional<Subfamily> witness_q_free(const SetFamily& f, std::size_t p);

/// Points in which two members of the subfamily meet. Throws when two
/// members share more than one point.
PointSet w_of_q(const SetFamily& f, const Subfamily& q);

}  // namespace qaf
