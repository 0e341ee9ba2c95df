#pragma once

#include "qaf/family.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qaf {

enum class Verdict { Holds, Fails };

/// Evidence backing a failed check.
using Witness = std::variant<std::monostate, PointSet, Subfamily, std::size_t>;

/// Verdict of a property check. A failing report always carries a witness
/// that can be re-checked without repeating the search.
struct PropertyReport {
    Verdict verdict = Verdict::Holds;
    Witness witness;
    std::string detail;

    [[nodiscard]] bool holds() const { return verdict == Verdict::Holds; }
};

/// X(A) per member: a transversal of F \ {A} of size <= t disjoint from A.
struct RepresentationMap {
    std::size_t t = 0;
    std::vector<PointSet> entries;  // indexed by member

    [[nodiscard]] const PointSet& operator[](std::size_t member) const { return entries[member]; }
    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

/// [d,m]-property: every member of F^m has at most d points.
PropertyReport check_bracket(const SetFamily& f, std::size_t d, std::size_t m);

/// {d,m}-property: every m members share at most d points. For m > |F| the
/// property holds vacuously and the report says so.
PropertyReport check_brace(const SetFamily& f, std::size_t d, std::size_t m);

/// (p,q)-property: among any p members some q share a point. Requires
/// p >= q >= 2 and |F| >= p. The failure witness is a p-subfamily in which
/// no point lies in q members.
PropertyReport check_pq(const SetFamily& f, std::size_t p, std::size_t q);

/// p members such that no point lies in q of them, if any exist.
std::optional<Subfamily> find_q_independent(const SetFamily& f, std::size_t p, std::size_t q);

/// Re-checks a (p,q) failure witness directly.
bool is_q_independent(const SetFamily& f, const Subfamily& g, std::size_t q);

struct RepresentationSearch {
    PropertyReport report;
    std::optional<RepresentationMap> map;  // present iff the t-property holds
};

/// Per-member representation search. Fails at the lowest-index member with
/// no representation. Requires |F| >= 2.
RepresentationSearch find_representations(const SetFamily& f, std::size_t t, unsigned threads = 1);

/// Re-checks every representation invariant, including pairwise distinct
/// entries. Returns a description of the first violation.
std::optional<std::string> verify_representations(const SetFamily& f, const RepresentationMap& reps);

/// No t-transversal for F, but one for every F \ {A}. Requires F nonempty.
PropertyReport is_t_critical(const SetFamily& f, std::size_t t);

}  // namespace qaf
