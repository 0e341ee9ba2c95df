#pragma once

#include "qaf/family.hpp"
#include "qaf/properties.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qaf {

using Rational = boost::multiprecision::cpp_rational;

/// Members containing each point, indexed by point id over the universe.
std::vector<Subfamily> pencils(const SetFamily& f);

/// Members whose representation contains each point (H_x).
std::vector<Subfamily> representation_holders(const SetFamily& f, const RepresentationMap& reps);

struct TripleCount {
    std::uint64_t total = 0;
    std::uint64_t covered = 0;
};

/// Number of triples ({B,C}, x) with B != C and x in B ∩ C:
/// the sum over unordered member pairs of |B ∩ C|.
std::uint64_t triples_total(const SetFamily& f);

/// Triples whose point lies in at least one representation.
std::uint64_t triples_covered(const SetFamily& f, const RepresentationMap& reps);

TripleCount count_triples(const SetFamily& f, const RepresentationMap& reps);

/// Sum over x in X(A) of C(|G_x|, 2) / |H_x|, exactly.
Rational price(const SetFamily& f, const RepresentationMap& reps, std::size_t member);

/// Greedy ordering of a representation's points: each step takes the
/// point whose pencil adds the most members not yet covered, lowest id on
/// ties. blocks[i] holds the newly covered members and k[i] their count.
struct RepOrdering {
    std::vector<Point> order;
    std::vector<std::size_t> k;
    std::vector<Subfamily> blocks;
    /// Largest 1-based index i with k[i-1] == t; 0 when no k equals t.
    std::size_t s = 0;
};

RepOrdering rep_ordering(const SetFamily& f, const RepresentationMap& reps, std::size_t member, std::size_t t);

enum class AuditStatus { Pass, Fail, Skipped };

std::string_view to_string(AuditStatus s);

struct AuditEntry {
    std::string name;
    AuditStatus status = AuditStatus::Skipped;
    /// Why a check was skipped, or the first violation found.
    std::string detail;
    /// Informational entries never count as failures.
    bool informational = false;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] const AuditEntry* find(std::string_view name) const;
};

/// Evaluates the structural inequalities and identities that every family
/// with the [d,m]-property and representations `reps` must satisfy. Where
/// an exact extremal value would be needed, the bound
/// 1 + t + ... + t^{d+m} stands in for it. Throws InvalidArgument when F
/// lacks the [d,m]-property or `reps` is not a valid map for F with size t.
AuditReport audit_lemmas(const SetFamily& f, std::size_t d, std::size_t m, std::size_t t,
                         const RepresentationMap& reps);

}  // namespace qaf
