#pragma once

#include "qaf/analysis.hpp"
#include "qaf/extremal.hpp"
#include "qaf/family.hpp"
#include "qaf/piercing.hpp"
#include "qaf/properties.hpp"
#include "qaf/solver.hpp"

#include <json.hpp>

#include <string>

namespace qaf::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

Json to_json(const PointSet& s);
Json family_json(const SetFamily& f);
/// Member indices together with the members themselves.
Json subfamily_json(const SetFamily& f, const Subfamily& g);
Json witness_json(const SetFamily& f, const Witness& w);
Json property_json(const SetFamily& f, const PropertyReport& r);
Json representations_json(const RepresentationMap& reps);
Json certificate_json(const SearchCertificate& c);
Json trace_json(const SetFamily& f, const PierceTrace& t);
Json audit_json(const AuditReport& r);
Json rational_json(const Rational& q);

/// Report skeleton shared by every command.
Json make_report(const std::string& command);

/// Indented `key: value` rendering of a report tree. Arrays of numbers
/// print inline, so point sets read as `[0 1 2]`.
std::string render_text(const Json& report);

}  // namespace qaf::cli
