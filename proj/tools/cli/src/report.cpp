#include "qaf/cli/report.hpp"

#include <sstream>

namespace qaf::cli {

Json to_json(const PointSet& s)
{
    Json a = Json::array();
    for (Point x : s) a.push_back(x);
    return a;
}

Json family_json(const SetFamily& f)
{
    Json sets = Json::array();
    for (const auto& s : f) sets.push_back(to_json(s));
    return Json{{"universe", f.universe()}, {"size", f.size()}, {"sets", std::move(sets)}};
}

Json subfamily_json(const SetFamily& f, const Subfamily& g)
{
    Json sets = Json::array();
    for (auto i : g.indices) sets.push_back(to_json(f[i]));
    return Json{{"members", g.indices}, {"sets", std::move(sets)}};
}

Json witness_json(const SetFamily& f, const Witness& w)
{
    if (const auto* p = std::get_if<PointSet>(&w)) return Json{{"kind", "points"}, {"points", to_json(*p)}};
    if (const auto* g = std::get_if<Subfamily>(&w)) {
        Json j{{"kind", "subfamily"}};
        j.update(subfamily_json(f, *g));
        return j;
    }
    if (const auto* i = std::get_if<std::size_t>(&w))
        return Json{{"kind", "member"}, {"member", *i}, {"set", to_json(f[*i])}};
    return nullptr;
}

Json property_json(const SetFamily& f, const PropertyReport& r)
{
    return Json{{"holds", r.holds()}, {"detail", r.detail}, {"witness", witness_json(f, r.witness)}};
}

Json representations_json(const RepresentationMap& reps)
{
    Json a = Json::array();
    for (const auto& x : reps.entries) a.push_back(to_json(x));
    return Json{{"t", reps.t}, {"entries", std::move(a)}};
}

Json certificate_json(const SearchCertificate& c)
{
    Json params{{"d", c.params.d},           {"m", c.params.m},
                {"t", c.params.t},           {"n", c.params.n},
                {"smax", c.params.s_max},    {"budget", c.params.budget},
                {"symmetry_depth", c.params.symmetry_depth}};
    Json j{{"params", std::move(params)},
           {"best_size", c.best_size},
           {"exhaustive", c.exhaustive},
           {"nodes", c.nodes},
           {"candidates", c.candidates},
           {"best", family_json(c.best)}};
    j["representations"] = c.representations ? representations_json(*c.representations) : Json(nullptr);
    return j;
}

Json trace_json(const SetFamily& f, const PierceTrace& t)
{
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json j{{"action", std::string(to_string(s.action))},
               {"level", s.level},
               {"budget", s.budget},
               {"remaining", s.remaining},
               {"points", s.points},
               {"size_threshold", s.size_threshold}};
        if (s.action == PierceAction::Pencil || (s.action == PierceAction::Fallback && !s.witness.empty())) {
            j["witness"] = subfamily_json(f, s.witness);
            j["w_size"] = s.w_size;
            j["pencil_size"] = s.pencil_size;
            j["guarantee"] = s.guarantee;
            j["guarantee_met"] = s.guarantee_met;
            j["proof_threshold"] = s.proof_threshold;
        }
        steps.push_back(std::move(j));
    }
    return Json{{"p", t.p},
                {"q", t.q},
                {"reduced_level", t.reduced_level},
                {"fallbacks", t.fallbacks},
                {"transversal", to_json(t.result.points)},
                {"size", t.result.size()},
                {"steps", std::move(steps)}};
}

Json audit_json(const AuditReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"name", e.name},
                               {"status", std::string(to_string(e.status))},
                               {"informational", e.informational},
                               {"detail", e.detail}});
    return Json{{"failures", r.failures()}, {"checks", std::move(entries)}};
}

Json rational_json(const Rational& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

Json make_report(const std::string& command)
{
    return Json{{"tool", "qaf"}, {"version", kToolVersion}, {"schema", kSchemaVersion}, {"command", command}};
}

namespace {

bool scalar_array(const Json& j)
{
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

std::string scalar(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os)
{
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object() && j.empty()) {
        os << pad << "{}\n";
    } else if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            os << pad << key << ":";
            if (value.is_object() && !value.empty()) {
                os << "\n";
                render(value, indent + 1, os);
            } else if (value.is_array() && !scalar_array(value)) {
                os << "\n";
                render(value, indent + 1, os);
            } else {
                os << " ";
                render(value, 0, os);
            }
        }
    } else if (j.is_array() && !scalar_array(j)) {
        for (const auto& e : j) {
            if (e.is_object()) {
                os << pad << "-\n";
                render(e, indent + 1, os);
            } else if (e.is_array() && scalar_array(e)) {
                os << pad << "- ";
                render(e, 0, os);
            } else {
                os << pad << "-\n";
                render(e, indent + 1, os);
            }
        }
    } else if (j.is_array()) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar(j[i]);
        os << "]\n";
    } else {
        os << pad << scalar(j) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report)
{
    std::ostringstream os;
    render(report, 0, os);
    return os.str();
}

}  // namespace qaf::cli
