#include "qaf/cli/qaf_format.hpp"

#include "qaf/errors.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace qaf::cli {
namespace {

std::string_view trim(std::string_view s)
{
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw InvalidArgument(what + " at line " + std::to_string(line));
}

std::uint64_t number(std::string_view tok, std::size_t line)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(line, "malformed token '" + std::string(tok) + "'");
    return v;
}

}  // namespace

SetFamily parse_family(std::string_view text, DuplicatePolicy policy, std::vector<std::size_t>* merged_lines)
{
    std::vector<PointSet> sets;
    std::unordered_map<PointSet, std::size_t> first_line;
    std::optional<std::size_t> universe;
    Point max_point = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto toks = tokens(line);
        if (toks.front() == "universe") {
            if (toks.size() != 2) fail(line_no, "universe header needs exactly one value");
            if (universe) fail(line_no, "repeated universe header");
            if (!sets.empty()) fail(line_no, "universe header after the first set");
            auto n = number(toks[1], line_no);
            if (n > PointSet::kCapacity)
                fail(line_no, "universe exceeds " + std::to_string(PointSet::kCapacity) + " points");
            universe = n;
            continue;
        }
        PointSet s;
        std::optional<std::uint64_t> prev;
        for (auto tok : toks) {
            auto v = number(tok, line_no);
            if (prev && v <= *prev) fail(line_no, "points must be strictly ascending");
            if (v >= PointSet::kCapacity) fail(line_no, "point " + std::to_string(v) + " exceeds the capacity");
            if (universe && v >= *universe)
                fail(line_no, "point " + std::to_string(v) + " outside universe " + std::to_string(*universe));
            s.insert(static_cast<Point>(v));
            prev = v;
        }
        auto [it, fresh] = first_line.emplace(s, line_no);
        if (!fresh) {
            if (policy == DuplicatePolicy::Reject)
                throw InvalidArgument("duplicate set at line " + std::to_string(line_no) + " (first seen at line " +
                                      std::to_string(it->second) + ")");
            if (merged_lines) merged_lines->push_back(line_no);
            continue;
        }
        max_point = std::max(max_point, s.max());
        sets.push_back(s);
    }
    std::size_t n = universe ? *universe : (sets.empty() ? 0 : max_point + 1);
    return SetFamily(std::move(sets), n);
}

std::string render_family(const SetFamily& f)
{
    std::string out = "universe " + std::to_string(f.universe()) + "\n";
    for (const auto& s : f) out += s.to_string() + "\n";
    return out;
}

SetFamily read_family(const std::string& path, DuplicatePolicy policy, std::vector<std::size_t>* merged_lines)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InvalidArgument("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_family(text, policy, merged_lines);
}

}  // namespace qaf::cli
