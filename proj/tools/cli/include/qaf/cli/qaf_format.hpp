#pragma once

#include "qaf/family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qaf::cli {

/// Parses the QAF text format: `#` starts a comment, an optional
/// `universe <n>` line may precede the sets, and every other nonblank line
/// is one set of strictly ascending decimal point ids. Errors name the
/// offending line. Under Merge, the line numbers of dropped duplicates are
/// appended to `merged_lines`.
SetFamily parse_family(std::string_view text, DuplicatePolicy policy = DuplicatePolicy::Reject,
                       std::vector<std::size_t>* merged_lines = nullptr);

/// QAF text with a universe header, one member per line.
std::string render_family(const SetFamily& f);

/// Reads and parses a file, or standard input when `path` is "-".
SetFamily read_family(const std::string& path, DuplicatePolicy policy = DuplicatePolicy::Reject,
                      std::vector<std::size_t>* merged_lines = nullptr);

}  // namespace qaf::cli
