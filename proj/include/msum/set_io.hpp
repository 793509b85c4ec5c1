#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "msum/intset.hpp"

namespace msum {

/// Reads the set text format: one positive integer per line, strictly
/// ascending, `#` comment lines, optional `!horizon B` header (default: the
/// largest element). Errors carry the 1-based line number.
IntSet read_set_text(std::istream& in);
IntSet read_set_file(const std::string& path);

void write_set_text(std::ostream& out, const IntSet& s);
std::string format_set_text(const IntSet& s);

/// "2,4,6" -> {2, 4, 6}; strictly ascending positive integers.
std::vector<Value> parse_seed_list(const std::string& text);

}  // namespace msum
