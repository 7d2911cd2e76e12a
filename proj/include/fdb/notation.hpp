#pragma once

#include <string>
#include <string_view>

#include "fdb/multiset.hpp"
#include "fdb/multiset_partition.hpp"

namespace fdb {

/// Parses a derivative signature: whitespace-separated factors "x<i>" or
/// "x<i>^<k>" with i, k >= 1. Repeated variables accumulate ("x1 x1" is
/// "x1^2"); an all-blank string is the empty signature. Throws parse_error
/// carrying the 0-based offset of the offending character.
Multiset parse_signature(std::string_view text);

/// Parses bracketed blocks of signature factors: "[x1^2 x5][x1^2 x5][x7 x8]".
/// Whitespace between blocks is ignored; empty blocks are rejected.
MultisetPartition parse_partition(std::string_view text);

/// "x1 x2^2"; the empty multiset renders as "".
std::string format_signature(const Multiset& m);

/// Blocks with repetition in display order: "[x7 x8][x1^2 x5][x1^2 x5]".
std::string format_partition(const MultisetPartition& mp);

} // namespace fdb
