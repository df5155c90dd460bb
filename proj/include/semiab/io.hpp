#pragma once

#include <string>
#include <string_view>

#include "semiab/actions.hpp"
#include "semiab/group.hpp"

namespace semiab {

/// Accepts {"order":n,"cayley":[[...]],"name":...} with 0-based entries, or
/// {"degree":d,"generators":[[[1,2]],[[1,2,3]]],"name":...} with each
/// generator a list of 1-based cycles. Syntax errors raise ParseError with
/// the line and column; table defects raise the make_group errors.
FiniteGroup group_from_json(std::string_view text);

/// Compact canonical form {"cayley":...,"name":...,"order":n}.
/// group_from_json(group_to_json(g)) reproduces the same string.
std::string group_to_json(FiniteGroup const& g);

/// Reads a group reference: a file path if one exists, otherwise a name.
FiniteGroup load_group(std::string const& ref);

/// A 2-D array indexed [g][a]. Throws ParseError or MalformedTable.
ActionData action_from_json(std::string_view text, FiniteGroup const& acting,
                            FiniteGroup const& acted);

/// "line L, column C" for a byte offset into `text`.
std::string describe_position(std::string_view text, std::size_t offset);

}  // namespace semiab
