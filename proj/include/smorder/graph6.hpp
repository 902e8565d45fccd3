#pragma once

#include <string>

#include "smorder/tree.hpp"

namespace smorder {

// graph6 text form of a tree (upper triangle, column major, 6 bits per
// character offset by 63).  Handles n up to 258047.
std::string to_graph6(const Tree& t);

// Parses graph6 and validates that the graph is a tree; throws
// std::invalid_argument otherwise.
Tree tree_from_graph6(const std::string& s);

}  // namespace smorder
