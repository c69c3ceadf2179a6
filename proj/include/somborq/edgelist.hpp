#ifndef SOMBORQ_EDGELIST_HPP
#define SOMBORQ_EDGELIST_HPP

#include <string>

#include "somborq/graph.hpp"

namespace somborq {

// Edge-list text format:
//   line 1: "n m"
//   then m lines "u v" with 0 <= u < v < n
// Whitespace separated, LF endings. Lines starting with '#' are comments and
// may appear anywhere; blank lines are ignored. Anything non-simple
// (duplicates, self-loops, u >= v) is rejected with the offending line number.

Graph parse_edgelist(const std::string& text);
Graph read_edgelist(const std::string& path);

std::string format_edgelist(const Graph& g);
void write_edgelist(const Graph& g, const std::string& path);

}  // namespace somborq

#endif
