#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

/// Name-level instance description, exactly as read from a file:
///   agents <n> / items <n> headers,
///   accept <item> <agent>... lines,
///   edge <u> <v> lines,
///   assign a|b <agent> <item> lines,
/// with '#' comments and blank lines ignored.
struct RawInstance {
  long long agent_count = -1;
  long long item_count = -1;
  std::vector<std::pair<std::string, std::vector<std::string>>> accepts;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> assign_a;
  std::vector<std::pair<std::string, std::string>> assign_b;
};

/// Reads the line-oriented format; throws ParseError on malformed input.
RawInstance parse_raw(std::istream& in);

/// Resolves names to dense ids (sorted name order) and checks every
/// structural invariant. The agent and item rosters are the names
/// appearing in the source assignment lines; edges naming agents outside
/// the roster raise BadEdge, roster/header disagreements raise
/// SizeMismatch, and duplicate or incomplete assignments raise
/// NotBijection.
Instance validate_instance(const RawInstance& raw);

Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

/// Canonical form: headers first, then accept lines in item-name order
/// with agents sorted by name, edge lines sorted with the smaller name
/// first, then the two assignment blocks in agent-name order. Parsing the
/// output and serializing again reproduces it byte for byte.
std::string serialize_instance(const Instance& inst);

}  // namespace swapreach
