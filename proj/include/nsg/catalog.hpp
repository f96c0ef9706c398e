#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/group.hpp"

namespace nsg {

class UnknownGroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Built-in permutation representations.
//
//   A<n>, S<n>      alternating / symmetric group on n points
//   Z<n>, Z_<n>     cyclic group of order n
//   D<n>, D_<n>     dihedral group of order 2n on n points (n >= 3)
//   SL25            SL(2,5) on the 24 nonzero vectors of F_5^2
//   PSL27, PGL27    on the 8 points of the projective line over F_7
//   PSL28           on the 9 points of the projective line over F_8
//   X x Y           direct products, written "Z2xA5", "A5xZ2xZ3", ...
//
// Throws UnknownGroup for anything else.
GroupSpec builtin(std::string_view name);

// Names of the shipped non-solvable catalog used by the verification suite.
const std::vector<std::string>& builtin_catalog();

// Resolves a builtin name or, failing that, a path to a group file.
GroupSpec resolve_group(std::string_view name_or_path);

// Line-oriented key=value group file:
//
//   # comment
//   name=A5
//   degree=5
//   gen=(1,2,3,4,5)
//   gen=(3,4,5)
//
// Errors are ParseError messages prefixed with "<path>:<line>: ".
GroupSpec parse_group_file(std::string_view text, const std::string& origin = "<input>");
GroupSpec load_group_file(const std::filesystem::path& path);
std::string format_group_file(const GroupSpec& spec);
void write_group_file(const GroupSpec& spec, const std::filesystem::path& path);

} // namespace nsg
