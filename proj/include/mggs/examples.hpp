#pragma once

// The named groups used throughout the tests, the CLI and the acceptance run.

#include <string>
#include <vector>

#include "mggs/group.hpp"

namespace mggs {

/// Symmetric, p = 5, E = <(1,2,2,1)>.
MggsGroup example1();
/// E = <(1, 2, ..., p-1)>.
MggsGroup example2(Residue p);
/// p = 13, rank 3, spanned by the orbit of one symmetric row under u -> 3u.
MggsGroup example3();
/// E = <(1, -1, 0, ..., 0)>.
MggsGroup gupta_sidki(Residue p);

struct NamedGroup {
  std::string name;
  MggsGroup group;
};

/// ex1, ex2-5, ex2-7, ex3, gs3, gs5, gs7, full3, full5.
std::vector<NamedGroup> named_groups();
/// Looks a group up by name; DomainError for unknown names.
MggsGroup named_group(const std::string& name);

}  // namespace mggs
