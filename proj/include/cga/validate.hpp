#pragma once

#include "cga/groups.hpp"
#include "cga/perm.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cga {

// Re-checks for report exhibits. Everything here is rebuilt from cycle
// structure and plain multiplication on purpose: the search, closure, and
// solver code paths are not trusted by the checks below.

// Every element commuting with f, assembled directly from f's cycle
// structure: rotations within cycles, shuffles of equal-length cycles, and
// arbitrary arrangements of the fixed points. alt keeps the even half.
std::vector<Permutation> centralizer_elements_direct(const GroupSpec& spec,
                                                     const Permutation& f);

// Pairwise non-commuting and duplicate-free.
bool valid_noncommuting_set(const std::vector<Permutation>& xs, std::string* why = nullptr);

// Each member's generators commute pairwise (so the member is abelian) and
// every point sits in some member's product closure.
bool valid_abelian_cover(const std::vector<Permutation>& points,
                         const std::vector<SubgroupGens>& cover, std::size_t element_cap,
                         std::string* why = nullptr);

// h and f commute, both lie in the group, and the centralizer of f within
// the group is abelian on the directly-assembled element list.
bool valid_witness_pair(const GroupSpec& spec, const Permutation& h, const Permutation& f,
                        std::string* why = nullptr);

}  // namespace cga
