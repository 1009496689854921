#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cga/bitgraph.hpp"
#include "cga/groups.hpp"
#include "cga/solver.hpp"

namespace cga {

// Sorted, duplicate-free set of same-class elements. Doubles as a graph
// vertex list; index order is the canonical permutation order.
struct VertexSet {
    int degree = 0;
    std::vector<Permutation> elements;
};

// The two slice constructions live on the first 8 points plus designated
// long cycles on the rest: a 2-cycle a and a 3-cycle b inside {1..8}
// composed with gamma = (9,...,n), or with gamma = (9,...,16) and
// theta = (17,...,n) when a single long cycle would be odd.
enum class SliceKind { even_case, odd_case };

struct SliceDef {
    SliceKind kind = SliceKind::even_case;
    int degree = 0;
    Permutation gamma;
    std::optional<Permutation> theta;
    VertexSet vertices;  // the strict slice: designated cycles appear exactly
};

// even_case: n = 12 or even n >= 16. odd_case: odd n >= 21.
SliceDef make_slice(SliceKind kind, int n);

bool slice_contains(const SliceDef& slice, const Permutation& g);

// Relaxed membership used by the representative search: same cycle type as
// the slice, and each designated cycle replaced by a coprime power of
// itself (equivalently, a cycle on the same support of the same length).
bool power_candidate(const SliceDef& slice, const Permutation& g);

// Elements of the subgroup that pass power_candidate, sorted.
std::vector<Permutation> subgroup_slice_candidates(const SliceDef& slice,
                                                   const SubgroupGens& group,
                                                   std::uint64_t cap);

// Class elements commuting with v, excluding v itself. label may name a
// class other than v's own (used for cross-class adjacency checks).
std::vector<Permutation> neighbors_in_class(const GroupSpec& spec, const Permutation& v,
                                            const ClassLabel& label, std::uint64_t cap);

// Connected component of v in the commuting graph of v's conjugacy class.
// Throws std::length_error once the component outgrows max_size.
VertexSet component_of(const GroupSpec& spec, const Permutation& v, std::uint64_t cap,
                       std::size_t max_size = std::size_t{1} << 20);

BitGraph commuting_graph_of(const VertexSet& vs);

// Exact maximum clique size of the commuting graph on the set.
int max_commuting_subset(const VertexSet& vs);

struct IndependenceResult {
    int value = 0;
    std::vector<Permutation> certificate;  // pairwise non-commuting
    bool exact = false;
};

// Maximum pairwise non-commuting subset. stop_at > 0 ends the search as
// soon as a set that large is found (the caller has a matching upper bound).
IndependenceResult independence_number(const VertexSet& vs, std::uint64_t node_budget,
                                       int stop_at = 0);

struct CoverFamily {
    std::string description;
    std::vector<SubgroupGens> members;
};

struct CoverResult {
    int value = 0;
    std::vector<SubgroupGens> certificate;  // abelian, intersections cover vs
    bool exact = false;
};

// Minimum cover of the set by cliques of its commuting graph, each clique
// realized as (abelian subgroup) intersect (set). Candidate subgroups come
// from maximal_abelian_overgroups of the members, plus the hint's members.
CoverResult clique_cover_number(const GroupSpec& spec, const VertexSet& vs,
                                const CoverFamily* hint, std::uint64_t closure_cap,
                                std::uint64_t node_budget);

struct ComponentAnalysis {
    VertexSet component;
    int delta = 0;  // best pairwise non-commuting set found
    int Delta = 0;  // best abelian cover found
    std::vector<Permutation> independent_certificate;
    std::vector<SubgroupGens> cover_certificate;
    bool delta_exact = false;
    bool Delta_exact = false;
    bool certified = false;  // delta == Delta, or both searches closed
};

ComponentAnalysis analyze_component(const GroupSpec& spec, const VertexSet& component,
                                    std::uint64_t closure_cap, std::uint64_t node_budget);

// The 280-member family of abelian groups generated by a 2-cycle and two
// 3-cycles inside {1..8} together with the designated long cycle(s).
CoverFamily structural_cover_family(SliceKind kind, int n);

// The nine specific family members whose slice picks cannot be made
// pairwise non-commuting.
std::vector<SubgroupGens> nine_obstruction_groups(const SliceDef& slice);

struct RepsTraceEntry {
    std::vector<int> chosen;  // candidate index picked per earlier group
    int stuck_group = 0;      // group with no viable candidate at this point
};

struct RepsSearchResult {
    bool feasible = false;
    std::vector<Permutation> assignment;  // one per group when feasible
    std::vector<RepsTraceEntry> trace;    // dead ends, in visit order
    std::uint64_t dead_ends = 0;          // total, even past the trace cap
    std::uint64_t nodes = 0;
    // candidate sets after reduction, per group, in search order
    std::vector<std::vector<Permutation>> candidates;
};

// One slice element per group, pairwise non-commuting, or exhaustive proof
// that none exists. forced pins a group's element (it must be one of that
// group's candidates). reduce_powers folds together candidates of a group
// that commute with exactly the same candidates of the other groups.
RepsSearchResult noncommuting_reps_search(const std::vector<SubgroupGens>& groups,
                                          const SliceDef& slice,
                                          const std::vector<std::optional<Permutation>>& forced,
                                          bool reduce_powers = true,
                                          std::size_t trace_cap = 100000);

struct StructureReport {
    bool hypothesis_ok = false;
    std::string note;  // reason when a hypothesis fails
    int k = 0;         // parts 2k-2k(-l)
    int ell = 0;       // 0 when absent
    std::size_t components_checked = 0;
    std::size_t pairs_checked = 0;
    bool long_cycle_power_ok = false;  // adjacent pairs share the l-cycle up to power
    bool support_ok = false;           // adjacent pairs have equal support
    bool partition_ok = false;         // one k-k-k-k partition per component
    bool block_action_ok = false;      // elements act on its 4 blocks by id or 2+2
};

// Structural checks on components of a class of shape 2k-2k-l (with
// n - 4k - l < min(l, 2k) and l not in {2k, 4k}) or 2k-2k with n = 4k.
// sample_components bounds how many distinct components get checked.
StructureReport verify_2k2kl_structure(const GroupSpec& spec, const ClassLabel& label,
                                       int sample_components, std::uint64_t cap);

}  // namespace cga
