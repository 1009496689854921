#pragma once

#include "cga/bitgraph.hpp"

#include <cstdint>
#include <vector>

namespace cga {

struct SolveStats {
    std::uint64_t nodes = 0;
    bool exact = true;  // false once the node budget ran out
};

inline constexpr std::uint64_t default_node_budget = 200'000'000;

// Exact maximum clique, branch and bound with greedy-coloring bounds.
// Deterministic: candidates explored lowest-vertex-first inside color classes.
// stop_at > 0 ends the search as soon as a clique that large is found (the
// caller knows it cannot do better, e.g. from a cover of that size).
std::vector<int> max_clique(const BitGraph& g, int stop_at = 0,
                            std::uint64_t node_budget = default_node_budget,
                            SolveStats* stats = nullptr);

std::vector<int> max_independent_set(const BitGraph& g, int stop_at = 0,
                                     std::uint64_t node_budget = default_node_budget,
                                     SolveStats* stats = nullptr);

// Root-parallel variant: the first branching level is split across OpenMP
// workers, each with a thread-local bound; results are reduced canonically,
// so the returned SET SIZE matches the serial solver (the witness may be a
// different optimal set, which reduction then canonicalizes: the
// lexicographically least optimum found). Exactness semantics as above.
std::vector<int> max_clique_parallel(const BitGraph& g, int stop_at = 0,
                                     std::uint64_t node_budget = default_node_budget,
                                     SolveStats* stats = nullptr);

// All maximal cliques (Bron-Kerbosch with pivoting), each sorted ascending,
// the list itself sorted. Throws std::length_error beyond limit.
std::vector<std::vector<int>> maximal_cliques(const BitGraph& g, std::size_t limit = 1'000'000);

// Minimum number of candidate sets covering {0..universe-1}. lower_bound is
// a known global bound (attainment stops the search). Every point must be
// coverable. Returns indexes into sets.
std::vector<std::size_t> min_set_cover(int universe, const std::vector<Bitset>& sets,
                                       int lower_bound = 1,
                                       std::uint64_t node_budget = default_node_budget,
                                       SolveStats* stats = nullptr);

// Deterministic greedy: largest uncovered gain, lowest index on ties.
std::vector<std::size_t> greedy_cover(int universe, const std::vector<Bitset>& sets);

}  // namespace cga
