#pragma once

#include "cga/comgraph.hpp"
#include "cga/groups.hpp"
#include "cga/perm.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cga {

enum class ClaimResult : std::uint8_t { pass, fail, undecided };

std::string to_string(ClaimResult r);

// Outcome of one claim run. Evidence lines are deterministic given the
// parameters; a fail carries a concrete counterexample line, an undecided
// names the resource bound that was hit. The exhibit fields hold the objects
// the evidence talks about so they can be re-checked without rerunning the
// search (see validate.hpp).
struct VerificationReport {
    std::string claim_id;
    std::string statement;
    std::map<std::string, std::string> parameters;
    ClaimResult result = ClaimResult::undecided;
    std::vector<std::string> evidence;

    // (element, partner) pairs where the partner's centralizer is abelian
    std::vector<std::pair<Permutation, Permutation>> witness_pairs;
    std::vector<Permutation> independent_set;  // pairwise non-commuting
    std::vector<SubgroupGens> cover_members;   // abelian cover certificate

    double wall_seconds = 0.0;
};

struct ClaimInfo {
    std::string id;
    std::string statement;
};

// Stable claim ids for external reference. Append-only: retiring an id takes
// an explicit deprecation note, never silent removal.
const std::vector<ClaimInfo>& claim_registry();

// Witness tables for the slice families. Checks every stored (h, f) row at
// every applicable tail power: h and f commute and f's centralizer in alt(n)
// is abelian (enumerated directly from cycle structure and cross-checked
// against the structural generators). Then sweeps the full commuting family
// of the base element and confirms each even member either matches a table
// row's type, has the 2-3-tail-power type handled by the powers claims, or
// visibly lies in an abelian centralizer.
// even_case: n = 12 or even n >= 16. odd_case: odd n >= 21.
VerificationReport verify_witness_table(SliceKind kind, int n, std::uint64_t cap = 1'000'000);

// For h = (2-cycle)(3-cycle)(k d-cycles) built as a power of the one-long-
// tail element f = (2-cycle)(3-cycle)(long cycle): f commutes with h and
// every element commuting with f commutes with h, so C(f) <= C(h) inside
// alt(n), with equality exactly at k = 1. even_case: dk = n-8; odd_case:
// dk = 8 and ej = n-16 with a second tail. Throws std::invalid_argument on
// parameter constraint violations.
VerificationReport verify_powers_lemma(SliceKind kind, int n, int d, int k, int e = 0, int j = 0,
                                       std::uint64_t cap = 1'000'000);

// For n <= 11 or n = 15: splits the nonidentity classes of alt(n) by
// abelian-centralizer membership, and for every class outside that family
// certifies that the largest pairwise non-commuting subset and the smallest
// abelian cover agree on its commuting-graph components. At n = 15 also
// confirms no two elements of distinct outside classes commute.
VerificationReport verify_small_n_theorem(int n, std::uint64_t cap = 1'000'000,
                                          std::uint64_t node_budget = 50'000'000);

// The slice obstruction: 1120 slice elements, largest commuting subset 4,
// the 280-member structural abelian cover with every member meeting the
// slice in exactly 4 elements, the maximal abelian overgroups of the base
// element, and infeasibility of nine pairwise non-commuting representatives
// for the designated member groups once the first pick is normalized.
VerificationReport verify_obstruction(SliceKind kind, int n, std::uint64_t cap = 1'000'000,
                                      std::uint64_t node_budget = 50'000'000);

// The one class of sym(10) outside the abelian-centralizer family: its size,
// the connectivity of its commuting graph, the exact cover number 9450 via a
// perfect partition into 6-element commuting sets, and the best known
// pairwise non-commuting set. The gap between the two is recorded as open,
// not decided.
VerificationReport verify_further_work_s10(std::uint64_t cap = 1'000'000);

}  // namespace cga
