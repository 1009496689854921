#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "cga/comgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>

using namespace cga;

namespace {

// independence number by subset dynamic programming (m <= 20 or so)
int brute_independence(const std::vector<std::uint32_t>& adj) {
    std::size_t m = adj.size();
    std::vector<std::uint8_t> indep(std::size_t{1} << m, 0);
    std::vector<std::uint8_t> best(std::size_t{1} << m, 0);
    indep[0] = 1;
    int overall = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(mask));
        std::uint32_t rest = mask & (mask - 1);
        indep[mask] = indep[rest] && (adj[v] & rest) == 0;
        if (indep[mask]) overall = std::max(overall, __builtin_popcount(mask));
    }
    (void)best;
    return overall;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// minimum number of cliques of the commuting graph covering all vertices,
// via inclusion-exclusion counts of k-tuples of cliques (mod two primes)
int brute_cover(const std::vector<std::uint32_t>& adj) {
    std::size_t m = adj.size();
    if (m == 0) return 0;
    std::vector<std::uint64_t> cliques(std::size_t{1} << m, 0);
    cliques[0] = 1;  // the empty clique
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::uint32_t v = static_cast<std::uint32_t>(__builtin_ctz(mask));
        std::uint32_t rest = mask & (mask - 1);
        cliques[mask] = cliques[rest] + cliques[rest & adj[v]];
    }
    const std::uint64_t primes[2] = {(std::uint64_t{1} << 61) - 1, 2147483647ull};
    for (int k = 1; k <= static_cast<int>(m); ++k) {
        bool nonzero = false;
        for (std::uint64_t p : primes) {
            std::uint64_t sum = 0;
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::uint64_t term =
                    powmod(cliques[mask] % p, static_cast<std::uint64_t>(k), p);
                bool negative = ((m - static_cast<std::size_t>(__builtin_popcount(mask))) & 1);
                sum = negative ? (sum + p - term) % p : (sum + term) % p;
            }
            if (sum != 0) nonzero = true;
        }
        if (nonzero) return k;
    }
    return static_cast<int>(m);
}

std::vector<std::uint32_t> adjacency_words(const VertexSet& vs) {
    std::size_t m = vs.elements.size();
    std::vector<std::uint32_t> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && vs.elements[i].commutes_with(vs.elements[j]))
                adj[i] |= std::uint32_t{1} << j;
    return adj;
}

}  // namespace

TEST_CASE("slice construction") {
    auto s16 = make_slice(SliceKind::even_case, 16);
    CHECK(s16.vertices.elements.size() == 1120);
    CHECK(CycleType::of(s16.gamma).parts == std::vector<int>{8});
    for (const auto& g : s16.vertices.elements) {
        CHECK(g.even());
        CHECK(CycleType::of(g).str() == "8-3-2");
    }

    auto s12 = make_slice(SliceKind::even_case, 12);
    CHECK(s12.vertices.elements.size() == 1120);
    CHECK(CycleType::of(s12.vertices.elements.front()).str() == "4-3-2");

    auto s21 = make_slice(SliceKind::odd_case, 21);
    CHECK(s21.vertices.elements.size() == 1120);
    REQUIRE(s21.theta.has_value());
    CHECK(CycleType::of(s21.vertices.elements.front()).str() == "8-5-3-2");
    for (const auto& g : s21.vertices.elements) CHECK(g.even());

    CHECK_THROWS(make_slice(SliceKind::even_case, 14));
    CHECK_THROWS(make_slice(SliceKind::even_case, 13));
    CHECK_THROWS(make_slice(SliceKind::odd_case, 19));
    CHECK_THROWS(make_slice(SliceKind::odd_case, 22));
}

TEST_CASE("strict membership vs power candidates") {
    auto s12 = make_slice(SliceKind::even_case, 12);
    auto strict = parse_cycles("(1,2)(3,4,5)(9,10,11,12)", 12);
    CHECK(slice_contains(s12, strict));
    CHECK(power_candidate(s12, strict));

    auto cubed = parse_cycles("(1,2)(3,4,5)(9,12,11,10)", 12);  // gamma^3
    CHECK_FALSE(slice_contains(s12, cubed));
    CHECK(power_candidate(s12, cubed));

    auto s16 = make_slice(SliceKind::even_case, 16);
    auto twisted = parse_cycles("(1,2)(3,4,5)(9,10,11,12,13,14,16,15)", 16);
    CHECK(CycleType::of(twisted).str() == "8-3-2");
    CHECK_FALSE(power_candidate(s16, twisted));  // same support, not a power

    auto displaced = parse_cycles("(1,2,3,4)(5,6,7)(8,9)", 12);  // wrong support
    CHECK(CycleType::of(displaced).str() == "4-3-2");
    CHECK_FALSE(power_candidate(s12, displaced));
}

TEST_CASE("neighbors of a full cycle") {
    auto v = from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
    auto nbs = neighbors_in_class(GroupSpec::sym(7), v, class_of(GroupSpec::sym(7), v), 100);
    CHECK(nbs.size() == 5);  // the other cycle powers, v itself excluded
    for (const auto& x : nbs) CHECK(x.commutes_with(v));
}

TEST_CASE("neighbors in the 4-4 class match the group scan") {
    GroupSpec spec = GroupSpec::alt(8);
    auto v = class_representative(spec, ClassLabel::parse("4-4", 8));
    auto nbs = neighbors_in_class(spec, v, class_of(spec, v), 1000000);
    std::size_t brute = 0;
    for (const auto& x : all_elements(spec))
        if (x != v && CycleType::of(x).str() == "4-4" && x.commutes_with(v)) ++brute;
    CHECK(nbs.size() == brute);
    CHECK(nbs.size() == 7);
}

TEST_CASE("cross-class neighbor checks at n=15") {
    GroupSpec spec = GroupSpec::alt(15);
    auto v = class_representative(spec, ClassLabel::parse("7-4-4", 15));
    auto other = neighbors_in_class(spec, v, ClassLabel::parse("6-6-3", 15), 1000000);
    CHECK(other.empty());
}

TEST_CASE("component sizes") {
    auto comp8 = component_of(GroupSpec::alt(8),
                              class_representative(GroupSpec::alt(8), ClassLabel::parse("4-4", 8)),
                              1000000);
    CHECK(comp8.elements.size() == 12);

    // seed independence
    auto comp8b = component_of(GroupSpec::alt(8), comp8.elements.back(), 1000000);
    CHECK(comp8b.elements == comp8.elements);

    auto comp9 = component_of(GroupSpec::alt(9),
                              class_representative(GroupSpec::alt(9), ClassLabel::parse("4-4", 9)),
                              1000000);
    CHECK(comp9.elements.size() == 12);

    auto comp11 = component_of(
        GroupSpec::alt(11), class_representative(GroupSpec::alt(11), ClassLabel::parse("4-4-3", 11)),
        1000000);
    CHECK(comp11.elements.size() == 24);

    CHECK_THROWS_AS(component_of(GroupSpec::alt(8), comp8.elements.front(), 1000000, 5),
                    std::length_error);
}

TEST_CASE("component sizes at n=15") {
    GroupSpec spec = GroupSpec::alt(15);
    std::map<std::string, std::size_t> expect{
        {"7-4-4", 72}, {"6-6-3", 432}, {"6-4-2-2", 72}, {"6-3-3-2", 96}};
    for (const auto& [type, size] : expect) {
        auto comp = component_of(spec, class_representative(spec, ClassLabel::parse(type, 15)),
                                 1000000);
        CHECK(comp.elements.size() == size);
    }
}

TEST_CASE("max commuting subset of the slices") {
    CHECK(max_commuting_subset(make_slice(SliceKind::even_case, 12).vertices) == 4);
    CHECK(max_commuting_subset(make_slice(SliceKind::even_case, 16).vertices) == 4);
}

TEST_CASE("slice image under conjugation keeps its invariants") {
    auto s12 = make_slice(SliceKind::even_case, 12);
    auto q = parse_cycles("(1,9,4)(2,6,11,3,10)", 12);
    REQUIRE(q.even());
    VertexSet image;
    image.degree = 12;
    for (const auto& x : s12.vertices.elements) image.elements.push_back(q * x * q.inverse());
    std::sort(image.elements.begin(), image.elements.end());
    CHECK(max_commuting_subset(image) == 4);
}

TEST_CASE("analysis of the 4-4 component") {
    GroupSpec spec = GroupSpec::alt(8);
    auto comp = component_of(spec, class_representative(spec, ClassLabel::parse("4-4", 8)),
                             1000000);
    auto res = analyze_component(spec, comp, 1000000, default_node_budget);
    CHECK(res.certified);
    CHECK(res.delta == 3);
    CHECK(res.Delta == 3);
    REQUIRE(res.independent_certificate.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK_FALSE(res.independent_certificate[i].commutes_with(res.independent_certificate[j]));
    REQUIRE(res.cover_certificate.size() == 3);
    std::set<Permutation> covered;
    for (const auto& sub : res.cover_certificate) {
        CHECK(is_abelian(sub));
        for (const auto& x : close(sub, 1000000))
            if (std::binary_search(comp.elements.begin(), comp.elements.end(), x))
                covered.insert(x);
    }
    CHECK(covered.size() == comp.elements.size());
}

TEST_CASE("structural cover families") {
    for (int n : {12, 16, 18}) {
        auto fam = structural_cover_family(SliceKind::even_case, n);
        CHECK(fam.members.size() == 280);
        auto slice = make_slice(SliceKind::even_case, n);
        std::set<Permutation> covered;
        for (const auto& member : fam.members) {
            CHECK(is_abelian(member));
            std::size_t in_slice = 0;
            for (const auto& x : close(member, 10000))
                if (slice_contains(slice, x)) {
                    ++in_slice;
                    covered.insert(x);
                }
            CHECK(in_slice == 4);
        }
        CHECK(covered.size() == 1120);
    }
    auto fam21 = structural_cover_family(SliceKind::odd_case, 21);
    CHECK(fam21.members.size() == 280);
    auto slice21 = make_slice(SliceKind::odd_case, 21);
    std::set<Permutation> covered;
    for (const auto& member : fam21.members) {
        std::size_t in_slice = 0;
        for (const auto& x : close(member, 10000))
            if (slice_contains(slice21, x)) {
                ++in_slice;
                covered.insert(x);
            }
        CHECK(in_slice == 4);
    }
    CHECK(covered.size() == 1120);
    CHECK_THROWS(structural_cover_family(SliceKind::even_case, 14));
    CHECK_THROWS(structural_cover_family(SliceKind::odd_case, 16));
}

TEST_CASE("slice cover with the structural hint is exactly 280") {
    auto slice = make_slice(SliceKind::even_case, 16);
    auto fam = structural_cover_family(SliceKind::even_case, 16);
    auto res = clique_cover_number(GroupSpec::alt(16), slice.vertices, &fam, 1000000,
                                   default_node_budget);
    CHECK(res.value == 280);
    CHECK(res.exact);
}

TEST_CASE("nine groups and the representative search") {
    auto slice = make_slice(SliceKind::even_case, 12);
    auto nine = nine_obstruction_groups(slice);
    REQUIRE(nine.size() == 9);
    for (const auto& g : nine) {
        CHECK(is_abelian(g));
        auto cands = subgroup_slice_candidates(slice, g, 100000);
        CHECK(cands.size() == 8);  // 2 cycle choices, 2 powers each, 2 powers of gamma
        std::size_t strict = 0;
        for (const auto& x : cands)
            if (slice_contains(slice, x)) ++strict;
        CHECK(strict == 4);
    }

    auto forced_first = parse_cycles("(1,2,3)(7,8)(9,10,11,12)", 12);
    std::vector<std::optional<Permutation>> forced(9);
    forced[0] = forced_first;
    auto res = noncommuting_reps_search(nine, slice, forced, true);
    CHECK_FALSE(res.feasible);
    CHECK(res.dead_ends > 0);
    CHECK(!res.trace.empty());

    // replay determinism
    auto res2 = noncommuting_reps_search(nine, slice, forced, true);
    CHECK(res2.dead_ends == res.dead_ends);
    CHECK(res2.nodes == res.nodes);
    REQUIRE(res2.trace.size() == res.trace.size());
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        CHECK(res2.trace[i].chosen == res.trace[i].chosen);
        CHECK(res2.trace[i].stuck_group == res.trace[i].stuck_group);
    }

    // dropping any one group makes the search feasible
    for (std::size_t drop = 0; drop < nine.size(); ++drop) {
        std::vector<SubgroupGens> eight;
        for (std::size_t i = 0; i < nine.size(); ++i)
            if (i != drop) eight.push_back(nine[i]);
        auto r = noncommuting_reps_search(eight, slice, {}, true);
        CHECK(r.feasible);
        REQUIRE(r.assignment.size() == 8);
        for (std::size_t i = 0; i < r.assignment.size(); ++i)
            for (std::size_t j = i + 1; j < r.assignment.size(); ++j)
                CHECK_FALSE(r.assignment[i].commutes_with(r.assignment[j]));
    }
}

TEST_CASE("unfolded candidates leave the pinned search infeasible") {
    // disabling the power fold must not change the forced outcome
    auto slice = make_slice(SliceKind::even_case, 12);
    auto nine = nine_obstruction_groups(slice);
    std::vector<std::optional<Permutation>> forced(9);
    forced[0] = parse_cycles("(1,2,3)(7,8)(9,10,11,12)", 12);
    auto res = noncommuting_reps_search(nine, slice, forced, false);
    CHECK_FALSE(res.feasible);
    for (std::size_t i = 1; i < res.candidates.size(); ++i)
        CHECK(res.candidates[i].size() == 8);
}

TEST_CASE("without the pin the nine groups do admit representatives") {
    // the pinned element is a genuine normalization: it relies on a symmetry
    // of the whole 280-group configuration, not of these nine alone, so the
    // unpinned search on the literal nine groups finds an assignment
    auto slice = make_slice(SliceKind::even_case, 12);
    auto nine = nine_obstruction_groups(slice);
    auto res = noncommuting_reps_search(nine, slice, {}, false);
    CHECK(res.feasible);
    REQUIRE(res.assignment.size() == 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            CHECK_FALSE(res.assignment[i].commutes_with(res.assignment[j]));
    // no assignment keeps the first group's element in canonical form
    CHECK(res.assignment[0] != parse_cycles("(1,2,3)(7,8)(9,10,11,12)", 12));
}

TEST_CASE("structure checks for double even cycle classes") {
    auto r8 = verify_2k2kl_structure(GroupSpec::alt(8), ClassLabel::parse("4-4", 8), 2, 1000000);
    CHECK(r8.hypothesis_ok);
    CHECK(r8.k == 2);
    CHECK(r8.ell == 0);
    CHECK(r8.components_checked == 2);
    CHECK(r8.pairs_checked > 0);
    CHECK(r8.support_ok);
    CHECK(r8.partition_ok);
    CHECK(r8.block_action_ok);
    CHECK(r8.long_cycle_power_ok);

    auto r11 =
        verify_2k2kl_structure(GroupSpec::alt(11), ClassLabel::parse("4-4-3", 11), 1, 1000000);
    CHECK(r11.hypothesis_ok);
    CHECK(r11.ell == 3);
    CHECK(r11.support_ok);
    CHECK(r11.partition_ok);
    CHECK(r11.block_action_ok);
    CHECK(r11.long_cycle_power_ok);

    auto r15 =
        verify_2k2kl_structure(GroupSpec::alt(15), ClassLabel::parse("7-4-4", 15), 1, 1000000);
    CHECK(r15.hypothesis_ok);
    CHECK(r15.k == 2);
    CHECK(r15.ell == 7);
    CHECK(r15.support_ok);
    CHECK(r15.partition_ok);
    CHECK(r15.block_action_ok);
    CHECK(r15.long_cycle_power_ok);

    auto bad = verify_2k2kl_structure(GroupSpec::alt(15), ClassLabel::parse("6-4-2-2", 15), 1,
                                      1000000);
    CHECK_FALSE(bad.hypothesis_ok);
    CHECK(!bad.note.empty());

    auto bad9 = verify_2k2kl_structure(GroupSpec::alt(9), ClassLabel::parse("4-4", 9), 1, 1000000);
    CHECK_FALSE(bad9.hypothesis_ok);

    auto odd_pair =
        verify_2k2kl_structure(GroupSpec::alt(13), ClassLabel::parse("5-5-3", 13), 1, 1000000);
    CHECK_FALSE(odd_pair.hypothesis_ok);
}

TEST_CASE("delta and Delta agree with subset brute force on random class slices") {
    std::mt19937 rng(77);
    int instances = 0;
    while (instances < 100) {
        int n = 6 + static_cast<int>(rng() % 3);
        GroupSpec spec = (rng() % 2) ? GroupSpec::alt(n) : GroupSpec::sym(n);
        auto group = all_elements(spec);
        const auto& seed = group[rng() % group.size()];
        if (seed.is_identity()) continue;
        std::size_t want = 4 + rng() % 13;  // up to 16 vertices
        std::set<Permutation> sample{seed};
        for (int tries = 0; tries < 400 && sample.size() < want; ++tries) {
            const auto& q = group[rng() % group.size()];
            sample.insert(q * seed * q.inverse());
        }
        VertexSet vs;
        vs.degree = n;
        vs.elements.assign(sample.begin(), sample.end());
        ++instances;

        auto adj = adjacency_words(vs);
        int delta_brute = brute_independence(adj);
        int cover_brute = brute_cover(adj);
        REQUIRE(delta_brute <= cover_brute);

        auto mis = independence_number(vs, default_node_budget);
        CHECK(mis.exact);
        CHECK(mis.value == delta_brute);
        for (std::size_t i = 0; i < mis.certificate.size(); ++i)
            for (std::size_t j = i + 1; j < mis.certificate.size(); ++j)
                CHECK_FALSE(mis.certificate[i].commutes_with(mis.certificate[j]));

        auto cover = clique_cover_number(spec, vs, nullptr, 1000000, default_node_budget);
        CHECK(cover.exact);
        CHECK(cover.value == cover_brute);
        std::set<Permutation> covered;
        for (const auto& sub : cover.certificate) {
            CHECK(is_abelian(sub));
            for (const auto& x : close(sub, 1000000))
                if (std::binary_search(vs.elements.begin(), vs.elements.end(), x))
                    covered.insert(x);
        }
        CHECK(covered.size() == vs.elements.size());
    }
}
