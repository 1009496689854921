#pragma once

// brute-force helpers shared by the test suites; deliberately independent of
// the library's closure and centralizer code paths

#include "cga/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>
#include <vector>

inline std::vector<cga::Permutation> all_elements(const cga::GroupSpec& spec) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(spec.degree));
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    std::vector<cga::Permutation> out;
    do {
        auto p = cga::Permutation::from_images(img);
        if (spec.family == cga::Family::sym || p.even()) out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;  // ascending by image table already
}

// conjugation orbit of seed under the group, via BFS over generator conjugation
inline std::vector<cga::Permutation> conjugacy_orbit(const cga::GroupSpec& spec,
                                                     const cga::Permutation& seed) {
    auto gens = spec.gens();
    std::vector<cga::Permutation> invs;
    for (const auto& g : gens) invs.push_back(g.inverse());
    std::unordered_set<cga::Permutation, cga::PermHash> seen{seed};
    std::deque<cga::Permutation> queue{seed};
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            auto y = gens[i] * x * invs[i];
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    std::vector<cga::Permutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<cga::Permutation> brute_centralizer(const std::vector<cga::Permutation>& group,
                                                       const cga::Permutation& g) {
    std::vector<cga::Permutation> out;
    for (const auto& x : group)
        if (x.commutes_with(g)) out.push_back(x);
    return out;
}
