#include "cga/validate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace cga {

namespace {

using Fragment = std::vector<std::pair<int, int>>;

// All ways to map one block of same-length cycles onto itself: shuffle the
// cycles, then rotate each target independently.
std::vector<Fragment> cycle_block_fragments(const std::vector<std::vector<int>>& cycles) {
    std::size_t len = cycles.front().size();
    std::vector<int> order(cycles.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Fragment> out;
    do {
        std::vector<std::size_t> rot(cycles.size(), 0);
        for (;;) {
            Fragment frag;
            frag.reserve(len * cycles.size());
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                const auto& src = cycles[i];
                const auto& dst = cycles[order[i]];
                for (std::size_t t = 0; t < len; ++t)
                    frag.emplace_back(src[t], dst[(t + rot[i]) % len]);
            }
            out.push_back(std::move(frag));
            std::size_t pos = 0;
            while (pos < rot.size() && ++rot[pos] == len) rot[pos++] = 0;
            if (pos == rot.size()) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::vector<Fragment> fixed_block_fragments(const std::vector<int>& fixed) {
    std::vector<int> order(fixed.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Fragment> out;
    do {
        Fragment frag;
        frag.reserve(fixed.size());
        for (std::size_t i = 0; i < fixed.size(); ++i) frag.emplace_back(fixed[i], fixed[order[i]]);
        out.push_back(std::move(frag));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

void fail(std::string* why, const std::string& text) {
    if (why) *why = text;
}

}  // namespace

std::vector<Permutation> centralizer_elements_direct(const GroupSpec& spec,
                                                     const Permutation& f) {
    std::map<std::size_t, std::vector<std::vector<int>>> by_len;
    for (auto& c : f.cycles()) by_len[c.size()].push_back(std::move(c));

    std::vector<std::vector<Fragment>> blocks;
    for (const auto& [len, cycles] : by_len) blocks.push_back(cycle_block_fragments(cycles));
    if (auto fixed = f.fixed_points(); !fixed.empty())
        blocks.push_back(fixed_block_fragments(fixed));

    std::vector<std::vector<std::uint8_t>> tables(1, std::vector<std::uint8_t>(f.degree()));
    std::iota(tables[0].begin(), tables[0].end(), std::uint8_t{0});
    for (const auto& frags : blocks) {
        std::vector<std::vector<std::uint8_t>> next;
        next.reserve(tables.size() * frags.size());
        for (const auto& base : tables)
            for (const auto& frag : frags) {
                auto img = base;
                for (auto [from, to] : frag) img[from] = static_cast<std::uint8_t>(to);
                next.push_back(std::move(img));
            }
        tables = std::move(next);
    }

    std::vector<Permutation> out;
    out.reserve(tables.size());
    for (auto& img : tables) {
        Permutation p = Permutation::from_images(std::move(img));
        if (spec.family == Family::alt && !p.even()) continue;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool valid_noncommuting_set(const std::vector<Permutation>& xs, std::string* why) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j]) {
                fail(why, "duplicate element at positions " + std::to_string(i) + " and " +
                              std::to_string(j));
                return false;
            }
            if (xs[i].commutes_with(xs[j])) {
                fail(why, render_cycles(xs[i]) + " commutes with " + render_cycles(xs[j]));
                return false;
            }
        }
    return true;
}

bool valid_abelian_cover(const std::vector<Permutation>& points,
                         const std::vector<SubgroupGens>& cover, std::size_t element_cap,
                         std::string* why) {
    std::vector<std::vector<Permutation>> closures;
    closures.reserve(cover.size());
    for (std::size_t m = 0; m < cover.size(); ++m) {
        const auto& gens = cover[m].gens;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!gens[i].commutes_with(gens[j])) {
                    fail(why, "member " + std::to_string(m) + " has non-commuting generators");
                    return false;
                }
        // plain product saturation, kept separate from the search-side closure
        std::vector<Permutation> elems{Permutation(cover[m].degree)};
        std::vector<Permutation> frontier;
        for (const auto& g : gens)
            if (!std::binary_search(elems.begin(), elems.end(), g)) {
                elems.insert(std::lower_bound(elems.begin(), elems.end(), g), g);
                frontier.push_back(g);
            }
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    Permutation y = x * g;
                    if (!std::binary_search(elems.begin(), elems.end(), y)) {
                        elems.insert(std::lower_bound(elems.begin(), elems.end(), y), y);
                        next.push_back(std::move(y));
                    }
                }
            if (elems.size() > element_cap) {
                fail(why, "member " + std::to_string(m) + " closure exceeds cap");
                return false;
            }
            frontier = std::move(next);
        }
        closures.push_back(std::move(elems));
    }
    for (const auto& p : points) {
        bool hit = false;
        for (const auto& elems : closures)
            if (std::binary_search(elems.begin(), elems.end(), p)) {
                hit = true;
                break;
            }
        if (!hit) {
            fail(why, render_cycles(p) + " lies in no member");
            return false;
        }
    }
    return true;
}

bool valid_witness_pair(const GroupSpec& spec, const Permutation& h, const Permutation& f,
                        std::string* why) {
    if (!spec.contains(h)) {
        fail(why, render_cycles(h) + " not in " + spec.str());
        return false;
    }
    if (!spec.contains(f)) {
        fail(why, render_cycles(f) + " not in " + spec.str());
        return false;
    }
    if (!h.commutes_with(f)) {
        fail(why, render_cycles(h) + " does not commute with " + render_cycles(f));
        return false;
    }
    auto cent = centralizer_elements_direct(spec, f);
    for (std::size_t i = 0; i < cent.size(); ++i)
        for (std::size_t j = i + 1; j < cent.size(); ++j)
            if (!cent[i].commutes_with(cent[j])) {
                std::ostringstream os;
                os << "centralizer of " << render_cycles(f) << " is not abelian: "
                   << render_cycles(cent[i]) << " vs " << render_cycles(cent[j]);
                fail(why, os.str());
                return false;
            }
    return true;
}

}  // namespace cga
