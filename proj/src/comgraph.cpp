#include "cga/comgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cga {
namespace {

std::vector<int> cycle_points(int first, int last) {
    std::vector<int> pts(static_cast<std::size_t>(last - first + 1));
    std::iota(pts.begin(), pts.end(), first);
    return pts;
}

// g restricted to the support of cyc acts as cyc^s with gcd(s, len) = 1.
bool acts_as_coprime_power(const Permutation& g, const Permutation& cyc) {
    auto orbits = cyc.cycles();
    if (orbits.size() != 1) throw std::logic_error("designated cycle is not a cycle");
    const auto& orbit = orbits[0];
    int len = static_cast<int>(orbit.size());
    std::vector<int> pos(static_cast<std::size_t>(cyc.degree()), -1);
    for (int i = 0; i < len; ++i) pos[static_cast<std::size_t>(orbit[static_cast<std::size_t>(i)])] = i;
    int shift = -1;
    for (int x : orbit) {
        int y = g(x);
        if (pos[static_cast<std::size_t>(y)] < 0) return false;
        int d = (pos[static_cast<std::size_t>(y)] - pos[static_cast<std::size_t>(x)] + len) % len;
        if (shift < 0)
            shift = d;
        else if (d != shift)
            return false;
    }
    return std::gcd(shift, len) == 1;
}

// all 2-cycle/3-cycle pairs inside {0..7}: every 2-subset, every 3-subset of
// the leftovers in both cyclic orders
template <typename F>
void for_each_slice_head(F&& cb) {
    for (int p = 0; p < 8; ++p)
        for (int q = p + 1; q < 8; ++q) {
            std::vector<int> rest;
            for (int x = 0; x < 8; ++x)
                if (x != p && x != q) rest.push_back(x);
            for (std::size_t i = 0; i < rest.size(); ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j)
                    for (std::size_t k = j + 1; k < rest.size(); ++k) {
                        std::vector<int> two{p, q};
                        cb(two, std::vector<int>{rest[i], rest[j], rest[k]});
                        cb(two, std::vector<int>{rest[i], rest[k], rest[j]});
                    }
        }
}

void check_slice_degree(SliceKind kind, int n) {
    if (kind == SliceKind::even_case) {
        if (!(n == 12 || (n >= 16 && n % 2 == 0)))
            throw std::invalid_argument("even case needs n = 12 or even n >= 16");
    } else {
        if (!(n >= 21 && n % 2 == 1)) throw std::invalid_argument("odd case needs odd n >= 21");
    }
}

}  // namespace

SliceDef make_slice(SliceKind kind, int n) {
    check_slice_degree(kind, n);
    SliceDef slice;
    slice.kind = kind;
    slice.degree = n;
    std::vector<std::vector<int>> tail;
    if (kind == SliceKind::even_case) {
        tail.push_back(cycle_points(8, n - 1));
        slice.gamma = from_cycles(n, {tail[0]});
    } else {
        tail.push_back(cycle_points(8, 15));
        tail.push_back(cycle_points(16, n - 1));
        slice.gamma = from_cycles(n, {tail[0]});
        slice.theta = from_cycles(n, {tail[1]});
    }
    std::vector<Permutation> elems;
    for_each_slice_head([&](const std::vector<int>& two, const std::vector<int>& three) {
        auto cycles = tail;
        cycles.push_back(two);
        cycles.push_back(three);
        elems.push_back(from_cycles(n, cycles));
    });
    std::sort(elems.begin(), elems.end());
    slice.vertices = VertexSet{n, std::move(elems)};
    return slice;
}

bool slice_contains(const SliceDef& slice, const Permutation& g) {
    return g.degree() == slice.degree &&
           std::binary_search(slice.vertices.elements.begin(), slice.vertices.elements.end(), g);
}

bool power_candidate(const SliceDef& slice, const Permutation& g) {
    if (g.degree() != slice.degree) return false;
    if (CycleType::of(g) != CycleType::of(slice.vertices.elements.front())) return false;
    if (!acts_as_coprime_power(g, slice.gamma)) return false;
    if (slice.theta && !acts_as_coprime_power(g, *slice.theta)) return false;
    return true;
}

std::vector<Permutation> subgroup_slice_candidates(const SliceDef& slice,
                                                   const SubgroupGens& group,
                                                   std::uint64_t cap) {
    std::vector<Permutation> out;
    for (const auto& x : close(group, cap))
        if (power_candidate(slice, x)) out.push_back(x);
    return out;  // close() is sorted already
}

std::vector<Permutation> neighbors_in_class(const GroupSpec& spec, const Permutation& v,
                                            const ClassLabel& label, std::uint64_t cap) {
    if (!spec.contains(v)) throw std::invalid_argument("element outside the group");
    std::vector<Permutation> out;
    for (const auto& x : close(centralizer_gens(spec, v), cap)) {
        if (x.is_identity() || x == v) continue;
        if (CycleType::of(x) != label.type) continue;
        if (label.tag != SplitTag::none && class_of(spec, x) != label) continue;
        out.push_back(x);
    }
    return out;
}

VertexSet component_of(const GroupSpec& spec, const Permutation& v, std::uint64_t cap,
                       std::size_t max_size) {
    ClassLabel label = class_of(spec, v);
    std::set<Permutation> seen{v};
    std::deque<Permutation> frontier{v};
    while (!frontier.empty()) {
        Permutation x = frontier.front();
        frontier.pop_front();
        for (const auto& nb : neighbors_in_class(spec, x, label, cap)) {
            if (!seen.insert(nb).second) continue;
            if (seen.size() > max_size) throw std::length_error("component exceeds size budget");
            frontier.push_back(nb);
        }
    }
    VertexSet out;
    out.degree = v.degree();
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

BitGraph commuting_graph_of(const VertexSet& vs) {
    return commuting_graph_parallel(vs.elements);
}

int max_commuting_subset(const VertexSet& vs) {
    BitGraph g = commuting_graph_of(vs);
    SolveStats stats;
    auto clique = max_clique_parallel(g, 0, default_node_budget, &stats);
    if (!stats.exact) throw std::runtime_error("clique search exhausted its node budget");
    return static_cast<int>(clique.size());
}

IndependenceResult independence_number(const VertexSet& vs, std::uint64_t node_budget,
                                       int stop_at) {
    BitGraph anti = commuting_graph_of(vs).complement();
    SolveStats stats;
    auto best = max_clique_parallel(anti, stop_at, node_budget, &stats);
    IndependenceResult res;
    res.value = static_cast<int>(best.size());
    for (int i : best) res.certificate.push_back(vs.elements[static_cast<std::size_t>(i)]);
    res.exact = stats.exact && (stop_at == 0 || res.value < stop_at);
    return res;
}

namespace {

struct CliquePool {
    std::vector<Bitset> masks;
    std::vector<SubgroupGens> owners;
    std::vector<char> from_hint;
    std::map<std::vector<std::uint64_t>, std::size_t> index_of;

    // distinct subgroups can cut the vertex set in the same place (a hint
    // member and its even part, say), so the pool is keyed by mask; a hint
    // arrival wins the owner slot so certificates cite the declared family
    void add(const VertexSet& vs, const std::vector<Permutation>& subgroup,
             const SubgroupGens& gens, bool hint) {
        Bitset mask(vs.elements.size());
        std::size_t hits = 0;
        for (const auto& x : subgroup) {
            auto it = std::lower_bound(vs.elements.begin(), vs.elements.end(), x);
            if (it != vs.elements.end() && *it == x) {
                mask.set(static_cast<int>(it - vs.elements.begin()));
                ++hits;
            }
        }
        if (hits == 0) return;
        auto [slot, fresh] = index_of.try_emplace(mask.w, masks.size());
        if (!fresh) {
            std::size_t i = slot->second;
            if (hint && !from_hint[i]) owners[i] = gens;
            from_hint[i] = from_hint[i] || hint;
            return;
        }
        masks.push_back(std::move(mask));
        owners.push_back(gens);
        from_hint.push_back(hint);
    }

    // keep only set-maximal distinct masks
    void prune() {
        std::vector<std::size_t> order(masks.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return masks[a].count() > masks[b].count();
        });
        std::vector<Bitset> kept;
        std::vector<SubgroupGens> kept_owner;
        std::vector<char> kept_hint;
        for (std::size_t idx : order) {
            bool dominated = false;
            for (const auto& m : kept)
                if (masks[idx].subset_of(m)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                kept.push_back(masks[idx]);
                kept_owner.push_back(owners[idx]);
                kept_hint.push_back(from_hint[idx]);
            }
        }
        masks = std::move(kept);
        owners = std::move(kept_owner);
        from_hint = std::move(kept_hint);
        index_of.clear();  // stale after reorder; nothing is added post-prune
    }
};

// small generating set for a closed subgroup given as a sorted element list
std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& sub) {
    std::vector<Permutation> gens;
    std::vector<Permutation> have{Permutation(degree)};
    for (const auto& x : sub) {
        if (std::binary_search(have.begin(), have.end(), x)) continue;
        gens.push_back(x);
        have = close(SubgroupGens{degree, gens}, sub.size());
    }
    return gens;
}

// maximal abelian overgroups are conjugation-equivariant, so the expensive
// clique enumeration runs once per cycle type and transports to each vertex
CliquePool harvest_cliques(const GroupSpec& spec, const VertexSet& vs, const CoverFamily* hint,
                           std::uint64_t closure_cap) {
    CliquePool pool;
    std::set<std::vector<Permutation>> seen;
    struct BaseEntry {
        Permutation rep;
        std::vector<std::vector<Permutation>> subs;
        std::vector<std::vector<Permutation>> gens;
    };
    std::map<CycleType, BaseEntry> cache;
    for (const auto& v : vs.elements) {
        auto it = cache.find(CycleType::of(v));
        if (it == cache.end()) {
            BaseEntry e;
            e.rep = v;
            e.subs = maximal_abelian_overgroups(spec, v, closure_cap);
            for (const auto& sub : e.subs) e.gens.push_back(reduce_generators(vs.degree, sub));
            it = cache.emplace(CycleType::of(v), std::move(e)).first;
        }
        const BaseEntry& e = it->second;
        for (std::size_t s = 0; s < e.subs.size(); ++s) {
            std::vector<Permutation> sub = e.subs[s];
            std::vector<Permutation> gens = e.gens[s];
            if (!(v == e.rep)) {
                Permutation q = conjugator_taking(e.rep, v);
                Permutation qi = q.inverse();
                for (auto& x : sub) x = q * x * qi;
                for (auto& x : gens) x = q * x * qi;
                std::sort(sub.begin(), sub.end());
            }
            if (seen.insert(sub).second) pool.add(vs, sub, SubgroupGens{vs.degree, gens}, false);
        }
    }
    if (hint)
        for (const auto& member : hint->members) {
            auto sub = close(member, closure_cap);
            if (seen.insert(sub).second) pool.add(vs, sub, member, true);
        }
    pool.prune();
    return pool;
}

CoverResult cover_from_pool(const CliquePool& pool, std::size_t universe, int lower_bound,
                            std::uint64_t node_budget) {
    // greedy seeds: whole pool, and the hint members alone (a structural
    // hint is usually a near-partition that pool-wide greedy walks past)
    std::optional<std::vector<std::size_t>> seed;
    auto consider = [&](const std::vector<Bitset>& sets, const std::vector<std::size_t>& back) {
        try {
            auto picked = greedy_cover(universe, sets);
            if (!back.empty())
                for (auto& i : picked) i = back[i];
            if (!seed || picked.size() < seed->size()) seed = std::move(picked);
        } catch (const std::invalid_argument&) {
        }
    };
    consider(pool.masks, {});
    std::vector<Bitset> hint_masks;
    std::vector<std::size_t> hint_back;
    for (std::size_t i = 0; i < pool.masks.size(); ++i)
        if (pool.from_hint[i]) {
            hint_masks.push_back(pool.masks[i]);
            hint_back.push_back(i);
        }
    if (!hint_masks.empty()) consider(hint_masks, hint_back);

    std::size_t max_size = 0;
    for (const auto& m : pool.masks) max_size = std::max(max_size, static_cast<std::size_t>(m.count()));
    std::size_t floor_bound = std::max<std::size_t>(
        static_cast<std::size_t>(std::max(lower_bound, 1)),
        max_size ? (universe + max_size - 1) / max_size : universe);

    CoverResult res;
    if (seed && seed->size() == floor_bound) {
        res.value = static_cast<int>(seed->size());
        for (std::size_t i : *seed) res.certificate.push_back(pool.owners[i]);
        res.exact = true;
        return res;
    }
    SolveStats stats;
    auto picked = min_set_cover(universe, pool.masks, lower_bound, node_budget, &stats);
    if (seed && seed->size() < picked.size()) {
        picked = *seed;  // budget ran out before beating the seed
        stats.exact = false;
    }
    res.value = static_cast<int>(picked.size());
    for (std::size_t i : picked) res.certificate.push_back(pool.owners[i]);
    res.exact = stats.exact;
    return res;
}

}  // namespace

CoverResult clique_cover_number(const GroupSpec& spec, const VertexSet& vs,
                                const CoverFamily* hint, std::uint64_t closure_cap,
                                std::uint64_t node_budget) {
    CliquePool pool = harvest_cliques(spec, vs, hint, closure_cap);
    return cover_from_pool(pool, vs.elements.size(), 1, node_budget);
}

ComponentAnalysis analyze_component(const GroupSpec& spec, const VertexSet& component,
                                    std::uint64_t closure_cap, std::uint64_t node_budget) {
    ComponentAnalysis out;
    out.component = component;
    CliquePool pool = harvest_cliques(spec, component, nullptr, closure_cap);

    // cover first: an independent set matching ANY cover pins both values,
    // so the cheap stop_at probe usually spares the full independence proof
    auto cover = cover_from_pool(pool, component.elements.size(), 1, node_budget);
    auto mis = independence_number(component, node_budget, cover.value);

    if (mis.value == cover.value) {
        out.delta = out.Delta = mis.value;
        out.independent_certificate = std::move(mis.certificate);
        out.cover_certificate = std::move(cover.certificate);
        out.delta_exact = out.Delta_exact = out.certified = true;
        return out;
    }

    // bounds did not meet; settle delta on its own
    auto full = independence_number(component, node_budget, 0);
    bool delta_exact = full.exact;  // true only when the run completed
    if (full.value > mis.value) mis = std::move(full);
    out.delta = mis.value;
    out.independent_certificate = std::move(mis.certificate);
    out.Delta = cover.value;
    out.cover_certificate = std::move(cover.certificate);
    out.delta_exact = delta_exact;
    out.Delta_exact = cover.exact;
    out.certified = out.delta == out.Delta || (out.delta_exact && out.Delta_exact);
    if (out.delta > out.Delta) throw std::logic_error("independent set larger than cover");
    return out;
}

CoverFamily structural_cover_family(SliceKind kind, int n) {
    check_slice_degree(kind, n);
    std::vector<std::vector<int>> tail;
    if (kind == SliceKind::even_case) {
        tail.push_back(cycle_points(8, n - 1));
    } else {
        tail.push_back(cycle_points(8, 15));
        tail.push_back(cycle_points(16, n - 1));
    }
    CoverFamily fam;
    fam.description = "2-cycle and two complementary 3-cycles on the first 8 points, "
                      "with the designated long cycle(s)";
    for (int p = 0; p < 8; ++p)
        for (int q = p + 1; q < 8; ++q) {
            std::vector<int> rest;
            for (int x = 0; x < 8; ++x)
                if (x != p && x != q) rest.push_back(x);
            // split the 6 leftovers into unordered 3-set pairs: pin rest[0]
            for (std::size_t j = 1; j < rest.size(); ++j)
                for (std::size_t k = j + 1; k < rest.size(); ++k) {
                    std::vector<int> left{rest[0], rest[j], rest[k]};
                    std::vector<int> right;
                    for (int x : rest)
                        if (x != rest[0] && x != rest[j] && x != rest[k]) right.push_back(x);
                    SubgroupGens member;
                    member.degree = n;
                    member.gens.push_back(from_cycles(n, {left}));
                    member.gens.push_back(from_cycles(n, {right}));
                    member.gens.push_back(from_cycles(n, {{p, q}}));
                    for (const auto& c : tail) member.gens.push_back(from_cycles(n, {c}));
                    fam.members.push_back(std::move(member));
                }
        }
    return fam;
}

std::vector<SubgroupGens> nine_obstruction_groups(const SliceDef& slice) {
    static const int table[9][3][3] = {
        {{1, 2, 3}, {4, 5, 6}, {7, 8}},  //
        {{1, 2, 3}, {5, 7, 8}, {4, 6}},  //
        {{5, 7, 8}, {2, 4, 6}, {1, 3}},  //
        {{2, 4, 6}, {1, 3, 5}, {7, 8}},  //
        {{1, 3, 5}, {6, 7, 8}, {2, 4}},  //
        {{1, 2, 3}, {4, 7, 8}, {5, 6}},  //
        {{4, 7, 8}, {1, 5, 6}, {2, 3}},  //
        {{2, 3, 4}, {1, 5, 6}, {7, 8}},  //
        {{2, 3, 4}, {6, 7, 8}, {1, 5}},  //
    };
    std::vector<SubgroupGens> out;
    for (const auto& row : table) {
        SubgroupGens g;
        g.degree = slice.degree;
        for (int c = 0; c < 3; ++c) {
            std::vector<int> pts;
            for (int v : row[c])
                if (v != 0) pts.push_back(v - 1);
            g.gens.push_back(from_cycles(slice.degree, {pts}));
        }
        g.gens.push_back(slice.gamma);
        if (slice.theta) g.gens.push_back(*slice.theta);
        out.push_back(std::move(g));
    }
    return out;
}

RepsSearchResult noncommuting_reps_search(const std::vector<SubgroupGens>& groups,
                                          const SliceDef& slice,
                                          const std::vector<std::optional<Permutation>>& forced,
                                          bool reduce_powers, std::size_t trace_cap) {
    if (!forced.empty() && forced.size() != groups.size())
        throw std::invalid_argument("forced assignment length mismatch");

    std::vector<std::vector<Permutation>> cand;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        auto c = subgroup_slice_candidates(slice, groups[i], 1000000);
        if (c.empty()) throw std::invalid_argument("group misses the slice");
        if (!forced.empty() && forced[i]) {
            if (!std::binary_search(c.begin(), c.end(), *forced[i]))
                throw std::invalid_argument("forced element is not a candidate of its group");
            c = {*forced[i]};
        }
        cand.push_back(std::move(c));
    }

    if (reduce_powers) {
        // fold candidates with identical commuting behaviour against every
        // candidate of the other groups; keep the least of each bucket
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::map<std::vector<bool>, Permutation> buckets;
            for (const auto& x : cand[i]) {
                std::vector<bool> sig;
                for (std::size_t j = 0; j < cand.size(); ++j) {
                    if (j == i) continue;
                    for (const auto& y : cand[j]) sig.push_back(x.commutes_with(y));
                }
                buckets.try_emplace(std::move(sig), x);  // candidates are sorted
            }
            std::vector<Permutation> folded;
            for (auto& [sig, x] : buckets) folded.push_back(x);
            std::sort(folded.begin(), folded.end());
            cand[i] = std::move(folded);
        }
    }

    RepsSearchResult res;
    res.candidates = cand;
    std::vector<int> chosen;
    std::vector<Permutation> picked;

    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == cand.size()) {
            res.feasible = true;
            res.assignment = picked;
            return true;
        }
        bool any = false;
        for (std::size_t idx = 0; idx < cand[depth].size(); ++idx) {
            const auto& x = cand[depth][idx];
            bool ok = true;
            for (const auto& y : picked)
                if (x.commutes_with(y)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            any = true;
            ++res.nodes;
            chosen.push_back(static_cast<int>(idx));
            picked.push_back(x);
            if (self(self, depth + 1)) return true;
            picked.pop_back();
            chosen.pop_back();
        }
        if (!any) {
            ++res.dead_ends;
            if (res.trace.size() < trace_cap)
                res.trace.push_back(RepsTraceEntry{chosen, static_cast<int>(depth)});
        }
        return false;
    };
    dfs(dfs, 0);
    return res;
}

namespace {

using Blocks = std::set<std::vector<int>>;

// orbits of g^2 on the supports of the two 2k-cycles of g
Blocks double_cycle_blocks(const Permutation& g, int two_k) {
    Blocks blocks;
    Permutation sq = g * g;
    std::vector<bool> seen(static_cast<std::size_t>(g.degree()), false);
    for (const auto& cyc : g.cycles()) {
        if (static_cast<int>(cyc.size()) != two_k) continue;
        for (int start : cyc) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            std::vector<int> orb;
            int x = start;
            do {
                orb.push_back(x);
                seen[static_cast<std::size_t>(x)] = true;
                x = sq(x);
            } while (x != start);
            std::sort(orb.begin(), orb.end());
            blocks.insert(orb);
        }
    }
    return blocks;
}

// the unique cycle of g with the given length, as a permutation
Permutation lone_cycle(const Permutation& g, int len) {
    std::vector<int> found;
    for (const auto& cyc : g.cycles())
        if (static_cast<int>(cyc.size()) == len) {
            if (!found.empty()) throw std::logic_error("cycle length not unique");
            found = cyc;
        }
    return from_cycles(g.degree(), {found});
}

}  // namespace

StructureReport verify_2k2kl_structure(const GroupSpec& spec, const ClassLabel& label,
                                       int sample_components, std::uint64_t cap) {
    StructureReport rep;
    auto parts = label.type.parts;  // descending
    int n = spec.degree;
    if (parts.size() == 2 && parts[0] == parts[1] && parts[0] % 2 == 0) {
        rep.k = parts[0] / 2;
        rep.ell = 0;
        if (n != 4 * rep.k) {
            rep.note = "two equal even parts need n = 4k";
            return rep;
        }
    } else if (parts.size() == 3) {
        if (parts[0] == parts[1] && parts[0] % 2 == 0) {
            rep.k = parts[0] / 2;
            rep.ell = parts[2];
        } else if (parts[1] == parts[2] && parts[1] % 2 == 0) {
            rep.k = parts[1] / 2;
            rep.ell = parts[0];
        } else {
            rep.note = "no equal even pair among the parts";
            return rep;
        }
        if (rep.ell == 2 * rep.k || rep.ell == 4 * rep.k) {
            rep.note = "third part collides with 2k or 4k";
            return rep;
        }
        if (n - 4 * rep.k - rep.ell >= std::min(rep.ell, 2 * rep.k)) {
            rep.note = "too many fixed points for the structure argument";
            return rep;
        }
    } else {
        rep.note = "shape is not 2k-2k or 2k-2k-l";
        return rep;
    }
    rep.hypothesis_ok = true;
    rep.long_cycle_power_ok = rep.support_ok = rep.partition_ok = rep.block_action_ok = true;

    // deterministic walk of the class: BFS by conjugation with the group
    // generators, harvesting seeds of unseen components
    auto gens = spec.gens();
    Permutation rep0 = class_representative(spec, label);
    std::set<Permutation> walked{rep0};
    std::deque<Permutation> frontier{rep0};
    std::set<Permutation> covered;
    std::vector<VertexSet> comps;
    comps.push_back(component_of(spec, rep0, cap));
    covered.insert(comps.back().elements.begin(), comps.back().elements.end());
    while (static_cast<int>(comps.size()) < sample_components && !frontier.empty()) {
        Permutation x = frontier.front();
        frontier.pop_front();
        for (const auto& q : gens) {
            Permutation y = q * x * q.inverse();
            if (!walked.insert(y).second) continue;
            frontier.push_back(y);
            if (!covered.count(y)) {
                comps.push_back(component_of(spec, y, cap));
                covered.insert(comps.back().elements.begin(), comps.back().elements.end());
                if (static_cast<int>(comps.size()) >= sample_components) break;
            }
        }
    }

    for (const auto& comp : comps) {
        ++rep.components_checked;
        const auto& elems = comp.elements;
        Blocks blocks = double_cycle_blocks(elems.front(), 2 * rep.k);
        if (blocks.size() != 4) throw std::logic_error("expected four half-cycle blocks");
        std::vector<std::vector<int>> block_list(blocks.begin(), blocks.end());
        for (const auto& e : elems) {
            if (double_cycle_blocks(e, 2 * rep.k) != blocks) rep.partition_ok = false;
            // induced action on the four blocks: identity or a double swap
            std::vector<int> pi(block_list.size(), -1);
            bool maps_blocks = true;
            for (std::size_t b = 0; b < block_list.size(); ++b) {
                std::vector<int> img;
                for (int x : block_list[b]) img.push_back(e(x));
                std::sort(img.begin(), img.end());
                auto it = std::find(block_list.begin(), block_list.end(), img);
                if (it == block_list.end()) {
                    maps_blocks = false;
                    break;
                }
                pi[b] = static_cast<int>(it - block_list.begin());
            }
            bool ok = maps_blocks;
            if (ok) {
                bool is_id = true, fixes_none = true;
                for (std::size_t b = 0; b < pi.size(); ++b) {
                    if (pi[static_cast<std::size_t>(pi[b])] != static_cast<int>(b)) ok = false;
                    if (pi[b] != static_cast<int>(b)) is_id = false;
                    if (pi[b] == static_cast<int>(b)) fixes_none = false;
                }
                ok = ok && (is_id || fixes_none);
            }
            if (!ok) rep.block_action_ok = false;
        }
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                if (!elems[i].commutes_with(elems[j])) continue;
                ++rep.pairs_checked;
                if (elems[i].support() != elems[j].support()) rep.support_ok = false;
                if (rep.ell > 0) {
                    Permutation c = lone_cycle(elems[i], rep.ell);
                    if (!acts_as_coprime_power(elems[j], c)) rep.long_cycle_power_ok = false;
                }
            }
    }
    return rep;
}

}  // namespace cga
