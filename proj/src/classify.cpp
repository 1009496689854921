#include "cga/bitgraph.hpp"
#include "cga/groups.hpp"
#include "cga/solver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace cga {

bool type_abelian(const GroupSpec& spec, const CycleType& t) {
    static std::map<std::tuple<Family, int, std::vector<int>>, bool> memo;
    static std::mutex mu;
    auto key = std::make_tuple(spec.family, t.fixed_points(), t.parts);
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::vector<int> asc(t.parts);
    std::sort(asc.begin(), asc.end());
    std::vector<std::vector<int>> cycles;
    int pos = t.fixed_points();
    for (int part : asc) {
        std::vector<int> c;
        for (int j = 0; j < part; ++j) c.push_back(pos + j);
        pos += part;
        cycles.push_back(std::move(c));
    }
    Permutation rep = from_cycles(t.degree, cycles);
    bool res = is_abelian(centralizer_gens(spec, rep));

    std::lock_guard lock(mu);
    memo.emplace(std::move(key), res);
    return res;
}

namespace {

// all partitions with parts >= 2 of every j <= budget, padded rest implicit
void shape_rec(int remaining, int max_part, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
    out.push_back(current);
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
        current.push_back(part);
        shape_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

// set partitions as restricted growth strings, lexicographic
void rgs_rec(std::size_t i, int max_block, std::vector<int>& rgs,
             std::vector<std::vector<int>>& out) {
    if (i == rgs.size()) {
        out.push_back(rgs);
        return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
        rgs[i] = b;
        rgs_rec(i + 1, std::max(max_block, b), rgs, out);
    }
}

// the b cycles of equal length l braid into one bl-cycle whose b-th power is
// their product; it commutes with that product
std::vector<int> braid(const std::vector<std::vector<int>>& block) {
    std::size_t len = block.front().size();
    std::vector<int> cycle;
    cycle.reserve(block.size() * len);
    for (std::size_t j = 0; j < len; ++j)
        for (const auto& c : block) cycle.push_back(c[j]);
    return cycle;
}

struct CandidateScan {
    const GroupSpec& spec;
    const Permutation& g;
    // per cycle length: the options, each a bundle of cycles of the candidate
    std::vector<std::vector<std::vector<std::vector<int>>>> options_per_length;
    std::vector<std::vector<std::vector<int>>> fixed_options;
    std::vector<std::vector<int>> chosen;  // cycle bundle stack
    std::optional<Permutation> found;

    bool try_candidate() {
        Permutation h = from_cycles(g.degree(), chosen);
        if (h.is_identity()) return false;
        if (!spec.contains(h)) return false;
        if (!type_abelian(spec, CycleType::of(h))) return false;
        if (!h.commutes_with(g))
            throw std::logic_error("constructed candidate fails to commute");
        found = h;
        return true;
    }

    bool scan(std::size_t li) {
        if (li == options_per_length.size()) {
            for (const auto& shape : fixed_options) {
                std::size_t mark = chosen.size();
                for (const auto& c : shape) chosen.push_back(c);
                bool hit = try_candidate();
                chosen.resize(mark);
                if (hit) return true;
            }
            return false;
        }
        for (const auto& option : options_per_length[li]) {
            std::size_t mark = chosen.size();
            for (const auto& c : option) chosen.push_back(c);
            bool hit = scan(li + 1);
            chosen.resize(mark);
            if (hit) return true;
        }
        return false;
    }
};

// Candidates commuting with g, assembled from its cycles: per length, a set
// partition of the cycles where every block is either braided into one long
// cycle or dropped to fixed points, together with extra cycles of any shape
// on g's fixed points. Deterministic order; first candidate with an abelian
// centralizer wins.
std::optional<Permutation> constructed_witness(const GroupSpec& spec, const Permutation& g) {
    std::map<int, std::vector<std::vector<int>>> by_len;
    for (auto& c : g.cycles()) by_len[static_cast<int>(c.size())].push_back(c);

    CandidateScan scan{spec, g, {}, {}, {}, std::nullopt};

    for (const auto& [len, cycles] : by_len) {
        (void)len;
        std::size_t m = cycles.size();
        std::vector<std::vector<int>> rgs_list;
        std::vector<int> rgs(m, 0);
        rgs_rec(1, 0, rgs, rgs_list);  // rgs[0] = 0 always

        std::vector<std::vector<std::vector<int>>> options;
        for (const auto& r : rgs_list) {
            int blocks = 1 + *std::max_element(r.begin(), r.end());
            for (int drop_mask = 0; drop_mask < (1 << blocks); ++drop_mask) {
                std::vector<std::vector<int>> bundle;
                for (int b = 0; b < blocks; ++b) {
                    if (drop_mask >> b & 1) continue;
                    std::vector<std::vector<int>> block;
                    for (std::size_t i = 0; i < m; ++i)
                        if (r[i] == b) block.push_back(cycles[i]);
                    bundle.push_back(braid(block));
                }
                options.push_back(std::move(bundle));
            }
        }
        scan.options_per_length.push_back(std::move(options));
    }

    auto fixed = g.fixed_points();
    std::vector<std::vector<int>> shapes;
    std::vector<int> current;
    shape_rec(static_cast<int>(fixed.size()), static_cast<int>(fixed.size()), current, shapes);
    for (const auto& shape : shapes) {
        std::vector<std::vector<int>> bundle;
        std::size_t pos = 0;
        std::vector<int> asc(shape);
        std::sort(asc.begin(), asc.end());
        for (int part : asc) {
            std::vector<int> c;
            for (int j = 0; j < part; ++j) c.push_back(fixed[pos++]);
            bundle.push_back(std::move(c));
        }
        scan.fixed_options.push_back(std::move(bundle));
    }

    scan.scan(0);
    return scan.found;
}

}  // namespace

WitnessOutcome lies_in_abelian_centralizer(const GroupSpec& spec, const Permutation& g,
                                           std::uint64_t cap) {
    if (g.is_identity()) throw std::invalid_argument("identity has no class here");
    if (!spec.contains(g)) throw std::invalid_argument("element not in " + spec.str());

    if (auto h = constructed_witness(spec, g)) return {Verdict::yes, std::move(h)};

    try {
        auto cent = close(centralizer_gens(spec, g), cap);
        for (const auto& h : cent) {
            if (h.is_identity()) continue;
            if (type_abelian(spec, CycleType::of(h))) return {Verdict::yes, h};
        }
        return {Verdict::no, std::nullopt};
    } catch (const CapExceeded&) {
        return {Verdict::undecided, std::nullopt};
    }
}

std::vector<ClassRecord> classify_classes(const GroupSpec& spec, std::uint64_t cap) {
    auto labels = conjugacy_classes(spec);
    std::erase_if(labels, [](const ClassLabel& l) { return l.type.parts.empty(); });

    std::vector<CycleType> types;
    for (const auto& l : labels)
        if (types.empty() || !(types.back() == l.type)) types.push_back(l.type);

    std::vector<WitnessOutcome> outcomes(types.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < static_cast<int>(types.size()); ++i) {
        SplitTag tag = SplitTag::none;
        if (spec.family == Family::alt && splits_in_alt(types[static_cast<std::size_t>(i)]))
            tag = SplitTag::plus;
        Permutation rep =
            class_representative(spec, {types[static_cast<std::size_t>(i)], tag});
        outcomes[static_cast<std::size_t>(i)] =
            lies_in_abelian_centralizer(spec, rep, cap);
    }

    std::vector<ClassRecord> records;
    std::size_t ti = 0;
    for (const auto& label : labels) {
        while (!(types[ti] == label.type)) ++ti;
        const auto& outcome = outcomes[ti];
        ClassRecord rec;
        rec.label = label;
        rec.representative = class_representative(spec, label);
        rec.size = class_size(spec, label);
        rec.in_ya = outcome.verdict;
        if (outcome.witness) {
            if (label.tag == SplitTag::minus) {
                int n = spec.degree;
                Permutation t = from_cycles(n, {{n - 2, n - 1}});
                rec.witness = t * *outcome.witness * t;
            } else {
                rec.witness = outcome.witness;
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<std::vector<Permutation>> maximal_abelian_overgroups(const GroupSpec& spec,
                                                                 const Permutation& g,
                                                                 std::uint64_t cap) {
    if (!spec.contains(g)) throw std::invalid_argument("element not in " + spec.str());
    auto cent = close(centralizer_gens(spec, g), cap);
    BitGraph graph = commuting_graph(cent);
    auto cliques = maximal_cliques(graph);

    std::vector<std::vector<Permutation>> out;
    out.reserve(cliques.size());
    for (const auto& clique : cliques) {
        std::vector<Permutation> sub;
        sub.reserve(clique.size());
        for (int idx : clique) sub.push_back(cent[static_cast<std::size_t>(idx)]);
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cga
