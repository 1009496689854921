#include "cga/solver.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cga {

namespace {

struct CliqueSearch {
    const BitGraph& g;
    int stop_at;
    std::uint64_t budget;
    SolveStats stats;
    bool done = false;
    std::vector<int> best;
    std::vector<int> current;

    CliqueSearch(const BitGraph& graph, int stop, std::uint64_t nodes)
        : g(graph), stop_at(stop), budget(nodes) {}

    void take_current() {
        if (current.size() > best.size()) {
            best = current;
            if (stop_at > 0 && static_cast<int>(best.size()) >= stop_at) done = true;
        }
    }

    void expand(const Bitset& p) {
        ++stats.nodes;
        if (budget > 0 && stats.nodes > budget) {
            stats.exact = false;
            done = true;
            return;
        }

        // greedy coloring; inside one class the lowest vertex goes first,
        // so the branch order is canonical
        std::vector<int> order;
        std::vector<int> color;
        Bitset uncolored = p;
        int c = 0;
        while (!uncolored.empty()) {
            ++c;
            Bitset avail = uncolored;
            while (!avail.empty()) {
                int v = avail.lowest();
                order.push_back(v);
                color.push_back(c);
                uncolored.reset(v);
                avail.reset(v);
                avail.and_not(g.row(v));
            }
        }

        Bitset pc = p;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            // color is the bound for everything still unprocessed here
            if (static_cast<int>(current.size()) + color[static_cast<std::size_t>(i)] <=
                static_cast<int>(best.size()))
                return;
            int v = order[static_cast<std::size_t>(i)];
            current.push_back(v);
            take_current();
            if (done) { current.pop_back(); return; }
            Bitset p2 = pc;
            p2 &= g.row(v);
            if (!p2.empty()) expand(p2);
            current.pop_back();
            pc.reset(v);
            if (done) return;
        }
    }
};

Bitset full_set(int n) {
    Bitset b(n);
    for (std::size_t i = 0; i < b.w.size(); ++i) b.w[i] = ~0ull;
    if (n & 63) b.w.back() = (1ull << (n & 63)) - 1;
    return b;
}

}  // namespace

std::vector<int> max_clique(const BitGraph& g, int stop_at, std::uint64_t node_budget,
                            SolveStats* stats) {
    if (g.size() == 0) {
        if (stats) *stats = {};
        return {};
    }
    CliqueSearch search(g, stop_at, node_budget);
    search.expand(full_set(g.size()));
    if (stats) *stats = search.stats;
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

std::vector<int> max_independent_set(const BitGraph& g, int stop_at, std::uint64_t node_budget,
                                     SolveStats* stats) {
    return max_clique(g.complement(), stop_at, node_budget, stats);
}

std::vector<int> max_clique_parallel(const BitGraph& g, int stop_at, std::uint64_t node_budget,
                                     SolveStats* stats) {
    int n = g.size();
    if (n == 0) {
        if (stats) *stats = {};
        return {};
    }

    // root branches exactly as the serial search would order them
    std::vector<int> order;
    {
        Bitset uncolored = full_set(n);
        while (!uncolored.empty()) {
            Bitset avail = uncolored;
            while (!avail.empty()) {
                int v = avail.lowest();
                order.push_back(v);
                uncolored.reset(v);
                avail.reset(v);
                avail.and_not(g.row(v));
            }
        }
    }

    std::atomic<int> shared_best{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<bool> stop{false};
    std::vector<std::vector<int>> found(order.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int idx = 0; idx < static_cast<int>(order.size()); ++idx) {
        if (stop.load()) continue;
        // branch idx owns vertex order[last-idx] with the later-processed
        // vertices removed, mirroring the serial loop from the back
        int i = static_cast<int>(order.size()) - 1 - idx;
        int v = order[static_cast<std::size_t>(i)];
        Bitset p2(n);
        for (int k = 0; k <= i; ++k) p2.set(order[static_cast<std::size_t>(k)]);
        p2 &= g.row(v);

        CliqueSearch search(g, stop_at, node_budget);
        search.best.resize(static_cast<std::size_t>(std::max(0, shared_best.load() - 1)), -1);
        search.current.push_back(v);
        search.take_current();
        if (!search.done && !p2.empty()) search.expand(p2);

        std::uint64_t seen = total_nodes.fetch_add(search.stats.nodes) + search.stats.nodes;
        if (!search.stats.exact || (node_budget > 0 && seen > node_budget)) {
            out_of_budget.store(true);
            stop.store(true);
        }
        if (std::find(search.best.begin(), search.best.end(), -1) == search.best.end()) {
            found[static_cast<std::size_t>(idx)] = search.best;
            int sz = static_cast<int>(search.best.size());
            int cur = shared_best.load();
            while (sz > cur && !shared_best.compare_exchange_weak(cur, sz)) {
            }
            if (stop_at > 0 && sz >= stop_at) stop.store(true);
        }
    }

    std::vector<int> best;
    for (auto& cand : found) {
        std::sort(cand.begin(), cand.end());
        if (cand.size() > best.size() || (cand.size() == best.size() && !cand.empty() && cand < best))
            best = cand;
    }
    if (stats) {
        stats->nodes = total_nodes.load();
        stats->exact = !out_of_budget.load();
    }
    return best;
}

namespace {

struct BronKerbosch {
    const BitGraph& g;
    std::size_t limit;
    std::vector<std::vector<int>> out;

    void run(std::vector<int>& r, Bitset p, Bitset x) {
        if (p.empty() && x.empty()) {
            if (out.size() >= limit) throw std::length_error("maximal clique limit exceeded");
            std::vector<int> clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            Bitset t = p;
            t &= g.row(u);
            int c = t.count();
            if (c > best) { best = c; pivot = u; }
        };
        p.for_each(consider);
        x.for_each(consider);

        Bitset ext = p;
        ext.and_not(g.row(pivot));
        std::vector<int> branch;
        ext.for_each([&](int v) { branch.push_back(v); });
        for (int v : branch) {
            Bitset p2 = p, x2 = x;
            p2 &= g.row(v);
            x2 &= g.row(v);
            r.push_back(v);
            run(r, std::move(p2), std::move(x2));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const BitGraph& g, std::size_t limit) {
    BronKerbosch bk{g, limit, {}};
    if (g.size() > 0) {
        std::vector<int> r;
        bk.run(r, full_set(g.size()), Bitset(g.size()));
    }
    std::sort(bk.out.begin(), bk.out.end());
    return bk.out;
}

std::vector<std::size_t> greedy_cover(int universe, const std::vector<Bitset>& sets) {
    Bitset uncovered = full_set(universe);
    std::vector<std::size_t> chosen;
    while (!uncovered.empty()) {
        std::size_t pick = sets.size();
        int gain = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            Bitset t = sets[i];
            t &= uncovered;
            int c = t.count();
            if (c > gain) { gain = c; pick = i; }
        }
        if (pick == sets.size()) throw std::invalid_argument("point not coverable by any set");
        chosen.push_back(pick);
        uncovered.and_not(sets[pick]);
    }
    return chosen;
}

namespace {

struct CoverSearch {
    int universe;
    const std::vector<Bitset>& sets;
    int lower_bound;
    std::uint64_t budget;
    SolveStats stats;
    bool done = false;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;
    int max_set_size = 1;

    void rec(const Bitset& covered, int uncovered_count) {
        ++stats.nodes;
        if (budget > 0 && stats.nodes > budget) {
            stats.exact = false;
            done = true;
            return;
        }
        if (uncovered_count == 0) {
            if (best.empty() || current.size() < best.size()) {
                best = current;
                if (static_cast<int>(best.size()) <= lower_bound) done = true;
            }
            return;
        }
        int lb = (uncovered_count + max_set_size - 1) / max_set_size;
        if (!best.empty() &&
            static_cast<int>(current.size()) + lb >= static_cast<int>(best.size()))
            return;

        // branch on the uncovered point with the fewest remaining options
        int point = -1, options = -1;
        for (int e = 0; e < universe; ++e) {
            if (covered.test(e)) continue;
            int c = 0;
            for (const auto& s : sets)
                if (s.test(e)) ++c;
            if (options < 0 || c < options) { options = c; point = e; }
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (!sets[i].test(point)) continue;
            Bitset c2 = covered;
            c2 |= sets[i];
            current.push_back(i);
            rec(c2, universe - c2.count());
            current.pop_back();
            if (done) return;
        }
    }
};

}  // namespace

std::vector<std::size_t> min_set_cover(int universe, const std::vector<Bitset>& sets,
                                       int lower_bound, std::uint64_t node_budget,
                                       SolveStats* stats) {
    if (universe == 0) {
        if (stats) *stats = {};
        return {};
    }
    CoverSearch search{universe, sets, lower_bound, node_budget, {}, false, {}, {}, 1};
    for (const auto& s : sets) search.max_set_size = std::max(search.max_set_size, s.count());

    // seed with greedy so pruning has a bound from the start
    search.best = greedy_cover(universe, sets);
    if (static_cast<int>(search.best.size()) > lower_bound) {
        search.current.clear();
        search.rec(Bitset(universe), universe);
    }
    if (stats) *stats = search.stats;
    return search.best;
}

}  // namespace cga
