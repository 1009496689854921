#include "cga/bitgraph.hpp"

namespace cga {

BitGraph BitGraph::complement() const {
    BitGraph c(n_);
    for (int i = 0; i < n_; ++i) {
        Bitset row(n_);
        for (std::size_t k = 0; k < row.w.size(); ++k) row.w[k] = ~rows_[static_cast<std::size_t>(i)].w[k];
        if (n_ & 63) row.w.back() &= (1ull << (n_ & 63)) - 1;  // clear padding
        row.reset(i);
        c.rows_[static_cast<std::size_t>(i)] = std::move(row);
    }
    return c;
}

BitGraph commuting_graph(const std::vector<Permutation>& elems) {
    int n = static_cast<int>(elems.size());
    BitGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (elems[static_cast<std::size_t>(i)].commutes_with(elems[static_cast<std::size_t>(j)]))
                g.add_edge(i, j);
    return g;
}

BitGraph commuting_graph_parallel(const std::vector<Permutation>& elems) {
    int n = static_cast<int>(elems.size());
    BitGraph g(n);
    // each worker writes only row i; the mirrored half is filled afterwards
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (elems[static_cast<std::size_t>(i)].commutes_with(elems[static_cast<std::size_t>(j)]))
                rows[static_cast<std::size_t>(i)].set(j);
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)].for_each([&](int j) { g.add_edge(i, j); });
    return g;
}

}  // namespace cga
