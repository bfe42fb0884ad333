#pragma once

#include <vector>

#include "semnet/corpus.hpp"
#include "semnet/graph.hpp"

namespace semnet {

/// Keyword semantic proximity: the probability that two keywords co-index
/// the same document, N_int / (N(ki) + N(kj) - N_int). Pairs that share no
/// document are left absent (weight 0).
inline ProximityGraph ksp(const KeywordDocumentMatrix& matrix) {
    if (matrix.keyword_count() == 0) throw Error("ksp: empty matrix");

    ProximityGraph p(matrix.keywords());
    // Invert rows to document -> keywords so only co-occurring pairs are touched.
    std::vector<std::vector<int>> by_doc(static_cast<size_t>(matrix.document_count()));
    for (int k = 0; k < matrix.keyword_count(); ++k) {
        if (matrix.doc_count(k) == 0) throw Error("ksp: keyword with zero documents");
        for (int d : matrix.docs_of(k)) by_doc[static_cast<size_t>(d)].push_back(k);
    }
    std::unordered_map<std::uint64_t, int> shared;
    for (const auto& kws : by_doc)
        for (size_t a = 0; a < kws.size(); ++a)
            for (size_t b = a + 1; b < kws.size(); ++b)
                ++shared[detail::pair_key(kws[a], kws[b])];

    for (const auto& [key, n_both] : shared) {
        auto [i, j] = detail::unpack_key(key);
        double denom = matrix.doc_count(i) + matrix.doc_count(j) - n_both;
        p.set(i, j, static_cast<double>(n_both) / denom);
    }
    return p;
}

/// Structural proximity from a hyperlink graph: Jaccard coefficients on
/// in- and out-neighbor sets, max of the two per pair, then linearly
/// normalized against the highest value.
inline ProximityGraph structural_proximity(const DirectedWeightedGraph& g) {
    int n = g.vertex_count();
    if (n == 0) throw Error("structural proximity: empty vertex set");

    std::vector<std::vector<int>> in(static_cast<size_t>(n)), out(static_cast<size_t>(n));
    g.for_each_arc([&](int from, int to, double) {
        out[static_cast<size_t>(from)].push_back(to);
        in[static_cast<size_t>(to)].push_back(from);
    });
    for (auto& v : in) std::sort(v.begin(), v.end());
    for (auto& v : out) std::sort(v.begin(), v.end());

    auto jaccard = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.empty() && b.empty()) return 0.0;
        size_t inter = 0;
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) ++ia;
            else if (*ib < *ia) ++ib;
            else { ++inter; ++ia; ++ib; }
        }
        size_t uni = a.size() + b.size() - inter;
        return static_cast<double>(inter) / static_cast<double>(uni);
    };

    std::unordered_map<std::uint64_t, double> raw;
    double highest = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double p_in = jaccard(in[static_cast<size_t>(i)], in[static_cast<size_t>(j)]);
            double p_out = jaccard(out[static_cast<size_t>(i)], out[static_cast<size_t>(j)]);
            double v = std::max(p_in, p_out);
            if (v > 0.0) {
                raw[detail::pair_key(i, j)] = v;
                highest = std::max(highest, v);
            }
        }
    }

    ProximityGraph p(g.vertices());
    for (const auto& [key, v] : raw) {
        auto [i, j] = detail::unpack_key(key);
        p.set(i, j, v / highest);
    }
    return p;
}

/// Distance transform d = 1/weight - 1; zero-proximity pairs become +inf
/// (left absent in the sparse distance graph).
inline DistanceGraph to_distance(const ProximityGraph& p) {
    DistanceGraph d(p.vertices());
    p.for_each_edge([&](int i, int j, double w) { d.set(i, j, 1.0 / w - 1.0); });
    return d;
}

/// Inverse of to_distance: p = 1/(d+1).
inline ProximityGraph to_proximity(const DistanceGraph& d) {
    ProximityGraph p(d.vertices());
    d.for_each_edge([&](int i, int j, double dist) { p.set(i, j, 1.0 / (dist + 1.0)); });
    return p;
}

}  // namespace semnet
