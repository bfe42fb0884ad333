#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

/// Shortest-path closure of a distance graph plus, per pair, the best
/// strictly indirect (>= 2 edges) distance.
class ShortestDistanceMatrix {
public:
    ShortestDistanceMatrix(LabelSet labels, std::vector<double> closure,
                           std::vector<double> indirect)
        : labels_(std::move(labels)),
          n_(labels_.size()),
          closure_(std::move(closure)),
          indirect_(std::move(indirect)) {}

    double closure(int i, int j) const { return closure_[idx(i, j)]; }
    double indirect(int i, int j) const { return indirect_[idx(i, j)]; }
    const LabelSet& vertices() const { return labels_; }
    int vertex_count() const { return n_; }

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
    }

    LabelSet labels_;
    int n_ = 0;
    std::vector<double> closure_;
    std::vector<double> indirect_;
};

/// Min-plus closure: closure(i,j) is the shortest path length, computed by
/// Floyd-Warshall relaxation; indirect(i,j) = min over k not in {i,j} of
/// closure(i,k) + closure(k,j). Disconnected pairs stay +inf.
inline ShortestDistanceMatrix apsp_closure(const DistanceGraph& d) {
    const int n = d.vertex_count();
    const size_t nn = static_cast<size_t>(n);
    std::vector<double> c(nn * nn, kInf);
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i) * nn + static_cast<size_t>(i)] = 0.0;
    d.for_each_edge([&](int i, int j, double dist) {
        c[static_cast<size_t>(i) * nn + static_cast<size_t>(j)] = dist;
        c[static_cast<size_t>(j) * nn + static_cast<size_t>(i)] = dist;
    });

    for (int k = 0; k < n; ++k) {
        const double* row_k = c.data() + static_cast<size_t>(k) * nn;
        for (int i = 0; i < n; ++i) {
            double d_ik = c[static_cast<size_t>(i) * nn + static_cast<size_t>(k)];
            if (!std::isfinite(d_ik)) continue;
            double* row_i = c.data() + static_cast<size_t>(i) * nn;
            for (int j = 0; j < n; ++j) {
                double cand = d_ik + row_k[j];
                if (cand < row_i[j]) row_i[j] = cand;
            }
        }
    }

    std::vector<double> ind(nn * nn, kInf);
    for (int i = 0; i < n; ++i) {
        const double* row_i = c.data() + static_cast<size_t>(i) * nn;
        for (int j = i + 1; j < n; ++j) {
            const double* row_j = c.data() + static_cast<size_t>(j) * nn;
            double best = kInf;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double cand = row_i[k] + row_j[k];
                if (cand < best) best = cand;
            }
            ind[static_cast<size_t>(i) * nn + static_cast<size_t>(j)] = best;
            ind[static_cast<size_t>(j) * nn + static_cast<size_t>(i)] = best;
        }
    }

    return ShortestDistanceMatrix(d.vertices(), std::move(c), std::move(ind));
}

/// Turns a closure back into a distance graph (finite closure entries only).
inline DistanceGraph closure_graph(const ShortestDistanceMatrix& sp) {
    DistanceGraph g(sp.vertices());
    for (int i = 0; i < sp.vertex_count(); ++i)
        for (int j = i + 1; j < sp.vertex_count(); ++j)
            if (std::isfinite(sp.closure(i, j))) g.set(i, j, sp.closure(i, j));
    return g;
}

struct SemiMetricPairRecord {
    int i = 0, j = 0;  // i < j
    double d_direct = kInf;
    double d_indirect = kInf;
    double s = 0.0;    // d_direct / d_indirect; NaN when 0/0 or inf/inf
    double rs = 0.0;   // NaN when d_direct is infinite
    double b_ij = 0.0; // mean finite direct distance from i over d_indirect
    double b_ji = 0.0;
    bool is_semimetric = false;
};

struct PairRatioResult {
    std::vector<SemiMetricPairRecord> records;
    double d_max = 0.0;  // largest finite direct distance, the rs denominator
};

/// Semi-metric ratios for every unordered pair. rs is left NaN for pairs
/// with infinite direct distance; those are surfaced through b instead.
inline PairRatioResult pair_ratios(const DistanceGraph& d, const ShortestDistanceMatrix& sp) {
    const int n = d.vertex_count();
    if (n != sp.vertex_count()) throw Error("pair_ratios: closure does not match graph");
    const double d_max = d.max_finite_distance();
    if (d_max == 0.0) throw Error("pair_ratios: d_max is 0, rs undefined network-wide");

    // Mean of finite off-diagonal direct distances per vertex (NaN when none).
    std::vector<double> row_mean(static_cast<size_t>(n), std::nan(""));
    {
        std::vector<double> sum(static_cast<size_t>(n), 0.0);
        std::vector<int> cnt(static_cast<size_t>(n), 0);
        d.for_each_edge([&](int i, int j, double dist) {
            sum[static_cast<size_t>(i)] += dist;
            ++cnt[static_cast<size_t>(i)];
            sum[static_cast<size_t>(j)] += dist;
            ++cnt[static_cast<size_t>(j)];
        });
        for (int i = 0; i < n; ++i)
            if (cnt[static_cast<size_t>(i)] > 0)
                row_mean[static_cast<size_t>(i)] =
                    sum[static_cast<size_t>(i)] / cnt[static_cast<size_t>(i)];
    }

    PairRatioResult out;
    out.d_max = d_max;
    out.records.reserve(static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            SemiMetricPairRecord r;
            r.i = i;
            r.j = j;
            r.d_direct = d.distance(i, j);
            r.d_indirect = sp.indirect(i, j);
            r.is_semimetric = r.d_indirect < r.d_direct;
            r.s = r.d_direct / r.d_indirect;
            r.rs = std::isinf(r.d_direct) ? std::nan("")
                                          : (r.d_direct - r.d_indirect) / d_max;
            r.b_ij = row_mean[static_cast<size_t>(i)] / r.d_indirect;
            r.b_ji = row_mean[static_cast<size_t>(j)] / r.d_indirect;
            out.records.push_back(r);
        }
    }
    return out;
}

namespace detail {
// max over the non-NaN orientations of b; NaN when both are undefined.
inline double b_pair(const SemiMetricPairRecord& r) {
    bool a = !std::isnan(r.b_ij);
    bool b = !std::isnan(r.b_ji);
    if (a && b) return std::max(r.b_ij, r.b_ji);
    if (a) return r.b_ij;
    if (b) return r.b_ji;
    return std::nan("");
}
}  // namespace detail

struct SemimetricSummary {
    size_t pair_count = 0;
    size_t semimetric_count = 0;               // d_indirect < d_direct
    size_t semimetric_finite_direct_count = 0; // of those, pairs with finite d_direct
    size_t b_above_one_count = 0;              // semi-metric pairs with b > 1
    double pi = 0.0;                // semimetric_count / pair_count
    double pi_finite_direct = 0.0;  // restricted to finite-direct pairs
    double pct_rs = 0.0;            // 100 * pi_finite_direct (pairs with rs > 0)
    double pct_b = 0.0;             // 100 * b_above_one_count / pair_count
    size_t top_size = 0;
    std::vector<size_t> top_by_s;   // record indices, ranked
    std::vector<size_t> top_by_rs;
    std::vector<size_t> top_by_b;
};

/// Counts and ranked top lists over one graph's pair records. Top lists hold
/// ceil(top_fraction * pair_count) semi-metric pairs; infinite-direct pairs
/// appear only in the b list. Ranking ties break by pair label.
inline SemimetricSummary semimetric_summary(const std::vector<SemiMetricPairRecord>& records,
                                            const LabelSet& labels, double top_fraction) {
    if (records.empty()) throw Error("summary: empty record list");
    if (!(top_fraction > 0.0 && top_fraction <= 1.0))
        throw Error("summary: top_fraction must be in (0,1]");

    SemimetricSummary s;
    s.pair_count = records.size();
    for (const auto& r : records) {
        if (!r.is_semimetric) continue;
        ++s.semimetric_count;
        if (std::isfinite(r.d_direct)) ++s.semimetric_finite_direct_count;
        double b = detail::b_pair(r);
        if (b > 1.0) ++s.b_above_one_count;
    }
    s.pi = static_cast<double>(s.semimetric_count) / static_cast<double>(s.pair_count);
    s.pi_finite_direct = static_cast<double>(s.semimetric_finite_direct_count) /
                         static_cast<double>(s.pair_count);
    s.pct_rs = 100.0 * s.pi_finite_direct;
    s.pct_b = 100.0 * static_cast<double>(s.b_above_one_count) /
              static_cast<double>(s.pair_count);
    s.top_size = static_cast<size_t>(
        std::ceil(top_fraction * static_cast<double>(s.pair_count)));

    auto label_less = [&](size_t a, size_t b) {
        const auto& ra = records[a];
        const auto& rb = records[b];
        const auto& la = labels.label(ra.i);
        const auto& lb = labels.label(rb.i);
        if (la != lb) return la < lb;
        return labels.label(ra.j) < labels.label(rb.j);
    };
    auto build_top = [&](auto value_of) {
        std::vector<size_t> idx;
        for (size_t k = 0; k < records.size(); ++k) {
            if (!records[k].is_semimetric) continue;
            double v = value_of(records[k]);
            if (std::isnan(v)) continue;
            idx.push_back(k);
        }
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            double va = value_of(records[a]);
            double vb = value_of(records[b]);
            if (va != vb) return va > vb;
            return label_less(a, b);
        });
        if (idx.size() > s.top_size) idx.resize(s.top_size);
        return idx;
    };

    s.top_by_s = build_top([](const SemiMetricPairRecord& r) {
        return std::isfinite(r.d_direct) ? r.s : std::nan("");
    });
    s.top_by_rs = build_top([](const SemiMetricPairRecord& r) {
        return std::isfinite(r.rs) ? r.rs : std::nan("");
    });
    s.top_by_b = build_top([](const SemiMetricPairRecord& r) { return detail::b_pair(r); });
    return s;
}

}  // namespace semnet
