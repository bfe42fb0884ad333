#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace semnet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Ordered label set with O(1) label -> index lookup.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::vector<std::string> labels) {
        for (auto& l : labels) add(l);
    }

    int add(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, id);
        return id;
    }

    int find(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? -1 : it->second;
    }

    bool contains(const std::string& label) const { return find(label) >= 0; }
    const std::string& label(int id) const { return labels_.at(static_cast<size_t>(id)); }
    const std::vector<std::string>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

namespace detail {
inline std::uint64_t pair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
}
inline std::uint64_t arc_key(int from, int to) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
           static_cast<std::uint32_t>(to);
}
inline std::pair<int, int> unpack_key(std::uint64_t k) {
    return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)};
}
}  // namespace detail

/// Symmetric weighted graph with weights in [0, 1]; absent pairs read as 0
/// and the diagonal is implicitly 1.
class ProximityGraph {
public:
    ProximityGraph() = default;
    explicit ProximityGraph(LabelSet vertices) : vertices_(std::move(vertices)) {}

    int add_vertex(const std::string& label) { return vertices_.add(label); }

    void set(int i, int j, double w) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw Error("proximity: self-pairs are implicit (weight 1)");
        if (!(w >= 0.0 && w <= 1.0)) throw Error("proximity: weight outside [0,1]");
        if (w == 0.0) {
            weights_.erase(detail::pair_key(i, j));
        } else {
            weights_[detail::pair_key(i, j)] = w;
        }
    }

    double weight(int i, int j) const {
        if (i == j) return 1.0;
        auto it = weights_.find(detail::pair_key(i, j));
        return it == weights_.end() ? 0.0 : it->second;
    }

    const LabelSet& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }
    size_t edge_count() const { return weights_.size(); }

    const std::unordered_map<std::uint64_t, double>& edges() const { return weights_; }

    template <typename F>
    void for_each_edge(F&& f) const {
        for (const auto& [k, w] : weights_) {
            auto [i, j] = detail::unpack_key(k);
            f(i, j, w);
        }
    }

private:
    void check_vertex(int i) const {
        if (i < 0 || i >= vertices_.size()) throw Error("proximity: vertex index out of range");
    }

    LabelSet vertices_;
    std::unordered_map<std::uint64_t, double> weights_;
};

/// Symmetric distance graph: d(v,v) = 0, absent pairs read as +inf.
/// Only finite distances are stored.
class DistanceGraph {
public:
    DistanceGraph() = default;
    explicit DistanceGraph(LabelSet vertices) : vertices_(std::move(vertices)) {}

    int add_vertex(const std::string& label) { return vertices_.add(label); }

    void set(int i, int j, double d) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw Error("distance: diagonal is fixed at 0");
        if (std::isnan(d) || d < 0.0) throw Error("distance: values must be >= 0");
        if (std::isinf(d)) {
            distances_.erase(detail::pair_key(i, j));
        } else {
            distances_[detail::pair_key(i, j)] = d;
        }
    }

    double distance(int i, int j) const {
        if (i == j) return 0.0;
        auto it = distances_.find(detail::pair_key(i, j));
        return it == distances_.end() ? kInf : it->second;
    }

    /// Largest finite off-diagonal distance; 0 when the graph has no finite edges.
    double max_finite_distance() const {
        double m = 0.0;
        for (const auto& [k, d] : distances_) m = std::max(m, d);
        return m;
    }

    const LabelSet& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }
    size_t edge_count() const { return distances_.size(); }

    const std::unordered_map<std::uint64_t, double>& edges() const { return distances_; }

    template <typename F>
    void for_each_edge(F&& f) const {
        for (const auto& [k, d] : distances_) {
            auto [i, j] = detail::unpack_key(k);
            f(i, j, d);
        }
    }

private:
    void check_vertex(int i) const {
        if (i < 0 || i >= vertices_.size()) throw Error("distance: vertex index out of range");
    }

    LabelSet vertices_;
    std::unordered_map<std::uint64_t, double> distances_;
};

/// Directed graph with nonnegative finite weights and no self-loops.
class DirectedWeightedGraph {
public:
    DirectedWeightedGraph() = default;
    explicit DirectedWeightedGraph(LabelSet vertices) : vertices_(std::move(vertices)) {}

    int add_vertex(const std::string& label) { return vertices_.add(label); }

    /// Sets the arc weight, replacing any previous value. Self-loops are dropped.
    void set(int from, int to, double w) {
        check_arc(from, to, w);
        if (from == to) return;
        if (w == 0.0) {
            weights_.erase(detail::arc_key(from, to));
        } else {
            weights_[detail::arc_key(from, to)] = w;
        }
    }

    /// Adds to the arc weight (creating it at 0). Self-loops are dropped.
    void add_weight(int from, int to, double w) {
        check_arc(from, to, w);
        if (from == to || w == 0.0) return;
        weights_[detail::arc_key(from, to)] += w;
    }

    double weight(int from, int to) const {
        auto it = weights_.find(detail::arc_key(from, to));
        return it == weights_.end() ? 0.0 : it->second;
    }

    const LabelSet& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }
    size_t arc_count() const { return weights_.size(); }

    const std::unordered_map<std::uint64_t, double>& arcs() const { return weights_; }

    template <typename F>
    void for_each_arc(F&& f) const {
        for (const auto& [k, w] : weights_) {
            auto [from, to] = detail::unpack_key(k);
            f(from, to, w);
        }
    }

private:
    void check_arc(int from, int to, double w) const {
        if (from < 0 || from >= vertices_.size() || to < 0 || to >= vertices_.size())
            throw Error("graph: vertex index out of range");
        if (std::isnan(w) || std::isinf(w) || w < 0.0)
            throw Error("graph: weights must be finite and >= 0");
    }

    LabelSet vertices_;
    std::unordered_map<std::uint64_t, double> weights_;
};

/// One user's traversal: consecutive labels must differ, length >= 1.
struct UsagePath {
    std::vector<std::string> steps;
};

}  // namespace semnet
