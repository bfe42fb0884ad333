#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

struct DocumentRecord {
    std::string doc_id;
    std::vector<std::string> keywords;
};

struct RecordOptions {
    int min_doc_freq = 1;
    std::set<std::string> stop_words;
    // Normalizer applied to each keyword after stop-word removal. The default
    // leaves keywords untouched; pre-stemmed input is the supported contract.
    std::function<std::string(const std::string&)> stemmer;
};

/// Sparse boolean keyword x document incidence. Rows are sorted document
/// index lists; a keyword row is never empty.
class KeywordDocumentMatrix {
public:
    KeywordDocumentMatrix() = default;
    KeywordDocumentMatrix(LabelSet keywords, LabelSet documents,
                          std::vector<std::vector<int>> rows, RecordOptions options)
        : keywords_(std::move(keywords)),
          documents_(std::move(documents)),
          rows_(std::move(rows)),
          options_(std::move(options)) {
        for (auto& row : rows_) std::sort(row.begin(), row.end());
    }

    const LabelSet& keywords() const { return keywords_; }
    const LabelSet& documents() const { return documents_; }
    int keyword_count() const { return keywords_.size(); }
    int document_count() const { return documents_.size(); }
    const RecordOptions& options() const { return options_; }

    const std::vector<int>& docs_of(int keyword) const {
        return rows_.at(static_cast<size_t>(keyword));
    }

    /// Number of documents keyword i indexes.
    int doc_count(int keyword) const { return static_cast<int>(docs_of(keyword).size()); }

    bool incidence(int keyword, int document) const {
        const auto& row = docs_of(keyword);
        return std::binary_search(row.begin(), row.end(), document);
    }

    /// Number of documents indexed by both keywords.
    int intersection_count(int ki, int kj) const {
        const auto& a = docs_of(ki);
        const auto& b = docs_of(kj);
        int n = 0;
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) ++ia;
            else if (*ib < *ia) ++ib;
            else { ++n; ++ia; ++ib; }
        }
        return n;
    }

private:
    LabelSet keywords_;
    LabelSet documents_;
    std::vector<std::vector<int>> rows_;
    RecordOptions options_;
};

/// Builds the incidence matrix from decoded records: stop words are removed
/// before counting, the stemmer hook runs next, and only keywords indexing
/// at least min_doc_freq distinct documents survive.
inline KeywordDocumentMatrix build_matrix(const std::vector<DocumentRecord>& records,
                                          const RecordOptions& options) {
    if (options.min_doc_freq < 1) throw Error("ingest: min_doc_freq must be >= 1");

    LabelSet documents;
    for (const auto& rec : records) {
        if (rec.doc_id.empty()) throw Error("ingest: empty doc_id");
        if (documents.contains(rec.doc_id))
            throw Error("ingest: duplicate doc_id '" + rec.doc_id + "'");
        documents.add(rec.doc_id);
    }

    // keyword -> set of document indices; std::map keeps first-seen order
    // irrelevant and the final keyword order deterministic.
    std::map<std::string, std::set<int>> postings;
    for (const auto& rec : records) {
        int doc = documents.find(rec.doc_id);
        for (const auto& raw : rec.keywords) {
            if (options.stop_words.count(raw)) continue;
            std::string kw = options.stemmer ? options.stemmer(raw) : raw;
            if (kw.empty()) continue;
            postings[kw].insert(doc);
        }
    }

    LabelSet keywords;
    std::vector<std::vector<int>> rows;
    for (const auto& [kw, docs] : postings) {
        if (static_cast<int>(docs.size()) < options.min_doc_freq) continue;
        keywords.add(kw);
        rows.emplace_back(docs.begin(), docs.end());
    }
    return KeywordDocumentMatrix(std::move(keywords), std::move(documents), std::move(rows),
                                 options);
}

/// (keyword, document count) sorted by descending count, ties lexicographic.
inline std::vector<std::pair<std::string, int>> keyword_frequencies(
    const KeywordDocumentMatrix& matrix) {
    std::vector<std::pair<std::string, int>> out;
    out.reserve(static_cast<size_t>(matrix.keyword_count()));
    for (int k = 0; k < matrix.keyword_count(); ++k)
        out.emplace_back(matrix.keywords().label(k), matrix.doc_count(k));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

struct ReinforcementWeights {
    double freq = 1.0;
    double sym = 0.5;
    double trans = 0.3;
};

/// Applies the three usage-reinforcement rules to every path:
/// each step a->b adds freq to a->b and sym to b->a; each two-step
/// a->b->c adds trans to a->c.
inline DirectedWeightedGraph usage_reinforce(const std::vector<UsagePath>& paths,
                                             const ReinforcementWeights& w = {}) {
    if (!(w.freq >= 0 && w.sym >= 0 && w.trans >= 0) ||
        !(std::isfinite(w.freq) && std::isfinite(w.sym) && std::isfinite(w.trans)))
        throw Error("usage: reinforcement weights must be finite and >= 0");

    DirectedWeightedGraph g;
    for (const auto& path : paths)
        for (const auto& label : path.steps) g.add_vertex(label);

    for (const auto& path : paths) {
        const auto& s = path.steps;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            int a = g.vertices().find(s[i]);
            int b = g.vertices().find(s[i + 1]);
            g.add_weight(a, b, w.freq);
            g.add_weight(b, a, w.sym);
        }
        for (size_t i = 0; i + 2 < s.size(); ++i) {
            int a = g.vertices().find(s[i]);
            int c = g.vertices().find(s[i + 2]);
            g.add_weight(a, c, w.trans);
        }
    }
    return g;
}

/// Undirected weight(u,v) = max of both arc weights, normalized linearly
/// against the global maximum so the output lies in (0,1] with max exactly 1.
inline ProximityGraph symmetrize_normalize(const DirectedWeightedGraph& g) {
    std::unordered_map<std::uint64_t, double> sym;
    double global_max = 0.0;
    g.for_each_arc([&](int from, int to, double w) {
        auto key = detail::pair_key(from, to);
        auto& slot = sym[key];
        slot = std::max(slot, w);
        global_max = std::max(global_max, slot);
    });
    if (global_max <= 0.0) throw Error("normalize: graph has no positive-weight edge");

    ProximityGraph p(g.vertices());
    for (const auto& [key, w] : sym) {
        auto [i, j] = detail::unpack_key(key);
        p.set(i, j, w / global_max);
    }
    return p;
}

}  // namespace semnet
