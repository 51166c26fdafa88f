#include "kgmatch/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kgmatch/alignment.hpp"
#include "kgmatch/text.hpp"

namespace kgmatch {

std::size_t TokenDocument::total_terms() const {
    std::size_t n = 0;
    for (const auto& [term, count] : term_counts) n += count;
    return n;
}

TokenDocument extract_document(const KnowledgeGraph& kg) {
    TokenDocument doc;
    doc.source_kg_id = kg.id();
    auto count = [&doc](std::vector<std::string>&& tokens) {
        for (auto& t : tokens) ++doc.term_counts[std::move(t)];
    };
    auto count_fragment = [&](const Iri& iri) {
        auto frag = iri.fragment();
        if (!frag.empty()) count(text::tokenize_fragment(frag));
    };
    for (const auto& t : kg.triples()) {
        count_fragment(t.subject);
        count_fragment(t.predicate);
        if (is_iri(t.object)) {
            count_fragment(as_iri(t.object));
        } else if (as_literal(t.object).is_textual()) {
            count(text::tokenize_literal(as_literal(t.object).lexical()));
        }
    }
    return doc;
}

std::vector<TextProfile> build_profiles(const std::vector<TokenDocument>& documents) {
    // document frequency per term
    std::map<std::string, std::size_t> df;
    for (const auto& doc : documents)
        for (const auto& [term, count] : doc.term_counts) ++df[term];

    const double n_docs = static_cast<double>(documents.size());
    std::vector<TextProfile> profiles;
    profiles.reserve(documents.size());
    for (const auto& doc : documents) {
        TextProfile p;
        p.source_kg_id = doc.source_kg_id;
        double norm_sq = 0.0;
        for (const auto& [term, count] : doc.term_counts) {
            double idf = std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df[term]))) + 1.0;
            double w = static_cast<double>(count) * idf;
            p.weights[term] = w;
            norm_sq += w * w;
        }
        if (norm_sq > 0.0) {
            double inv = 1.0 / std::sqrt(norm_sq);
            for (auto& [term, w] : p.weights) w *= inv;
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

double cosine(const TextProfile& a, const TextProfile& b) {
    if (a.empty() || b.empty()) return 0.0;
    const auto& small = (a.weights.size() <= b.weights.size()) ? a : b;
    const auto& large = (a.weights.size() <= b.weights.size()) ? b : a;
    double dot = 0.0;
    for (const auto& [term, w] : small.weights) {
        auto it = large.weights.find(term);
        if (it != large.weights.end()) dot += w * it->second;
    }
    return std::clamp(dot, 0.0, 1.0);
}

namespace {

SimilarityMatrix make_matrix(const std::vector<TextProfile>& profiles) {
    SimilarityMatrix m;
    m.kg_ids.reserve(profiles.size());
    for (const auto& p : profiles) m.kg_ids.push_back(p.source_kg_id);
    m.values.assign(profiles.size() * profiles.size(), 0.0);
    return m;
}

void fill_entry(SimilarityMatrix& m, const std::vector<TextProfile>& profiles,
                std::size_t i, std::size_t j) {
    const std::size_t n = profiles.size();
    double v = (i == j) ? (profiles[i].empty() ? 0.0 : 1.0) : cosine(profiles[i], profiles[j]);
    m.values[i * n + j] = v;
    m.values[j * n + i] = v;
}

}  // namespace

SimilarityMatrix similarity_matrix_serial(const std::vector<TextProfile>& profiles) {
    SimilarityMatrix m = make_matrix(profiles);
    const std::size_t n = profiles.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) fill_entry(m, profiles, i, j);
    return m;
}

SimilarityMatrix similarity_matrix_parallel(const std::vector<TextProfile>& profiles, int jobs) {
    SimilarityMatrix m = make_matrix(profiles);
    const std::size_t n = profiles.size();
    // flatten the upper triangle so iterations balance
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

    const auto total = static_cast<std::ptrdiff_t>(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs > 0 ? jobs : 1)
#endif
    for (std::ptrdiff_t k = 0; k < total; ++k) {
        fill_entry(m, profiles, pairs[static_cast<std::size_t>(k)].first,
                   pairs[static_cast<std::size_t>(k)].second);
    }
    return m;
}

SimilarityMatrix similarity_matrix(const std::vector<TextProfile>& profiles, int jobs) {
    if (jobs > 1) return similarity_matrix_parallel(profiles, jobs);
    return similarity_matrix_serial(profiles);
}

std::string serialize_profiles(const std::vector<TextProfile>& profiles) {
    std::string out;
    for (const auto& p : profiles) {
        for (const auto& [term, w] : p.weights) {
            out += p.source_kg_id;
            out += '\t';
            out += term;
            out += '\t';
            out += format_confidence(w);
            out += '\n';
        }
    }
    return out;
}

}  // namespace kgmatch
