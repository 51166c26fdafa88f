#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kgmatch/rdf.hpp"

namespace kgmatch {

// Bag of processed tokens describing one KG's text.
struct TokenDocument {
    std::string source_kg_id;
    std::map<std::string, std::size_t> term_counts;

    std::size_t total_terms() const;
};

// L2-normalized sparse tf-idf vector.
struct TextProfile {
    std::string source_kg_id;
    std::map<std::string, double> weights;

    bool empty() const { return weights.empty(); }
};

// Symmetric pairwise cosine matrix over a fixed KG order.
struct SimilarityMatrix {
    std::vector<std::string> kg_ids;
    std::vector<double> values;  // row-major n x n

    double at(std::size_t i, std::size_t j) const { return values[i * kg_ids.size() + j]; }
    std::size_t size() const { return kg_ids.size(); }
};

// Tokens from textual literals (full literal pipeline) and from the
// fragments of every IRI in subject/predicate/object position.
TokenDocument extract_document(const KnowledgeGraph& kg);

// tf-idf with smoothed idf ln((1+N)/(1+df)) + 1 and L2 normalization.
std::vector<TextProfile> build_profiles(const std::vector<TokenDocument>& documents);

// Dot product of normalized vectors; 0.0 when either profile is empty.
double cosine(const TextProfile& a, const TextProfile& b);

// Pairwise cosine over all profiles. The parallel variant distributes the
// pair loop over OpenMP threads and returns bit-identical values.
SimilarityMatrix similarity_matrix_serial(const std::vector<TextProfile>& profiles);
SimilarityMatrix similarity_matrix_parallel(const std::vector<TextProfile>& profiles, int jobs);
SimilarityMatrix similarity_matrix(const std::vector<TextProfile>& profiles, int jobs = 1);

// Debug dump: kgId<TAB>term<TAB>weight, profiles in input order with terms
// sorted within each profile.
std::string serialize_profiles(const std::vector<TextProfile>& profiles);

}  // namespace kgmatch
