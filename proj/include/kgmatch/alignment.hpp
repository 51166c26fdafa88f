#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgmatch/rdf.hpp"

namespace kgmatch {

// Equivalence statement between two entities. The pair is unordered; the
// canonical form keeps the lexicographically smaller IRI first.
class Correspondence {
public:
    Correspondence(Iri a, Iri b, double confidence = 1.0);

    const Iri& entity_one() const { return entity_one_; }
    const Iri& entity_two() const { return entity_two_; }
    double confidence() const { return confidence_; }

    // Identity is the unordered pair; confidence does not participate.
    bool operator==(const Correspondence& o) const {
        return entity_one_ == o.entity_one_ && entity_two_ == o.entity_two_;
    }
    auto operator<=>(const Correspondence& o) const {
        if (auto c = entity_one_ <=> o.entity_one_; c != 0) return c;
        return entity_two_ <=> o.entity_two_;
    }

private:
    Iri entity_one_;
    Iri entity_two_;
    double confidence_;
};

// Set of correspondences with deterministic (sorted) iteration order.
// Adding an existing pair keeps the maximum confidence seen.
class Alignment {
public:
    Alignment() = default;

    void add(Correspondence c);
    void add_all(const Alignment& other);
    bool contains(const Iri& a, const Iri& b) const;
    std::optional<double> confidence_of(const Iri& a, const Iri& b) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const Alignment& o) const;

private:
    std::map<std::pair<std::string, std::string>, double> entries_;
};

// Union-find with union by size and path compression.
class DisjointSet {
public:
    // Returns the element's index, registering it on first use.
    std::size_t add(const std::string& element);
    bool contains(const std::string& element) const;

    std::size_t find(std::size_t x);
    void unite(std::size_t a, std::size_t b);
    bool connected(std::size_t a, std::size_t b) { return find(a) == find(b); }

    // Groups of element names with >= min_size members, each group sorted,
    // groups ordered by their first member.
    std::vector<std::vector<std::string>> groups(std::size_t min_size = 1);

    std::size_t element_count() const { return names_.size(); }

private:
    std::unordered_map<std::string, std::size_t> ids_;
    std::vector<std::string> names_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

// Resolves an entity IRI to the id of the source KG that declared it.
class Membership {
public:
    void declare(const std::string& iri, const std::string& kg_id);
    void declare_all(const KnowledgeGraph& kg);

    // Throws LookupError for unknown or ambiguously declared entities.
    const std::string& source_of(const std::string& iri) const;
    std::optional<std::string> try_source_of(const std::string& iri) const;

private:
    std::unordered_map<std::string, std::string> source_;
    static const std::string kAmbiguous;
};

struct EntityCluster {
    // (entity IRI, source KG id), sorted by IRI.
    std::vector<std::pair<std::string, std::string>> members;
    // True when two members come from the same source KG.
    bool source_inconsistent = false;
};

// Connected components of the correspondence graph. Clusters are sorted by
// their first member; singleton entities produce no cluster.
std::vector<EntityCluster> closure(const Alignment& alignment, const Membership& membership);

// All cross-source combinations within each cluster for one KG pair,
// emitted with confidence 1.0.
Alignment expand_to_pairs(const std::vector<EntityCluster>& clusters,
                          const std::string& kg_a, const std::string& kg_b);

struct SplitAlignment {
    // Key is the unordered pair of KG ids, smaller id first.
    std::map<std::pair<std::string, std::string>, Alignment> by_pair;
    // Correspondences whose two entities share a source KG.
    Alignment intra_source;
};

SplitAlignment split_by_pair(const Alignment& alignment, const Membership& membership);

// TSV exchange format: entityOne<TAB>entityTwo<TAB>=<TAB>confidence,
// '#'-prefixed comment lines allowed.
Alignment parse_alignment(std::string_view text);
Alignment load_alignment(const std::string& path);
std::string serialize_alignment(const Alignment& alignment);
void write_alignment(const Alignment& alignment, const std::string& path);

// Shortest round-trip decimal representation, always with a decimal point.
std::string format_confidence(double value);

}  // namespace kgmatch
