#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

namespace kgmatch {

// Absolute IRI. The value is validated on construction: non-empty, free of
// whitespace, and carrying a URI scheme.
class Iri {
public:
    Iri() = default;
    explicit Iri(std::string value);

    const std::string& value() const { return value_; }

    // Fragment part after the last '#', else after the last '/'; empty when
    // the IRI has neither.
    std::string_view fragment() const;

    bool operator==(const Iri& other) const { return value_ == other.value_; }
    auto operator<=>(const Iri& other) const { return value_ <=> other.value_; }

private:
    std::string value_;
};

// RDF literal. Language tag and datatype are mutually exclusive; a literal
// with neither is a plain xsd:string.
class Literal {
public:
    Literal() = default;
    explicit Literal(std::string lexical,
                     std::optional<std::string> language_tag = std::nullopt,
                     std::optional<Iri> datatype = std::nullopt);

    const std::string& lexical() const { return lexical_; }
    const std::optional<std::string>& language_tag() const { return language_tag_; }
    const std::optional<Iri>& datatype() const { return datatype_; }

    // True when the literal carries human-readable text: it has a language
    // tag, is a plain literal, or is typed xsd:string / rdf:langString.
    bool is_textual() const;

    bool operator==(const Literal& other) const = default;

private:
    std::string lexical_;
    std::optional<std::string> language_tag_;
    std::optional<Iri> datatype_;
};

using RdfNode = std::variant<Iri, Literal>;

inline bool is_iri(const RdfNode& n) { return std::holds_alternative<Iri>(n); }
inline const Iri& as_iri(const RdfNode& n) { return std::get<Iri>(n); }
inline const Literal& as_literal(const RdfNode& n) { return std::get<Literal>(n); }

struct Triple {
    Iri subject;
    Iri predicate;
    RdfNode object;

    bool operator==(const Triple& other) const = default;
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const;
};

enum class KgOrigin { Leaf, Union, CopiedLeaf };

struct KgStats {
    std::size_t num_classes = 0;
    std::size_t num_instances = 0;
    std::size_t model_size = 0;

    bool operator==(const KgStats&) const = default;
};

enum class EntityKind { Class, Property, Instance };

std::string_view to_string(EntityKind kind);

// A named source graph with set semantics on its triples. Immutable after
// construction; merging builds new graphs.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;
    KnowledgeGraph(std::string id, std::vector<Triple> triples,
                   KgOrigin origin = KgOrigin::Leaf);

    const std::string& id() const { return id_; }
    KgOrigin origin() const { return origin_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }

    bool contains(const Triple& t) const { return index_.contains(t); }

    // True when the IRI occurs in subject, predicate or object position.
    bool mentions(const Iri& iri) const;

    // All distinct IRIs in subject/predicate/object position, sorted.
    std::vector<Iri> entities() const;

private:
    std::string id_;
    KgOrigin origin_ = KgOrigin::Leaf;
    std::vector<Triple> triples_;
    std::unordered_set<Triple, TripleHash> index_;
};

// Well-known vocabulary used by the classification rules.
namespace vocab {
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr std::string_view kRdfLangString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kRdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kOwlObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kOwlDatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view kOwlAnnotationProperty = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
}  // namespace vocab

// Parses W3C N-Triples (UTF-8). '#'-prefixed comment lines and blank lines
// are skipped; any other malformed line raises ParseError with its line
// number. Duplicate triples collapse; blank node labels are skolemized to
// urn:skolem:<id>:<label>.
KnowledgeGraph parse_ntriples(std::string_view text, const std::string& id);
KnowledgeGraph load_ntriples(const std::string& path, const std::string& id);

// Canonical N-Triples serialization, one triple per line in graph order.
std::string serialize_ntriples(const KnowledgeGraph& kg);
void write_ntriples(const KnowledgeGraph& kg, const std::string& path);

KgStats stats(const KnowledgeGraph& kg);

// Classification precedence Class > Property > Instance; raises LookupError
// for entities that do not occur in the graph.
EntityKind entity_kind(const KnowledgeGraph& kg, const Iri& entity);

// Batch variant: one pass over the graph, classification for all entities.
struct EntityKindIndex {
    std::unordered_set<std::string> classes;
    std::unordered_set<std::string> properties;
    std::unordered_set<std::string> entities;  // everything mentioned

    std::optional<EntityKind> kind_of(const std::string& iri) const;
};

EntityKindIndex classify_entities(const KnowledgeGraph& kg);

}  // namespace kgmatch
