#include "kgmatch/rdf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "kgmatch/errors.hpp"

namespace kgmatch {

namespace {

bool has_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

bool contains_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) || c < 0x20;
    });
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::array<std::string_view, 6> kMetaVocab = {
    vocab::kOwlClass,          vocab::kRdfsClass,
    vocab::kRdfProperty,       vocab::kOwlObjectProperty,
    vocab::kOwlDatatypeProperty, vocab::kOwlAnnotationProperty,
};

bool is_meta_vocab(const std::string& iri) {
    return std::find(kMetaVocab.begin(), kMetaVocab.end(), iri) != kMetaVocab.end();
}

bool is_class_meta(const std::string& iri) {
    return iri == vocab::kOwlClass || iri == vocab::kRdfsClass;
}

bool is_property_meta(const std::string& iri) {
    return iri == vocab::kRdfProperty || iri == vocab::kOwlObjectProperty ||
           iri == vocab::kOwlDatatypeProperty || iri == vocab::kOwlAnnotationProperty;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw ValueError("empty IRI");
    if (contains_whitespace(value_))
        throw ValueError("IRI contains whitespace: " + value_);
    if (!has_scheme(value_))
        throw ValueError("IRI is not absolute (missing scheme): " + value_);
}

std::string_view Iri::fragment() const {
    auto hash = value_.rfind('#');
    if (hash != std::string::npos) return std::string_view(value_).substr(hash + 1);
    auto slash = value_.rfind('/');
    if (slash != std::string::npos) return std::string_view(value_).substr(slash + 1);
    return {};
}

Literal::Literal(std::string lexical, std::optional<std::string> language_tag,
                 std::optional<Iri> datatype)
    : lexical_(std::move(lexical)),
      language_tag_(std::move(language_tag)),
      datatype_(std::move(datatype)) {
    if (language_tag_ && datatype_)
        throw ValueError("literal cannot carry both language tag and datatype");
    if (language_tag_) {
        std::transform(language_tag_->begin(), language_tag_->end(),
                       language_tag_->begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    }
}

bool Literal::is_textual() const {
    if (language_tag_) return true;
    if (!datatype_) return true;  // plain literal == xsd:string
    return datatype_->value() == vocab::kXsdString ||
           datatype_->value() == vocab::kRdfLangString;
}

std::size_t TripleHash::operator()(const Triple& t) const {
    std::hash<std::string> h;
    std::size_t seed = h(t.subject.value());
    seed = hash_combine(seed, h(t.predicate.value()));
    if (is_iri(t.object)) {
        seed = hash_combine(seed, h(as_iri(t.object).value()));
    } else {
        const Literal& lit = as_literal(t.object);
        seed = hash_combine(seed, h(lit.lexical()));
        if (lit.language_tag()) seed = hash_combine(seed, h(*lit.language_tag()));
        if (lit.datatype()) seed = hash_combine(seed, h(lit.datatype()->value()));
    }
    return seed;
}

std::string_view to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::Class: return "class";
        case EntityKind::Property: return "property";
        case EntityKind::Instance: return "instance";
    }
    return "instance";
}

KnowledgeGraph::KnowledgeGraph(std::string id, std::vector<Triple> triples,
                               KgOrigin origin)
    : id_(std::move(id)), origin_(origin) {
    triples_.reserve(triples.size());
    for (auto& t : triples) {
        if (index_.insert(t).second) triples_.push_back(std::move(t));
    }
}

bool KnowledgeGraph::mentions(const Iri& iri) const {
    for (const auto& t : triples_) {
        if (t.subject == iri || t.predicate == iri) return true;
        if (is_iri(t.object) && as_iri(t.object) == iri) return true;
    }
    return false;
}

std::vector<Iri> KnowledgeGraph::entities() const {
    std::unordered_set<std::string> seen;
    std::vector<Iri> out;
    auto add = [&](const Iri& iri) {
        if (seen.insert(iri.value()).second) out.push_back(iri);
    };
    for (const auto& t : triples_) {
        add(t.subject);
        add(t.predicate);
        if (is_iri(t.object)) add(as_iri(t.object));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// N-Triples parsing

namespace {

// Cursor over one physical line.
class LineScanner {
public:
    LineScanner(std::string_view line, std::size_t line_no)
        : line_(line), line_no_(line_no) {}

    void skip_ws() {
        while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    }

    bool eof() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_no_, msg);
    }

    void expect(char c) {
        if (eof() || line_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void append_utf8(std::string& out, uint32_t cp) {
        if (cp <= 0x7f) {
            out.push_back(static_cast<char>(cp));
        } else if (cp <= 0x7ff) {
            out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else if (cp <= 0xffff) {
            out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else if (cp <= 0x10ffff) {
            out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else {
            fail("unicode escape out of range");
        }
    }

    uint32_t read_hex(int digits) {
        uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof()) fail("truncated unicode escape");
            char c = line_[pos_++];
            cp <<= 4;
            if (c >= '0' && c <= '9') cp |= static_cast<uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f') cp |= static_cast<uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') cp |= static_cast<uint32_t>(c - 'A' + 10);
            else fail("bad hex digit in unicode escape");
        }
        return cp;
    }

    std::string read_iriref() {
        expect('<');
        std::string out;
        while (true) {
            if (eof()) fail("unterminated IRI");
            char c = line_[pos_++];
            if (c == '>') break;
            if (c == '\\') {
                if (eof()) fail("truncated escape in IRI");
                char e = line_[pos_++];
                if (e == 'u') append_utf8(out, read_hex(4));
                else if (e == 'U') append_utf8(out, read_hex(8));
                else fail("invalid escape in IRI");
            } else if (static_cast<unsigned char>(c) <= 0x20) {
                fail("whitespace or control character in IRI");
            } else {
                out.push_back(c);
            }
        }
        return out;
    }

    std::string read_quoted_string() {
        expect('"');
        std::string out;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = line_[pos_++];
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("truncated escape in literal");
                char e = line_[pos_++];
                switch (e) {
                    case 't': out.push_back('\t'); break;
                    case 'b': out.push_back('\b'); break;
                    case 'n': out.push_back('\n'); break;
                    case 'r': out.push_back('\r'); break;
                    case 'f': out.push_back('\f'); break;
                    case '"': out.push_back('"'); break;
                    case '\'': out.push_back('\''); break;
                    case '\\': out.push_back('\\'); break;
                    case 'u': append_utf8(out, read_hex(4)); break;
                    case 'U': append_utf8(out, read_hex(8)); break;
                    default: fail("invalid escape in literal");
                }
            } else {
                out.push_back(c);
            }
        }
        return out;
    }

    std::string read_langtag() {
        expect('@');
        std::string out;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
            out.push_back(line_[pos_++]);
        }
        if (out.empty() || out.front() == '-' || out.back() == '-')
            fail("malformed language tag");
        return out;
    }

    std::string read_blank_label() {
        expect('_');
        expect(':');
        std::string out;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
                out.push_back(c);
                ++pos_;
            } else {
                break;
            }
        }
        if (out.empty() || out.back() == '.') {
            if (out.empty()) fail("empty blank node label");
            // trailing '.' belongs to the statement terminator
            out.pop_back();
            --pos_;
            if (out.empty()) fail("empty blank node label");
        }
        return out;
    }

private:
    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

}  // namespace

KnowledgeGraph parse_ntriples(std::string_view text, const std::string& id) {
    std::vector<Triple> triples;
    auto skolem = [&id](const std::string& label) {
        return Iri("urn:skolem:" + id + ":" + label);
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (end == std::string_view::npos ? text.size() : end) - pos);
        pos = (end == std::string_view::npos) ? text.size() : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        LineScanner sc(line, line_no);
        sc.skip_ws();
        if (sc.eof() || sc.peek() == '#') continue;

        // subject: IRI or blank node
        Iri subject;
        try {
            if (sc.peek() == '<') subject = Iri(sc.read_iriref());
            else if (sc.peek() == '_') subject = skolem(sc.read_blank_label());
            else sc.fail("expected IRI or blank node as subject");
        } catch (const ValueError& e) {
            sc.fail(e.what());
        }

        sc.skip_ws();
        Iri predicate;
        try {
            if (!sc.eof() && sc.peek() == '<') predicate = Iri(sc.read_iriref());
            else sc.fail("expected IRI as predicate");
        } catch (const ValueError& e) {
            sc.fail(e.what());
        }

        sc.skip_ws();
        RdfNode object;
        try {
            if (sc.eof()) sc.fail("missing object");
            if (sc.peek() == '<') {
                object = Iri(sc.read_iriref());
            } else if (sc.peek() == '_') {
                object = skolem(sc.read_blank_label());
            } else if (sc.peek() == '"') {
                std::string lexical = sc.read_quoted_string();
                if (!sc.eof() && sc.peek() == '@') {
                    object = Literal(std::move(lexical), sc.read_langtag());
                } else if (!sc.eof() && sc.peek() == '^') {
                    sc.expect('^');
                    sc.expect('^');
                    object = Literal(std::move(lexical), std::nullopt, Iri(sc.read_iriref()));
                } else {
                    object = Literal(std::move(lexical));
                }
            } else {
                sc.fail("expected IRI, blank node or literal as object");
            }
        } catch (const ValueError& e) {
            sc.fail(e.what());
        }

        sc.skip_ws();
        sc.expect('.');
        sc.skip_ws();
        if (!sc.eof() && sc.peek() != '#') sc.fail("trailing content after '.'");

        triples.push_back(Triple{std::move(subject), std::move(predicate), std::move(object)});
    }
    return KnowledgeGraph(id, std::move(triples), KgOrigin::Leaf);
}

KnowledgeGraph load_ntriples(const std::string& path, const std::string& id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValueError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ntriples(buf.str(), id);
}

namespace {

void write_escaped_literal(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
}

}  // namespace

std::string serialize_ntriples(const KnowledgeGraph& kg) {
    std::string out;
    for (const auto& t : kg.triples()) {
        out += '<';
        out += t.subject.value();
        out += "> <";
        out += t.predicate.value();
        out += "> ";
        if (is_iri(t.object)) {
            out += '<';
            out += as_iri(t.object).value();
            out += '>';
        } else {
            const Literal& lit = as_literal(t.object);
            write_escaped_literal(out, lit.lexical());
            if (lit.language_tag()) {
                out += '@';
                out += *lit.language_tag();
            } else if (lit.datatype()) {
                out += "^^<";
                out += lit.datatype()->value();
                out += '>';
            }
        }
        out += " .\n";
    }
    return out;
}

void write_ntriples(const KnowledgeGraph& kg, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValueError("cannot write file: " + path);
    out << serialize_ntriples(kg);
}

// ---------------------------------------------------------------------------
// Classification

EntityKindIndex classify_entities(const KnowledgeGraph& kg) {
    EntityKindIndex idx;
    for (const auto& t : kg.triples()) {
        idx.entities.insert(t.subject.value());
        idx.entities.insert(t.predicate.value());
        idx.properties.insert(t.predicate.value());
        if (is_iri(t.object)) idx.entities.insert(as_iri(t.object).value());

        if (t.predicate.value() == vocab::kRdfType && is_iri(t.object)) {
            const std::string& type = as_iri(t.object).value();
            idx.classes.insert(type);
            if (is_class_meta(type)) idx.classes.insert(t.subject.value());
            if (is_property_meta(type)) idx.properties.insert(t.subject.value());
        }
    }
    return idx;
}

std::optional<EntityKind> EntityKindIndex::kind_of(const std::string& iri) const {
    if (!entities.contains(iri)) return std::nullopt;
    if (classes.contains(iri)) return EntityKind::Class;
    if (properties.contains(iri)) return EntityKind::Property;
    return EntityKind::Instance;
}

EntityKind entity_kind(const KnowledgeGraph& kg, const Iri& entity) {
    auto idx = classify_entities(kg);
    auto kind = idx.kind_of(entity.value());
    if (!kind)
        throw LookupError("entity does not occur in graph '" + kg.id() + "': " + entity.value());
    return *kind;
}

KgStats stats(const KnowledgeGraph& kg) {
    KgStats st;
    st.model_size = kg.size();
    auto idx = classify_entities(kg);
    // Classes: declared classes minus the meta vocabulary itself.
    for (const auto& c : idx.classes)
        if (!is_meta_vocab(c)) ++st.num_classes;
    // Instances: typed subjects that the classification does not claim as
    // class or property.
    std::unordered_set<std::string> typed;
    for (const auto& t : kg.triples()) {
        if (t.predicate.value() != vocab::kRdfType || !is_iri(t.object)) continue;
        if (!is_meta_vocab(as_iri(t.object).value())) typed.insert(t.subject.value());
    }
    for (const auto& s : typed)
        if (idx.kind_of(s) == EntityKind::Instance) ++st.num_instances;
    return st;
}

}  // namespace kgmatch
