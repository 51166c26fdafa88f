#include "kgmatch/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kgmatch/errors.hpp"

namespace kgmatch {

Correspondence::Correspondence(Iri a, Iri b, double confidence)
    : confidence_(confidence) {
    if (a == b)
        throw ValueError("correspondence requires two distinct entities: " + a.value());
    if (!(confidence >= 0.0 && confidence <= 1.0))
        throw ValueError("confidence out of range [0,1]: " + std::to_string(confidence));
    if (b < a) std::swap(a, b);
    entity_one_ = std::move(a);
    entity_two_ = std::move(b);
}

void Alignment::add(Correspondence c) {
    auto key = std::make_pair(c.entity_one().value(), c.entity_two().value());
    auto [it, inserted] = entries_.try_emplace(std::move(key), c.confidence());
    if (!inserted) it->second = std::max(it->second, c.confidence());
}

void Alignment::add_all(const Alignment& other) {
    for (const auto& [pair, conf] : other.entries_) {
        auto [it, inserted] = entries_.try_emplace(pair, conf);
        if (!inserted) it->second = std::max(it->second, conf);
    }
}

bool Alignment::contains(const Iri& a, const Iri& b) const {
    return confidence_of(a, b).has_value();
}

std::optional<double> Alignment::confidence_of(const Iri& a, const Iri& b) const {
    auto key = (a < b) ? std::make_pair(a.value(), b.value())
                       : std::make_pair(b.value(), a.value());
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool Alignment::operator==(const Alignment& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    return std::equal(entries_.begin(), entries_.end(), o.entries_.begin(),
                      [](const auto& l, const auto& r) { return l.first == r.first; });
}

// ---------------------------------------------------------------------------
// DisjointSet

std::size_t DisjointSet::add(const std::string& element) {
    auto [it, inserted] = ids_.try_emplace(element, names_.size());
    if (inserted) {
        names_.push_back(element);
        parent_.push_back(it->second);
        size_.push_back(1);
    }
    return it->second;
}

bool DisjointSet::contains(const std::string& element) const {
    return ids_.contains(element);
}

std::size_t DisjointSet::find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
        std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

void DisjointSet::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
}

std::vector<std::vector<std::string>> DisjointSet::groups(std::size_t min_size) {
    std::unordered_map<std::size_t, std::vector<std::string>> by_root;
    for (std::size_t i = 0; i < names_.size(); ++i)
        by_root[find(i)].push_back(names_[i]);

    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : by_root) {
        if (members.size() < min_size) continue;
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// ---------------------------------------------------------------------------
// Membership

const std::string Membership::kAmbiguous = "\x01ambiguous";

void Membership::declare(const std::string& iri, const std::string& kg_id) {
    auto [it, inserted] = source_.try_emplace(iri, kg_id);
    if (!inserted && it->second != kg_id) it->second = kAmbiguous;
}

void Membership::declare_all(const KnowledgeGraph& kg) {
    for (const auto& entity : kg.entities()) declare(entity.value(), kg.id());
}

const std::string& Membership::source_of(const std::string& iri) const {
    auto it = source_.find(iri);
    if (it == source_.end())
        throw LookupError("entity has no known source KG: " + iri);
    if (it->second == kAmbiguous)
        throw LookupError("entity is declared by multiple source KGs: " + iri);
    return it->second;
}

std::optional<std::string> Membership::try_source_of(const std::string& iri) const {
    auto it = source_.find(iri);
    if (it == source_.end() || it->second == kAmbiguous) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Closure and pair splitting

std::vector<EntityCluster> closure(const Alignment& alignment, const Membership& membership) {
    DisjointSet ds;
    for (const auto& [pair, conf] : alignment) {
        ds.unite(ds.add(pair.first), ds.add(pair.second));
    }
    std::vector<EntityCluster> clusters;
    for (auto& group : ds.groups(2)) {
        EntityCluster cluster;
        cluster.members.reserve(group.size());
        std::set<std::string> sources_seen;
        for (auto& entity : group) {
            const std::string& src = membership.source_of(entity);
            if (!sources_seen.insert(src).second) cluster.source_inconsistent = true;
            cluster.members.emplace_back(std::move(entity), src);
        }
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

Alignment expand_to_pairs(const std::vector<EntityCluster>& clusters,
                          const std::string& kg_a, const std::string& kg_b) {
    if (kg_a == kg_b) throw ValueError("expand_to_pairs requires two distinct KGs");
    Alignment out;
    for (const auto& cluster : clusters) {
        for (const auto& [ea, sa] : cluster.members) {
            if (sa != kg_a) continue;
            for (const auto& [eb, sb] : cluster.members) {
                if (sb != kg_b) continue;
                out.add(Correspondence(Iri(ea), Iri(eb), 1.0));
            }
        }
    }
    return out;
}

SplitAlignment split_by_pair(const Alignment& alignment, const Membership& membership) {
    SplitAlignment out;
    for (const auto& [pair, conf] : alignment) {
        const std::string& src_a = membership.source_of(pair.first);
        const std::string& src_b = membership.source_of(pair.second);
        Correspondence c(Iri(pair.first), Iri(pair.second), conf);
        if (src_a == src_b) {
            out.intra_source.add(std::move(c));
        } else {
            auto key = (src_a < src_b) ? std::make_pair(src_a, src_b)
                                       : std::make_pair(src_b, src_a);
            out.by_pair[key].add(std::move(c));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// TSV format

std::string format_confidence(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string s(buf, ptr);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

Alignment parse_alignment(std::string_view text) {
    Alignment out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (end == std::string_view::npos ? text.size() : end) - pos);
        pos = (end == std::string_view::npos) ? text.size() : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t f = 0;
        while (true) {
            auto tab = line.find('\t', f);
            if (tab == std::string_view::npos) {
                fields.push_back(line.substr(f));
                break;
            }
            fields.push_back(line.substr(f, tab - f));
            f = tab + 1;
        }
        if (fields.size() != 4)
            throw ParseError(line_no, "expected 4 tab-separated fields, got " +
                                          std::to_string(fields.size()));
        if (fields[2] != "=")
            throw ParseError(line_no, "unsupported relation: " + std::string(fields[2]));

        double conf = 0.0;
        auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), conf);
        if (ec != std::errc() || ptr != fields[3].data() + fields[3].size())
            throw ParseError(line_no, "malformed confidence: " + std::string(fields[3]));
        if (!(conf >= 0.0 && conf <= 1.0))
            throw ValueError("line " + std::to_string(line_no) +
                             ": confidence out of range [0,1]: " + std::string(fields[3]));

        try {
            out.add(Correspondence(Iri(std::string(fields[0])), Iri(std::string(fields[1])), conf));
        } catch (const ValueError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return out;
}

Alignment load_alignment(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValueError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_alignment(buf.str());
}

std::string serialize_alignment(const Alignment& alignment) {
    std::string out;
    for (const auto& [pair, conf] : alignment) {
        out += pair.first;
        out += '\t';
        out += pair.second;
        out += "\t=\t";
        out += format_confidence(conf);
        out += '\n';
    }
    return out;
}

void write_alignment(const Alignment& alignment, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValueError("cannot write file: " + path);
    out << serialize_alignment(alignment);
}

}  // namespace kgmatch
