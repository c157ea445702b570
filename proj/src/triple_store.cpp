#include "slam/triple_store.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>

#include "line_reader.hpp"
#include "slam/errors.hpp"

namespace slam {

namespace {

constexpr char kMagic[8] = {'S', 'L', 'A', 'M', 'T', 'R', 'P', '1'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void write_str(std::ostream& out, std::string_view s) {
    write_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("truncated snapshot");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t read_u64(std::istream& in) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("truncated snapshot");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

std::string read_str(std::istream& in) {
    const auto len = read_u32(in);
    if (len > (1u << 24)) throw std::runtime_error("truncated snapshot");
    std::string s(len, '\0');
    if (len && !in.read(s.data(), len)) throw std::runtime_error("truncated snapshot");
    return s;
}

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
    if (field.empty()) throw ParseError(line_no, "empty count field");
    std::uint64_t value = 0;
    for (const char c : field) {
        if (c < '0' || c > '9')
            throw ParseError(line_no, "count is not a positive integer: \"" + std::string(field) + "\"");
        const auto digit = static_cast<std::uint64_t>(c - '0');
        if (value > (UINT64_MAX - digit) / 10) throw ParseError(line_no, "count out of range");
        value = value * 10 + digit;
    }
    if (value == 0)
        throw ParseError(line_no, "count must be positive: \"" + std::string(field) + "\"");
    return value;
}

Lexeme parse_lexeme(std::string_view field, std::size_t line_no) {
    try {
        return Lexeme::parse(field);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

}  // namespace

TripleStore TripleStore::build(std::istream& triples, std::istream& lemma_freq,
                               std::string corpus_id) {
    std::map<std::tuple<std::string, Lexeme, Lexeme>, std::uint64_t> merged;  // (rel, dep, gov)
    {
        detail::LineReader reader(triples);
        while (reader.next()) {
            const auto fields = detail::split_tabs(reader.line());
            if (fields.size() != 4)
                throw ParseError(reader.line_no(),
                                 "expected <governor>\\t<relation>\\t<dependent>\\t<count>, got " +
                                     std::to_string(fields.size()) + " fields");
            const Lexeme governor = parse_lexeme(fields[0], reader.line_no());
            if (fields[1].empty()) throw ParseError(reader.line_no(), "empty relation");
            const Lexeme dependent = parse_lexeme(fields[2], reader.line_no());
            const std::uint64_t count = parse_count(fields[3], reader.line_no());
            merged[{std::string(fields[1]), dependent, governor}] += count;
        }
    }

    std::map<std::string, std::uint64_t> freqs;
    {
        detail::LineReader reader(lemma_freq);
        while (reader.next()) {
            const auto fields = detail::split_tabs(reader.line());
            if (fields.size() != 2)
                throw ParseError(reader.line_no(), "expected <label>\\t<count>, got " +
                                                       std::to_string(fields.size()) + " fields");
            const Lexeme label = parse_lexeme(fields[0], reader.line_no());
            freqs[label.label()] += parse_count(fields[1], reader.line_no());
        }
    }

    TripleStore store;
    store.corpus_id_ = std::move(corpus_id);
    store.triples_.reserve(merged.size());
    for (const auto& [key, count] : merged)
        store.triples_.push_back({std::get<2>(key), std::get<0>(key), std::get<1>(key), count});

    // Lexemes seen in triples but absent from the frequency input fall back
    // to the sum of their counts as governor, and stay flagged.
    std::map<std::string, std::uint64_t> estimated;
    for (const auto& t : store.triples_) {
        if (!freqs.count(t.governor.label())) estimated[t.governor.label()] += t.count;
        if (!freqs.count(t.dependent.label())) estimated.try_emplace(t.dependent.label(), 0);
    }

    store.lemmas_.reserve(freqs.size() + estimated.size());
    for (const auto& [label, freq] : freqs) store.lemmas_.push_back({label, freq, false});
    for (const auto& [label, freq] : estimated) store.lemmas_.push_back({label, freq, true});
    std::sort(store.lemmas_.begin(), store.lemmas_.end(),
              [](const LemmaEntry& a, const LemmaEntry& b) { return a.label < b.label; });
    return store;
}

TripleStore TripleStore::build_from_files(const std::filesystem::path& triples,
                                          const std::filesystem::path& lemma_freq,
                                          std::string corpus_id) {
    std::ifstream tin(triples);
    if (!tin) throw std::runtime_error("cannot open triples file: " + triples.string());
    std::ifstream fin(lemma_freq);
    if (!fin) throw std::runtime_error("cannot open lemma-frequency file: " + lemma_freq.string());
    return build(tin, fin, std::move(corpus_id));
}

void TripleStore::save_snapshot(std::ostream& out) const {
    out.write(kMagic, sizeof kMagic);
    write_u32(out, kVersion);
    write_str(out, corpus_id_);
    write_u64(out, triples_.size());
    for (const auto& t : triples_) {
        write_str(out, t.governor.label());
        write_str(out, t.relation);
        write_str(out, t.dependent.label());
        write_u64(out, t.count);
    }
    write_u64(out, lemmas_.size());
    for (const auto& e : lemmas_) {
        write_str(out, e.label);
        write_u64(out, e.freq);
        out.put(e.estimated ? '\1' : '\0');
    }
    if (!out) throw std::runtime_error("snapshot write failed");
}

void TripleStore::save_snapshot_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open snapshot for writing: " + path.string());
    save_snapshot(out);
}

TripleStore TripleStore::load_snapshot(std::istream& in) {
    char magic[8];
    if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + 8, kMagic))
        throw std::runtime_error("not a triple-store snapshot");
    const auto version = read_u32(in);
    if (version != kVersion)
        throw std::runtime_error("unsupported snapshot version " + std::to_string(version));

    TripleStore store;
    store.corpus_id_ = read_str(in);
    const auto triple_count = read_u64(in);
    store.triples_.reserve(triple_count);
    for (std::uint64_t i = 0; i < triple_count; ++i) {
        Lexeme governor = Lexeme::parse(read_str(in));
        std::string relation = read_str(in);
        Lexeme dependent = Lexeme::parse(read_str(in));
        const auto count = read_u64(in);
        store.triples_.push_back({std::move(governor), std::move(relation), std::move(dependent), count});
    }
    const auto lemma_count = read_u64(in);
    store.lemmas_.reserve(lemma_count);
    for (std::uint64_t i = 0; i < lemma_count; ++i) {
        std::string label = read_str(in);
        const auto freq = read_u64(in);
        const int flag = in.get();
        if (flag != 0 && flag != 1) throw std::runtime_error("truncated snapshot");
        store.lemmas_.push_back({std::move(label), freq, flag == 1});
    }
    return store;
}

TripleStore TripleStore::load_snapshot_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open snapshot: " + path.string());
    return load_snapshot(in);
}

std::size_t TripleStore::distinct_lexemes() const {
    std::set<std::string_view> labels;
    for (const auto& t : triples_) {
        labels.insert(t.governor.label());
        labels.insert(t.dependent.label());
    }
    return labels.size();
}

std::uint64_t TripleStore::count_of(const Lexeme& governor, std::string_view relation,
                                    const Lexeme& dependent) const {
    const auto key = std::make_tuple(std::string_view(relation), std::string_view(dependent.label()),
                                     std::string_view(governor.label()));
    auto it = std::lower_bound(triples_.begin(), triples_.end(), key,
                               [](const Triple& t, const auto& k) {
                                   return std::make_tuple(std::string_view(t.relation),
                                                          std::string_view(t.dependent.label()),
                                                          std::string_view(t.governor.label())) < k;
                               });
    if (it == triples_.end() || it->relation != relation || it->dependent != dependent ||
        it->governor != governor)
        return 0;
    return it->count;
}

const TripleStore::LemmaEntry* TripleStore::lemma_entry(std::string_view label) const {
    auto it = std::lower_bound(lemmas_.begin(), lemmas_.end(), label,
                               [](const LemmaEntry& e, std::string_view s) { return e.label < s; });
    if (it == lemmas_.end() || it->label != label) return nullptr;
    return &*it;
}

std::uint64_t TripleStore::lemma_frequency(const Lexeme& l) const {
    const auto* e = lemma_entry(l.label());
    return e ? e->freq : 0;
}

bool TripleStore::frequency_estimated(const Lexeme& l) const {
    const auto* e = lemma_entry(l.label());
    return e && e->estimated;
}

CandidateSet TripleStore::candidates(const Lexeme& focus, std::string_view relation,
                                     const Lexeme& dependent, std::uint64_t min_count,
                                     std::uint64_t max_freq) const {
    if (min_count < 1) throw std::invalid_argument("min triple count must be positive");
    if (max_freq < 1) throw std::invalid_argument("max lemma frequency must be positive");

    CandidateSet set{focus, std::string(relation), dependent, min_count, max_freq, {}};

    const auto key = std::make_pair(relation, std::string_view(dependent.label()));
    auto first = std::lower_bound(triples_.begin(), triples_.end(), key,
                                  [](const Triple& t, const auto& k) {
                                      return std::make_pair(std::string_view(t.relation),
                                                            std::string_view(t.dependent.label())) < k;
                                  });
    for (auto it = first; it != triples_.end() && it->relation == relation &&
                          it->dependent == dependent;
         ++it) {
        if (it->count < min_count) continue;
        if (it->governor.category() != focus.category()) continue;
        if (lemma_frequency(it->governor) > max_freq) continue;
        set.members.push_back({it->governor, it->count});
    }
    return set;  // already label-sorted: governors ascend within the (relation, dependent) run
}

}  // namespace slam
