// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "authorid/errors.hpp"
#include "authorid/rng.hpp"
#include "authorid/tokenizer.hpp"

namespace authorid {

Corpus::Corpus(std::vector<SmsRecord> records) : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(),
              [](const SmsRecord& a, const SmsRecord& b) { return a.id < b.id; });
    position_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (r.author_id.empty()) throw std::invalid_argument("record with empty author_id");
        if (r.text.empty()) throw std::invalid_argument("record with empty text");
        if (!position_.emplace(r.id, i).second) {
            throw std::invalid_argument("duplicate record id " + std::to_string(r.id));
        }
        by_author_[r.author_id].push_back(r.id);
    }
}

std::vector<std::string> Corpus::authors() const {
    std::vector<std::string> out;
    out.reserve(by_author_.size());
    for (const auto& [author, ids] : by_author_) out.push_back(author);
    return out;
}

bool Corpus::has_author(std::string_view author) const {
    return by_author_.find(std::string(author)) != by_author_.end();
}

const std::vector<std::uint64_t>& Corpus::author_records(const std::string& author) const {
    const auto it = by_author_.find(author);
    if (it == by_author_.end()) throw std::out_of_range("unknown author '" + author + "'");
    return it->second;
}

const SmsRecord& Corpus::record(std::uint64_t id) const {
    return records_[position_.at(id)];
}

Corpus parse_plain(std::istream& in) {
    std::vector<SmsRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw FormatError("line " + std::to_string(line_no) +
                                  ": expected author_id<TAB>text",
                              line_no);
        }
        std::string author = line.substr(0, tab);
        std::string text = line.substr(tab + 1);
        if (author.empty() || text.empty()) {
            throw FormatError("line " + std::to_string(line_no) +
                                  ": author_id and text must be non-empty",
                              line_no);
        }
        records.push_back(
            {static_cast<std::uint64_t>(records.size()), std::move(author), std::move(text), Source::plain});
    }
    return Corpus(std::move(records));
}

void write_plain(const Corpus& corpus, std::ostream& out) {
    for (const auto& r : corpus.records()) {
        out << r.author_id << '\t';
        for (const char c : r.text) {
            out << ((c == '\t' || c == '\n' || c == '\r') ? ' ' : c);
        }
        out << '\n';
    }
}

namespace {

Corpus subset(const Corpus& corpus, const std::vector<std::uint64_t>& ids) {
    std::vector<SmsRecord> records;
    records.reserve(ids.size());
    for (const auto id : ids) records.push_back(corpus.record(id));
    return Corpus(std::move(records));
}

}  // namespace

Corpus dedupe(const Corpus& corpus) {
    std::set<std::pair<std::string_view, std::string>> seen;  // (author, folded text)
    std::vector<std::uint64_t> kept;
    // records() is id-ordered, so the first record seen wins the duplicate.
    for (const auto& r : corpus.records()) {
        if (seen.emplace(r.author_id, fold_case(r.text)).second) kept.push_back(r.id);
    }
    return subset(corpus, kept);
}

Corpus filter_min_messages(const Corpus& corpus, std::size_t min_count) {
    std::vector<std::uint64_t> kept;
    for (const auto& r : corpus.records()) {
        if (corpus.author_records(r.author_id).size() >= min_count) kept.push_back(r.id);
    }
    return subset(corpus, kept);
}

Corpus select_longest(const Corpus& corpus, std::size_t per_author) {
    std::vector<std::uint64_t> kept;
    for (const auto& author : corpus.authors()) {
        const auto& ids = corpus.author_records(author);
        if (ids.size() < per_author) {
            throw InsufficientDataError("author '" + author + "' has " +
                                        std::to_string(ids.size()) + " records, need " +
                                        std::to_string(per_author) + " (select_longest)");
        }
        std::vector<std::pair<std::size_t, std::uint64_t>> by_length;  // (codepoints, id)
        by_length.reserve(ids.size());
        for (const auto id : ids) {
            by_length.emplace_back(codepoint_count(corpus.record(id).text), id);
        }
        std::sort(by_length.begin(), by_length.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (std::size_t i = 0; i < per_author; ++i) kept.push_back(by_length[i].second);
    }
    return subset(corpus, kept);
}

Corpus select_random(const Corpus& corpus, std::size_t per_author, std::uint64_t seed) {
    std::vector<std::uint64_t> kept;
    for (const auto& author : corpus.authors()) {
        const auto& ids = corpus.author_records(author);
        if (ids.size() < per_author) {
            throw InsufficientDataError("author '" + author + "' has " +
                                        std::to_string(ids.size()) + " records, need " +
                                        std::to_string(per_author) + " (select_random)");
        }
        SplitMix64 rng(mix_seed(seed, author));
        for (const auto id : sample_without_replacement(ids, per_author, rng)) {
            kept.push_back(id);
        }
    }
    return subset(corpus, kept);
}

Corpus select_authors(const Corpus& corpus, std::size_t n_authors, std::uint64_t seed) {
    auto authors = corpus.authors();
    if (authors.size() < n_authors) {
        throw InsufficientDataError("corpus has " + std::to_string(authors.size()) +
                                    " authors, need " + std::to_string(n_authors) +
                                    " (select_authors)");
    }
    SplitMix64 rng(seed);
    const auto chosen = sample_without_replacement(authors, n_authors, rng);
    const std::set<std::string> chosen_set(chosen.begin(), chosen.end());
    std::vector<std::uint64_t> kept;
    for (const auto& r : corpus.records()) {
        if (chosen_set.contains(r.author_id)) kept.push_back(r.id);
    }
    return subset(corpus, kept);
}

}  // namespace authorid
