// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace authorid {

enum class Source { nus_xml, plain };

// One SMS message. `id` is assigned by the parser in document order and is
// unique within a corpus; all tie-breaking and dedup retention rules are
// defined on it.
struct SmsRecord {
    std::uint64_t id = 0;
    std::string author_id;
    std::string text;
    Source source = Source::plain;

    bool operator==(const SmsRecord&) const = default;
};

// Immutable, indexed collection of records grouped by author. Records are
// kept sorted by id; per-author id lists are ascending. Construction
// validates that ids are unique and that author and text are non-empty.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<SmsRecord> records);

    const std::vector<SmsRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    std::size_t author_count() const { return by_author_.size(); }
    std::vector<std::string> authors() const;  // bytewise sorted
    bool has_author(std::string_view author) const;
    const std::vector<std::uint64_t>& author_records(const std::string& author) const;

    const SmsRecord& record(std::uint64_t id) const;

private:
    std::vector<SmsRecord> records_;
    std::map<std::string, std::vector<std::uint64_t>> by_author_;
    std::unordered_map<std::uint64_t, std::size_t> position_;  // id -> records_ index
};

// Plain format: one record per line, `author_id<TAB>text`, UTF-8, LF line
// endings (a trailing CR is tolerated on input). Blank lines are skipped.
// A line without a tab, or with an empty author or text, raises FormatError
// with its 1-based line number.
Corpus parse_plain(std::istream& in);

// Writes the canonical plain format, records in id order. Tabs, CRs and LFs
// inside a message body are flattened to single spaces because the line
// format cannot carry them; token profiles are unaffected.
void write_plain(const Corpus& corpus, std::ostream& out);

// Per-author removal of duplicate messages, where two texts are duplicates
// when their case folds (fold_case) are equal. The record with the smallest
// id survives. The same text under two different authors is kept for both.
Corpus dedupe(const Corpus& corpus);

// Keeps exactly the authors with at least min_count records. May return an
// empty corpus.
Corpus filter_min_messages(const Corpus& corpus, std::size_t min_count);

// For each author, the per_author records with the greatest text length in
// code points; ties broken by smallest id. Throws InsufficientDataError
// naming any author with fewer than per_author records.
Corpus select_longest(const Corpus& corpus, std::size_t per_author);

// For each author, a uniform random sample of per_author records without
// replacement. The per-author stream is SplitMix64(mix_seed(seed, author)),
// so the result does not depend on author iteration order.
Corpus select_random(const Corpus& corpus, std::size_t per_author, std::uint64_t seed);

// Restricts the corpus to a uniform random subset of n_authors authors,
// drawn with SplitMix64(seed) over the sorted author list.
Corpus select_authors(const Corpus& corpus, std::size_t n_authors, std::uint64_t seed);

}  // namespace authorid
