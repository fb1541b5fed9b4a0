// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/attribution.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "authorid/errors.hpp"

namespace authorid {

AuthorModel::AuthorModel(std::map<std::string, UnigramProfile> profiles) {
    authors_.reserve(profiles.size());
    profiles_.reserve(profiles.size());
    for (auto& [author, profile] : profiles) {
        if (profile.empty()) {
            throw EmptyProfileError("author '" + author + "' has an empty profile");
        }
        authors_.push_back(author);
        norm_sqs_.push_back(profile.norm_sq());
        gcds_.push_back(detail::counts_gcd(profile));
        profiles_.push_back(std::move(profile));
    }
}

const UnigramProfile& AuthorModel::profile(const std::string& author) const {
    const auto it = std::lower_bound(authors_.begin(), authors_.end(), author);
    if (it == authors_.end() || *it != author) {
        throw std::out_of_range("unknown author '" + author + "'");
    }
    return profiles_[static_cast<std::size_t>(it - authors_.begin())];
}

AuthorModel build_model(const Corpus& training) {
    std::map<std::string, UnigramProfile> profiles;
    for (const auto& author : training.authors()) {
        UnigramProfile merged;
        for (const auto id : training.author_records(author)) {
            for (const auto& token : tokenize(training.record(id).text)) merged.add(token);
        }
        if (merged.empty()) {
            throw EmptyProfileError("author '" + author + "' has an empty training profile");
        }
        profiles.emplace(author, std::move(merged));
    }
    return AuthorModel(std::move(profiles));
}

Attribution attribute(const UnigramProfile& query, const AuthorModel& model, MetricKind metric) {
    if (model.empty()) throw EmptyModelError("attribution against an empty model");
    if (query.empty()) throw EmptyQueryError("query profile has no tokens");

    const std::uint64_t query_norm_sq = query.norm_sq();
    const std::uint64_t query_gcd = detail::counts_gcd(query);

    Attribution result;
    result.ranking.reserve(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
        const std::uint64_t dot = detail::sparse_dot(query, model.profiles()[i]);
        const double s = metric == MetricKind::cosine
                             ? detail::cosine_from_parts(dot, model.norm_sqs()[i], model.gcds()[i],
                                                         query_norm_sq, query_gcd)
                             : detail::squared_euclidean_from_parts(dot, model.norm_sqs()[i],
                                                                    query_norm_sq);
        result.ranking.emplace_back(model.authors()[i], s);
    }

    const bool descending = higher_is_better(metric);
    std::sort(result.ranking.begin(), result.ranking.end(),
              [descending](const auto& a, const auto& b) {
                  if (a.second != b.second) {
                      return descending ? a.second > b.second : a.second < b.second;
                  }
                  return a.first < b.first;  // exact ties: bytewise-smaller author id
              });
    return result;
}

void write_model(const AuthorModel& model, std::ostream& out) {
    for (std::size_t i = 0; i < model.size(); ++i) {
        const auto& author = model.authors()[i];
        std::vector<const UnigramProfile::CountMap::value_type*> entries;
        entries.reserve(model.profiles()[i].distinct());
        for (const auto& entry : model.profiles()[i].counts()) entries.push_back(&entry);
        std::sort(entries.begin(), entries.end(),
                  [](const auto* a, const auto* b) { return a->first < b->first; });
        for (const auto* entry : entries) {
            out << author << '\t' << entry->first << '\t' << entry->second << '\n';
        }
    }
}

AuthorModel read_model(std::istream& in) {
    std::map<std::string, UnigramProfile> profiles;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos || tab1 == 0 || tab2 == tab1 + 1) {
            throw FormatError("model line " + std::to_string(line_no) +
                                  ": expected author<TAB>token<TAB>count",
                              line_no);
        }
        const std::string author = line.substr(0, tab1);
        const std::string token = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string_view count_s(line.data() + tab2 + 1, line.size() - tab2 - 1);
        std::uint64_t count = 0;
        const auto [ptr, ec] = std::from_chars(count_s.begin(), count_s.end(), count);
        if (ec != std::errc{} || ptr != count_s.end() || count == 0) {
            throw FormatError("model line " + std::to_string(line_no) +
                                  ": count must be a positive integer",
                              line_no);
        }
        auto& profile = profiles[author];
        if (profile.count(token) != 0) {
            throw FormatError("model line " + std::to_string(line_no) + ": duplicate token '" +
                                  token + "' for author '" + author + "'",
                              line_no);
        }
        profile.add(token, count);
    }
    if (profiles.empty()) throw EmptyModelError("model file contains no profiles");
    return AuthorModel(std::move(profiles));
}

}  // namespace authorid
