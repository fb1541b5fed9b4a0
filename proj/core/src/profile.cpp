// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "authorid/profile.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <vector>

#include "authorid/errors.hpp"

namespace authorid {

void UnigramProfile::add(std::string_view token, std::uint64_t n) {
    if (n == 0) return;
    auto [it, inserted] = counts_.try_emplace(std::string(token), 0);
    const std::uint64_t old = it->second;
    it->second = old + n;
    total_ += n;
    norm_sq_ += n * (2 * old + n);  // (old+n)^2 - old^2
}

std::uint64_t UnigramProfile::count(std::string_view token) const {
    // Heterogeneous find needs a transparent hash; a temporary key is fine
    // at the call rates this sees.
    const auto it = counts_.find(std::string(token));
    return it == counts_.end() ? 0 : it->second;
}

UnigramProfile profile_of(const TokenSeq& tokens) {
    UnigramProfile p;
    for (const auto& token : tokens) p.add(token);
    return p;
}

UnigramProfile merge(std::span<const UnigramProfile> profiles) {
    UnigramProfile out;
    for (const auto& p : profiles) {
        for (const auto& [token, count] : p.counts()) out.add(token, count);
    }
    return out;
}

void write_profile(const UnigramProfile& profile, std::ostream& out) {
    std::vector<const UnigramProfile::CountMap::value_type*> entries;
    entries.reserve(profile.distinct());
    for (const auto& entry : profile.counts()) entries.push_back(&entry);
    std::sort(entries.begin(), entries.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });
    for (const auto* entry : entries) {
        out << entry->first << '\t' << entry->second << '\n';
    }
}

UnigramProfile read_profile(std::istream& in) {
    UnigramProfile p;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw FormatError("profile line " + std::to_string(line_no) +
                                  ": expected token<TAB>count",
                              line_no);
        }
        const std::string_view token(line.data(), tab);
        const std::string_view count_s(line.data() + tab + 1, line.size() - tab - 1);
        std::uint64_t count = 0;
        const auto [ptr, ec] = std::from_chars(count_s.begin(), count_s.end(), count);
        if (ec != std::errc{} || ptr != count_s.end() || count == 0) {
            throw FormatError("profile line " + std::to_string(line_no) +
                                  ": count must be a positive integer",
                              line_no);
        }
        if (p.count(token) != 0) {
            throw FormatError("profile line " + std::to_string(line_no) + ": duplicate token",
                              line_no);
        }
        p.add(token, count);
    }
    return p;
}

}  // namespace authorid
