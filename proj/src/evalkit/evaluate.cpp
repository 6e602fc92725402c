#include "durghotona/evalkit/evaluate.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "durghotona/common/strings.hpp"

namespace durghotona::evalkit {

namespace strings = durghotona::strings;

namespace {

bool is_ascii_punct(unsigned char c) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
           (c >= '{' && c <= '~');
}

// Unicode punctuation that shows up in news copy: dashes, curly quotes,
// the ellipsis and NBSP. Anything else multi-byte passes through.
bool is_unicode_punct(std::string_view s, size_t i, size_t& len) {
    auto b = [&](size_t k) { return static_cast<unsigned char>(s[i + k]); };
    if (i + 1 < s.size() && b(0) == 0xC2 && b(1) == 0xA0) {  // NBSP
        len = 2;
        return true;
    }
    if (i + 2 < s.size() && b(0) == 0xE2 && b(1) == 0x80) {
        unsigned char third = b(2);
        // U+2010..U+2015 hyphens and dashes, U+2018/19 and U+201C/1D
        // quotes, U+2026 ellipsis.
        if ((third >= 0x90 && third <= 0x95) || third == 0x98 || third == 0x99 ||
            third == 0x9C || third == 0x9D || third == 0xA6) {
            len = 3;
            return true;
        }
    }
    return false;
}

template <typename T>
bool exact_optional_match(const std::optional<T>& predicted, const std::optional<T>& gold) {
    if (predicted.has_value() != gold.has_value()) return false;
    if (!predicted.has_value()) return true;  // null matches only null
    return *predicted == *gold;
}

bool free_text_match(const std::optional<std::string>& predicted,
                     const std::optional<std::string>& gold) {
    if (predicted.has_value() != gold.has_value()) return false;
    if (!predicted.has_value()) return true;
    return fold_free_text(*predicted) == fold_free_text(*gold);
}

}  // namespace

std::string fold_free_text(std::string_view text) {
    std::string spaced;
    spaced.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            spaced.push_back(is_ascii_punct(c) ? ' ' : text[i]);
            ++i;
            continue;
        }
        size_t len = 0;
        if (is_unicode_punct(text, i, len)) {
            spaced.push_back(' ');
            i += len;
            continue;
        }
        spaced.push_back(text[i]);
        ++i;
    }
    return strings::collapse_whitespace(strings::ascii_lower(spaced));
}

Match match_field(const std::string& field, const records::AccidentRecord& predicted,
                  const GoldFields& gold) {
    bool correct = false;
    if (field == "accident_date") {
        correct = exact_optional_match(predicted.accident_date, gold.accident_date);
    } else if (field == "accident_time") {
        correct = exact_optional_match(predicted.accident_time, gold.accident_time);
    } else if (field == "killed") {
        correct = exact_optional_match(predicted.killed, gold.killed);
    } else if (field == "injured") {
        correct = exact_optional_match(predicted.injured, gold.injured);
    } else if (field == "location") {
        correct = free_text_match(predicted.location, gold.location);
    } else if (field == "road_characteristics") {
        correct = free_text_match(predicted.road_characteristics, gold.road_characteristics);
    } else if (field == "pedestrian_involved") {
        correct = exact_optional_match(predicted.pedestrian_involved, gold.pedestrian_involved);
    } else if (field == "vehicle_types") {
        std::set<std::string> mine(predicted.vehicle_types.begin(),
                                   predicted.vehicle_types.end());
        std::set<std::string> theirs(gold.vehicle_types.begin(), gold.vehicle_types.end());
        correct = mine == theirs;
    } else {
        throw std::invalid_argument("unknown field: " + field);
    }
    return correct ? Match::Correct : Match::Wrong;
}

EvalReport evaluate(const std::vector<records::AccidentRecord>& dataset, const GoldSet& gold) {
    EvalReport report;
    std::map<std::string, std::unordered_set<std::string>> covered;  // model -> urls scored

    for (const auto& record : dataset) {
        auto it = gold.entries.find(record.url);
        if (it == gold.entries.end()) {
            report.add_skipped_record(record.model);
            covered.try_emplace(record.model);
            continue;
        }
        covered[record.model].insert(record.url);
        report.add_scored_article(record.model, record.source);
        for (const auto& field : EvalReport::field_order()) {
            report.add_comparison(record.model, record.source, field,
                                  match_field(field, record, it->second.fields) ==
                                      Match::Correct);
        }
    }

    for (const auto& [model, urls] : covered) {
        for (const auto& [url, entry] : gold.entries) {
            (void)entry;
            if (!urls.count(url)) report.add_coverage_gap(model, url);
        }
    }
    return report;
}

}  // namespace durghotona::evalkit
