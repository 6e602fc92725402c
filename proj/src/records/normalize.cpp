#include "durghotona/records/normalize.hpp"

#include <array>
#include <cctype>
#include <cstdio>

#include "durghotona/common/strings.hpp"

namespace durghotona::records {

namespace strings = durghotona::strings;

namespace {

bool is_null_marker(std::string_view trimmed_lower) {
    return trimmed_lower.empty() || trimmed_lower == "unknown";
}

constexpr std::array<std::string_view, 21> kNumberWords = {
    "zero", "one", "two",    "three",  "four",    "five",    "six",
    "seven", "eight", "nine", "ten",   "eleven",  "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

constexpr std::array<std::string_view, 7> kWeekdays = {
    "sunday", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday"};

std::optional<int> month_from_name(std::string_view name) {
    std::string lower = strings::ascii_lower(name);
    if (!lower.empty() && lower.back() == '.') lower.pop_back();
    for (size_t i = 0; i < kMonths.size(); ++i) {
        if (lower == kMonths[i]) return static_cast<int>(i + 1);
        if (lower.size() == 3 && kMonths[i].substr(0, 3) == lower) return static_cast<int>(i + 1);
    }
    return std::nullopt;
}

std::optional<long> parse_plain_number(std::string_view s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    long value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

std::vector<std::string> tokenize_words(std::string_view s) {
    std::vector<std::string> words;
    std::string current;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            current.push_back(c);
        } else {
            if (!current.empty()) words.push_back(current);
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(current);
    return words;
}

std::string two_digit_time(long hour, long minute) {
    char buffer[8];
    std::snprintf(buffer, sizeof(buffer), "%02ld:%02ld", hour, minute);
    return buffer;
}

}  // namespace

std::optional<long> normalize_count(std::string_view text, std::string_view field_name) {
    const std::string trimmed = strings::trim(text);
    const std::string lower = strings::ascii_lower(trimmed);
    if (is_null_marker(lower)) return std::nullopt;
    if (auto n = parse_plain_number(trimmed)) return n;
    for (size_t i = 0; i < kNumberWords.size(); ++i) {
        if (lower == kNumberWords[i]) return static_cast<long>(i);
    }
    throw UnnormalizableField(std::string(field_name), trimmed);
}

std::optional<Date> normalize_date(std::string_view text, std::optional<Date> publish_date) {
    const std::string trimmed = strings::collapse_whitespace(text);
    const std::string lower = strings::ascii_lower(trimmed);
    if (is_null_marker(lower)) return std::nullopt;

    if (auto iso = Date::parse_iso(trimmed)) return iso;

    // "9 April 2024" and "April 9, 2024" (comma optional, 3-letter
    // abbreviations accepted).
    auto words = tokenize_words(trimmed);
    if (words.size() == 3) {
        auto day_first = parse_plain_number(words[0]);
        auto month_first = month_from_name(words[0]);
        auto year = parse_plain_number(words[2]);
        if (year && *year >= 1 && *year <= 9999) {
            if (day_first && month_from_name(words[1])) {
                Date d{static_cast<int>(*year), *month_from_name(words[1]),
                       static_cast<int>(*day_first)};
                if (d.valid()) return d;
                return std::nullopt;
            }
            if (month_first && parse_plain_number(words[1])) {
                Date d{static_cast<int>(*year), *month_first,
                       static_cast<int>(*parse_plain_number(words[1]))};
                if (d.valid()) return d;
                return std::nullopt;
            }
        }
    }

    if (!publish_date) return std::nullopt;

    if (lower == "today" || lower == "tonight") return publish_date;
    if (lower == "yesterday") return publish_date->plus_days(-1);

    // Weekday names resolve to the most recent such day not after the
    // publish date. Accepts an optional "last"/"on" qualifier.
    std::string name = lower;
    for (std::string_view prefix : {"last ", "on "}) {
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
            name = name.substr(prefix.size());
            break;
        }
    }
    for (size_t target = 0; target < kWeekdays.size(); ++target) {
        if (name != kWeekdays[target]) continue;
        Date d = *publish_date;
        while (d.weekday() != static_cast<int>(target)) {
            d = d.plus_days(-1);
        }
        return d;
    }
    return std::nullopt;
}

std::optional<std::string> normalize_time(std::string_view text, const NormalizeOptions& options) {
    const std::string trimmed = strings::collapse_whitespace(text);
    std::string lower = strings::ascii_lower(trimmed);
    if (is_null_marker(lower)) return std::nullopt;

    if (auto it = options.part_of_day.find(lower); it != options.part_of_day.end()) {
        return is_canonical_time(it->second) ? std::optional<std::string>{it->second}
                                             : std::nullopt;
    }

    // Strip a trailing meridiem marker: am / pm / a.m. / p.m.
    int meridiem = 0;  // 0 none, 1 am, 2 pm
    {
        std::string compact;
        for (char c : lower) {
            if (c != ' ' && c != '.') compact.push_back(c);
        }
        auto ends_with = [&compact](std::string_view suffix) {
            return compact.size() >= suffix.size() &&
                   compact.compare(compact.size() - suffix.size(), suffix.size(), suffix) == 0;
        };
        if (ends_with("am")) {
            meridiem = 1;
            compact.resize(compact.size() - 2);
        } else if (ends_with("pm")) {
            meridiem = 2;
            compact.resize(compact.size() - 2);
        }
        lower = compact;
    }

    long hour = -1;
    long minute = 0;
    size_t colon = lower.find(':');
    if (colon != std::string::npos) {
        auto h = parse_plain_number(std::string_view(lower).substr(0, colon));
        auto m = parse_plain_number(std::string_view(lower).substr(colon + 1));
        if (!h || !m || lower.size() - colon - 1 != 2) return std::nullopt;
        hour = *h;
        minute = *m;
    } else if (meridiem != 0) {
        auto h = parse_plain_number(lower);
        if (!h) return std::nullopt;
        hour = *h;
    } else {
        return std::nullopt;
    }
    if (minute > 59) return std::nullopt;

    if (meridiem != 0) {
        if (hour < 1 || hour > 12) return std::nullopt;
        if (meridiem == 1) hour = (hour == 12) ? 0 : hour;
        if (meridiem == 2) hour = (hour == 12) ? 12 : hour + 12;
    } else if (hour > 23) {
        return std::nullopt;
    }
    return two_digit_time(hour, minute);
}

std::optional<bool> normalize_bool(std::string_view text) {
    const std::string lower = strings::ascii_lower(strings::trim(text));
    if (lower == "yes" || lower == "true") return true;
    if (lower == "no" || lower == "false") return false;
    return std::nullopt;
}

std::vector<std::string> normalize_vehicles(std::string_view text) {
    static const std::array<std::pair<std::string_view, std::string_view>, 8> kSynonyms = {{
        {"auto-rickshaw", "autorickshaw"},
        {"auto rickshaw", "autorickshaw"},
        {"motorbike", "motorcycle"},
        {"motor cycle", "motorcycle"},
        {"motor-cycle", "motorcycle"},
        {"mini bus", "minibus"},
        {"mini-bus", "minibus"},
        {"pick-up", "pickup"},
    }};

    const std::string lower = strings::ascii_lower(text);
    if (is_null_marker(strings::trim(lower))) return {};

    // Break on list separators, treating the word "and" as one of them.
    std::string separators_applied;
    separators_applied.reserve(lower.size());
    const auto words_split = strings::split(lower, ' ');
    for (size_t i = 0; i < words_split.size(); ++i) {
        if (words_split[i] == "and") {
            separators_applied += ",";
        } else {
            if (i > 0) separators_applied += " ";
            separators_applied += words_split[i];
        }
    }
    for (char& c : separators_applied) {
        if (c == '&' || c == '/' || c == '|') c = ',';
    }

    std::vector<std::string> tokens;
    for (const auto& part : strings::split(separators_applied, ',')) {
        std::string token = strings::collapse_whitespace(part);
        if (token.empty()) continue;
        for (const auto& [from, to] : kSynonyms) {
            if (token == from) {
                token = to;
                break;
            }
        }
        if (std::find(tokens.begin(), tokens.end(), token) == tokens.end()) {
            tokens.push_back(token);
        }
    }
    return tokens;
}

std::optional<std::string> normalize_text(std::string_view text) {
    const std::string collapsed = strings::collapse_whitespace(text);
    if (is_null_marker(strings::ascii_lower(collapsed))) return std::nullopt;
    return collapsed;
}

AccidentRecord normalize_extraction(const ExtractionFields& fields, const Provenance& provenance,
                                    const NormalizeOptions& options) {
    AccidentRecord record;
    record.source = provenance.source;
    record.url = provenance.url;
    record.title = provenance.title;
    record.model = provenance.model;
    record.publish_date = normalize_date(provenance.publish_date_raw, std::nullopt);
    record.accident_date = normalize_date(fields.accident_date, record.publish_date);
    record.accident_time = normalize_time(fields.time, options);
    record.killed = normalize_count(fields.killed, "killed");
    record.injured = normalize_count(fields.injured, "injured");
    record.location = normalize_text(fields.location);
    record.road_characteristics = normalize_text(fields.road_characteristics);
    record.pedestrian_involved = normalize_bool(fields.pedestrian_involved);
    record.vehicle_types = normalize_vehicles(fields.vehicle_types);
    record.validate();
    return record;
}

}  // namespace durghotona::records
