#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "durghotona/records/record.hpp"

namespace durghotona::records {

class UnnormalizableField : public std::runtime_error {
public:
    UnnormalizableField(const std::string& field, const std::string& raw)
        : std::runtime_error("cannot normalize " + field + ": '" + raw + "'"),
          field_(field),
          raw_(raw) {}
    const std::string& field() const { return field_; }
    const std::string& raw() const { return raw_; }

private:
    std::string field_;
    std::string raw_;
};

struct NormalizeOptions {
    /// Optional mapping of named parts of day to representative clock
    /// times, e.g. {"night", "21:00"}. Unmapped names normalize to null.
    std::map<std::string, std::string> part_of_day;
};

/// Digits or English number words zero..twenty; "unknown"/empty -> null;
/// anything else throws UnnormalizableField.
std::optional<long> normalize_count(std::string_view text, std::string_view field_name);

/// ISO dates, "DD Month YYYY", "Month DD, YYYY", and weekday-relative
/// phrases ("Monday", "yesterday", "today") resolved to the most recent
/// such day not after the publish date. Unresolvable text -> null.
std::optional<Date> normalize_date(std::string_view text, std::optional<Date> publish_date);

/// "HH:MM", "H[:MM] am/pm", and configured part-of-day names -> "HH:MM";
/// everything else -> null.
std::optional<std::string> normalize_time(std::string_view text,
                                          const NormalizeOptions& options = {});

/// yes/true -> true, no/false -> false (case-insensitive), else null.
std::optional<bool> normalize_bool(std::string_view text);

/// Splits on commas, "and", "&", "/" and "|"; trims, lowercases, applies
/// the synonym table and dedupes preserving order. "unknown" -> empty.
std::vector<std::string> normalize_vehicles(std::string_view text);

/// "unknown"/empty -> null, else whitespace-collapsed free text.
std::optional<std::string> normalize_text(std::string_view text);

/// Builds a validated AccidentRecord from one model extraction plus the
/// article's provenance. Throws UnnormalizableField for values that fit
/// no canonical form (counts outside the number table, for example).
AccidentRecord normalize_extraction(const ExtractionFields& fields, const Provenance& provenance,
                                    const NormalizeOptions& options = {});

}  // namespace durghotona::records
