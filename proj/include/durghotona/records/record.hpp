#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace durghotona::records {

/// Proleptic Gregorian civil date.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    bool operator==(const Date&) const = default;
    auto operator<=>(const Date&) const = default;

    bool valid() const;
    /// 0 = Sunday ... 6 = Saturday.
    int weekday() const;
    Date plus_days(int n) const;

    static std::optional<Date> parse_iso(std::string_view text);
    std::string to_iso() const;  // YYYY-MM-DD
};

/// The 8 extraction answers exactly as the model returned them.
struct ExtractionFields {
    std::string accident_date;
    std::string time;
    std::string injured;
    std::string killed;
    std::string location;
    std::string road_characteristics;
    std::string pedestrian_involved;
    std::string vehicle_types;
};

/// Where a record came from: harvest identity plus the model that
/// produced the extraction.
struct Provenance {
    std::string source;
    std::string url;
    std::string title;
    std::string publish_date_raw;
    std::string model;
};

/// One canonical dataset row. Producers must call validate() before
/// handing a record out; an invalid record never crosses a module
/// boundary.
struct AccidentRecord {
    std::string source;
    std::string url;
    std::string title;
    std::optional<Date> publish_date;
    std::optional<Date> accident_date;
    std::optional<std::string> accident_time;  // "HH:MM", 24-hour
    std::optional<long> killed;
    std::optional<long> injured;
    std::optional<std::string> location;
    std::optional<std::string> road_characteristics;
    std::optional<bool> pedestrian_involved;
    std::vector<std::string> vehicle_types;  // canonical tokens, order-preserving
    std::string model;

    bool operator==(const AccidentRecord&) const = default;

    /// Throws std::invalid_argument describing the first violated
    /// invariant (negative counts, malformed time, bad vehicle tokens...).
    void validate() const;
};

/// True iff `text` matches ^([01][0-9]|2[0-3]):[0-5][0-9]$.
bool is_canonical_time(std::string_view text);

/// True iff the token is trimmed, lowercase and free of the CSV list
/// separator and line breaks.
bool is_canonical_vehicle_token(std::string_view token);

}  // namespace durghotona::records
