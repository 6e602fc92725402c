#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "durghotona/records/record.hpp"

namespace durghotona::evalkit {

class GoldInvalid : public std::runtime_error {
public:
    GoldInvalid(const std::string& entry, const std::string& field, const std::string& message)
        : std::runtime_error("invalid gold entry '" + entry + "', field '" + field +
                             "': " + message) {}
};

/// Human-annotated canonical values for one article's 8 fields.
struct GoldFields {
    std::optional<records::Date> accident_date;
    std::optional<std::string> accident_time;
    std::optional<long> killed;
    std::optional<long> injured;
    std::optional<std::string> location;
    std::optional<std::string> road_characteristics;
    std::optional<bool> pedestrian_involved;
    std::vector<std::string> vehicle_types;
};

struct GoldEntry {
    GoldFields fields;
    std::optional<std::string> annotator_note;
};

struct GoldSet {
    std::map<std::string, GoldEntry> entries;  // keyed by url

    size_t size() const { return entries.size(); }
};

/// Parses and validates the gold JSON document. Field values must satisfy
/// the record invariants; duplicate URLs are rejected.
GoldSet load_gold(std::string_view bytes);

}  // namespace durghotona::evalkit
