#include "durghotona/evalkit/gold.hpp"

#include <json.hpp>

namespace durghotona::evalkit {

namespace {

using records::Date;

const std::vector<std::string> kFieldKeys = {
    "accident_date", "accident_time", "killed",
    "injured",       "location",      "road_characteristics",
    "pedestrian_involved", "vehicle_types"};

}  // namespace

GoldSet load_gold(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw GoldInvalid("", "", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw GoldInvalid("", "", "document must be an object with an 'entries' array");
    }

    GoldSet gold;
    for (const auto& item : doc["entries"]) {
        if (!item.is_object() || !item.contains("url") || !item["url"].is_string()) {
            throw GoldInvalid("", "url", "every entry needs a string 'url'");
        }
        const std::string url = item["url"].get<std::string>();
        if (gold.entries.count(url)) throw GoldInvalid(url, "url", "duplicate url");
        if (!item.contains("fields") || !item["fields"].is_object()) {
            throw GoldInvalid(url, "fields", "required object");
        }
        const auto& fields = item["fields"];
        for (const auto& [key, value] : fields.items()) {
            (void)value;
            if (std::find(kFieldKeys.begin(), kFieldKeys.end(), key) == kFieldKeys.end()) {
                throw GoldInvalid(url, key, "unknown field");
            }
        }
        for (const auto& key : kFieldKeys) {
            if (!fields.contains(key)) throw GoldInvalid(url, key, "missing field");
        }

        GoldEntry entry;
        auto read_date = [&](const char* key) -> std::optional<Date> {
            const auto& v = fields[key];
            if (v.is_null()) return std::nullopt;
            if (!v.is_string()) throw GoldInvalid(url, key, "must be an ISO date string or null");
            auto d = Date::parse_iso(v.get<std::string>());
            if (!d) throw GoldInvalid(url, key, "not a valid ISO date: " + v.dump());
            return d;
        };
        auto read_count = [&](const char* key) -> std::optional<long> {
            const auto& v = fields[key];
            if (v.is_null()) return std::nullopt;
            if (!v.is_number_integer()) throw GoldInvalid(url, key, "must be an integer or null");
            long n = v.get<long>();
            if (n < 0) throw GoldInvalid(url, key, "must be >= 0");
            return n;
        };
        auto read_text = [&](const char* key) -> std::optional<std::string> {
            const auto& v = fields[key];
            if (v.is_null()) return std::nullopt;
            if (!v.is_string()) throw GoldInvalid(url, key, "must be a string or null");
            std::string s = v.get<std::string>();
            if (s.empty()) throw GoldInvalid(url, key, "must be null rather than empty");
            return s;
        };

        entry.fields.accident_date = read_date("accident_date");
        entry.fields.accident_time = read_text("accident_time");
        if (entry.fields.accident_time &&
            !records::is_canonical_time(*entry.fields.accident_time)) {
            throw GoldInvalid(url, "accident_time",
                              "must match HH:MM: " + *entry.fields.accident_time);
        }
        entry.fields.killed = read_count("killed");
        entry.fields.injured = read_count("injured");
        entry.fields.location = read_text("location");
        entry.fields.road_characteristics = read_text("road_characteristics");
        const auto& pedestrian = fields["pedestrian_involved"];
        if (!pedestrian.is_null()) {
            if (!pedestrian.is_boolean()) {
                throw GoldInvalid(url, "pedestrian_involved", "must be a boolean or null");
            }
            entry.fields.pedestrian_involved = pedestrian.get<bool>();
        }
        const auto& vehicles = fields["vehicle_types"];
        if (!vehicles.is_array()) {
            throw GoldInvalid(url, "vehicle_types", "must be an array of canonical tokens");
        }
        for (const auto& token : vehicles) {
            if (!token.is_string() ||
                !records::is_canonical_vehicle_token(token.get<std::string>())) {
                throw GoldInvalid(url, "vehicle_types", "token not canonical: " + token.dump());
            }
            entry.fields.vehicle_types.push_back(token.get<std::string>());
        }
        for (size_t i = 0; i < entry.fields.vehicle_types.size(); ++i) {
            for (size_t j = i + 1; j < entry.fields.vehicle_types.size(); ++j) {
                if (entry.fields.vehicle_types[i] == entry.fields.vehicle_types[j]) {
                    throw GoldInvalid(url, "vehicle_types",
                                      "duplicate token: " + entry.fields.vehicle_types[i]);
                }
            }
        }
        if (item.contains("annotator_note") && item["annotator_note"].is_string()) {
            entry.annotator_note = item["annotator_note"].get<std::string>();
        }
        gold.entries.emplace(url, std::move(entry));
    }
    return gold;
}

}  // namespace durghotona::evalkit
