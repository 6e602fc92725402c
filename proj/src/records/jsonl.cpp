#include "durghotona/records/jsonl.hpp"

#include <json.hpp>

namespace durghotona::records {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_to_json(const AccidentRecord& r) {
    ordered_json j;
    j["source"] = r.source;
    j["url"] = r.url;
    j["title"] = r.title;
    j["publish_date"] = r.publish_date ? ordered_json(r.publish_date->to_iso()) : nullptr;
    j["accident_date"] = r.accident_date ? ordered_json(r.accident_date->to_iso()) : nullptr;
    j["accident_time"] = r.accident_time ? ordered_json(*r.accident_time) : nullptr;
    j["killed"] = r.killed ? ordered_json(*r.killed) : nullptr;
    j["injured"] = r.injured ? ordered_json(*r.injured) : nullptr;
    j["location"] = r.location ? ordered_json(*r.location) : nullptr;
    j["road_characteristics"] =
        r.road_characteristics ? ordered_json(*r.road_characteristics) : nullptr;
    j["pedestrian_involved"] =
        r.pedestrian_involved ? ordered_json(*r.pedestrian_involved) : nullptr;
    j["vehicle_types"] = r.vehicle_types;
    j["model"] = r.model;
    return j;
}

AccidentRecord record_from_json(const ordered_json& j) {
    AccidentRecord r;
    r.source = j.at("source").get<std::string>();
    r.url = j.at("url").get<std::string>();
    r.title = j.at("title").get<std::string>();
    auto opt_date = [&j](const char* key) -> std::optional<Date> {
        const auto& v = j.at(key);
        if (v.is_null()) return std::nullopt;
        auto d = Date::parse_iso(v.get<std::string>());
        if (!d) throw std::invalid_argument(std::string("bad date in field ") + key);
        return d;
    };
    r.publish_date = opt_date("publish_date");
    r.accident_date = opt_date("accident_date");
    if (!j.at("accident_time").is_null()) r.accident_time = j.at("accident_time").get<std::string>();
    if (!j.at("killed").is_null()) r.killed = j.at("killed").get<long>();
    if (!j.at("injured").is_null()) r.injured = j.at("injured").get<long>();
    if (!j.at("location").is_null()) r.location = j.at("location").get<std::string>();
    if (!j.at("road_characteristics").is_null()) {
        r.road_characteristics = j.at("road_characteristics").get<std::string>();
    }
    if (!j.at("pedestrian_involved").is_null()) {
        r.pedestrian_involved = j.at("pedestrian_involved").get<bool>();
    }
    r.vehicle_types = j.at("vehicle_types").get<std::vector<std::string>>();
    r.model = j.at("model").get<std::string>();
    r.validate();
    return r;
}

}  // namespace

std::string to_jsonl(const std::vector<AccidentRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += record_to_json(r).dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<AccidentRecord> from_jsonl(std::string_view bytes) {
    std::vector<AccidentRecord> records;
    size_t pos = 0;
    while (pos < bytes.size()) {
        size_t nl = bytes.find('\n', pos);
        std::string_view line =
            (nl == std::string_view::npos) ? bytes.substr(pos) : bytes.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? bytes.size() : nl + 1;
        if (line.empty()) continue;
        records.push_back(record_from_json(ordered_json::parse(line)));
    }
    return records;
}

}  // namespace durghotona::records
