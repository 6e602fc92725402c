#include "durghotona/records/record.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

namespace durghotona::records {

namespace {

std::chrono::year_month_day to_ymd(const Date& d) {
    return std::chrono::year_month_day{std::chrono::year{d.year},
                                       std::chrono::month{static_cast<unsigned>(d.month)},
                                       std::chrono::day{static_cast<unsigned>(d.day)}};
}

}  // namespace

bool Date::valid() const {
    if (month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (year < -9999 || year > 9999) return false;
    return to_ymd(*this).ok();
}

int Date::weekday() const {
    std::chrono::weekday wd{std::chrono::sys_days{to_ymd(*this)}};
    return static_cast<int>(wd.c_encoding());
}

Date Date::plus_days(int n) const {
    std::chrono::sys_days days{to_ymd(*this)};
    days += std::chrono::days{n};
    std::chrono::year_month_day ymd{days};
    return Date{static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
                static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

std::optional<Date> Date::parse_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    }
    Date d;
    d.year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
    d.month = (text[5] - '0') * 10 + (text[6] - '0');
    d.day = (text[8] - '0') * 10 + (text[9] - '0');
    if (!d.valid()) return std::nullopt;
    return d;
}

std::string Date::to_iso() const {
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", year, month, day);
    return buffer;
}

bool is_canonical_time(std::string_view text) {
    if (text.size() != 5 || text[2] != ':') return false;
    if (!std::isdigit(static_cast<unsigned char>(text[0])) ||
        !std::isdigit(static_cast<unsigned char>(text[1])) ||
        !std::isdigit(static_cast<unsigned char>(text[3])) ||
        !std::isdigit(static_cast<unsigned char>(text[4]))) {
        return false;
    }
    int hh = (text[0] - '0') * 10 + (text[1] - '0');
    int mm = (text[3] - '0') * 10 + (text[4] - '0');
    return hh <= 23 && mm <= 59;
}

bool is_canonical_vehicle_token(std::string_view token) {
    if (token.empty()) return false;
    auto is_edge_space = [](char c) { return c == ' ' || c == '\t'; };
    if (is_edge_space(token.front()) || is_edge_space(token.back())) return false;
    for (char c : token) {
        if (c == '|' || c == '\n' || c == '\r') return false;
        if (c >= 'A' && c <= 'Z') return false;
    }
    return true;
}

void AccidentRecord::validate() const {
    if (publish_date && !publish_date->valid()) {
        throw std::invalid_argument("publish_date is not a valid date");
    }
    if (accident_date && !accident_date->valid()) {
        throw std::invalid_argument("accident_date is not a valid date");
    }
    if (accident_time && !is_canonical_time(*accident_time)) {
        throw std::invalid_argument("accident_time must match HH:MM (got '" + *accident_time + "')");
    }
    if (killed && *killed < 0) throw std::invalid_argument("killed must be >= 0");
    if (injured && *injured < 0) throw std::invalid_argument("injured must be >= 0");
    // Absent free text is null, never the empty string.
    if (location && location->empty()) throw std::invalid_argument("location must be null, not empty");
    if (road_characteristics && road_characteristics->empty()) {
        throw std::invalid_argument("road_characteristics must be null, not empty");
    }
    if (accident_time && accident_time->empty()) {
        throw std::invalid_argument("accident_time must be null, not empty");
    }
    for (size_t i = 0; i < vehicle_types.size(); ++i) {
        if (!is_canonical_vehicle_token(vehicle_types[i])) {
            throw std::invalid_argument("vehicle token not canonical: '" + vehicle_types[i] + "'");
        }
        for (size_t j = i + 1; j < vehicle_types.size(); ++j) {
            if (vehicle_types[i] == vehicle_types[j]) {
                throw std::invalid_argument("duplicate vehicle token: '" + vehicle_types[i] + "'");
            }
        }
    }
}

}  // namespace durghotona::records
