#include "durghotona/cli/artifacts.hpp"

#include <json.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace durghotona::cli {

using ordered_json = nlohmann::ordered_json;

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string iso_utc(std::chrono::system_clock::time_point t) {
    const std::time_t seconds = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&seconds, &tm);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buffer;
}

std::chrono::system_clock::time_point parse_iso_utc(const std::string& text) {
    std::tm tm{};
    int y, mo, d, h, mi, s;
    if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%dZ", &y, &mo, &d, &h, &mi, &s) != 6) {
        throw std::runtime_error("bad timestamp: " + text);
    }
    tm.tm_year = y - 1900;
    tm.tm_mon = mo - 1;
    tm.tm_mday = d;
    tm.tm_hour = h;
    tm.tm_min = mi;
    tm.tm_sec = s;
    return std::chrono::system_clock::from_time_t(timegm(&tm));
}

namespace {

ordered_json entry_json(const harvest::NewsIndexEntry& entry) {
    ordered_json j;
    j["title"] = entry.title;
    j["link"] = entry.link;
    j["publish_date"] = entry.publish_date;
    j["source"] = entry.source;
    return j;
}

template <typename Fn>
void for_each_line(std::string_view bytes, Fn&& fn) {
    size_t pos = 0;
    while (pos < bytes.size()) {
        size_t nl = bytes.find('\n', pos);
        std::string_view line =
            (nl == std::string_view::npos) ? bytes.substr(pos) : bytes.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? bytes.size() : nl + 1;
        if (!line.empty()) fn(line);
    }
}

}  // namespace

std::string index_to_jsonl(const std::vector<harvest::NewsIndexEntry>& entries) {
    std::string out;
    for (const auto& entry : entries) {
        out += entry_json(entry).dump();
        out.push_back('\n');
    }
    return out;
}

std::string articles_to_jsonl(const std::vector<harvest::Article>& articles) {
    std::string out;
    for (const auto& article : articles) {
        ordered_json j = entry_json(article.entry);
        j["body"] = article.body;
        j["fetched_at"] = iso_utc(article.fetched_at);
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<harvest::Article> articles_from_jsonl(std::string_view bytes) {
    std::vector<harvest::Article> articles;
    for_each_line(bytes, [&articles](std::string_view line) {
        ordered_json j = ordered_json::parse(line);
        harvest::Article article;
        article.entry.title = j.at("title").get<std::string>();
        article.entry.link = j.at("link").get<std::string>();
        article.entry.publish_date = j.at("publish_date").get<std::string>();
        article.entry.source = j.at("source").get<std::string>();
        article.body = j.at("body").get<std::string>();
        article.fetched_at = parse_iso_utc(j.at("fetched_at").get<std::string>());
        articles.push_back(std::move(article));
    });
    return articles;
}

std::string warnings_to_jsonl(const std::vector<harvest::Warning>& warnings) {
    std::string out;
    for (const auto& warning : warnings) {
        ordered_json j;
        j["source"] = warning.source;
        j["stage"] = warning.stage;
        j["message"] = warning.message;
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::string exclusions_to_jsonl(const std::vector<chains::Exclusion>& exclusions) {
    std::string out;
    for (const auto& exclusion : exclusions) {
        ordered_json j;
        j["url"] = exclusion.entry.link;
        j["title"] = exclusion.entry.title;
        j["source"] = exclusion.entry.source;
        j["reason"] = exclusion.reason;
        j["detail"] = exclusion.detail;
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

}  // namespace durghotona::cli
