#include "durghotona/harvest/site_config.hpp"

#include <json.hpp>

#include "durghotona/netfetch/url.hpp"

namespace durghotona::harvest {

namespace {

markup::Selector parse_selector_field(const std::string& field, const std::string& text) {
    try {
        return markup::parse_selector(text);
    } catch (const markup::SelectorSyntax& e) {
        throw ConfigInvalid(field, e.what());
    }
}

}  // namespace

SiteConfig load_site_config(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigInvalid("", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigInvalid("", "document must be a JSON object");

    SiteConfig config;
    if (!doc.contains("source_name") || !doc["source_name"].is_string()) {
        throw ConfigInvalid("source_name", "required string");
    }
    config.source_name = doc["source_name"].get<std::string>();
    if (config.source_name.empty()) throw ConfigInvalid("source_name", "must not be empty");

    if (!doc.contains("listing_urls") || !doc["listing_urls"].is_array() ||
        doc["listing_urls"].empty()) {
        throw ConfigInvalid("listing_urls", "required non-empty array of URLs");
    }
    std::string host;
    for (const auto& entry : doc["listing_urls"]) {
        if (!entry.is_string()) throw ConfigInvalid("listing_urls", "entries must be strings");
        const std::string url = entry.get<std::string>();
        auto parsed = netfetch::Url::parse(url);
        if (!parsed) throw ConfigInvalid("listing_urls", "not an absolute http(s) URL: " + url);
        if (host.empty()) {
            host = parsed->host_port();
        } else if (host != parsed->host_port()) {
            throw ConfigInvalid("listing_urls", "all listing URLs must share one host (saw " +
                                                    host + " and " + parsed->host_port() + ")");
        }
        config.listing_urls.push_back(url);
    }

    if (!doc.contains("index_selectors") || !doc["index_selectors"].is_object()) {
        throw ConfigInvalid("index_selectors", "required object with title/link/date");
    }
    const auto& selectors = doc["index_selectors"];
    for (const char* key : {"title", "link", "date"}) {
        if (!selectors.contains(key) || !selectors[key].is_string()) {
            throw ConfigInvalid(std::string("index_selectors.") + key, "required string");
        }
    }
    config.title_selector =
        parse_selector_field("index_selectors.title", selectors["title"].get<std::string>());
    config.link_selector =
        parse_selector_field("index_selectors.link", selectors["link"].get<std::string>());
    config.date_selector =
        parse_selector_field("index_selectors.date", selectors["date"].get<std::string>());

    if (doc.contains("article_body_selector")) {
        if (!doc["article_body_selector"].is_string()) {
            throw ConfigInvalid("article_body_selector", "must be a string");
        }
        config.article_body_selector = parse_selector_field(
            "article_body_selector", doc["article_body_selector"].get<std::string>());
    }

    if (doc.contains("title_keywords")) {
        if (!doc["title_keywords"].is_array()) {
            throw ConfigInvalid("title_keywords", "must be an array of strings");
        }
        for (const auto& kw : doc["title_keywords"]) {
            if (!kw.is_string()) throw ConfigInvalid("title_keywords", "entries must be strings");
            config.title_keywords.push_back(kw.get<std::string>());
        }
    }

    if (doc.contains("max_pages")) {
        if (!doc["max_pages"].is_number_integer() || doc["max_pages"].get<int>() < 1) {
            throw ConfigInvalid("max_pages", "must be a positive integer");
        }
        config.max_pages = doc["max_pages"].get<int>();
    }
    return config;
}

}  // namespace durghotona::harvest
