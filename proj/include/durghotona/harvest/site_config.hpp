#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "durghotona/markup/selector.hpp"

namespace durghotona::harvest {

class ConfigInvalid : public std::runtime_error {
public:
    ConfigInvalid(const std::string& field, const std::string& message)
        : std::runtime_error("invalid site config, field '" + field + "': " + message),
          field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Per-site harvesting instructions. Selector strings come pre-parsed;
/// loading fails fast on any malformed selector.
struct SiteConfig {
    std::string source_name;
    std::vector<std::string> listing_urls;  // all on one host
    markup::Selector title_selector;
    markup::Selector link_selector;
    markup::Selector date_selector;
    std::optional<markup::Selector> article_body_selector;
    std::vector<std::string> title_keywords;  // case-insensitive OR filter
    int max_pages = 1;
};

/// Parses and validates the site-config JSON document:
/// { "source_name": str, "listing_urls": [str],
///   "index_selectors": {"title": str, "link": str, "date": str},
///   "article_body_selector": str?, "title_keywords": [str]?,
///   "max_pages": int? }
SiteConfig load_site_config(std::string_view bytes);

}  // namespace durghotona::harvest
