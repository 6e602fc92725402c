#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "durghotona/harvest/site_config.hpp"
#include "durghotona/netfetch/fetcher.hpp"

namespace durghotona::harvest {

/// One row of the news index: the three columns scraped per headline plus
/// the configured source identity.
struct NewsIndexEntry {
    std::string title;
    std::string link;          // absolute URL
    std::string publish_date;  // raw string as displayed on the site
    std::string source;

    bool operator==(const NewsIndexEntry&) const = default;
};

struct Article {
    NewsIndexEntry entry;
    std::string body;  // paragraphs joined by blank lines, non-empty
    std::chrono::system_clock::time_point fetched_at;
};

struct Warning {
    std::string source;
    std::string stage;  // "harvest-index", "fetch-article", ...
    std::string message;
};

class EmptyBody : public std::runtime_error {
public:
    explicit EmptyBody(const std::string& url)
        : std::runtime_error("no article text found at " + url) {}
};

struct IndexResult {
    std::vector<NewsIndexEntry> entries;
    std::vector<Warning> warnings;
};

/// Fetches up to max_pages listing URLs, runs the three index selectors
/// and zips their results positionally. Mismatched result lengths are
/// truncated to the shortest with a warning; unreachable pages are
/// skipped with a warning. Relative links resolve against the listing
/// URL; the optional title keyword filter applies case-insensitively.
IndexResult harvest_index(const SiteConfig& config, netfetch::Fetcher& fetcher);

/// Downloads one article body. With a configured body selector the body
/// is the joined text of its matches; otherwise the subtree with the
/// greatest paragraph mass supplies its paragraphs. Throws EmptyBody when
/// neither yields text; fetch errors propagate.
Article fetch_article(const NewsIndexEntry& entry, const SiteConfig& config,
                      netfetch::Fetcher& fetcher);

/// Stable removal of duplicate links, first occurrence kept.
std::vector<NewsIndexEntry> dedup_entries(std::vector<NewsIndexEntry> entries);

}  // namespace durghotona::harvest
