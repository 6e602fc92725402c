#include "durghotona/harvest/harvest.hpp"

#include <algorithm>
#include <unordered_set>

#include "durghotona/common/strings.hpp"
#include "durghotona/markup/dom.hpp"
#include "durghotona/netfetch/url.hpp"

namespace durghotona::harvest {

namespace strings = durghotona::strings;
using markup::DomNode;

namespace {

bool title_passes_filter(const std::string& title, const std::vector<std::string>& keywords) {
    if (keywords.empty()) return true;
    return std::any_of(keywords.begin(), keywords.end(), [&title](const std::string& kw) {
        return strings::icontains(title, kw);
    });
}

std::string join_paragraphs(const std::vector<std::string>& paragraphs) {
    std::string out;
    for (const auto& p : paragraphs) {
        if (p.empty()) continue;
        if (!out.empty()) out += "\n\n";
        out += p;
    }
    return out;
}

void collect_paragraph_texts(const DomNode& node, std::vector<std::string>& out) {
    if (node.is_element() && node.tag == "p") {
        out.push_back(markup::text_content(node));
        return;  // p cannot nest
    }
    for (const auto& child : node.children) {
        collect_paragraph_texts(*child, out);
    }
}

// Picks the deepest element whose p-descendants carry the maximum total
// text length; the tie-break toward depth keeps chrome outside the chosen
// subtree when an inner container already holds all the story text.
const DomNode* densest_paragraph_subtree(const DomNode& node, int depth, size_t& best_mass,
                                         int& best_depth, const DomNode*& best) {
    size_t mass = 0;
    if (node.is_element()) {
        std::vector<std::string> paragraphs;
        collect_paragraph_texts(node, paragraphs);
        for (const auto& p : paragraphs) mass += p.size();
        if (mass > best_mass || (mass == best_mass && mass > 0 && depth > best_depth)) {
            best_mass = mass;
            best_depth = depth;
            best = &node;
        }
    }
    for (const auto& child : node.children) {
        densest_paragraph_subtree(*child, depth + 1, best_mass, best_depth, best);
    }
    return best;
}

}  // namespace

IndexResult harvest_index(const SiteConfig& config, netfetch::Fetcher& fetcher) {
    IndexResult result;
    const size_t pages =
        std::min(config.listing_urls.size(), static_cast<size_t>(config.max_pages));
    for (size_t page = 0; page < pages; ++page) {
        const std::string& listing_url = config.listing_urls[page];
        netfetch::FetchResult fetched;
        try {
            fetched = fetcher.fetch(listing_url);
        } catch (const netfetch::ExhaustedRetries& e) {
            result.warnings.push_back({config.source_name, "harvest-index", e.what()});
            continue;
        } catch (const netfetch::NonRetryable& e) {
            result.warnings.push_back({config.source_name, "harvest-index", e.what()});
            continue;
        } catch (const netfetch::RobotsDenied& e) {
            result.warnings.push_back({config.source_name, "harvest-index", e.what()});
            continue;
        }

        auto root = markup::parse_html(fetched.body);
        auto titles = markup::select(*root, config.title_selector);
        auto links = markup::select(*root, config.link_selector);
        auto dates = markup::select(*root, config.date_selector);

        size_t count = std::min({titles.size(), links.size(), dates.size()});
        if (titles.size() != links.size() || links.size() != dates.size()) {
            result.warnings.push_back(
                {config.source_name, "harvest-index",
                 "selector result lengths disagree on " + listing_url + " (title " +
                     std::to_string(titles.size()) + ", link " + std::to_string(links.size()) +
                     ", date " + std::to_string(dates.size()) + "); truncating to " +
                     std::to_string(count)});
        }

        auto base = netfetch::Url::parse(listing_url);
        for (size_t i = 0; i < count; ++i) {
            NewsIndexEntry entry;
            try {
                entry.title = markup::extract_value(*titles[i], config.title_selector);
                entry.link = markup::extract_value(*links[i], config.link_selector);
                entry.publish_date = markup::extract_value(*dates[i], config.date_selector);
            } catch (const markup::MissingAttribute& e) {
                result.warnings.push_back({config.source_name, "harvest-index",
                                           std::string(e.what()) + " on " + listing_url});
                continue;
            }
            entry.source = config.source_name;
            if (base) entry.link = netfetch::Url::resolve(*base, entry.link);
            if (!title_passes_filter(entry.title, config.title_keywords)) continue;
            result.entries.push_back(std::move(entry));
        }
    }
    return result;
}

Article fetch_article(const NewsIndexEntry& entry, const SiteConfig& config,
                      netfetch::Fetcher& fetcher) {
    netfetch::FetchResult fetched = fetcher.fetch(entry.link);
    auto root = markup::parse_html(fetched.body);

    std::vector<std::string> paragraphs;
    if (config.article_body_selector) {
        for (const DomNode* node : markup::select(*root, *config.article_body_selector)) {
            paragraphs.push_back(markup::extract_value(*node, *config.article_body_selector));
        }
    } else {
        size_t best_mass = 0;
        int best_depth = -1;
        const DomNode* best = nullptr;
        densest_paragraph_subtree(*root, 0, best_mass, best_depth, best);
        if (best && best_mass > 0) {
            collect_paragraph_texts(*best, paragraphs);
        }
    }

    Article article;
    article.entry = entry;
    article.body = join_paragraphs(paragraphs);
    article.fetched_at = fetched.fetched_at;
    if (article.body.empty()) throw EmptyBody(entry.link);
    return article;
}

std::vector<NewsIndexEntry> dedup_entries(std::vector<NewsIndexEntry> entries) {
    std::unordered_set<std::string> seen;
    std::vector<NewsIndexEntry> out;
    out.reserve(entries.size());
    for (auto& entry : entries) {
        if (seen.insert(entry.link).second) out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace durghotona::harvest
