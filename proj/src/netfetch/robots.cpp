#include "durghotona/netfetch/robots.hpp"

#include "durghotona/common/strings.hpp"

namespace durghotona::netfetch {

namespace strings = durghotona::strings;

namespace {

// Splits "directive: value", returns false for lines without a colon.
bool split_directive(std::string_view line, std::string& directive, std::string& value) {
    size_t colon = line.find(':');
    if (colon == std::string_view::npos) return false;
    directive = strings::ascii_lower(strings::trim(line.substr(0, colon)));
    value = strings::trim(line.substr(colon + 1));
    return !directive.empty();
}

}  // namespace

RobotsPolicy parse_robots(std::string_view text) {
    RobotsPolicy policy;
    // Strip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text = text.substr(3);

    bool in_agent_run = false;  // collecting User-agent lines for the next group
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::string directive;
        std::string value;
        if (!split_directive(line, directive, value)) continue;

        if (directive == "user-agent" || directive == "useragent") {
            if (!in_agent_run) {
                policy.groups.emplace_back();
                in_agent_run = true;
            }
            if (!value.empty()) {
                policy.groups.back().agents.push_back(strings::ascii_lower(value));
            }
            continue;
        }
        in_agent_run = false;
        if (policy.groups.empty()) continue;  // rule before any group

        if (directive == "allow") {
            policy.groups.back().rules.push_back(
                {RuleKind::Allow, strings::percent_decode(value)});
        } else if (directive == "disallow") {
            policy.groups.back().rules.push_back(
                {RuleKind::Disallow, strings::percent_decode(value)});
        }
        // Crawl-delay, Sitemap and anything else: recognized but ignored.
    }
    return policy;
}

bool is_allowed(const RobotsPolicy& policy, std::string_view agent, std::string_view path) {
    if (policy.groups.empty()) return true;

    const std::string agent_lower = strings::ascii_lower(agent);

    // Most specific agent token wins; all groups at the winning specificity
    // contribute rules (duplicate groups for one agent merge per RFC 9309).
    size_t best_specificity = 0;
    bool have_named = false;
    for (const auto& group : policy.groups) {
        for (const auto& token : group.agents) {
            if (token == "*") continue;
            if (agent_lower.find(token) != std::string::npos) {
                have_named = true;
                if (token.size() > best_specificity) best_specificity = token.size();
            }
        }
    }

    std::vector<const RobotsRule*> rules;
    for (const auto& group : policy.groups) {
        bool selected = false;
        for (const auto& token : group.agents) {
            if (have_named) {
                if (token != "*" && token.size() == best_specificity &&
                    agent_lower.find(token) != std::string::npos) {
                    selected = true;
                    break;
                }
            } else if (token == "*") {
                selected = true;
                break;
            }
        }
        if (!selected) continue;
        for (const auto& rule : group.rules) rules.push_back(&rule);
    }
    if (rules.empty()) return true;

    const std::string decoded_path = strings::percent_decode(path);
    size_t best_len = 0;
    bool matched = false;
    bool allow = true;
    for (const RobotsRule* rule : rules) {
        if (rule->path_prefix.empty()) continue;  // empty Disallow (or Allow) never applies
        if (decoded_path.compare(0, rule->path_prefix.size(), rule->path_prefix) != 0) continue;
        const size_t len = rule->path_prefix.size();
        const bool rule_allow = rule->kind == RuleKind::Allow;
        if (!matched || len > best_len) {
            matched = true;
            best_len = len;
            allow = rule_allow;
        } else if (len == best_len && rule_allow) {
            allow = true;  // equal-length tie goes to Allow
        }
    }
    return matched ? allow : true;
}

}  // namespace durghotona::netfetch
