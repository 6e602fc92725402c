#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace durghotona::netfetch {

enum class RuleKind { Allow, Disallow };

struct RobotsRule {
    RuleKind kind = RuleKind::Disallow;
    std::string path_prefix;  // percent-decoded
};

/// One user-agent group in file order. Consecutive User-agent lines share
/// a group; any other directive ends the run of agent lines.
struct RobotsGroup {
    std::vector<std::string> agents;  // lowercase tokens, "*" allowed
    std::vector<RobotsRule> rules;    // file order
};

struct RobotsPolicy {
    std::vector<RobotsGroup> groups;

    bool empty() const { return groups.empty(); }
};

/// Lenient robots.txt parse. Total: garbage lines are skipped, unknown
/// directives (Crawl-delay, Sitemap, ...) are ignored, rules outside any
/// group are dropped. Empty input yields a policy with zero groups.
RobotsPolicy parse_robots(std::string_view text);

/// Longest path-prefix decision for `path` (must begin with "/", may carry
/// a query). Group selection picks the most specific agent token contained
/// in `agent` (case-insensitive), falling back to "*"; no matching group
/// means allowed. Equal-length Allow/Disallow ties resolve to Allow and an
/// empty Disallow path never blocks anything.
bool is_allowed(const RobotsPolicy& policy, std::string_view agent, std::string_view path);

}  // namespace durghotona::netfetch
