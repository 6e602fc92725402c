#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "durghotona/markup/dom.hpp"

namespace durghotona::markup {

class SelectorSyntax : public std::runtime_error {
public:
    SelectorSyntax(size_t position, const std::string& message)
        : std::runtime_error("selector syntax error at " + std::to_string(position) + ": " + message),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

class MissingAttribute : public std::runtime_error {
public:
    explicit MissingAttribute(const std::string& name)
        : std::runtime_error("missing attribute: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// One descendant-matching step: `div.headline#top[rel=next][2]`.
struct SelectorStep {
    std::string tag = "*";  // "*" matches any element
    std::vector<std::string> classes;
    std::optional<std::string> id;
    std::vector<std::pair<std::string, std::string>> attr_equals;
    std::optional<int> index;  // 1-based ordinal within each context

    bool operator==(const SelectorStep&) const = default;
};

enum class Accessor { TextContent, Attribute };

struct Selector {
    std::vector<SelectorStep> steps;  // never empty after parse
    Accessor accessor = Accessor::TextContent;
    std::string attr_name;  // Accessor::Attribute only

    bool operator==(const Selector&) const = default;
};

/// Parses the selector DSL. Steps are whitespace separated; a step is
/// `tag` or `*` followed by any of `.class`, `#id`, `[name=value]` and a
/// single `[n]` ordinal; an optional trailing `::text` or `::attr(name)`
/// picks the accessor. Throws SelectorSyntax.
Selector parse_selector(std::string_view text);

/// Canonical text form; parse_selector(print_selector(s)) == s.
std::string print_selector(const Selector& sel);

/// Document-order descendant matching, step by step. `[n]` picks the n-th
/// match under each prefix match. Results are duplicate-free.
std::vector<const DomNode*> select(const DomNode& root, const Selector& sel);

/// Applies the selector's accessor to one matched element.
std::string extract_value(const DomNode& node, const Selector& sel);

}  // namespace durghotona::markup
