#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace durghotona::markup {

/// One node of the parsed document. Element nodes carry a lowercase tag,
/// ordered attributes and children; text nodes carry character data.
/// Comment bodies and script/style contents are stored as text nodes with
/// `opaque` set, which keeps them out of text extraction.
struct DomNode {
    enum class Kind { Element, Text };

    Kind kind = Kind::Element;
    std::string tag;  // lowercase; "#root" for the synthetic document root
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<std::unique_ptr<DomNode>> children;
    std::string text;
    bool opaque = false;

    bool is_element() const { return kind == Kind::Element; }
    bool is_text() const { return kind == Kind::Text; }

    /// First attribute value for `name` (lowercase), if present.
    std::optional<std::string> attribute(std::string_view name) const;
};

/// Error-tolerant HTML parse. Never throws: unclosed tags are auto-closed,
/// void elements take no children, script/style bodies and comments become
/// opaque text. Input is interpreted as UTF-8 with U+FFFD replacement.
/// Returns the synthetic "#root" element.
std::unique_ptr<DomNode> parse_html(std::string_view html);

/// Concatenated non-opaque descendant text with whitespace runs collapsed
/// to single spaces and the result trimmed.
std::string text_content(const DomNode& node);

}  // namespace durghotona::markup
