#include "durghotona/markup/dom.hpp"

#include <array>
#include <cctype>

#include "durghotona/common/strings.hpp"

namespace durghotona::markup {

namespace strings = durghotona::strings;

namespace {

bool is_void_element(std::string_view tag) {
    static const std::array<std::string_view, 14> kVoid = {
        "area", "base", "br",    "col",  "embed",  "hr",    "img",
        "input", "link", "meta", "param", "source", "track", "wbr"};
    for (auto v : kVoid) {
        if (tag == v) return true;
    }
    return false;
}

// Start tags that implicitly close an open <p>, per the usual HTML rules.
bool closes_open_paragraph(std::string_view tag) {
    static const std::array<std::string_view, 22> kBlock = {
        "address", "article", "aside", "blockquote", "div",  "dl",     "fieldset",
        "footer",  "form",    "h1",    "h2",         "h3",   "h4",     "h5",
        "h6",      "header",  "nav",   "ol",         "p",    "pre",    "section",
        "ul"};
    for (auto v : kBlock) {
        if (tag == v) return true;
    }
    return false;
}

// Tags where a new sibling of the same kind implicitly closes the previous one.
bool closes_same_tag(std::string_view tag) {
    return tag == "p" || tag == "li" || tag == "tr" || tag == "td" || tag == "th" ||
           tag == "option" || tag == "dt" || tag == "dd";
}

struct NamedEntity {
    std::string_view name;
    std::string_view utf8;
};

// Minimal entity table; numeric references are handled separately.
constexpr std::array<NamedEntity, 6> kEntities = {{
    {"amp", "&"},
    {"lt", "<"},
    {"gt", ">"},
    {"quot", "\""},
    {"apos", "'"},
    {"nbsp", "\xC2\xA0"},
}};

void append_codepoint(std::string& out, unsigned long cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            std::string_view digits = body.substr(1);
            bool hex = !digits.empty() && (digits[0] == 'x' || digits[0] == 'X');
            if (hex) digits = digits.substr(1);
            unsigned long cp = 0;
            bool ok = !digits.empty();
            for (char c : digits) {
                int v;
                if (c >= '0' && c <= '9') {
                    v = c - '0';
                } else if (hex && c >= 'a' && c <= 'f') {
                    v = c - 'a' + 10;
                } else if (hex && c >= 'A' && c <= 'F') {
                    v = c - 'A' + 10;
                } else {
                    ok = false;
                    break;
                }
                cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(v);
                if (cp > 0x10FFFF) {
                    cp = 0xFFFD;
                }
            }
            if (ok) {
                append_codepoint(out, cp);
                i = semi + 1;
                continue;
            }
        } else {
            bool matched = false;
            for (const auto& e : kEntities) {
                if (body == e.name) {
                    out.append(e.utf8);
                    i = semi + 1;
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
        }
        out.push_back(s[i++]);
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string html) : input_(std::move(html)) {}

    std::unique_ptr<DomNode> run() {
        auto root = std::make_unique<DomNode>();
        root->kind = DomNode::Kind::Element;
        root->tag = "#root";
        stack_.push_back(root.get());
        while (pos_ < input_.size()) {
            step();
        }
        return root;
    }

private:
    void step() {
        size_t lt = input_.find('<', pos_);
        if (lt == std::string::npos) {
            emit_text(input_.substr(pos_));
            pos_ = input_.size();
            return;
        }
        if (lt > pos_) {
            emit_text(input_.substr(pos_, lt - pos_));
            pos_ = lt;
        }
        if (input_.compare(pos_, 4, "<!--") == 0) {
            parse_comment();
        } else if (pos_ + 1 < input_.size() &&
                   (input_[pos_ + 1] == '!' || input_[pos_ + 1] == '?')) {
            skip_declaration();
        } else if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '/') {
            parse_close_tag();
        } else if (pos_ + 1 < input_.size() &&
                   std::isalpha(static_cast<unsigned char>(input_[pos_ + 1]))) {
            parse_open_tag();
        } else {
            // Stray '<' is literal text.
            emit_text("<");
            ++pos_;
        }
    }

    void emit_text(std::string_view raw) {
        if (raw.empty()) return;
        auto node = std::make_unique<DomNode>();
        node->kind = DomNode::Kind::Text;
        node->text = decode_entities(raw);
        stack_.back()->children.push_back(std::move(node));
    }

    void parse_comment() {
        size_t end = input_.find("-->", pos_ + 4);
        std::string body;
        if (end == std::string::npos) {
            body = input_.substr(pos_ + 4);
            pos_ = input_.size();
        } else {
            body = input_.substr(pos_ + 4, end - pos_ - 4);
            pos_ = end + 3;
        }
        auto node = std::make_unique<DomNode>();
        node->kind = DomNode::Kind::Text;
        node->text = body;
        node->opaque = true;
        stack_.back()->children.push_back(std::move(node));
    }

    void skip_declaration() {
        size_t end = input_.find('>', pos_);
        pos_ = (end == std::string::npos) ? input_.size() : end + 1;
    }

    void parse_close_tag() {
        size_t end = input_.find('>', pos_);
        std::string_view inner{input_};
        if (end == std::string::npos) {
            inner = inner.substr(pos_ + 2);
            pos_ = input_.size();
        } else {
            inner = inner.substr(pos_ + 2, end - pos_ - 2);
            pos_ = end + 1;
        }
        std::string tag = strings::ascii_lower(strings::trim(inner));
        if (tag.empty()) return;
        // Find the nearest matching open element; ignore the close tag if none.
        for (size_t i = stack_.size(); i-- > 1;) {
            if (stack_[i]->tag == tag) {
                stack_.resize(i);  // auto-closes anything opened inside
                return;
            }
        }
    }

    void parse_open_tag() {
        size_t i = pos_ + 1;
        size_t tag_start = i;
        while (i < input_.size() && !std::isspace(static_cast<unsigned char>(input_[i])) &&
               input_[i] != '>' && input_[i] != '/') {
            ++i;
        }
        std::string tag = strings::ascii_lower(input_.substr(tag_start, i - tag_start));

        std::vector<std::pair<std::string, std::string>> attrs;
        bool self_closing = false;
        while (i < input_.size() && input_[i] != '>') {
            if (std::isspace(static_cast<unsigned char>(input_[i]))) {
                ++i;
                continue;
            }
            if (input_[i] == '/') {
                self_closing = true;
                ++i;
                continue;
            }
            size_t name_start = i;
            while (i < input_.size() && input_[i] != '=' && input_[i] != '>' &&
                   input_[i] != '/' &&
                   !std::isspace(static_cast<unsigned char>(input_[i]))) {
                ++i;
            }
            std::string name = strings::ascii_lower(input_.substr(name_start, i - name_start));
            std::string value;
            if (i < input_.size() && input_[i] == '=') {
                ++i;
                while (i < input_.size() && std::isspace(static_cast<unsigned char>(input_[i]))) ++i;
                if (i < input_.size() && (input_[i] == '"' || input_[i] == '\'')) {
                    char quote = input_[i++];
                    size_t vstart = i;
                    while (i < input_.size() && input_[i] != quote) ++i;
                    value = input_.substr(vstart, i - vstart);
                    if (i < input_.size()) ++i;  // closing quote
                } else {
                    size_t vstart = i;
                    while (i < input_.size() && input_[i] != '>' &&
                           !std::isspace(static_cast<unsigned char>(input_[i]))) {
                        ++i;
                    }
                    value = input_.substr(vstart, i - vstart);
                }
            }
            if (!name.empty()) attrs.emplace_back(std::move(name), decode_entities(value));
        }
        if (i < input_.size()) ++i;  // '>'
        pos_ = i;
        if (tag.empty()) return;

        if (closes_same_tag(tag) && stack_.back()->tag == tag) {
            stack_.pop_back();
        } else if (tag != "p" && closes_open_paragraph(tag) && stack_.back()->tag == "p") {
            stack_.pop_back();
        } else if (tag == "p" && stack_.back()->tag == "p") {
            stack_.pop_back();
        }

        auto node = std::make_unique<DomNode>();
        node->kind = DomNode::Kind::Element;
        node->tag = tag;
        node->attributes = std::move(attrs);
        DomNode* raw = node.get();
        stack_.back()->children.push_back(std::move(node));

        if (self_closing || is_void_element(tag)) return;

        if (tag == "script" || tag == "style") {
            consume_raw_text(raw, tag);
            return;
        }
        stack_.push_back(raw);
    }

    // script/style bodies are raw text up to the matching close tag.
    void consume_raw_text(DomNode* element, const std::string& tag) {
        std::string close = "</" + tag;
        size_t search = pos_;
        size_t end = std::string::npos;
        while (search < input_.size()) {
            size_t cand = input_.find(close, search);
            if (cand == std::string::npos) break;
            size_t after = cand + close.size();
            if (after >= input_.size() || input_[after] == '>' ||
                std::isspace(static_cast<unsigned char>(input_[after]))) {
                end = cand;
                break;
            }
            search = cand + 1;
        }
        std::string body;
        if (end == std::string::npos) {
            body = input_.substr(pos_);
            pos_ = input_.size();
        } else {
            body = input_.substr(pos_, end - pos_);
            size_t gt = input_.find('>', end);
            pos_ = (gt == std::string::npos) ? input_.size() : gt + 1;
        }
        if (!body.empty()) {
            auto text = std::make_unique<DomNode>();
            text->kind = DomNode::Kind::Text;
            text->text = std::move(body);
            text->opaque = true;
            element->children.push_back(std::move(text));
        }
    }

    std::string input_;
    size_t pos_ = 0;
    std::vector<DomNode*> stack_;
};

void collect_text(const DomNode& node, std::string& out) {
    if (node.is_text()) {
        if (!node.opaque) out.append(node.text);
        return;
    }
    for (const auto& child : node.children) {
        collect_text(*child, out);
    }
}

}  // namespace

std::optional<std::string> DomNode::attribute(std::string_view name) const {
    for (const auto& [n, v] : attributes) {
        if (n == name) return v;
    }
    return std::nullopt;
}

std::unique_ptr<DomNode> parse_html(std::string_view html) {
    Parser parser(strings::utf8_sanitize(html));
    return parser.run();
}

std::string text_content(const DomNode& node) {
    std::string raw;
    collect_text(node, raw);
    return strings::collapse_whitespace(raw);
}

}  // namespace durghotona::markup
