#include "durghotona/markup/selector.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "durghotona/common/strings.hpp"

namespace durghotona::markup {

namespace strings = durghotona::strings;

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class SelectorParser {
public:
    explicit SelectorParser(std::string_view text) : text_(text) {}

    Selector parse() {
        Selector sel;
        skip_spaces();
        while (pos_ < text_.size()) {
            if (text_.compare(pos_, 2, "::") == 0) {
                parse_accessor(sel);
                skip_spaces();
                if (pos_ != text_.size()) fail("accessor must end the selector");
                break;
            }
            sel.steps.push_back(parse_step());
            skip_spaces();
        }
        if (sel.steps.empty()) fail("selector needs at least one step");
        return sel;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw SelectorSyntax(pos_, message);
    }

    void skip_spaces() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    std::string read_name(const char* what) {
        size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return strings::ascii_lower(text_.substr(start, pos_ - start));
    }

    SelectorStep parse_step() {
        SelectorStep step;
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
        } else if (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            step.tag = read_name("tag name");
        } else {
            fail("step must start with a tag name or '*'");
        }
        while (pos_ < text_.size() && !is_space(text_[pos_])) {
            char c = text_[pos_];
            if (c == '.') {
                ++pos_;
                step.classes.push_back(read_name("class name"));
            } else if (c == '#') {
                ++pos_;
                if (step.id) fail("duplicate '#id'");
                step.id = read_name("id");
            } else if (c == '[') {
                ++pos_;
                parse_bracket(step);
            } else if (c == ':' && text_.compare(pos_, 2, "::") == 0) {
                break;  // accessor handled by caller
            } else {
                fail("unexpected character in step");
            }
        }
        return step;
    }

    void parse_bracket(SelectorStep& step) {
        size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated '['");
        std::string_view body = text_.substr(pos_, close - pos_);
        if (body.empty()) fail("empty '[]'");
        bool digits = std::all_of(body.begin(), body.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
        if (digits) {
            if (step.index) fail("duplicate ordinal");
            int n = 0;
            for (char c : body) {
                n = n * 10 + (c - '0');
                if (n > 1000000) fail("ordinal too large");
            }
            if (n < 1) fail("ordinal must be >= 1");
            step.index = n;
        } else {
            size_t eq = body.find('=');
            if (eq == std::string_view::npos) fail("expected 'name=value' or ordinal in '[]'");
            std::string name = strings::ascii_lower(body.substr(0, eq));
            if (name.empty()) fail("empty attribute name");
            for (char c : name) {
                if (!is_name_char(c)) fail("invalid attribute name");
            }
            step.attr_equals.emplace_back(std::move(name), std::string(body.substr(eq + 1)));
        }
        pos_ = close + 1;
    }

    void parse_accessor(Selector& sel) {
        pos_ += 2;
        if (text_.compare(pos_, 4, "text") == 0) {
            pos_ += 4;
            sel.accessor = Accessor::TextContent;
            return;
        }
        if (text_.compare(pos_, 5, "attr(") == 0) {
            pos_ += 5;
            size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos) fail("unterminated '::attr('");
            std::string name = strings::ascii_lower(strings::trim(text_.substr(pos_, close - pos_)));
            if (name.empty()) fail("empty attribute name in '::attr()'");
            sel.accessor = Accessor::Attribute;
            sel.attr_name = std::move(name);
            pos_ = close + 1;
            return;
        }
        fail("expected '::text' or '::attr(name)'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

bool step_matches(const SelectorStep& step, const DomNode& node) {
    if (!node.is_element()) return false;
    if (step.tag != "*" && node.tag != step.tag) return false;
    if (step.id) {
        auto id = node.attribute("id");
        if (!id || *id != *step.id) return false;
    }
    if (!step.classes.empty()) {
        auto cls = node.attribute("class");
        if (!cls) return false;
        std::vector<std::string> have;
        for (const auto& token : strings::split(*cls, ' ')) {
            if (!token.empty()) have.push_back(strings::ascii_lower(strings::trim(token)));
        }
        for (const auto& want : step.classes) {
            if (std::find(have.begin(), have.end(), want) == have.end()) return false;
        }
    }
    for (const auto& [name, value] : step.attr_equals) {
        auto got = node.attribute(name);
        if (!got || *got != value) return false;
    }
    return true;
}

void matches_under(const DomNode& context, const SelectorStep& step,
                   std::vector<const DomNode*>& out) {
    for (const auto& child : context.children) {
        if (step_matches(step, *child)) out.push_back(child.get());
        matches_under(*child, step, out);
    }
}

void number_nodes(const DomNode& node, std::unordered_map<const DomNode*, int>& order, int& next) {
    order[&node] = next++;
    for (const auto& child : node.children) {
        number_nodes(*child, order, next);
    }
}

}  // namespace

Selector parse_selector(std::string_view text) {
    return SelectorParser(text).parse();
}

std::string print_selector(const Selector& sel) {
    std::string out;
    for (size_t i = 0; i < sel.steps.size(); ++i) {
        if (i > 0) out.push_back(' ');
        const SelectorStep& step = sel.steps[i];
        out += step.tag;
        for (const auto& cls : step.classes) {
            out.push_back('.');
            out += cls;
        }
        if (step.id) {
            out.push_back('#');
            out += *step.id;
        }
        for (const auto& [name, value] : step.attr_equals) {
            out.push_back('[');
            out += name;
            out.push_back('=');
            out += value;
            out.push_back(']');
        }
        if (step.index) {
            out.push_back('[');
            out += std::to_string(*step.index);
            out.push_back(']');
        }
    }
    if (sel.accessor == Accessor::Attribute) {
        out += "::attr(";
        out += sel.attr_name;
        out.push_back(')');
    }
    return out;
}

std::vector<const DomNode*> select(const DomNode& root, const Selector& sel) {
    std::vector<const DomNode*> current = {&root};
    for (const SelectorStep& step : sel.steps) {
        std::vector<const DomNode*> next;
        std::unordered_set<const DomNode*> seen;
        for (const DomNode* context : current) {
            std::vector<const DomNode*> matched;
            matches_under(*context, step, matched);
            if (step.index) {
                size_t n = static_cast<size_t>(*step.index);
                if (n > matched.size()) continue;
                matched = {matched[n - 1]};
            }
            for (const DomNode* node : matched) {
                if (seen.insert(node).second) next.push_back(node);
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    if (current.size() > 1) {
        std::unordered_map<const DomNode*, int> order;
        int counter = 0;
        number_nodes(root, order, counter);
        std::sort(current.begin(), current.end(),
                  [&order](const DomNode* a, const DomNode* b) { return order[a] < order[b]; });
    }
    return current;
}

std::string extract_value(const DomNode& node, const Selector& sel) {
    if (sel.accessor == Accessor::TextContent) {
        return text_content(node);
    }
    auto value = node.attribute(sel.attr_name);
    if (!value) throw MissingAttribute(sel.attr_name);
    return *value;
}

}  // namespace durghotona::markup
