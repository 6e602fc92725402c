#include "durghotona/netfetch/url.hpp"

#include <vector>

#include "durghotona/common/strings.hpp"

namespace durghotona::netfetch {

namespace strings = durghotona::strings;

namespace {

// Removes "." and ".." segments from an absolute path.
std::string remove_dot_segments(std::string_view path) {
    std::vector<std::string> segments;
    bool trailing_slash = !path.empty() && path.back() == '/';
    size_t i = 0;
    while (i < path.size()) {
        size_t next = path.find('/', i);
        std::string_view seg = (next == std::string_view::npos)
                                   ? path.substr(i)
                                   : path.substr(i, next - i);
        if (seg == "..") {
            if (!segments.empty()) segments.pop_back();
        } else if (!seg.empty() && seg != ".") {
            segments.emplace_back(seg);
        }
        if (next == std::string_view::npos) break;
        i = next + 1;
    }
    std::string out = "/";
    for (size_t k = 0; k < segments.size(); ++k) {
        out += segments[k];
        if (k + 1 < segments.size()) out.push_back('/');
    }
    if (trailing_slash && out.back() != '/') out.push_back('/');
    return out;
}

}  // namespace

std::optional<Url> Url::parse(std::string_view url) {
    size_t scheme_end = url.find("://");
    if (scheme_end == std::string_view::npos) return std::nullopt;
    Url out;
    out.scheme = strings::ascii_lower(url.substr(0, scheme_end));
    if (out.scheme != "http" && out.scheme != "https") return std::nullopt;

    size_t authority_start = scheme_end + 3;
    size_t authority_end = url.find_first_of("/?#", authority_start);
    std::string_view authority = (authority_end == std::string_view::npos)
                                     ? url.substr(authority_start)
                                     : url.substr(authority_start, authority_end - authority_start);
    if (authority.empty()) return std::nullopt;
    size_t colon = authority.rfind(':');
    if (colon != std::string_view::npos) {
        std::string_view port_text = authority.substr(colon + 1);
        int port = 0;
        bool ok = !port_text.empty();
        for (char c : port_text) {
            if (c < '0' || c > '9') {
                ok = false;
                break;
            }
            port = port * 10 + (c - '0');
            if (port > 65535) {
                ok = false;
                break;
            }
        }
        if (!ok) return std::nullopt;
        out.port = port;
        authority = authority.substr(0, colon);
    }
    out.host = strings::ascii_lower(authority);
    if (out.host.empty()) return std::nullopt;

    out.path = "/";
    if (authority_end != std::string_view::npos) {
        std::string_view rest = url.substr(authority_end);
        size_t hash = rest.find('#');
        if (hash != std::string_view::npos) rest = rest.substr(0, hash);
        size_t q = rest.find('?');
        if (q != std::string_view::npos) {
            out.query = std::string(rest.substr(q + 1));
            rest = rest.substr(0, q);
        }
        if (!rest.empty()) out.path = std::string(rest);
    }
    if (out.path.empty() || out.path[0] != '/') out.path = "/" + out.path;
    return out;
}

std::string Url::host_port() const {
    if (port < 0) return host;
    return host + ":" + std::to_string(port);
}

std::string Url::request_target() const {
    if (query.empty()) return path;
    return path + "?" + query;
}

std::string Url::to_string() const {
    return scheme + "://" + host_port() + request_target();
}

std::string Url::resolve(const Url& base, std::string_view href) {
    size_t hash = href.find('#');
    if (hash != std::string_view::npos) href = href.substr(0, hash);
    if (href.empty()) return base.to_string();

    if (href.find("://") != std::string_view::npos) {
        auto abs = Url::parse(href);
        return abs ? abs->to_string() : std::string(href);
    }
    if (href.size() >= 2 && href[0] == '/' && href[1] == '/') {
        auto abs = Url::parse(base.scheme + ":" + std::string(href));
        return abs ? abs->to_string() : std::string(href);
    }

    Url out = base;
    if (href[0] == '/') {
        size_t q = href.find('?');
        out.query = (q == std::string_view::npos) ? "" : std::string(href.substr(q + 1));
        out.path = remove_dot_segments(q == std::string_view::npos ? href : href.substr(0, q));
    } else if (href[0] == '?') {
        out.query = std::string(href.substr(1));
    } else {
        size_t q = href.find('?');
        std::string_view rel = (q == std::string_view::npos) ? href : href.substr(0, q);
        out.query = (q == std::string_view::npos) ? "" : std::string(href.substr(q + 1));
        std::string dir = base.path.substr(0, base.path.rfind('/') + 1);
        out.path = remove_dot_segments(dir + std::string(rel));
    }
    return out.to_string();
}

}  // namespace durghotona::netfetch
