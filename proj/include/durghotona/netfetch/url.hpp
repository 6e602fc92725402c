#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace durghotona::netfetch {

/// Absolute http(s) URL split into parts. Fragments are dropped on parse.
struct Url {
    std::string scheme;  // "http" or "https", lowercase
    std::string host;    // lowercase, may include a port suffix in host_port()
    int port = -1;       // -1 means scheme default
    std::string path;    // always begins with "/"
    std::string query;   // without '?', empty if absent

    static std::optional<Url> parse(std::string_view url);

    std::string host_port() const;
    /// Path plus query, the form robots rules are matched against.
    std::string request_target() const;
    std::string to_string() const;

    /// RFC 3986 style reference resolution for the href forms that appear
    /// in anchor tags: absolute, scheme-relative, absolute-path, relative
    /// path, query-only and fragment-only references.
    static std::string resolve(const Url& base, std::string_view href);
};

}  // namespace durghotona::netfetch
