#pragma once

#include <filesystem>

#include "durghotona/netfetch/transport.hpp"

namespace durghotona::netfetch {

/// Serves GET requests from a directory tree laid out as
/// `<root>/<host>/<path>`; a trailing slash maps to index.html. Missing
/// files answer 404. Used for offline fixture runs.
class FileTransport final : public Transport {
public:
    explicit FileTransport(std::filesystem::path root) : root_(std::move(root)) {}

    HttpResponse get(const std::string& url, const std::string& user_agent,
                     std::chrono::milliseconds timeout) override;

private:
    std::filesystem::path root_;
};

}  // namespace durghotona::netfetch
