#pragma once

#include "durghotona/netfetch/transport.hpp"

namespace durghotona::netfetch {

/// Real HTTP(S) GET via cpp-httplib. Follows redirects; network-level
/// failures surface as TransportError.
class HttpTransport final : public Transport {
public:
    HttpResponse get(const std::string& url, const std::string& user_agent,
                     std::chrono::milliseconds timeout) override;
};

}  // namespace durghotona::netfetch
