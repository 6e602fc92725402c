#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace durghotona::netfetch {

struct HttpResponse {
    int status = 0;
    std::string body;
};

/// Network failure below the HTTP layer (DNS, connect, timeout). Always
/// treated as retryable.
class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The only seam that touches the network. Production code uses
/// HttpTransport; tests inject scripted fakes; offline runs use
/// FileTransport.
class Transport {
public:
    virtual ~Transport() = default;
    virtual HttpResponse get(const std::string& url, const std::string& user_agent,
                             std::chrono::milliseconds timeout) = 0;
};

}  // namespace durghotona::netfetch
