#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "durghotona/netfetch/http_transport.hpp"
#include "durghotona/netfetch/url.hpp"

namespace durghotona::netfetch {

HttpResponse HttpTransport::get(const std::string& url, const std::string& user_agent,
                                std::chrono::milliseconds timeout) {
    auto parsed = Url::parse(url);
    if (!parsed) throw TransportError("unparseable URL: " + url);

    const std::string origin = parsed->scheme + "://" + parsed->host_port();
    httplib::Client client(origin);
    client.set_follow_location(true);
    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    if (seconds.count() < 1) seconds = std::chrono::seconds{1};
    client.set_connection_timeout(seconds.count(), 0);
    client.set_read_timeout(seconds.count(), 0);

    httplib::Headers headers = {{"User-Agent", user_agent}};
    auto result = client.Get(parsed->request_target(), headers);
    if (!result) {
        throw TransportError("request to " + url + " failed: " + httplib::to_string(result.error()));
    }
    return {result->status, result->body};
}

}  // namespace durghotona::netfetch
