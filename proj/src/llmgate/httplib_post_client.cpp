#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "durghotona/llmgate/http_provider.hpp"
#include "durghotona/netfetch/url.hpp"

namespace durghotona::llmgate {

namespace {

class HttplibPostClient final : public HttpPostClient {
public:
    HttpPostResponse post_json(const std::string& url, const std::string& bearer_token,
                               const std::string& body,
                               std::chrono::milliseconds timeout) override {
        auto parsed = netfetch::Url::parse(url);
        if (!parsed) throw RetryableProviderError("unparseable provider URL: " + url);

        httplib::Client client(parsed->scheme + "://" + parsed->host_port());
        auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout);
        if (seconds.count() < 1) seconds = std::chrono::seconds{1};
        client.set_connection_timeout(seconds.count(), 0);
        client.set_read_timeout(seconds.count(), 0);

        httplib::Headers headers = {{"Authorization", "Bearer " + bearer_token}};
        auto result = client.Post(parsed->request_target(), headers, body, "application/json");
        if (!result) {
            throw RetryableProviderError("request to " + url +
                                         " failed: " + httplib::to_string(result.error()));
        }
        return {result->status, result->body};
    }
};

}  // namespace

std::unique_ptr<HttpPostClient> make_httplib_post_client() {
    return std::make_unique<HttplibPostClient>();
}

}  // namespace durghotona::llmgate
