#pragma once

#include <chrono>
#include <memory>
#include <string>

#include "durghotona/llmgate/provider.hpp"

namespace durghotona::llmgate {

struct HttpPostResponse {
    int status = 0;
    std::string body;
};

/// POST seam so provider logic is testable without sockets.
class HttpPostClient {
public:
    virtual ~HttpPostClient() = default;
    /// Throws RetryableProviderError on network-level failure.
    virtual HttpPostResponse post_json(const std::string& url, const std::string& bearer_token,
                                       const std::string& body,
                                       std::chrono::milliseconds timeout) = 0;
};

/// Real client backed by cpp-httplib.
std::unique_ptr<HttpPostClient> make_httplib_post_client();

struct HttpProviderConfig {
    std::string name;       // "openai" or "groq"
    std::string base_url;   // e.g. https://api.openai.com
    std::string api_key;    // empty means unauthenticated -> ProviderAuth
    std::chrono::milliseconds timeout{60000};
};

/// Hosted chat-completion endpoint speaking the OpenAI-compatible dialect;
/// both supported providers differ only in base URL and API key.
class HttpProvider final : public Provider {
public:
    HttpProvider(HttpProviderConfig config, HttpPostClient& client)
        : config_(std::move(config)), client_(client) {}

    std::string name() const override { return config_.name; }
    std::string send(const LlmSettings& settings, const std::string& system_prompt,
                     const std::string& user_prompt) override;

    static std::string endpoint_path() { return "/v1/chat/completions"; }

private:
    HttpProviderConfig config_;
    HttpPostClient& client_;
};

}  // namespace durghotona::llmgate
