#include "durghotona/llmgate/http_provider.hpp"

#include "durghotona/llmgate/wire.hpp"

namespace durghotona::llmgate {

std::string HttpProvider::send(const LlmSettings& settings, const std::string& system_prompt,
                               const std::string& user_prompt) {
    if (config_.api_key.empty()) {
        throw ProviderAuth("no API key configured for provider " + config_.name);
    }
    const std::string url = config_.base_url + endpoint_path();
    const std::string body = wire_encode(settings, system_prompt, user_prompt);

    HttpPostResponse response = client_.post_json(url, config_.api_key, body, config_.timeout);

    if (response.status == 401 || response.status == 403) {
        throw ProviderAuth("provider " + config_.name + " rejected credentials (status " +
                           std::to_string(response.status) + ")");
    }
    if (response.status == 429 || (response.status >= 500 && response.status <= 599)) {
        throw RetryableProviderError("provider " + config_.name + " transient status " +
                                     std::to_string(response.status));
    }
    if (response.status < 200 || response.status > 299) {
        throw ProviderRefusal("provider " + config_.name + " returned status " +
                              std::to_string(response.status));
    }
    return wire_decode(response.body);
}

}  // namespace durghotona::llmgate
