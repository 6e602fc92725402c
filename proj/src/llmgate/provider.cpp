#include "durghotona/llmgate/provider.hpp"

#include <chrono>

namespace durghotona::llmgate {

ChatExchange complete(Provider& provider, const LlmSettings& settings,
                      const std::string& system_prompt, const std::string& user_prompt) {
    settings.validate();
    if (settings.max_prompt_length > 0 &&
        system_prompt.size() + user_prompt.size() > settings.max_prompt_length) {
        throw ProviderRefusal("prompt exceeds configured max_prompt_length");
    }

    const auto started = std::chrono::steady_clock::now();
    const int max_calls = 1 + settings.max_retries;
    std::string last_error;
    for (int call = 1; call <= max_calls; ++call) {
        try {
            std::string text = provider.send(settings, system_prompt, user_prompt);
            ChatExchange exchange;
            exchange.system_prompt = system_prompt;
            exchange.user_prompt = user_prompt;
            exchange.response_text = std::move(text);
            exchange.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started);
            exchange.provider = provider.name();
            return exchange;
        } catch (const RetryableProviderError& e) {
            last_error = e.what();
        }
    }
    throw ExhaustedRetries(max_calls, last_error);
}

}  // namespace durghotona::llmgate
