#pragma once

#include <string>

#include "durghotona/llmgate/settings.hpp"

namespace durghotona::llmgate {

/// A chat-completion backend. send() performs exactly one request and
/// throws RetryableProviderError / ProviderRefusal / ProviderAuth as
/// appropriate; retry policy lives in complete().
class Provider {
public:
    virtual ~Provider() = default;
    virtual std::string name() const = 0;
    virtual std::string send(const LlmSettings& settings, const std::string& system_prompt,
                             const std::string& user_prompt) = 0;
};

/// One logical completion: at most 1 + settings.max_retries send() calls,
/// retrying only transient failures. Throws ExhaustedRetries when every
/// call failed transiently.
ChatExchange complete(Provider& provider, const LlmSettings& settings,
                      const std::string& system_prompt, const std::string& user_prompt);

}  // namespace durghotona::llmgate
