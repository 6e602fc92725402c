#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "durghotona/llmgate/settings.hpp"

namespace durghotona::llmgate {

class MalformedResponse : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// OpenAI-compatible chat-completions request body. Key order is fixed
/// (model, temperature, n, messages) so encoding is byte-stable.
std::string wire_encode(const LlmSettings& settings, std::string_view system_prompt,
                        std::string_view user_prompt);

/// Extracts choices[0].message.content. An error object becomes a
/// ProviderRefusal; anything structurally off is MalformedResponse.
std::string wire_decode(std::string_view response_body);

}  // namespace durghotona::llmgate
