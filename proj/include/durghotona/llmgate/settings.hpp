#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace durghotona::llmgate {

/// Chat-completion parameters shared by every provider. Defaults mirror
/// the base configuration used for all models: sampling temperature 0.7,
/// two retries, a single response.
struct LlmSettings {
    std::string model = "gpt-4o";
    double temperature = 0.7;
    int max_retries = 2;
    int n = 1;
    /// Guard against runaway prompts; 0 disables the check.
    size_t max_prompt_length = 0;

    void validate() const {
        if (model.empty()) throw std::invalid_argument("model name must not be empty");
        if (temperature < 0.0 || temperature > 2.0) {
            throw std::invalid_argument("temperature must be within [0, 2]");
        }
        if (max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");
        if (n < 1) throw std::invalid_argument("n must be >= 1");
    }
};

/// One request/response pair, recorded verbatim.
struct ChatExchange {
    std::string system_prompt;
    std::string user_prompt;
    std::string response_text;
    std::chrono::milliseconds latency{0};
    std::string provider;
};

class ProviderAuth : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-retryable API rejection (4xx other than 429, or an error object in
/// a 2xx body).
class ProviderRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Transient failure: network error, timeout, 429 or 5xx. complete()
/// retries these.
class RetryableProviderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ExhaustedRetries : public std::runtime_error {
public:
    ExhaustedRetries(int calls, const std::string& last_error)
        : std::runtime_error("provider retries exhausted after " + std::to_string(calls) +
                             " calls (last: " + last_error + ")"),
          calls_(calls) {}
    int calls() const { return calls_; }

private:
    int calls_;
};

}  // namespace durghotona::llmgate
