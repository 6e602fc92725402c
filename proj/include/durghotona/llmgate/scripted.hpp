#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "durghotona/llmgate/provider.hpp"

namespace durghotona::llmgate {

class ScriptExhausted : public std::runtime_error {
public:
    explicit ScriptExhausted(const std::string& prompt_prefix)
        : std::runtime_error("no script rule matches prompt: " + prompt_prefix) {}
};

/// One scripted behavior. A rule applies when every `match` string occurs
/// in the user prompt; `times` limits how often it fires (0 = unlimited).
struct ScriptRule {
    enum class Kind { Respond, FailTransient, FailRefusal, FailAuth };

    std::vector<std::string> match;
    Kind kind = Kind::Respond;
    std::string text;  // response body, or failure message
    int times = 0;
    int used = 0;
};

/// Deterministic stand-in for a hosted model: replays configured
/// responses, records every call, never touches the network.
class ScriptedProvider final : public Provider {
public:
    ScriptedProvider() = default;
    explicit ScriptedProvider(std::vector<ScriptRule> rules) : rules_(std::move(rules)) {}

    /// Parses the JSON script format used by the CLI:
    /// {"rules": [{"match": "s" | ["s", ...], "response": "..."} |
    ///            {"match": ..., "fail": "transient"|"refusal"|"auth",
    ///             "times": N}]}
    static std::vector<ScriptRule> rules_from_json(std::string_view bytes);

    void add_rule(ScriptRule rule);

    std::string name() const override { return "scripted"; }
    std::string send(const LlmSettings& settings, const std::string& system_prompt,
                     const std::string& user_prompt) override;

    struct Call {
        std::string system_prompt;
        std::string user_prompt;
        std::string model;
    };
    std::vector<Call> calls() const;
    int call_count() const;

private:
    mutable std::mutex mutex_;
    std::vector<ScriptRule> rules_;
    std::vector<Call> calls_;
};

}  // namespace durghotona::llmgate
