#include "durghotona/llmgate/scripted.hpp"

#include <json.hpp>

namespace durghotona::llmgate {

std::vector<ScriptRule> ScriptedProvider::rules_from_json(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("script is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array()) {
        throw std::invalid_argument("script must be an object with a 'rules' array");
    }
    std::vector<ScriptRule> rules;
    for (const auto& entry : doc["rules"]) {
        ScriptRule rule;
        if (entry.contains("match")) {
            const auto& match = entry["match"];
            if (match.is_string()) {
                rule.match.push_back(match.get<std::string>());
            } else if (match.is_array()) {
                for (const auto& m : match) rule.match.push_back(m.get<std::string>());
            } else {
                throw std::invalid_argument("rule 'match' must be a string or array of strings");
            }
        }
        if (entry.contains("response")) {
            rule.kind = ScriptRule::Kind::Respond;
            rule.text = entry["response"].get<std::string>();
        } else if (entry.contains("fail")) {
            const std::string fail = entry["fail"].get<std::string>();
            if (fail == "transient") {
                rule.kind = ScriptRule::Kind::FailTransient;
            } else if (fail == "refusal") {
                rule.kind = ScriptRule::Kind::FailRefusal;
            } else if (fail == "auth") {
                rule.kind = ScriptRule::Kind::FailAuth;
            } else {
                throw std::invalid_argument("rule 'fail' must be transient, refusal or auth");
            }
            rule.text = entry.value("message", "scripted failure");
        } else {
            throw std::invalid_argument("rule needs 'response' or 'fail'");
        }
        rule.times = entry.value("times", 0);
        rules.push_back(std::move(rule));
    }
    return rules;
}

void ScriptedProvider::add_rule(ScriptRule rule) {
    std::lock_guard lock(mutex_);
    rules_.push_back(std::move(rule));
}

std::string ScriptedProvider::send(const LlmSettings& settings, const std::string& system_prompt,
                                   const std::string& user_prompt) {
    std::lock_guard lock(mutex_);
    calls_.push_back({system_prompt, user_prompt, settings.model});

    for (auto& rule : rules_) {
        if (rule.times > 0 && rule.used >= rule.times) continue;
        bool matches = true;
        for (const auto& needle : rule.match) {
            if (user_prompt.find(needle) == std::string::npos) {
                matches = false;
                break;
            }
        }
        if (!matches) continue;
        ++rule.used;
        switch (rule.kind) {
            case ScriptRule::Kind::Respond:
                return rule.text;
            case ScriptRule::Kind::FailTransient:
                throw RetryableProviderError(rule.text);
            case ScriptRule::Kind::FailRefusal:
                throw ProviderRefusal(rule.text);
            case ScriptRule::Kind::FailAuth:
                throw ProviderAuth(rule.text);
        }
    }
    throw ScriptExhausted(user_prompt.substr(0, 80));
}

std::vector<ScriptedProvider::Call> ScriptedProvider::calls() const {
    std::lock_guard lock(mutex_);
    return calls_;
}

int ScriptedProvider::call_count() const {
    std::lock_guard lock(mutex_);
    return static_cast<int>(calls_.size());
}

}  // namespace durghotona::llmgate
