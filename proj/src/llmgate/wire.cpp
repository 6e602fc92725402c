#include "durghotona/llmgate/wire.hpp"

#include <json.hpp>

namespace durghotona::llmgate {

using ordered_json = nlohmann::ordered_json;

std::string wire_encode(const LlmSettings& settings, std::string_view system_prompt,
                        std::string_view user_prompt) {
    ordered_json body;
    body["model"] = settings.model;
    body["temperature"] = settings.temperature;
    body["n"] = settings.n;
    body["messages"] = ordered_json::array({
        ordered_json{{"role", "system"}, {"content", system_prompt}},
        ordered_json{{"role", "user"}, {"content", user_prompt}},
    });
    return body.dump();
}

std::string wire_decode(std::string_view response_body) {
    ordered_json parsed;
    try {
        parsed = ordered_json::parse(response_body);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedResponse(std::string("response is not JSON: ") + e.what());
    }
    if (parsed.contains("error")) {
        const auto& error = parsed["error"];
        std::string message = "provider error";
        if (error.is_object() && error.contains("message") && error["message"].is_string()) {
            message = error["message"].get<std::string>();
        } else if (error.is_string()) {
            message = error.get<std::string>();
        }
        throw ProviderRefusal(message);
    }
    try {
        const auto& choices = parsed.at("choices");
        if (!choices.is_array() || choices.empty()) {
            throw MalformedResponse("response has no choices");
        }
        return choices.at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedResponse(std::string("unexpected response shape: ") + e.what());
    }
}

}  // namespace durghotona::llmgate
