#include "durghotona/chains/chains.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>

#include "durghotona/common/parallel.hpp"
#include "durghotona/common/strings.hpp"
#include "durghotona/llmgate/scripted.hpp"

namespace durghotona::chains {

namespace strings = durghotona::strings;

namespace {

const std::vector<std::string> kKeys = {
    "accident_date", "time",    "injured",
    "killed",        "location", "road_characteristics",
    "pedestrian_involved", "vehicle_types"};

std::string strip_label_punctuation(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    auto is_noise = [](char c) {
        return c == '.' || c == ',' || c == '!' || c == '"' || c == '\'' || c == ':' || c == '*';
    };
    while (b < e && is_noise(s[b])) ++b;
    while (e > b && is_noise(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::optional<Category> parse_category(const std::string& response) {
    const std::string label =
        strings::ascii_lower(strip_label_punctuation(strings::trim(response)));
    if (label == "specific") return Category::Specific;
    if (label == "general") return Category::General;
    return std::nullopt;
}

// First balanced {...} region, skipping braces inside JSON strings.
std::optional<std::string> first_balanced_object(const std::string& text) {
    size_t start = text.find('{');
    if (start == std::string::npos) return std::nullopt;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}') {
            --depth;
            if (depth == 0) return text.substr(start, i - start + 1);
        }
    }
    return std::nullopt;
}

std::string coerce_to_string(const std::string& key, const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number_float()) return value.dump();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_null()) return "unknown";
    if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
            if (!item.is_string()) {
                throw JsonSyntax("value for key '" + key + "' is not string-coercible");
            }
            if (!joined.empty()) joined += ", ";
            joined += item.get<std::string>();
        }
        return joined;
    }
    throw JsonSyntax("value for key '" + key + "' is not string-coercible");
}

}  // namespace

WrongKeys::WrongKeys(std::vector<std::string> missing, std::vector<std::string> extra)
    : StructuredOutputError([&] {
          std::string message = "response keys differ from schema";
          if (!missing.empty()) {
              message += "; missing:";
              for (const auto& k : missing) message += " " + k;
          }
          if (!extra.empty()) {
              message += "; unexpected:";
              for (const auto& k : extra) message += " " + k;
          }
          return message;
      }()),
      missing_(std::move(missing)),
      extra_(std::move(extra)) {}

const std::vector<std::string>& extraction_keys() { return kKeys; }

std::map<std::string, std::string> parse_structured_output(const std::string& text) {
    auto region = first_balanced_object(text);
    if (!region) throw NoJsonFound();

    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(*region);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonSyntax(std::string("balanced region is not valid JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw JsonSyntax("balanced region is not a JSON object");

    std::vector<std::string> missing;
    std::vector<std::string> extra;
    for (const auto& key : kKeys) {
        if (!parsed.contains(key)) missing.push_back(key);
    }
    for (const auto& [key, value] : parsed.items()) {
        (void)value;
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) extra.push_back(key);
    }
    if (!missing.empty() || !extra.empty()) {
        std::sort(extra.begin(), extra.end());
        throw WrongKeys(std::move(missing), std::move(extra));
    }

    std::map<std::string, std::string> fields;
    for (const auto& key : kKeys) {
        fields[key] = coerce_to_string(key, parsed.at(key));
    }
    return fields;
}

Category classify_report(const harvest::Article& article, llmgate::Provider& provider,
                         const llmgate::LlmSettings& settings, const PromptSet& prompts) {
    const std::string user = render_prompt(prompts.triage_user, article.entry.title, article.body);
    auto exchange = llmgate::complete(provider, settings, prompts.triage_system, user);
    if (auto category = parse_category(exchange.response_text)) return *category;

    // One clarifying re-ask before giving up.
    const std::string repair =
        user + "\n\nAnswer with exactly one word: Specific or General.";
    exchange = llmgate::complete(provider, settings, prompts.triage_system, repair);
    if (auto category = parse_category(exchange.response_text)) return *category;
    throw UnparseableCategory(exchange.response_text);
}

RawExtraction extract_record(const harvest::Article& article, llmgate::Provider& provider,
                             const llmgate::LlmSettings& settings, const PromptSet& prompts) {
    std::string user = render_prompt(prompts.extract_user, article.entry.title, article.body);
    const int max_attempts = 1 + settings.max_retries;
    std::string last_error;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        auto exchange = llmgate::complete(provider, settings, prompts.extract_system, user);
        try {
            auto fields = parse_structured_output(exchange.response_text);
            RawExtraction raw;
            raw.accident_date = fields.at("accident_date");
            raw.time = fields.at("time");
            raw.injured = fields.at("injured");
            raw.killed = fields.at("killed");
            raw.location = fields.at("location");
            raw.road_characteristics = fields.at("road_characteristics");
            raw.pedestrian_involved = fields.at("pedestrian_involved");
            raw.vehicle_types = fields.at("vehicle_types");
            return raw;
        } catch (const StructuredOutputError& e) {
            last_error = e.what();
            user += "\n\nYour previous answer could not be parsed: " + last_error +
                    ". Respond again with only the JSON object.";
        }
    }
    throw ExtractionFailed(max_attempts, last_error);
}

PipelineResult run_pipeline(const std::vector<harvest::Article>& articles,
                            llmgate::Provider& provider, const llmgate::LlmSettings& settings,
                            const records::NormalizeOptions& normalize_options,
                            const PromptSet& prompts, int concurrency) {
    settings.validate();  // a bad configuration is not a per-article outcome

    struct Outcome {
        std::optional<records::AccidentRecord> record;
        std::optional<Exclusion> exclusion;
        std::optional<std::string> auth_error;
    };
    std::vector<Outcome> outcomes(articles.size());

    parallel::for_each_index(articles.size(), concurrency, [&](size_t i) {
        const harvest::Article& article = articles[i];
        Outcome& out = outcomes[i];
        auto exclude = [&](std::string reason, std::string detail) {
            out.exclusion = Exclusion{article.entry, std::move(reason), std::move(detail)};
        };
        try {
            Category category = classify_report(article, provider, settings, prompts);
            if (category == Category::General) {
                exclude("general", "triaged as General");
                return;
            }
            RawExtraction raw = extract_record(article, provider, settings, prompts);
            records::Provenance provenance{article.entry.source, article.entry.link,
                                           article.entry.title, article.entry.publish_date,
                                           settings.model};
            out.record = records::normalize_extraction(raw, provenance, normalize_options);
        } catch (const UnparseableCategory& e) {
            exclude("unparseable", e.what());
        } catch (const ExtractionFailed& e) {
            exclude("extraction-failed", e.what());
        } catch (const records::UnnormalizableField& e) {
            exclude("unnormalizable", e.what());
        } catch (const llmgate::ProviderAuth& e) {
            out.auth_error = e.what();
        } catch (const llmgate::ExhaustedRetries& e) {
            exclude("provider-error", e.what());
        } catch (const llmgate::ProviderRefusal& e) {
            exclude("provider-error", e.what());
        } catch (const llmgate::ScriptExhausted& e) {
            exclude("provider-error", e.what());
        } catch (const std::invalid_argument& e) {
            exclude("unnormalizable", e.what());
        }
    });

    for (const Outcome& out : outcomes) {
        if (out.auth_error) throw llmgate::ProviderAuth(*out.auth_error);
    }

    PipelineResult result;
    for (Outcome& out : outcomes) {
        if (out.record) {
            result.dataset.push_back(std::move(*out.record));
        } else if (out.exclusion) {
            result.excluded.push_back(std::move(*out.exclusion));
        }
    }
    return result;
}

}  // namespace durghotona::chains
