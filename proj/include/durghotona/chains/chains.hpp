#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "durghotona/chains/prompts.hpp"
#include "durghotona/harvest/harvest.hpp"
#include "durghotona/llmgate/provider.hpp"
#include "durghotona/records/normalize.hpp"
#include "durghotona/records/record.hpp"

namespace durghotona::chains {

enum class Category { Specific, General };

/// The 8 answers exactly as returned by the model, before normalization.
using RawExtraction = records::ExtractionFields;

class UnparseableCategory : public std::runtime_error {
public:
    explicit UnparseableCategory(const std::string& response)
        : std::runtime_error("category response not Specific/General: '" + response + "'") {}
};

class ExtractionFailed : public std::runtime_error {
public:
    ExtractionFailed(int calls, const std::string& last_error)
        : std::runtime_error("extraction failed after " + std::to_string(calls) +
                             " attempts (last: " + last_error + ")") {}
};

/// Base of the structured-output parse errors so the repair loop can
/// catch them uniformly.
class StructuredOutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoJsonFound : public StructuredOutputError {
public:
    NoJsonFound() : StructuredOutputError("no balanced JSON object found in response") {}
};

class JsonSyntax : public StructuredOutputError {
public:
    using StructuredOutputError::StructuredOutputError;
};

class WrongKeys : public StructuredOutputError {
public:
    WrongKeys(std::vector<std::string> missing, std::vector<std::string> extra);
    const std::vector<std::string>& missing() const { return missing_; }
    const std::vector<std::string>& extra() const { return extra_; }

private:
    std::vector<std::string> missing_;
    std::vector<std::string> extra_;
};

/// The extraction output schema, in prompt order.
const std::vector<std::string>& extraction_keys();

/// First chain: Specific-vs-General triage. An answer that is neither
/// label triggers one clarifying re-ask before UnparseableCategory.
Category classify_report(const harvest::Article& article, llmgate::Provider& provider,
                         const llmgate::LlmSettings& settings,
                         const PromptSet& prompts = PromptSet::defaults());

/// Second chain: the 8-field extraction with bounded parse-repair
/// (settings.max_retries re-asks quoting the parse error).
RawExtraction extract_record(const harvest::Article& article, llmgate::Provider& provider,
                             const llmgate::LlmSettings& settings,
                             const PromptSet& prompts = PromptSet::defaults());

/// Finds the first balanced {...} region, parses it as JSON and demands
/// exactly the 8 schema keys with string-coercible values.
std::map<std::string, std::string> parse_structured_output(const std::string& text);

struct Exclusion {
    harvest::NewsIndexEntry entry;
    std::string reason;  // "general", "unparseable", "extraction-failed",
                         // "unnormalizable", "provider-error"
    std::string detail;
};

struct PipelineResult {
    std::vector<records::AccidentRecord> dataset;
    std::vector<Exclusion> excluded;
};

/// Runs triage + extraction + normalization over every article. General
/// reports and per-article failures land in the exclusion ledger; record
/// order follows input order. Articles may be processed concurrently
/// (bounded by `concurrency`); results are re-serialized to input order.
/// ProviderAuth is configuration-level and propagates instead of being
/// recorded.
PipelineResult run_pipeline(const std::vector<harvest::Article>& articles,
                            llmgate::Provider& provider, const llmgate::LlmSettings& settings,
                            const records::NormalizeOptions& normalize_options = {},
                            const PromptSet& prompts = PromptSet::defaults(),
                            int concurrency = 1);

}  // namespace durghotona::chains
