#include <CLI11.hpp>

#include <iostream>

#include "durghotona/cli/commands.hpp"
#include "durghotona/cli/run_config.hpp"

namespace cli = durghotona::cli;

int main(int argc, char** argv) {
    CLI::App app{"durghotona: accident-news harvesting, LLM extraction and evaluation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string provider_override;
    std::string model_override;
    std::string out_override;
    std::string gold_override;
    std::string script_override;
    std::string prompts_override;
    std::vector<std::string> dataset_args;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run config JSON")->required();
        cmd->add_option("--provider", provider_override, "openai | groq | scripted");
        cmd->add_option("--model", model_override, "model name sent to the provider");
        cmd->add_option("--out", out_override, "output directory");
        cmd->add_option("--gold", gold_override, "gold standard JSON");
        cmd->add_option("--script", script_override, "scripted provider script JSON");
        cmd->add_option("--prompts", prompts_override, "prompt template directory");
    };

    CLI::App* harvest = app.add_subcommand("harvest", "collect index and article bodies");
    add_common(harvest);
    CLI::App* extract = app.add_subcommand("extract", "run the LLM chains over articles");
    add_common(extract);
    CLI::App* evaluate = app.add_subcommand("evaluate", "score dataset(s) against gold");
    add_common(evaluate);
    evaluate->add_option("datasets", dataset_args, "dataset CSV files, one per model");
    CLI::App* run = app.add_subcommand("run", "harvest, extract and evaluate in sequence");
    add_common(run);

    CLI11_PARSE(app, argc, argv);

    cli::RunConfig config;
    try {
        config = cli::load_run_config(config_path);
        if (!provider_override.empty()) config.provider = provider_override;
        if (!model_override.empty()) config.settings.model = model_override;
        if (!out_override.empty()) config.output_dir = out_override;
        if (!gold_override.empty()) config.gold_path = gold_override;
        if (!script_override.empty()) config.script_path = script_override;
        if (!prompts_override.empty()) config.prompts_dir = prompts_override;
        for (const auto& d : dataset_args) config.dataset_paths.emplace_back(d);
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << R"({"level":"error","stage":"config","message":")" << e.what() << "\"}\n";
        return cli::kExitInputInvalid;
    }

    if (harvest->parsed()) return cli::cmd_harvest(config);
    if (extract->parsed()) return cli::cmd_extract(config);
    if (evaluate->parsed()) return cli::cmd_evaluate(config);
    return cli::cmd_run(config);
}
