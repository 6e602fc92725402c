#pragma once

#include <filesystem>
#include <string>

namespace durghotona::chains {

/// The four chain prompt templates. `{title}` and `{body}` placeholders
/// are substituted at render time. Defaults are compiled in; load_dir
/// reads triage_system.txt, triage_user.txt, extract_system.txt and
/// extract_user.txt from a directory instead.
struct PromptSet {
    std::string triage_system;
    std::string triage_user;
    std::string extract_system;
    std::string extract_user;

    static PromptSet defaults();
    static PromptSet load_dir(const std::filesystem::path& dir);
};

std::string render_prompt(const std::string& prompt_template, const std::string& title,
                          const std::string& body);

}  // namespace durghotona::chains
