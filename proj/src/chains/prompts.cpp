#include "durghotona/chains/prompts.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "durghotona/common/strings.hpp"

namespace durghotona::chains {

namespace {

constexpr const char* kTriageSystem =
    "You are a road-accident news triage assistant. Classify each news report as exactly one "
    "of two categories.\n"
    "\n"
    "Specific: the report describes one identifiable accident incident, with details such as "
    "where it happened, when it happened, or who was involved.\n"
    "\n"
    "General: the report is about accidents in aggregate or in the abstract rather than one "
    "incident. Examples of General reports: 'total number of accidents in April only', 'who is "
    "responsible for road accidents?', 'expert opinion on road accidents'.\n"
    "\n"
    "Answer with exactly one word: Specific or General.";

constexpr const char* kTriageUser =
    "Classify the following news report.\n"
    "\n"
    "Title: {title}\n"
    "\n"
    "Report:\n"
    "{body}";

constexpr const char* kExtractSystem =
    "You extract structured facts about one road accident from a news report. Respond with a "
    "single JSON object containing exactly these keys and no others:\n"
    "\n"
    "  accident_date          - date of the accident as stated in the report\n"
    "  time                   - time of day of the accident\n"
    "  injured                - number of people injured\n"
    "  killed                 - number of people killed\n"
    "  location               - where the accident happened\n"
    "  road_characteristics   - kind of road (highway, intersection, ...)\n"
    "  pedestrian_involved    - yes or no: was a pedestrian involved?\n"
    "  vehicle_types          - types of vehicles involved\n"
    "\n"
    "Every value must be a string. Use \"unknown\" when the report does not state the value. "
    "Do not add commentary outside the JSON object.";

constexpr const char* kExtractUser =
    "Extract the accident details from the following news report.\n"
    "\n"
    "Title: {title}\n"
    "\n"
    "Report:\n"
    "{body}";

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read prompt file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

PromptSet PromptSet::defaults() {
    return {kTriageSystem, kTriageUser, kExtractSystem, kExtractUser};
}

PromptSet PromptSet::load_dir(const std::filesystem::path& dir) {
    return {
        read_file(dir / "triage_system.txt"),
        read_file(dir / "triage_user.txt"),
        read_file(dir / "extract_system.txt"),
        read_file(dir / "extract_user.txt"),
    };
}

std::string render_prompt(const std::string& prompt_template, const std::string& title,
                          const std::string& body) {
    std::string out = strings::replace_all(prompt_template, "{title}", title);
    return strings::replace_all(out, "{body}", body);
}

}  // namespace durghotona::chains
