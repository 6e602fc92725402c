// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Everything runs offline against committed
// fixtures and scripted components.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "durghotona/chains/chains.hpp"
#include "durghotona/cli/commands.hpp"
#include "durghotona/evalkit/evaluate.hpp"
#include "durghotona/evalkit/report.hpp"
#include "durghotona/llmgate/scripted.hpp"
#include "durghotona/markup/selector.hpp"
#include "durghotona/netfetch/fetcher.hpp"
#include "durghotona/records/csv.hpp"
#include "durghotona/records/normalize.hpp"
#include "support/fakes.hpp"
#include "support/generators.hpp"

using namespace durghotona;
using namespace std::chrono_literals;

namespace {

const std::filesystem::path kFixtures{DURGHOTONA_FIXTURES_DIR};

int g_failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
    std::printf("%s  %-42s  %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --- criterion 1: reference-tally accuracy arithmetic -----------------

void criterion_1_accuracy_tallies() {
    struct Case {
        long correct;
        long wrong;
        double expected;
        const char* label;
    };
    const std::vector<Case> cases = {
        {1450, 177, 0.8912, "89%"},
        {1224, 384, 0.7612, "76%"},
        {1499, 145, 0.9118, "91%"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        double got = evalkit::accuracy(c.correct, c.wrong);
        std::string label = evalkit::percent_label(c.correct, c.wrong);
        if (std::fabs(got - c.expected) > 1e-4 || label != c.label) ok = false;
        char buffer[96];
        std::snprintf(buffer, sizeof(buffer), "(%ld,%ld)->%.4f/%s ", c.correct, c.wrong, got,
                      label.c_str());
        detail += buffer;
    }
    report("1 reference-tally accuracies", ok, detail);
}

// --- criterion 2a: golden end-to-end run ------------------------------

cli::RunConfig fixture_run_config(const std::filesystem::path& out_dir) {
    cli::RunConfig config;
    config.site_config_paths = {kFixtures / "sites" / "alpha_times.json",
                                kFixtures / "sites" / "beta_herald.json",
                                kFixtures / "sites" / "gamma_post.json"};
    config.provider = "scripted";
    config.script_path = kFixtures / "scripts" / "golden_script.json";
    config.settings.model = "scripted-1";
    config.transport.kind = "file";
    config.transport.root = kFixtures / "www";
    config.gold_path = kFixtures / "gold" / "gold.json";
    config.output_dir = out_dir;
    config.concurrency = 4;
    return config;
}

void criterion_2a_golden_run() {
    auto out_dir = std::filesystem::temp_directory_path() / "durghotona_acceptance_run";
    std::filesystem::remove_all(out_dir);
    std::ostringstream out, err;
    cli::CommandIo io{&out, &err};

    auto started = std::chrono::steady_clock::now();
    int code = cli::cmd_run(fixture_run_config(out_dir), io);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);

    std::string golden = slurp(kFixtures / "golden" / "dataset.csv");
    std::string produced = slurp(out_dir / "dataset.csv");
    bool ok = code == cli::kExitOk && !golden.empty() && produced == golden &&
              elapsed < std::chrono::seconds{10};
    char buffer[128];
    std::snprintf(buffer, sizeof(buffer), "exit=%d bytes=%zu/%zu elapsed=%lldms", code,
                  produced.size(), golden.size(), static_cast<long long>(elapsed.count()));
    std::filesystem::remove_all(out_dir);
    report("2a golden end-to-end dataset.csv", ok, buffer);
}

// --- criterion 2b: partition invariant over random scripts ------------

void criterion_2b_partition() {
    using llmgate::ScriptRule;
    std::mt19937 rng(20240413);
    std::uniform_int_distribution<int> outcome(0, 4);
    std::uniform_int_distribution<int> article_count(1, 4);

    const std::string valid = R"({"accident_date":"2024-04-09","time":"unknown",
      "injured":"1","killed":"2","location":"Savar","road_characteristics":"highway",
      "pedestrian_involved":"no","vehicle_types":"bus"})";

    bool ok = true;
    int scripts_checked = 0;
    for (int iter = 0; iter < 1000 && ok; ++iter) {
        int n = article_count(rng);
        std::vector<harvest::Article> articles;
        std::vector<ScriptRule> rules;
        for (int i = 0; i < n; ++i) {
            std::string title = "r" + std::to_string(iter) + "n" + std::to_string(i);
            harvest::Article article;
            article.entry = {title, "https://x.example/" + title, "9 April 2024", "X"};
            article.body = "body " + title;
            articles.push_back(article);
            switch (outcome(rng)) {
                case 0:
                    rules.push_back({{"Classify", title}, ScriptRule::Kind::Respond, "Specific", 0, 0});
                    rules.push_back({{"Extract", title}, ScriptRule::Kind::Respond, valid, 0, 0});
                    break;
                case 1:
                    rules.push_back({{"Classify", title}, ScriptRule::Kind::Respond, "General", 0, 0});
                    break;
                case 2:
                    rules.push_back({{"Classify", title}, ScriptRule::Kind::Respond, "who knows", 0, 0});
                    break;
                case 3:
                    rules.push_back({{"Classify", title}, ScriptRule::Kind::Respond, "Specific", 0, 0});
                    rules.push_back({{"Extract", title}, ScriptRule::Kind::Respond, "not json", 0, 0});
                    break;
                default:
                    rules.push_back({{"Classify", title}, ScriptRule::Kind::FailTransient, "down", 0, 0});
                    break;
            }
        }
        llmgate::ScriptedProvider provider(std::move(rules));
        llmgate::LlmSettings settings;
        auto result = chains::run_pipeline(articles, provider, settings);

        std::set<std::string> seen;
        for (const auto& r : result.dataset) seen.insert(r.url);
        for (const auto& e : result.excluded) seen.insert(e.entry.link);
        if (result.dataset.size() + result.excluded.size() != articles.size() ||
            seen.size() != articles.size()) {
            ok = false;
        }
        ++scripts_checked;
    }
    report("2b partition invariant (random scripts)", ok,
           std::to_string(scripts_checked) + " scripts");
}

// --- criterion 2c: robots compliance table ----------------------------

void criterion_2c_robots_compliance() {
    struct Case {
        const char* robots;
        const char* path;
        bool allowed;
    };
    const std::string simple = "User-agent: *\nDisallow: /private/\n";
    const std::string longest =
        "User-agent: *\nDisallow: /news\nAllow: /news/accidents\n";
    const std::string empty_disallow = "User-agent: *\nDisallow:\n";
    const std::string tie = "User-agent: *\nDisallow: /page\nAllow: /page\n";
    const std::string agents =
        "User-agent: *\nDisallow: /all\nUser-agent: durghotona-bot\nDisallow: /bot-only\n";
    const std::string everything = "User-agent: *\nDisallow: /\n";
    const std::string encoded = "User-agent: *\nDisallow: /a%20b\n";
    const std::string other_agent = "User-agent: megacrawler\nDisallow: /\n";

    const std::vector<Case> cases = {
        {"", "/anything", true},
        {simple.c_str(), "/private/x", false},
        {simple.c_str(), "/private/", false},
        {simple.c_str(), "/public/x", true},
        {simple.c_str(), "/privateer", true},
        {longest.c_str(), "/news/accidents/1.html", true},
        {longest.c_str(), "/news/accidents", true},
        {longest.c_str(), "/news/politics", false},
        {longest.c_str(), "/news", false},
        {longest.c_str(), "/other", true},
        {empty_disallow.c_str(), "/anything", true},
        {empty_disallow.c_str(), "/", true},
        {tie.c_str(), "/page/1", true},
        {tie.c_str(), "/page", true},
        {agents.c_str(), "/bot-only/x", false},
        {agents.c_str(), "/all/x", true},
        {agents.c_str(), "/elsewhere", true},
        {everything.c_str(), "/", false},
        {everything.c_str(), "/x/y", false},
        {encoded.c_str(), "/a%20b/c", false},
        {encoded.c_str(), "/a b/c", false},
        {encoded.c_str(), "/ab", true},
        {other_agent.c_str(), "/x", true},
    };

    bool ok = true;
    int disallowed_issued = 0;
    for (const auto& c : cases) {
        testing::FakeClock clock;
        testing::FakeTransport transport(&clock);
        transport.serve("https://h.example/robots.txt", c.robots);
        transport.serve(std::string("https://h.example") + c.path, "ok");
        netfetch::FetchOptions options;
        options.user_agent = "durghotona-bot/0.1";
        options.per_host_delay = 0ms;
        netfetch::Fetcher fetcher(transport, clock, options);

        bool fetched = true;
        try {
            fetcher.fetch(std::string("https://h.example") + c.path);
        } catch (const netfetch::RobotsDenied&) {
            fetched = false;
        }
        if (fetched != c.allowed) ok = false;
        // the transport must never see a disallowed path
        for (const auto& request : transport.requests) {
            if (request.url.find("/robots.txt") != std::string::npos) continue;
            if (!c.allowed) ++disallowed_issued;
        }
    }
    report("2c robots compliance (" + std::to_string(cases.size()) + " cases)",
           ok && disallowed_issued == 0,
           "disallowed requests issued: " + std::to_string(disallowed_issued));
}

// --- criterion 2d: retry contracts ------------------------------------

void criterion_2d_retry_contracts() {
    bool fetch_ok = true;
    for (int failures = 0; failures <= 6; ++failures) {
        for (int max_retries = 0; max_retries <= 3; ++max_retries) {
            testing::FakeClock clock;
            testing::FakeTransport transport(&clock);
            transport.serve("https://h.example/robots.txt", "", 404);
            for (int i = 0; i < failures; ++i) transport.fail_once("https://h.example/a");
            transport.serve("https://h.example/a", "ok");
            netfetch::FetchOptions options;
            options.max_retries = max_retries;
            options.backoff_schedule.assign(static_cast<size_t>(max_retries), 1ms);
            options.per_host_delay = 0ms;
            netfetch::Fetcher fetcher(transport, clock, options);
            int attempts = 0;
            try {
                attempts = fetcher.fetch("https://h.example/a").attempts;
            } catch (const netfetch::ExhaustedRetries& e) {
                attempts = e.attempts();
            }
            if (attempts > 1 + max_retries ||
                transport.count_for("https://h.example/a") != attempts) {
                fetch_ok = false;
            }
        }
    }

    using llmgate::ScriptRule;
    const std::string valid = R"({"accident_date":"2024-04-09","time":"unknown",
      "injured":"1","killed":"2","location":"Savar","road_characteristics":"highway",
      "pedestrian_involved":"no","vehicle_types":"bus"})";
    bool chain_ok = true;
    for (int max_retries = 0; max_retries <= 3; ++max_retries) {
        for (int triage_garbage = 0; triage_garbage <= 2; ++triage_garbage) {
            for (int extract_garbage = 0; extract_garbage <= 4; ++extract_garbage) {
                std::vector<ScriptRule> rules;
                if (triage_garbage > 0) {
                    rules.push_back({{"Classify"}, ScriptRule::Kind::Respond, "eh",
                                     triage_garbage, 0});
                }
                rules.push_back({{"Classify"}, ScriptRule::Kind::Respond, "Specific", 0, 0});
                if (extract_garbage > 0) {
                    rules.push_back({{"Extract"}, ScriptRule::Kind::Respond, "prose",
                                     extract_garbage, 0});
                }
                rules.push_back({{"Extract"}, ScriptRule::Kind::Respond, valid, 0, 0});
                llmgate::ScriptedProvider provider(std::move(rules));
                llmgate::LlmSettings settings;
                settings.max_retries = max_retries;
                harvest::Article article;
                article.entry = {"t", "https://x.example/a", "9 April 2024", "X"};
                article.body = "body";
                chains::run_pipeline({article}, provider, settings);
                if (provider.call_count() > 2 + (1 + max_retries)) chain_ok = false;
            }
        }
    }

    // transient failures inside one completion stay within its own bound
    bool complete_ok = true;
    for (int failures = 0; failures <= 5; ++failures) {
        for (int max_retries = 0; max_retries <= 3; ++max_retries) {
            std::vector<ScriptRule> rules;
            if (failures > 0) {
                rules.push_back({{}, ScriptRule::Kind::FailTransient, "x", failures, 0});
            }
            rules.push_back({{}, ScriptRule::Kind::Respond, "ok", 0, 0});
            llmgate::ScriptedProvider provider(std::move(rules));
            llmgate::LlmSettings settings;
            settings.max_retries = max_retries;
            try {
                llmgate::complete(provider, settings, "s", "u");
            } catch (const llmgate::ExhaustedRetries&) {
            }
            if (provider.call_count() > 1 + max_retries) complete_ok = false;
        }
    }

    report("2d retry contracts (fetch + chains)", fetch_ok && chain_ok && complete_ok,
           std::string("fetch=") + (fetch_ok ? "ok" : "violated") +
               " per-article=" + (chain_ok ? "ok" : "violated") +
               " per-complete=" + (complete_ok ? "ok" : "violated"));
}

// --- criterion 2e: round-trip properties ------------------------------

void criterion_2e_round_trips() {
    testing::RecordGenerator gen(20240414);
    bool csv_ok = true;
    int csv_cases = 0;
    for (int iter = 0; iter < 250 && csv_ok; ++iter) {
        std::vector<records::AccidentRecord> batch;
        for (int i = 0; i < 4; ++i) batch.push_back(gen.next());
        csv_cases += 4;
        if (records::from_csv(records::to_csv(batch)) != batch) csv_ok = false;
    }

    std::mt19937 rng(20240415);
    std::uniform_int_distribution<int> step_count(1, 4);
    std::uniform_int_distribution<int> feature(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> ordinal(1, 9);
    const std::vector<std::string> tags = {"div", "a", "ul", "li", "span", "p", "*"};
    const std::vector<std::string> names = {"x", "headline", "main", "story-body", "k1"};
    std::uniform_int_distribution<size_t> tag_at(0, tags.size() - 1);
    std::uniform_int_distribution<size_t> name_at(0, names.size() - 1);

    bool selector_ok = true;
    int selector_cases = 0;
    for (int iter = 0; iter < 1000 && selector_ok; ++iter) {
        markup::Selector sel;
        int steps = step_count(rng);
        for (int s = 0; s < steps; ++s) {
            markup::SelectorStep step;
            step.tag = tags[tag_at(rng)];
            int features = feature(rng);
            for (int f = 0; f < features; ++f) {
                switch (feature(rng)) {
                    case 0: step.classes.push_back(names[name_at(rng)]); break;
                    case 1:
                        if (!step.id) step.id = names[name_at(rng)];
                        break;
                    case 2:
                        step.attr_equals.emplace_back(names[name_at(rng)],
                                                      coin(rng) ? "v 1" : "plain");
                        break;
                    default:
                        if (!step.index) step.index = ordinal(rng);
                        break;
                }
            }
            sel.steps.push_back(std::move(step));
        }
        if (coin(rng)) {
            sel.accessor = markup::Accessor::Attribute;
            sel.attr_name = names[name_at(rng)];
        }
        ++selector_cases;
        if (markup::parse_selector(markup::print_selector(sel)) != sel) selector_ok = false;
    }

    report("2e round-trips (csv + selector)", csv_ok && selector_ok,
           std::to_string(csv_cases) + " records, " + std::to_string(selector_cases) +
               " selectors");
}

// --- criterion 2f: weekday resolution against brute force -------------

int oracle_weekday(int y, int m, int d) {  // Sakamoto, 0 = Sunday
    static const int t[] = {0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4};
    if (m < 3) y -= 1;
    return (y + y / 4 - y / 100 + y / 400 + t[m - 1] + d) % 7;
}

bool oracle_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int oracle_month_days(int y, int m) {
    static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return (m == 2 && oracle_leap(y)) ? 29 : days[m - 1];
}

void criterion_2f_weekday_oracle() {
    const std::vector<std::string> names = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                            "Thursday", "Friday", "Saturday"};
    std::mt19937 rng(20240416);
    std::uniform_int_distribution<int> year(1900, 2100);
    std::uniform_int_distribution<int> month(1, 12);
    std::uniform_int_distribution<int> day(1, 31);
    std::uniform_int_distribution<int> weekday(0, 6);

    bool ok = true;
    int done = 0;
    while (done < 500 && ok) {
        records::Date publish{year(rng), month(rng), day(rng)};
        if (!publish.valid()) continue;
        ++done;
        int target = weekday(rng);

        // brute force: walk back day by day with an independent calendar
        int y = publish.year, m = publish.month, d = publish.day;
        while (oracle_weekday(y, m, d) != target) {
            if (--d == 0) {
                if (--m == 0) {
                    m = 12;
                    --y;
                }
                d = oracle_month_days(y, m);
            }
        }

        auto got = records::normalize_date(names[static_cast<size_t>(target)], publish);
        if (!got || got->year != y || got->month != m || got->day != d) ok = false;
    }
    report("2f weekday-resolution oracle", ok, std::to_string(done) + " (weekday, date) pairs");
}

// --- criterion 3: per-(model, source, field) grid structure -----------

void criterion_3_grid_structure() {
    const std::vector<std::string> models = {"gpt-3.5-turbo", "gpt-4o", "llama-3-70b-8192"};
    const std::vector<std::string> sources = {"Dhaka Tribune", "Prothom Alo", "The Daily Star"};

    evalkit::EvalReport fixture;
    std::mt19937 rng(20240417);
    std::uniform_int_distribution<int> wrongs(0, 3);
    for (const auto& model : models) {
        for (const auto& source : sources) {
            for (const auto& field : evalkit::EvalReport::field_order()) {
                fixture.add_comparison(model, source, field, true);
                fixture.add_comparison(model, source, field, true);
                for (int w = wrongs(rng); w > 0; --w) {
                    fixture.add_comparison(model, source, field, false);
                }
            }
        }
    }
    auto output = evalkit::emit_report(fixture);

    // the plot grid must contain one row per (model, source, field)
    std::set<std::string> rows;
    std::istringstream lines(output.plot_csv);
    std::string line;
    std::getline(lines, line);  // header
    bool header_ok = line == "model,source,field,correct,wrong,accuracy";
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto first = line.find(',');
        auto second = line.find(',', first + 1);
        auto third = line.find(',', second + 1);
        rows.insert(line.substr(0, third));
    }
    const size_t expected =
        models.size() * sources.size() * evalkit::EvalReport::field_order().size();
    bool ok = header_ok && rows.size() == expected;
    for (const auto& model : models) {
        for (const auto& source : sources) {
            for (const auto& field : evalkit::EvalReport::field_order()) {
                if (!rows.count(model + "," + source + "," + field)) ok = false;
            }
        }
    }
    report("3 per-(model,source,field) grid", ok,
           std::to_string(rows.size()) + "/" + std::to_string(expected) + " cells emitted");
}

}  // namespace

int main() {
    criterion_1_accuracy_tallies();
    criterion_2a_golden_run();
    criterion_2b_partition();
    criterion_2c_robots_compliance();
    criterion_2d_retry_contracts();
    criterion_2e_round_trips();
    criterion_2f_weekday_oracle();
    criterion_3_grid_structure();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
