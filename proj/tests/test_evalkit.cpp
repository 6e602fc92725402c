#include <doctest.h>

#include <random>

#include "durghotona/evalkit/evaluate.hpp"
#include "durghotona/evalkit/gold.hpp"
#include "durghotona/evalkit/report.hpp"

using namespace durghotona;
using evalkit::EvalReport;
using evalkit::Match;
using records::Date;

namespace {

const char* kTwoEntryGold = R"js({
  "entries": [
    {
      "url": "https://a.example/1",
      "fields": {
        "accident_date": "2024-04-08", "accident_time": "09:00",
        "killed": 2, "injured": 3,
        "location": "Savar, Dhaka", "road_characteristics": "highway",
        "pedestrian_involved": false, "vehicle_types": ["bus", "motorcycle"]
      }
    },
    {
      "url": "https://a.example/2",
      "fields": {
        "accident_date": null, "accident_time": null,
        "killed": 1, "injured": 0,
        "location": "Gazipur", "road_characteristics": null,
        "pedestrian_involved": true, "vehicle_types": ["truck"]
      }
    }
  ]
})js";

records::AccidentRecord matching_record_1(const std::string& model = "m1") {
    records::AccidentRecord r;
    r.source = "Alpha Times";
    r.url = "https://a.example/1";
    r.title = "t1";
    r.accident_date = Date{2024, 4, 8};
    r.accident_time = "09:00";
    r.killed = 2;
    r.injured = 3;
    r.location = "Savar, Dhaka";
    r.road_characteristics = "highway";
    r.pedestrian_involved = false;
    r.vehicle_types = {"bus", "motorcycle"};
    r.model = model;
    return r;
}

records::AccidentRecord matching_record_2(const std::string& model = "m1") {
    records::AccidentRecord r;
    r.source = "Alpha Times";
    r.url = "https://a.example/2";
    r.title = "t2";
    r.killed = 1;
    r.injured = 0;
    r.location = "Gazipur";
    r.pedestrian_involved = true;
    r.vehicle_types = {"truck"};
    r.model = model;
    return r;
}

}  // namespace

TEST_CASE("load_gold: valid two-entry file") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    CHECK(gold.size() == 2);
    const auto& fields = gold.entries.at("https://a.example/1").fields;
    CHECK(fields.killed == 2);
    CHECK(fields.accident_date == Date{2024, 4, 8});
    CHECK(fields.vehicle_types == std::vector<std::string>{"bus", "motorcycle"});
}

TEST_CASE("load_gold: duplicate url rejected") {
    const char* dup = R"js({
      "entries": [
        {"url": "https://a.example/1", "fields": {"accident_date": null, "accident_time": null,
          "killed": null, "injured": null, "location": null, "road_characteristics": null,
          "pedestrian_involved": null, "vehicle_types": []}},
        {"url": "https://a.example/1", "fields": {"accident_date": null, "accident_time": null,
          "killed": null, "injured": null, "location": null, "road_characteristics": null,
          "pedestrian_involved": null, "vehicle_types": []}}
      ]
    })js";
    CHECK_THROWS_AS(evalkit::load_gold(dup), evalkit::GoldInvalid);
}

TEST_CASE("load_gold: negative count and other invalid fields rejected") {
    auto gold_with = [](const std::string& killed_value) {
        return std::string(R"js({"entries": [{"url": "https://a.example/1", "fields": {
          "accident_date": null, "accident_time": null, "killed": )js") +
               killed_value +
               R"js(, "injured": null, "location": null, "road_characteristics": null,
          "pedestrian_involved": null, "vehicle_types": []}}]})js";
    };
    CHECK_THROWS_AS(evalkit::load_gold(gold_with("-1")), evalkit::GoldInvalid);
    CHECK_NOTHROW(evalkit::load_gold(gold_with("0")));
    CHECK_THROWS_AS(evalkit::load_gold(gold_with("\"two\"")), evalkit::GoldInvalid);
    CHECK_THROWS_AS(evalkit::load_gold("{}"), evalkit::GoldInvalid);
    CHECK_THROWS_AS(evalkit::load_gold("not json"), evalkit::GoldInvalid);
}

TEST_CASE("match_field: typed equality, null matches only null") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto r = matching_record_1();
    const auto& g1 = gold.entries.at("https://a.example/1").fields;
    CHECK(evalkit::match_field("killed", r, g1) == Match::Correct);
    r.killed = 3;
    CHECK(evalkit::match_field("killed", r, g1) == Match::Wrong);
    r.killed = std::nullopt;
    CHECK(evalkit::match_field("killed", r, g1) == Match::Wrong);

    const auto& g2 = gold.entries.at("https://a.example/2").fields;
    auto r2 = matching_record_2();
    CHECK(evalkit::match_field("accident_date", r2, g2) == Match::Correct);  // null vs null
    r2.accident_date = Date{2024, 4, 8};
    CHECK(evalkit::match_field("accident_date", r2, g2) == Match::Wrong);
}

TEST_CASE("match_field: vehicle sets ignore order") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto r = matching_record_1();
    r.vehicle_types = {"motorcycle", "bus"};
    CHECK(evalkit::match_field("vehicle_types", r,
                               gold.entries.at("https://a.example/1").fields) == Match::Correct);
    r.vehicle_types = {"motorcycle"};
    CHECK(evalkit::match_field("vehicle_types", r,
                               gold.entries.at("https://a.example/1").fields) == Match::Wrong);
}

TEST_CASE("match_field: free text folds case, punctuation and unicode dashes") {
    CHECK(evalkit::fold_free_text("Dhaka\xE2\x80\x93" "Chattogram Highway") ==
          "dhaka chattogram highway");
    CHECK(evalkit::fold_free_text("  Savar,   Dhaka! ") == "savar dhaka");
    CHECK(evalkit::fold_free_text("N2 (near Sylhet)") == "n2 near sylhet");

    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto r = matching_record_1();
    r.location = "savar dhaka";
    CHECK(evalkit::match_field("location", r, gold.entries.at("https://a.example/1").fields) ==
          Match::Correct);
    r.location = "Dhaka";
    CHECK(evalkit::match_field("location", r, gold.entries.at("https://a.example/1").fields) ==
          Match::Wrong);
}

TEST_CASE("evaluate: exact dataset scores 16 correct") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto report = evalkit::evaluate({matching_record_1(), matching_record_2()}, gold);
    auto total = report.model_total("m1");
    CHECK(total.correct == 16);
    CHECK(total.wrong == 0);
    CHECK(report.coverage_gaps("m1").empty());
}

TEST_CASE("evaluate: one flipped field scores 15/1") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto flipped = matching_record_2();
    flipped.injured = 9;
    auto report = evalkit::evaluate({matching_record_1(), flipped}, gold);
    auto total = report.model_total("m1");
    CHECK(total.correct == 15);
    CHECK(total.wrong == 1);
}

TEST_CASE("evaluate: empty dataset reports only coverage gaps") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto report = evalkit::evaluate({}, gold);
    CHECK(report.models().empty());
    CHECK(report.cells().empty());
}

TEST_CASE("evaluate: records without gold are skipped; gold without records gap") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto stranger = matching_record_1();
    stranger.url = "https://elsewhere.example/x";
    auto report = evalkit::evaluate({matching_record_1(), stranger}, gold);
    CHECK(report.skipped_records("m1") == 1);
    CHECK(report.coverage_gaps("m1") == std::vector<std::string>{"https://a.example/2"});
    CHECK(report.model_total("m1").scored() == 8);
}

TEST_CASE("evaluate: permutation-invariant in dataset row order") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    auto a = matching_record_1();
    auto b = matching_record_2();
    b.location = "Wrong Place";
    auto forward = evalkit::evaluate({a, b}, gold);
    auto backward = evalkit::evaluate({b, a}, gold);
    CHECK(forward.cells() == backward.cells());
}

TEST_CASE("evaluate: conservation against brute-force rescoring") {
    auto gold = evalkit::load_gold(kTwoEntryGold);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> flip(0, 3);
    std::vector<records::AccidentRecord> dataset;
    for (int i = 0; i < 20; ++i) {
        auto r = (i % 2 == 0) ? matching_record_1() : matching_record_2();
        if (flip(rng) == 0) r.killed = 7;
        if (flip(rng) == 0) r.location = "Probably elsewhere";
        if (flip(rng) == 0) r.vehicle_types = {"train"};
        dataset.push_back(std::move(r));
    }
    auto report = evalkit::evaluate(dataset, gold);

    long scored = 0;
    for (const auto& [key, tally] : report.cells()) scored += tally.scored();
    // brute force: every record with gold scores exactly 8 comparisons
    long expected = 0;
    for (const auto& r : dataset) {
        if (gold.entries.count(r.url)) expected += 8;
    }
    CHECK(scored == expected);

    // flipping any Wrong to Correct can only raise accuracy: monotonicity
    auto total = report.model_total("m1");
    if (total.wrong > 0) {
        double before = evalkit::accuracy(total.correct, total.wrong);
        double after = evalkit::accuracy(total.correct + 1, total.wrong - 1);
        CHECK(after >= before);
    }
}

TEST_CASE("accuracy: reference tallies and rounding") {
    CHECK(evalkit::accuracy(1450, 177) == doctest::Approx(0.8912).epsilon(1e-4));
    CHECK(evalkit::accuracy(1224, 384) == doctest::Approx(0.7612).epsilon(1e-4));
    CHECK(evalkit::accuracy(1499, 145) == doctest::Approx(0.9118).epsilon(1e-4));
    CHECK(evalkit::percent_label(1450, 177) == "89%");
    CHECK(evalkit::percent_label(1224, 384) == "76%");
    CHECK(evalkit::percent_label(1499, 145) == "91%");
    CHECK_THROWS_AS(evalkit::accuracy(0, 0), evalkit::EmptyDenominator);
    CHECK_THROWS_AS(evalkit::percent_label(0, 0), evalkit::EmptyDenominator);
    // half-up at an exact .5 boundary: 1/8 = 12.5%
    CHECK(evalkit::percent_label(1, 7) == "13%");
}

TEST_CASE("accuracy: in (0,1] plus zero and monotone") {
    CHECK(evalkit::accuracy(0, 5) == 0.0);
    CHECK(evalkit::accuracy(5, 0) == 1.0);
    for (long c = 0; c <= 20; ++c) {
        double lower = evalkit::accuracy(c, 21 - c);
        double higher = evalkit::accuracy(c + 1, 20 - c);
        CHECK(higher > lower);
    }
}

TEST_CASE("emit_report: three-model totals show the reference percentages") {
    EvalReport report;
    auto seed = [&report](const std::string& model, long correct, long wrong) {
        for (long i = 0; i < correct; ++i) {
            report.add_comparison(model, "combined", "killed", true);
        }
        for (long i = 0; i < wrong; ++i) {
            report.add_comparison(model, "combined", "killed", false);
        }
    };
    seed("Llama 3", 1450, 177);
    seed("GPT-3.5", 1224, 384);
    seed("GPT-4", 1499, 145);
    auto output = evalkit::emit_report(report);
    CHECK(output.table.find("(89%)") != std::string::npos);
    CHECK(output.table.find("(76%)") != std::string::npos);
    CHECK(output.table.find("(91%)") != std::string::npos);
    // per-model denominators are computed from cells, never assumed equal
    CHECK(report.model_total("Llama 3").scored() == 1627);
    CHECK(report.model_total("GPT-3.5").scored() == 1608);
    CHECK(report.model_total("GPT-4").scored() == 1644);
}

TEST_CASE("emit_report: empty report emits header-only CSV") {
    auto output = evalkit::emit_report(EvalReport{});
    CHECK(output.plot_csv == "model,source,field,correct,wrong,accuracy\n");
}

TEST_CASE("emit_report: single cell emits one CSV row") {
    EvalReport report;
    report.add_comparison("m", "s", "killed", true);
    report.add_comparison("m", "s", "killed", false);
    auto output = evalkit::emit_report(report);
    CHECK(output.plot_csv ==
          "model,source,field,correct,wrong,accuracy\nm,s,killed,1,1,0.500000\n");
}

TEST_CASE("emit_report: deterministic ordering model asc, source asc, field schema order") {
    EvalReport report;
    report.add_comparison("m2", "s1", "killed", true);
    report.add_comparison("m1", "s2", "accident_date", true);
    report.add_comparison("m1", "s1", "vehicle_types", true);
    report.add_comparison("m1", "s1", "accident_time", true);
    auto output = evalkit::emit_report(report);
    auto pos = [&output](const std::string& needle) { return output.plot_csv.find(needle); };
    CHECK(pos("m1,s1,accident_time") < pos("m1,s1,vehicle_types"));
    CHECK(pos("m1,s1,vehicle_types") < pos("m1,s2,accident_date"));
    CHECK(pos("m1,s2,accident_date") < pos("m2,s1,killed"));
}
