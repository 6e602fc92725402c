#include "durghotona/evalkit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace durghotona::evalkit {

namespace {

const std::vector<std::string> kFieldOrder = {
    "accident_date", "accident_time", "killed",
    "injured",       "location",      "road_characteristics",
    "pedestrian_involved", "vehicle_types"};

std::string format_fraction(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

std::string csv_cell(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

}  // namespace

double accuracy(long correct, long wrong) {
    const long total = correct + wrong;
    if (total <= 0) throw EmptyDenominator();
    return static_cast<double>(correct) / static_cast<double>(total);
}

std::string percent_label(long correct, long wrong) {
    const long total = correct + wrong;
    if (total <= 0) throw EmptyDenominator();
    const long percent = (200 * correct + total) / (2 * total);  // half-up
    return std::to_string(percent) + "%";
}

const std::vector<std::string>& EvalReport::field_order() { return kFieldOrder; }

int EvalReport::field_rank(const std::string& field) {
    for (size_t i = 0; i < kFieldOrder.size(); ++i) {
        if (kFieldOrder[i] == field) return static_cast<int>(i);
    }
    return static_cast<int>(kFieldOrder.size());  // unknown fields sort last
}

std::string EvalReport::field_name(int rank) {
    if (rank >= 0 && rank < static_cast<int>(kFieldOrder.size())) {
        return kFieldOrder[static_cast<size_t>(rank)];
    }
    return "other";
}

void EvalReport::add_comparison(const std::string& model, const std::string& source,
                                const std::string& field, bool correct) {
    Tally& cell = cells_[{model, source, field_rank(field)}];
    if (correct) {
        ++cell.correct;
    } else {
        ++cell.wrong;
    }
}

void EvalReport::add_scored_article(const std::string& model, const std::string& source) {
    ++article_counts_[{model, source}];
}

void EvalReport::add_skipped_record(const std::string& model) { ++skipped_[model]; }

void EvalReport::add_coverage_gap(const std::string& model, const std::string& url) {
    gaps_[model].push_back(url);
}

void EvalReport::merge(const EvalReport& other) {
    for (const auto& [key, tally] : other.cells_) {
        Tally& cell = cells_[key];
        cell.correct += tally.correct;
        cell.wrong += tally.wrong;
    }
    for (const auto& [key, count] : other.article_counts_) article_counts_[key] += count;
    for (const auto& [model, count] : other.skipped_) skipped_[model] += count;
    for (const auto& [model, urls] : other.gaps_) {
        auto& mine = gaps_[model];
        mine.insert(mine.end(), urls.begin(), urls.end());
    }
}

Tally EvalReport::model_total(const std::string& model) const {
    Tally total;
    for (const auto& [key, tally] : cells_) {
        if (std::get<0>(key) != model) continue;
        total.correct += tally.correct;
        total.wrong += tally.wrong;
    }
    return total;
}

std::vector<std::string> EvalReport::models() const {
    std::set<std::string> names;
    for (const auto& [key, tally] : cells_) {
        (void)tally;
        names.insert(std::get<0>(key));
    }
    for (const auto& [key, count] : article_counts_) {
        (void)count;
        names.insert(key.first);
    }
    for (const auto& [model, count] : skipped_) {
        (void)count;
        names.insert(model);
    }
    for (const auto& [model, urls] : gaps_) {
        (void)urls;
        names.insert(model);
    }
    return {names.begin(), names.end()};
}

long EvalReport::articles_scored(const std::string& model, const std::string& source) const {
    auto it = article_counts_.find({model, source});
    return it == article_counts_.end() ? 0 : it->second;
}

long EvalReport::skipped_records(const std::string& model) const {
    auto it = skipped_.find(model);
    return it == skipped_.end() ? 0 : it->second;
}

const std::vector<std::string>& EvalReport::coverage_gaps(const std::string& model) const {
    static const std::vector<std::string> kEmpty;
    auto it = gaps_.find(model);
    return it == gaps_.end() ? kEmpty : it->second;
}

ReportOutput emit_report(const EvalReport& report) {
    ReportOutput out;
    out.plot_csv = "model,source,field,correct,wrong,accuracy\n";

    for (const auto& model : report.models()) {
        const Tally total = report.model_total(model);
        out.table += "== model: " + model + " ==\n";
        if (total.scored() > 0) {
            out.table += "overall: " + std::to_string(total.correct) + " correct / " +
                         std::to_string(total.wrong) + " wrong / " +
                         std::to_string(total.scored()) + " scored -> " +
                         format_fraction(accuracy(total.correct, total.wrong)) + " (" +
                         percent_label(total.correct, total.wrong) + ")\n";
        } else {
            out.table += "overall: nothing scored\n";
        }
        if (long skipped = report.skipped_records(model); skipped > 0) {
            out.table += "records without gold annotation: " + std::to_string(skipped) + "\n";
        }
        const auto& gaps = report.coverage_gaps(model);
        if (!gaps.empty()) {
            out.table += "gold articles missing from dataset: " + std::to_string(gaps.size());
            out.table += " (coverage gaps, not scored)\n";
            for (const auto& url : gaps) out.table += "  - " + url + "\n";
        }

        // Group this model's cells by source, in key order.
        std::string current_source;
        bool source_open = false;
        for (const auto& [key, tally] : report.cells()) {
            if (std::get<0>(key) != model) continue;
            const std::string& source = std::get<1>(key);
            const std::string field = EvalReport::field_name(std::get<2>(key));
            if (!source_open || source != current_source) {
                current_source = source;
                source_open = true;
                out.table += "source: " + source +
                             " (articles scored: " + std::to_string(report.articles_scored(
                                                         model, source)) +
                             ")\n";
                out.table += "  field                   correct  wrong  accuracy\n";
            }
            char line[128];
            std::snprintf(line, sizeof(line), "  %-22s  %7ld  %5ld  %s\n", field.c_str(),
                          tally.correct, tally.wrong,
                          tally.scored() > 0
                              ? format_fraction(accuracy(tally.correct, tally.wrong)).c_str()
                              : "-");
            out.table += line;

            out.plot_csv += csv_cell(model) + "," + csv_cell(source) + "," + field + "," +
                            std::to_string(tally.correct) + "," + std::to_string(tally.wrong) +
                            "," +
                            (tally.scored() > 0
                                 ? format_fraction(accuracy(tally.correct, tally.wrong))
                                 : "") +
                            "\n";
        }
        out.table += "\n";
    }
    return out;
}

}  // namespace durghotona::evalkit
