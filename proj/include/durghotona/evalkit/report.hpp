#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace durghotona::evalkit {

class EmptyDenominator : public std::runtime_error {
public:
    EmptyDenominator() : std::runtime_error("accuracy undefined: zero scored comparisons") {}
};

/// correct / (correct + wrong). Throws EmptyDenominator when nothing was
/// scored.
double accuracy(long correct, long wrong);

/// Whole-percent label with half-up rounding, e.g. "91%". Computed in
/// integer arithmetic so exact .5 boundaries round up.
std::string percent_label(long correct, long wrong);

struct Tally {
    long correct = 0;
    long wrong = 0;

    long scored() const { return correct + wrong; }
    bool operator==(const Tally&) const = default;
};

/// Per-(model, source, field) tallies plus bookkeeping the report needs:
/// scored-article counts, records without gold, and gold coverage gaps.
/// Totals are always derived from the cells, never configured.
class EvalReport {
public:
    void add_comparison(const std::string& model, const std::string& source,
                        const std::string& field, bool correct);
    void add_scored_article(const std::string& model, const std::string& source);
    void add_skipped_record(const std::string& model);
    void add_coverage_gap(const std::string& model, const std::string& url);

    void merge(const EvalReport& other);

    /// Cells in deterministic order: model asc, source asc, field in
    /// schema order.
    const std::map<std::tuple<std::string, std::string, int>, Tally>& cells() const {
        return cells_;
    }
    static const std::vector<std::string>& field_order();
    static std::string field_name(int rank);
    static int field_rank(const std::string& field);

    Tally model_total(const std::string& model) const;
    std::vector<std::string> models() const;
    long articles_scored(const std::string& model, const std::string& source) const;
    long skipped_records(const std::string& model) const;
    const std::vector<std::string>& coverage_gaps(const std::string& model) const;

private:
    std::map<std::tuple<std::string, std::string, int>, Tally> cells_;
    std::map<std::pair<std::string, std::string>, long> article_counts_;
    std::map<std::string, long> skipped_;
    std::map<std::string, std::vector<std::string>> gaps_;
};

struct ReportOutput {
    std::string table;     // human-readable, aligned
    std::string plot_csv;  // model,source,field,correct,wrong,accuracy
};

/// Renders the aligned text table and the machine-readable grid used for
/// external plotting. Deterministic ordering throughout.
ReportOutput emit_report(const EvalReport& report);

}  // namespace durghotona::evalkit
