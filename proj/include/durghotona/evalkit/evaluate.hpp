#pragma once

#include <string>
#include <vector>

#include "durghotona/evalkit/gold.hpp"
#include "durghotona/evalkit/report.hpp"
#include "durghotona/records/record.hpp"

namespace durghotona::evalkit {

enum class Match { Correct, Wrong };

/// Free-text canonicalization used when comparing location and
/// road_characteristics: lowercase, punctuation (including common
/// Unicode dashes and quotes) replaced by spaces, whitespace collapsed.
std::string fold_free_text(std::string_view text);

/// Compares one predicted field against gold. Typed fields use exact
/// equality with null matching only null; vehicle_types compares as a
/// set; free-text fields compare after fold_free_text.
Match match_field(const std::string& field, const records::AccidentRecord& predicted,
                  const GoldFields& gold);

/// Scores every record whose url has a gold annotation across all 8
/// fields. Records without gold are counted as skipped; gold entries
/// absent from the dataset become coverage gaps, not wrong answers.
EvalReport evaluate(const std::vector<records::AccidentRecord>& dataset, const GoldSet& gold);

}  // namespace durghotona::evalkit
