#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "durghotona/records/record.hpp"

namespace durghotona::records {

/// One JSON object per line, same field names as the CSV header; nulls are
/// JSON null and vehicle_types is a JSON array.
std::string to_jsonl(const std::vector<AccidentRecord>& records);

std::vector<AccidentRecord> from_jsonl(std::string_view bytes);

}  // namespace durghotona::records
