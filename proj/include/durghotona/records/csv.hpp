#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "durghotona/records/record.hpp"

namespace durghotona::records {

class CsvSchemaMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed dataset header, in order.
extern const std::vector<std::string>& csv_header();

/// RFC 4180 encoding, UTF-8, CRLF line endings. Nulls are empty cells;
/// the vehicle list is joined with "|".
std::string to_csv(const std::vector<AccidentRecord>& records);

/// Inverse of to_csv. Throws CsvSchemaMismatch on a wrong header, a wrong
/// cell count, or a cell that violates the record invariants.
std::vector<AccidentRecord> from_csv(std::string_view bytes);

}  // namespace durghotona::records
