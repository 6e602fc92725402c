#include "durghotona/records/csv.hpp"

#include <cctype>

namespace durghotona::records {

namespace {

const std::vector<std::string> kHeader = {
    "source",        "url",     "title",
    "publish_date",  "accident_date", "accident_time",
    "killed",        "injured", "location",
    "road_characteristics", "pedestrian_involved", "vehicle_types",
    "model"};

bool needs_quoting(std::string_view cell) {
    return cell.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_cell(std::string& out, std::string_view cell) {
    if (!needs_quoting(cell)) {
        out.append(cell);
        return;
    }
    out.push_back('"');
    for (char c : cell) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
}

void append_row(std::string& out, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out.push_back(',');
        append_cell(out, cells[i]);
    }
    out.append("\r\n");
}

std::vector<std::string> record_cells(const AccidentRecord& r) {
    std::string vehicles;
    for (size_t i = 0; i < r.vehicle_types.size(); ++i) {
        if (i > 0) vehicles.push_back('|');
        vehicles += r.vehicle_types[i];
    }
    return {
        r.source,
        r.url,
        r.title,
        r.publish_date ? r.publish_date->to_iso() : "",
        r.accident_date ? r.accident_date->to_iso() : "",
        r.accident_time.value_or(""),
        r.killed ? std::to_string(*r.killed) : "",
        r.injured ? std::to_string(*r.injured) : "",
        r.location.value_or(""),
        r.road_characteristics.value_or(""),
        r.pedestrian_involved ? (*r.pedestrian_involved ? "true" : "false") : "",
        vehicles,
        r.model,
    };
}

// RFC 4180 reader tolerating both CRLF and LF row endings.
std::vector<std::vector<std::string>> parse_rows(std::string_view bytes) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool in_quotes = false;
    bool cell_started = false;
    size_t i = 0;
    auto end_cell = [&] {
        row.push_back(std::move(cell));
        cell.clear();
        cell_started = false;
    };
    auto end_row = [&] {
        end_cell();
        rows.push_back(std::move(row));
        row.clear();
    };
    while (i < bytes.size()) {
        char c = bytes[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
                    cell.push_back('"');
                    i += 2;
                    continue;
                }
                in_quotes = false;
                ++i;
                continue;
            }
            cell.push_back(c);
            ++i;
            continue;
        }
        switch (c) {
            case '"':
                if (!cell_started && cell.empty()) {
                    in_quotes = true;
                    cell_started = true;
                } else {
                    cell.push_back(c);
                }
                ++i;
                break;
            case ',':
                end_cell();
                ++i;
                break;
            case '\r':
                if (i + 1 < bytes.size() && bytes[i + 1] == '\n') {
                    end_row();
                    i += 2;
                } else {
                    cell.push_back(c);
                    ++i;
                }
                break;
            case '\n':
                end_row();
                ++i;
                break;
            default:
                cell.push_back(c);
                cell_started = true;
                ++i;
                break;
        }
    }
    if (in_quotes) throw CsvSchemaMismatch("unterminated quoted cell");
    if (cell_started || !cell.empty() || !row.empty()) end_row();
    return rows;
}

std::optional<Date> cell_date(const std::string& cell, size_t row, const std::string& name) {
    if (cell.empty()) return std::nullopt;
    auto d = Date::parse_iso(cell);
    if (!d) {
        throw CsvSchemaMismatch("row " + std::to_string(row) + ": bad " + name + " '" + cell + "'");
    }
    return d;
}

std::optional<long> cell_count(const std::string& cell, size_t row, const std::string& name) {
    if (cell.empty()) return std::nullopt;
    long value = 0;
    for (char c : cell) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw CsvSchemaMismatch("row " + std::to_string(row) + ": bad " + name + " '" + cell +
                                    "'");
        }
        value = value * 10 + (c - '0');
        if (value > 1000000000L) {
            throw CsvSchemaMismatch("row " + std::to_string(row) + ": " + name + " out of range");
        }
    }
    return value;
}

}  // namespace

const std::vector<std::string>& csv_header() { return kHeader; }

std::string to_csv(const std::vector<AccidentRecord>& records) {
    std::string out;
    append_row(out, kHeader);
    for (const auto& r : records) {
        append_row(out, record_cells(r));
    }
    return out;
}

std::vector<AccidentRecord> from_csv(std::string_view bytes) {
    auto rows = parse_rows(bytes);
    if (rows.empty()) throw CsvSchemaMismatch("missing header row");
    if (rows[0] != kHeader) throw CsvSchemaMismatch("header does not match dataset schema");

    std::vector<AccidentRecord> records;
    for (size_t n = 1; n < rows.size(); ++n) {
        const auto& row = rows[n];
        if (row.size() != kHeader.size()) {
            throw CsvSchemaMismatch("row " + std::to_string(n) + ": expected " +
                                    std::to_string(kHeader.size()) + " cells, got " +
                                    std::to_string(row.size()));
        }
        AccidentRecord r;
        r.source = row[0];
        r.url = row[1];
        r.title = row[2];
        r.publish_date = cell_date(row[3], n, "publish_date");
        r.accident_date = cell_date(row[4], n, "accident_date");
        if (!row[5].empty()) r.accident_time = row[5];
        r.killed = cell_count(row[6], n, "killed");
        r.injured = cell_count(row[7], n, "injured");
        if (!row[8].empty()) r.location = row[8];
        if (!row[9].empty()) r.road_characteristics = row[9];
        if (!row[10].empty()) {
            if (row[10] == "true") {
                r.pedestrian_involved = true;
            } else if (row[10] == "false") {
                r.pedestrian_involved = false;
            } else {
                throw CsvSchemaMismatch("row " + std::to_string(n) + ": bad pedestrian_involved '" +
                                        row[10] + "'");
            }
        }
        if (!row[11].empty()) {
            std::string token;
            for (char c : row[11]) {
                if (c == '|') {
                    r.vehicle_types.push_back(token);
                    token.clear();
                } else {
                    token.push_back(c);
                }
            }
            r.vehicle_types.push_back(token);
        }
        r.model = row[12];
        try {
            r.validate();
        } catch (const std::invalid_argument& e) {
            throw CsvSchemaMismatch("row " + std::to_string(n) + ": " + e.what());
        }
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace durghotona::records
