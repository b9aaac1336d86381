#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace urbanvkt {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name, or -1.
    int column(std::string_view name) const;
    /// Column index by name; throws DataError naming the column if absent.
    int require_column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);
std::string csv_to_string(const CsvTable& table);

/// Fixed %.12g formatting so artifacts are byte-stable across runs.
std::string format_double(double v);

double parse_double_field(const std::string& field, std::string_view column);
long long parse_int_field(const std::string& field, std::string_view column);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace urbanvkt
