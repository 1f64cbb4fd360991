// table.hpp: numeric tables and their CSV / SVG renderings.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace jband {

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    // Throws DomainError unless row.size() == header().size().
    void add_row(std::vector<double> row);

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
    std::size_t columns() const noexcept { return header_.size(); }

    // Header row plus one line per row; ',' separator, '.' decimal, LF endings,
    // 12 significant digits.
    std::string to_csv() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

// %.12g
std::string format_number(double v);

// Single line chart: column 0 is the x axis, every other column a polyline.
// Needs >= 2 columns and >= 1 row. Output depends only on the table.
std::string render_svg(const CsvTable& table);

// Writes to a sibling temporary and renames it into place; throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

void write_csv(const CsvTable& table, const std::filesystem::path& path);
void emit_svg(const CsvTable& table, const std::filesystem::path& path);

}  // namespace jband
