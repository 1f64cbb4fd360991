#include "jband/table.hpp"

#include "jband/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace jband {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) {
        throw DomainError("table needs at least one column");
    }
}

void CsvTable::add_row(std::vector<double> row) {
    if (row.size() != header_.size()) {
        throw DomainError("row has " + std::to_string(row.size()) + " entries, header has " +
                          std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

std::string format_number(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", v);
    return buf.data();
}

std::string CsvTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        out += (i ? "," : "") + header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Range {
    double lo{std::numeric_limits<double>::infinity()};
    double hi{-std::numeric_limits<double>::infinity()};

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void settle() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        } else if (lo == hi) {
            const double pad = lo == 0.0 ? 1.0 : 0.5 * std::abs(lo);
            lo -= pad;
            hi += pad;
        }
    }
};

// 1, 2 or 5 times a power of ten, roughly span / 5
double tick_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

std::string fixed2(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string tick_label(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf.data();
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const CsvTable& table) {
    if (table.columns() < 2) {
        throw DomainError("SVG plot needs at least two columns");
    }
    if (table.rows().empty()) {
        throw DomainError("SVG plot needs at least one row");
    }
    Range xr;
    Range yr;
    for (const auto& row : table.rows()) {
        xr.add(row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) yr.add(row[c]);
    }
    xr.settle();
    yr.settle();

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<g stroke=\"black\" fill=\"none\">\n";
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\"/>\n</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    const double xs = tick_step(xr.hi - xr.lo);
    for (auto k = static_cast<long>(std::ceil(xr.lo / xs)); k * xs <= xr.hi + 1e-9 * xs; ++k) {
        const double v = static_cast<double>(k) * xs;
        const std::string x = fixed2(px(v));
        svg << "<line x1=\"" << x << "\" y1=\"" << fixed2(kTop + plot_h) << "\" x2=\"" << x << "\" y2=\""
            << fixed2(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << fixed2(kTop + plot_h + 20) << "\" text-anchor=\"middle\">"
            << tick_label(v) << "</text>\n";
    }
    const double ys = tick_step(yr.hi - yr.lo);
    for (auto k = static_cast<long>(std::ceil(yr.lo / ys)); k * ys <= yr.hi + 1e-9 * ys; ++k) {
        const double v = static_cast<double>(k) * ys;
        const std::string y = fixed2(py(v));
        svg << "<line x1=\"" << fixed2(kLeft - 5) << "\" y1=\"" << y << "\" x2=\"" << fixed2(kLeft) << "\" y2=\""
            << y << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(py(v) + 4) << "\" text-anchor=\"end\">"
            << tick_label(v) << "</text>\n";
    }
    svg << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 15)
        << "\" text-anchor=\"middle\">" << xml_escape(table.header()[0]) << "</text>\n";
    svg << "</g>\n";

    for (std::size_t c = 1; c < table.columns(); ++c) {
        const char* color = kPalette[(c - 1) % kPalette.size()];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& row : table.rows()) {
            if (!std::isfinite(row[0]) || !std::isfinite(row[c])) continue;
            svg << (first ? "" : " ") << fixed2(px(row[0])) << ',' << fixed2(py(row[c]));
            first = false;
        }
        svg << "\"/>\n";
        const double ly = kTop + 10.0 + 18.0 * static_cast<double>(c - 1);
        svg << "<line x1=\"" << fixed2(kWidth - kRight + 10) << "\" y1=\"" << fixed2(ly) << "\" x2=\""
            << fixed2(kWidth - kRight + 30) << "\" y2=\"" << fixed2(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fixed2(kWidth - kRight + 35) << "\" y=\"" << fixed2(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(table.header()[c]) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) { write_file_atomic(path, table.to_csv()); }

void emit_svg(const CsvTable& table, const std::filesystem::path& path) { write_file_atomic(path, render_svg(table)); }

}  // namespace jband
