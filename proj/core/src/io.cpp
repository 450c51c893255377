#include "fracspec/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace fracspec {

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw NumericError("failed to format a double");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError("not a number: `" + std::string(text) + "`");
    return v;
}

namespace {

// Output files appear atomically: write to a sibling temp file, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInputError("cannot open for writing: " + tmp.string());
        out << text;
        if (!out) throw InvalidInputError("failed writing: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path,
                                                const std::string& expected_header,
                                                std::size_t columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw ParseError(path.string() + ": expected header `" + expected_header + "`, got `" +
                         line + "`");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != columns)
            throw ParseError(path.string() + ": expected " + std::to_string(columns) +
                             " columns, got " + std::to_string(fields.size()));
        rows.push_back(std::move(fields));
    }
    return rows;
}

GridSpec grid_from_points(const std::vector<double>& x, const std::filesystem::path& path) {
    const int n = static_cast<int>(x.size());
    if (n < 8 || n % 2 != 0)
        throw ParseError(path.string() + ": need an even number (>= 8) of grid rows");
    const double half_width = -x.front();
    if (!(half_width > 0.0)) throw ParseError(path.string() + ": first node must be -L with L > 0");
    GridSpec grid(half_width, n);
    for (int j = 0; j < n; ++j) {
        const double expected = grid.point(j);
        if (std::abs(x[static_cast<std::size_t>(j)] - expected) >
            1e-9 * std::max(1.0, half_width))
            throw ParseError(path.string() + ": node " + std::to_string(j) +
                             " is not on the uniform grid");
    }
    return grid;
}

}  // namespace

void write_csv(const SampledFunction& u, const std::filesystem::path& path) {
    std::string text = "x,value\n";
    for (int j = 0; j < u.size(); ++j) {
        text += format_double(u.grid().point(j));
        text += ',';
        text += format_double(u[j]);
        text += '\n';
    }
    write_text_atomic(path, text);
}

SampledFunction read_sampled_csv(const std::filesystem::path& path) {
    const auto rows = read_rows(path, "x,value", 2);
    std::vector<double> x, v;
    x.reserve(rows.size());
    v.reserve(rows.size());
    for (const auto& row : rows) {
        x.push_back(parse_double(row[0]));
        v.push_back(parse_double(row[1]));
    }
    return SampledFunction(grid_from_points(x, path), std::move(v));
}

void write_csv(const Spectrum& spectrum, const std::filesystem::path& path) {
    std::string text = "xi,re,im\n";
    for (std::size_t i = 0; i < spectrum.coeffs().size(); ++i) {
        text += format_double(spectrum.frequency_at(i));
        text += ',';
        text += format_double(spectrum.coeffs()[i].real());
        text += ',';
        text += format_double(spectrum.coeffs()[i].imag());
        text += '\n';
    }
    write_text_atomic(path, text);
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
    const auto rows = read_rows(path, "xi,re,im", 3);
    const int n = static_cast<int>(rows.size());
    if (n < 8 || n % 2 != 0)
        throw ParseError(path.string() + ": need an even number (>= 8) of frequency rows");
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(rows.size());
    std::vector<double> xi;
    xi.reserve(rows.size());
    for (const auto& row : rows) {
        xi.push_back(parse_double(row[0]));
        coeffs.emplace_back(parse_double(row[1]), parse_double(row[2]));
    }
    // xi_k = k/(2L) starting at k = -N/2, so L = N / (4 |xi_0|).
    if (!(xi.front() < 0.0)) throw ParseError(path.string() + ": first frequency must be negative");
    const double half_width = n / (4.0 * std::abs(xi.front()));
    GridSpec grid(half_width, n);
    for (int i = 0; i < n; ++i) {
        const double expected = grid.frequency(i - n / 2);
        if (std::abs(xi[static_cast<std::size_t>(i)] - expected) >
            1e-9 * std::max(1.0, std::abs(expected)))
            throw ParseError(path.string() + ": frequency row " + std::to_string(i) +
                             " is not on the uniform bin grid");
    }
    return Spectrum(grid, std::move(coeffs));
}

}  // namespace fracspec
