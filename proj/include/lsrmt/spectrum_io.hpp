#pragma once

/** @file
 * Eigenvalue CSV: header `index,eigenvalue`, one row per eigenvalue, sorted
 * descending.
 */

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "spectrum_model.hpp"

namespace lsrmt {

inline constexpr std::string_view eigen_csv_header = "index,eigenvalue";

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace detail

/// Reads eigenvalues; line numbers in errors are 1-based and count the header.
inline std::vector<double> read_eigenvalues_csv(std::istream& in, const std::string& source = "<stream>") {
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw InvalidInput(source + ":" + std::to_string(line_no) + ": " + what);
    };
    if (!std::getline(in, line)) {
        line_no = 1;
        fail("empty file, expected header '" + std::string(eigen_csv_header) + "'");
    }
    ++line_no;
    if (detail::trim(line) != eigen_csv_header) fail("expected header '" + std::string(eigen_csv_header) + "'");

    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = detail::trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
            fail("expected two comma-separated fields");
        long long index = 0;
        double value = 0.0;
        if (!detail::parse_number(row.substr(0, comma), index)) fail("malformed index");
        if (!detail::parse_number(row.substr(comma + 1), value)) fail("malformed eigenvalue");
        if (index != static_cast<long long>(values.size()) + 1)
            fail("index " + std::to_string(index) + " out of sequence");
        if (!std::isfinite(value) || value < 0.0) fail("eigenvalue must be finite and >= 0");
        if (!values.empty() && value > values.back()) fail("eigenvalues not sorted descending");
        values.push_back(value);
    }
    if (values.empty()) fail("no eigenvalues");
    return values;
}

inline std::vector<double> read_eigenvalues_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_eigenvalues_csv(in, path);
}

inline void write_eigenvalues_csv(std::ostream& out, const std::vector<double>& values) {
    out << eigen_csv_header << '\n' << std::setprecision(17);
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << values[i] << '\n';
}

inline void write_eigenvalues_csv(const std::string& path, const EigenSpectrum& spectrum) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_eigenvalues_csv(out, spectrum.values);
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace lsrmt
