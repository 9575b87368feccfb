#pragma once

/**
 * @file format.hpp
 * @brief Rendering of computed E-polynomials as human text, JSON, CSV or LaTeX.
 *
 * JSON, CSV and LaTeX carry the ascending integer coefficient list exactly and
 * can be decoded again; the human form is for display only. JSON is written
 * by hand because coefficients routinely exceed 64 bits.
 */

#include "charvar/epoly.hpp"
#include "charvar/partitions.hpp"
#include "charvar/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

enum class OutputFormat { Human, Json, Csv, Latex };

/// Throws InvalidArgument.
OutputFormat parse_format(std::string_view s);
std::string_view to_string(OutputFormat f);

struct EpolyRecord {
    GroupKind group = GroupKind::GL;
    unsigned n = 0;
    unsigned r = 0;
    std::optional<Partition> stratum;
    std::vector<Integer> coefficients;  ///< ascending
    Integer euler_char;

    /// Throws NonIntegerResult if p has a non-integer coefficient.
    static EpolyRecord make(const StratumQuery& q, const RatPoly& p);
    RatPoly poly() const;
    long degree() const { return static_cast<long>(coefficients.size()) - 1; }
};

/// Computes e_group(q) and wraps it.
EpolyRecord compute_record(const StratumQuery& q);

std::string to_json(const EpolyRecord& rec);
std::string csv_header();
std::string to_csv_row(const EpolyRecord& rec);
/// Terms grouped by powers of (x - 1).
std::string to_latex(const RatPoly& p);

/// A full document in the requested format; records are emitted in order.
/// Human output is one line per record, e.g. "sl n=2 r=2: x^3".
std::string render(const std::vector<EpolyRecord>& recs, OutputFormat f);
/// Euler characteristics only.
std::string render_euler(const std::vector<EpolyRecord>& recs, OutputFormat f);

/// Inverse parsers for the lossless formats. All throw SyntaxError.
std::vector<Integer> coefficients_from_json(std::string_view json);
std::vector<Integer> coefficients_from_csv_row(std::string_view row);
RatPoly poly_from_latex(std::string_view latex);

}  // namespace charvar
