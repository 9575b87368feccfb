#include "charvar/format.hpp"

#include "charvar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace charvar {

namespace {

std::string label(const EpolyRecord& rec) {
    std::ostringstream os;
    os << to_string(rec.group) << " n=" << rec.n << " r=" << rec.r;
    if (rec.stratum) os << " [" << rec.stratum->to_string() << "]";
    return os.str();
}

std::string latex_label(const EpolyRecord& rec) {
    std::string g(to_string(rec.group));
    std::transform(g.begin(), g.end(), g.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    std::ostringstream os;
    os << "e(\\mathcal{X}_{" << rec.r << "}" << g << "_{" << rec.n << "}";
    if (rec.stratum) os << "^{[" << rec.stratum->to_string() << "]}";
    os << ")";
    return os.str();
}

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string text(s_.substr(start, pos_ - start));
        if (text.empty() || text == "-") fail("expected an integer");
        return Integer(text);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at offset " + std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::vector<Integer> split_coefficients(std::string_view list, char sep) {
    std::vector<Integer> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t end = std::min(list.find(sep, start), list.size());
        Cursor c(list.substr(start, end - start));
        out.push_back(c.integer());
        if (!c.done()) c.fail("trailing characters in coefficient");
        start = end + 1;
    }
    return out;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
    if (s == "human") return OutputFormat::Human;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "latex") return OutputFormat::Latex;
    throw InvalidArgument("unknown format '" + std::string(s) + "' (expected human, json, csv or latex)");
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Human: return "human";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Latex: return "latex";
    }
    return "?";
}

EpolyRecord EpolyRecord::make(const StratumQuery& q, const RatPoly& p) {
    EpolyRecord rec;
    rec.group = q.group;
    rec.n = q.n;
    rec.r = q.r;
    rec.stratum = q.stratum;
    rec.coefficients = p.integer_coeffs();
    if (rec.coefficients.empty()) rec.coefficients.push_back(0);
    for (const auto& c : rec.coefficients) rec.euler_char += c;
    return rec;
}

RatPoly EpolyRecord::poly() const {
    std::vector<Rational> cs(coefficients.begin(), coefficients.end());
    return RatPoly(std::move(cs));
}

EpolyRecord compute_record(const StratumQuery& q) { return EpolyRecord::make(q, e_group(q)); }

std::string to_json(const EpolyRecord& rec) {
    std::ostringstream os;
    os << "{\"group\":\"" << to_string(rec.group) << "\",\"n\":" << rec.n << ",\"r\":" << rec.r;
    if (rec.stratum) os << ",\"stratum\":\"" << rec.stratum->to_string() << "\"";
    os << ",\"variable\":\"x\",\"coefficients\":[";
    for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
        if (i) os << ",";
        os << rec.coefficients[i].get_str();
    }
    os << "],\"degree\":" << rec.degree() << ",\"euler_char\":" << rec.euler_char.get_str() << "}";
    return os.str();
}

std::string csv_header() { return "group,n,r,stratum,degree,euler_char,coefficients"; }

std::string to_csv_row(const EpolyRecord& rec) {
    std::ostringstream os;
    os << to_string(rec.group) << "," << rec.n << "," << rec.r << ","
       << (rec.stratum ? rec.stratum->to_string() : std::string()) << "," << rec.degree() << ","
       << rec.euler_char.get_str() << ",";
    for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
        if (i) os << ";";
        os << rec.coefficients[i].get_str();
    }
    return os.str();
}

std::string to_latex(const RatPoly& p) {
    if (p.is_zero()) return "0";
    const RatPoly shifted = poly_taylor_shift(p, 1);
    std::ostringstream os;
    bool first = true;
    for (long k = shifted.degree(); k >= 0; --k) {
        Rational c = shifted.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        if (c < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        const bool unit = c == 1 && k > 0;
        if (!unit) {
            if (c.get_den() == 1) {
                os << c.get_num().get_str();
            } else {
                os << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "}";
            }
        }
        if (k == 1) os << "(x-1)";
        if (k > 1) os << "(x-1)^{" << k << "}";
    }
    return os.str();
}

std::string render(const std::vector<EpolyRecord>& recs, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::Human:
            if (recs.size() == 1) {
                os << to_string(recs[0].poly()) << "\n";
            } else {
                for (const auto& rec : recs) os << label(rec) << ": " << to_string(rec.poly()) << "\n";
            }
            break;
        case OutputFormat::Json:
            if (recs.size() == 1) {
                os << to_json(recs[0]) << "\n";
            } else {
                os << "[\n";
                for (std::size_t i = 0; i < recs.size(); ++i) {
                    os << "  " << to_json(recs[i]) << (i + 1 < recs.size() ? ",\n" : "\n");
                }
                os << "]\n";
            }
            break;
        case OutputFormat::Csv:
            os << csv_header() << "\n";
            for (const auto& rec : recs) os << to_csv_row(rec) << "\n";
            break;
        case OutputFormat::Latex:
            if (recs.size() == 1) {
                os << to_latex(recs[0].poly()) << "\n";
            } else {
                for (const auto& rec : recs) os << latex_label(rec) << " &= " << to_latex(rec.poly()) << " \\\\\n";
            }
            break;
    }
    return os.str();
}

std::string render_euler(const std::vector<EpolyRecord>& recs, OutputFormat f) {
    if (f == OutputFormat::Json || f == OutputFormat::Csv) return render(recs, f);
    std::ostringstream os;
    for (const auto& rec : recs) {
        if (recs.size() > 1) {
            os << (f == OutputFormat::Latex ? "\\chi(" + latex_label(rec).substr(2) + " &= " : label(rec) + ": ");
        }
        os << rec.euler_char.get_str() << (f == OutputFormat::Latex && recs.size() > 1 ? " \\\\\n" : "\n");
    }
    return os.str();
}

std::vector<Integer> coefficients_from_json(std::string_view json) {
    const std::string_view key = "\"coefficients\"";
    const std::size_t at = json.find(key);
    if (at == std::string_view::npos) throw SyntaxError("no \"coefficients\" member");
    Cursor c(json.substr(at + key.size()));
    c.expect(":");
    c.expect("[");
    std::vector<Integer> out;
    if (c.accept("]")) return out;
    do {
        out.push_back(c.integer());
    } while (c.accept(","));
    c.expect("]");
    return out;
}

std::vector<Integer> coefficients_from_csv_row(std::string_view row) {
    std::size_t pos = 0;
    for (int field = 0; field < 6; ++field) {
        pos = row.find(',', pos);
        if (pos == std::string_view::npos) throw SyntaxError("CSV row has fewer than 7 fields");
        ++pos;
    }
    std::string_view rest = row.substr(pos);
    while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r')) rest.remove_suffix(1);
    if (rest.find(',') != std::string_view::npos) throw SyntaxError("CSV row has more than 7 fields");
    return split_coefficients(rest, ';');
}

RatPoly poly_from_latex(std::string_view latex) {
    Cursor c(latex);
    std::vector<Rational> shifted;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.accept("-")) {
            sign = -1;
        } else if (!c.accept("+") && !first) {
            c.fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff = 1;
        bool explicit_coeff = false;
        if (c.accept("\\frac{")) {
            const Integer num = c.integer();
            c.expect("}{");
            const Integer den = c.integer();
            c.expect("}");
            if (den == 0) c.fail("zero denominator");
            coeff = ratio(num, den);
            explicit_coeff = true;
        } else if (c.at_digit()) {
            coeff = Rational(c.integer());
            explicit_coeff = true;
        }

        std::size_t k = 0;
        if (c.accept("(x-1)")) {
            k = 1;
            if (c.accept("^{")) {
                const Integer e = c.integer();
                c.expect("}");
                if (e < 2) c.fail("exponent must be at least 2");
                k = e.get_ui();
            }
        } else if (!explicit_coeff) {
            c.fail("expected a coefficient or (x-1)");
        }
        if (shifted.size() <= k) shifted.resize(k + 1);
        shifted[k] += sign * coeff;
    }
    if (first) c.fail("empty expression");
    return poly_taylor_shift(RatPoly(std::move(shifted)), -1);
}

}  // namespace charvar
