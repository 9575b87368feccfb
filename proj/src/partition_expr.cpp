#include "charvar/partition_expr.hpp"

#include "charvar/errors.hpp"

#include <cctype>
#include <string>

namespace charvar {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    bool at_end() const { return pos_ == s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    std::size_t pos() const { return pos_; }

    void skip_spaces() {
        while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    unsigned long integer() {
        const std::size_t start = pos_;
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (v > 1'000'000) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text, unsigned n) {
    if (n == 0) throw InvalidArgument("parse_partition requires n >= 1");
    Lexer lex(text);
    lex.skip_spaces();
    if (lex.at_end()) lex.fail("empty partition");

    std::vector<unsigned long> mult;
    unsigned long total = 0;
    while (true) {
        const unsigned long part = lex.integer();
        unsigned long exponent = 1;
        if (lex.peek() == '^') {
            lex.expect('^');
            exponent = lex.integer();
        }
        if (part == 0 || exponent == 0) {
            throw ZeroPart("part " + std::to_string(part) + "^" + std::to_string(exponent) + " in \"" +
                           std::string(text) + "\"");
        }
        if (mult.size() < part) mult.resize(part, 0);
        mult[part - 1] += exponent;
        total += part * exponent;
        if (total > 1'000'000) throw SumMismatch("parts of \"" + std::string(text) + "\" are too large");

        const std::size_t before = lex.pos();
        lex.skip_spaces();
        if (lex.at_end()) break;
        if (lex.pos() == before) lex.fail("expected a space between parts");
    }

    if (total != n) {
        throw SumMismatch("\"" + std::string(text) + "\" is a partition of " + std::to_string(total) +
                          ", expected " + std::to_string(n));
    }
    std::vector<unsigned> k(n, 0);
    for (std::size_t j = 0; j < mult.size(); ++j) k[j] = static_cast<unsigned>(mult[j]);
    return Partition(n, std::move(k));
}

}  // namespace charvar
