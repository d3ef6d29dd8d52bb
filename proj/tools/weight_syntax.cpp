#include "weight_syntax.hpp"

#include <cctype>
#include <stdexcept>

namespace affcone::cli {

namespace {

class Parser {
public:
    Parser(const AffineRootData& data, std::string_view text) : data_(data), text_(text) {}

    AffineWeight run()
    {
        RatVec labels(data_.num_nodes(), Rational(0));
        Rational delta = 0;
        skip();
        if (done()) fail("empty weight");
        bool first = true;
        while (!done()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            term(sign, labels, delta);
            skip();
        }
        return data_.from_affine_labels(labels, delta);
    }

private:
    void term(int sign, RatVec& labels, Rational& delta)
    {
        Rational coef = 1;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = number();
            have_number = true;
            skip();
            if (peek() != '*') {
                if (coef != 0) fail("a number must be followed by '*' and a symbol");
                return;
            }
            ++pos_;
            skip();
        }
        coef *= sign;
        if (peek() == 'L') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a node index after 'L'");
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            const long i = std::stol(std::string(text_.substr(start, pos_ - start)));
            if (i >= data_.num_nodes()) fail("node index out of range");
            labels[i] += coef;
        } else if (text_.substr(pos_, 5) == "delta") {
            pos_ += 5;
            delta += coef;
        } else if (peek() == 'd') {
            ++pos_;
            delta += coef;
        } else {
            fail(have_number ? "expected a symbol after '*'" : "expected a number or a symbol");
        }
        if (std::isalnum(static_cast<unsigned char>(peek()))) fail("unexpected character");
    }

    Rational number()
    {
        Integer num = digits();
        Integer den = 1;
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            den = digits();
            if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Integer digits()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool done() const { return pos_ >= text_.size(); }
    void skip()
    {
        while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse weight '" + std::string(text_) + "' at column " +
                                    std::to_string(pos_ + 1) + ": " + what);
    }

    const AffineRootData& data_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

void append(std::string& out, const Rational& c, const std::string& symbol)
{
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += symbol;
}

}  // namespace

AffineWeight parse_weight(const AffineRootData& data, std::string_view text)
{
    return Parser(data, text).run();
}

std::string format_weight(const AffineRootData& data, const AffineWeight& w)
{
    std::string out;
    const RatVec labels = data.affine_labels(w);
    for (std::size_t i = 0; i < labels.size(); ++i) append(out, labels[i], "L" + std::to_string(i));
    append(out, w.delta, "delta");
    return out.empty() ? "0" : out;
}

}  // namespace affcone::cli
