// Parser for the canonical scalar text format produced by
// Scalar::to_string(), enabling exact round-trips through serialized output.
//
//   scalar  := '0' | term (' + ' term)*
//   term    := '(' laurent ')/(' laurent ')' ('*sqrt{' laurent '}')?
//   laurent := ['-'] mono ((' + '|' - ') mono)*
//   mono    := rational ('*' gen)*  |  gen ('*' gen)*
//   gen     := ('u'|'v'|'w1'|'w2') ('^' integer)?
#ifndef QGLMN_SCALAR_IO_HPP
#define QGLMN_SCALAR_IO_HPP

#include <cctype>

#include "qglmn/scalar.hpp"

namespace qglmn {
namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse_scalar() {
        skip_ws();
        if (peek() == '0' && pos_ + 1 >= s_.size()) {
            ++pos_;
            return Scalar();
        }
        Scalar r = parse_term();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && peek() == '+') {
                ++pos_;
                r += parse_term();
            } else {
                break;
            }
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

    Laurent parse_laurent_full() {
        Laurent p = parse_laurent();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    Scalar parse_term() {
        skip_ws();
        expect('(');
        Laurent num = parse_laurent();
        expect(')');
        expect('/');
        expect('(');
        Laurent den = parse_laurent();
        expect(')');
        RationalFunction f(num, den);
        skip_ws();
        if (pos_ < s_.size() && peek() == '*') {
            size_t save = pos_;
            ++pos_;
            if (match_word("sqrt{")) {
                Laurent rad = parse_laurent();
                expect('}');
                return Scalar(f) * Scalar::sqrt(RationalFunction(rad));
            }
            pos_ = save;
        }
        return Scalar(f);
    }

    Laurent parse_laurent() {
        Laurent p;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        p += parse_mono(neg);
        while (true) {
            size_t save = pos_;
            skip_ws();
            if (pos_ < s_.size() && (peek() == '+' || peek() == '-')) {
                // a '+' that belongs to the enclosing scalar sum is followed
                // by '(' after whitespace; stop there.
                char op = peek();
                size_t look = pos_ + 1;
                while (look < s_.size() && s_[look] == ' ') ++look;
                if (op == '+' && look < s_.size() && s_[look] == '(') {
                    pos_ = save;
                    break;
                }
                ++pos_;
                p += parse_mono(op == '-');
            } else {
                pos_ = save;
                break;
            }
        }
        return p;
    }

    Laurent parse_mono(bool neg) {
        skip_ws();
        Rat coeff(1);
        Expo x;
        bool have_any = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_any = true;
        }
        while (true) {
            size_t save = pos_;
            if (have_any) {
                skip_ws();
                if (pos_ >= s_.size() || peek() != '*') {
                    pos_ = save;
                    break;
                }
                ++pos_;
            }
            skip_ws();
            int g = -1;
            if (match_word("w1"))
                g = 2;
            else if (match_word("w2"))
                g = 3;
            else if (pos_ < s_.size() && peek() == 'u') {
                ++pos_;
                g = 0;
            } else if (pos_ < s_.size() && peek() == 'v') {
                ++pos_;
                g = 1;
            } else {
                pos_ = save;
                if (!have_any) fail("expected monomial");
                break;
            }
            int e = 1;
            if (pos_ < s_.size() && peek() == '^') {
                ++pos_;
                e = parse_int();
            }
            x.e[g] += e;
            have_any = true;
        }
        if (neg) coeff = -coeff;
        return Laurent::monomial(coeff, x);
    }

    Rat parse_rational() {
        Int n = parse_uint();
        if (pos_ < s_.size() && peek() == '/') {
            ++pos_;
            Int d = parse_uint();
            return Rat(n, d);
        }
        return Rat(n);
    }
    Int parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        Int n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (peek() - '0');
            ++pos_;
        }
        return n;
    }
    int parse_int() {
        bool neg = false;
        if (pos_ < s_.size() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        Int n = parse_uint();
        int v = static_cast<int>(n);
        return neg ? -v : v;
    }

    bool match_word(const char* w) {
        size_t save = pos_;
        for (const char* p = w; *p; ++p) {
            if (pos_ >= s_.size() || s_[pos_] != *p) {
                pos_ = save;
                return false;
            }
            ++pos_;
        }
        return true;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos_) +
                                    ": " + why + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(const std::string& s) {
    return detail::ScalarParser(s).parse_scalar();
}
inline Laurent parse_laurent(const std::string& s) {
    return detail::ScalarParser(s).parse_laurent_full();
}

}  // namespace qglmn

#endif  // QGLMN_SCALAR_IO_HPP
