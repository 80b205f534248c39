// Field of fractions of the Laurent ring: gcd-reduced pairs num/den with a
// canonical denominator (min exponent 0 in each generator, integer coprime
// coefficients, positive leading coefficient under graded-lex).
#ifndef QGLMN_RATFUNC_HPP
#define QGLMN_RATFUNC_HPP

#include "qglmn/laurent.hpp"

namespace qglmn {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Laurent(1)) {}
    explicit RationalFunction(const Rat& c) : num_(Laurent(c)), den_(Laurent(1)) {}
    explicit RationalFunction(long c) : num_(Laurent(c)), den_(Laurent(1)) {}
    explicit RationalFunction(const Laurent& p) : num_(p), den_(Laurent(1)) {}
    RationalFunction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // Sums and products keep operands reduced (Henrici's scheme): all gcds
    // run on the already-coprime small parts, never on full products.
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Laurent d = laurent_gcd(a.den_, b.den_);
        if (d.is_one()) {
            RationalFunction r;
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            if (r.num_.is_zero()) r.den_ = Laurent(1);
            r.normalize_unit();
            return r;
        }
        Laurent ad = divide_exact(a.den_, d), bd = divide_exact(b.den_, d);
        Laurent num = a.num_ * bd + b.num_ * ad;
        if (num.is_zero()) return RationalFunction();
        Laurent g = laurent_gcd(num, d);
        RationalFunction r;
        if (g.is_one()) {
            r.num_ = std::move(num);
            r.den_ = a.den_ * bd;
        } else {
            r.num_ = divide_exact(num, g);
            r.den_ = divide_exact(a.den_, g) * bd;
        }
        r.normalize_unit();
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        Laurent g1 = laurent_gcd(a.num_, b.den_);
        Laurent g2 = laurent_gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = (g1.is_one() ? a.num_ : divide_exact(a.num_, g1)) *
                 (g2.is_one() ? b.num_ : divide_exact(b.num_, g2));
        r.den_ = (g2.is_one() ? a.den_ : divide_exact(a.den_, g2)) *
                 (g1.is_one() ? b.den_ : divide_exact(b.den_, g1));
        r.normalize_unit();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("ZeroDivision");
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("ZeroDivision");
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_unit();
        return r;
    }

    RationalFunction bar() const { return RationalFunction(num_.bar(), den_.bar()); }

    RationalFunction substitute_gens(const std::array<Expo, kNumGens>& images) const {
        return RationalFunction(num_.substitute_gens(images), den_.substitute_gens(images));
    }

    std::complex<double> eval(const std::array<std::complex<double>, kNumGens>& pt) const {
        std::complex<double> d = den_.eval(pt);
        if (std::abs(d) < 1e-300) throw std::domain_error("PoleAtPoint");
        return num_.eval(pt) / d;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("ZeroDivision");
        if (num_.is_zero()) {
            den_ = Laurent(1);
            return;
        }
        Laurent g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        normalize_unit();
    }

    // Canonicalize the denominator: strip its unit (sign * content *
    // monomial) into the numerator.  Assumes num/den already coprime.
    void normalize_unit() {
        if (num_.is_zero()) {
            den_ = Laurent(1);
            return;
        }
        auto d = den_.unit_decompose();
        den_ = d.primitive;
        Expo neg;
        for (int g2 = 0; g2 < kNumGens; ++g2) neg.e[g2] = -d.unit.e[g2];
        num_ = num_.shifted(neg) * Rat(Rat(d.sign) / d.content);
    }

    Laurent num_, den_;
};

}  // namespace qglmn

#endif  // QGLMN_RATFUNC_HPP
