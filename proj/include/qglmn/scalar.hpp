// Exact coefficient field for the whole library: the fraction field of the
// Laurent ring extended by square roots.  Each Scalar is a finite sum of
// terms  f * sqrt(K)  where f is a RationalFunction and K is a canonical
// radicand key (square-free positive-integer content * monomial with 0/1
// exponents * primitive square-free polynomial part).  Products of radicals
// collapse through the gcd of their keys, so sqrt(K)*sqrt(K) = K exactly.
#ifndef QGLMN_SCALAR_HPP
#define QGLMN_SCALAR_HPP

#include <tuple>

#include "qglmn/ratfunc.hpp"

namespace qglmn {

// ---------------------------------------------------------------------------
// Convenience constructors for powers of q and q-brackets.
//
// Exponents are passed DOUBLED so that half-integer powers stay integral:
// qpow_half(tc, ta, tx, ty) = q^{(tc + ta*alpha + tx*x + ty*y)/2}
//                           = u^tc v^ta w1^tx w2^ty ,
// where x and y are the two spectral parameters.

inline Laurent qpow_half(int tc, int ta = 0, int tx = 0, int ty = 0) {
    return Laurent::monomial(Rat(1), Expo{{tc, ta, tx, ty}});
}

// q - qbar and q + qbar.
inline Laurent q_delta() { return qpow_half(2) - qpow_half(-2); }
inline Laurent q_nabla() { return qpow_half(2) + qpow_half(-2); }

// q-bracket [X]_q = (q^X - q^{-X})/(q - q^{-1}),
// X = (tc + ta*alpha + tx*x + ty*y)/2.
inline RationalFunction qbracket_half(int tc, int ta = 0, int tx = 0, int ty = 0) {
    return RationalFunction(qpow_half(tc, ta, tx, ty) - qpow_half(-tc, -ta, -tx, -ty), q_delta());
}
// Integer-argument versions.
inline Laurent qpow(int c, int a = 0, int x = 0, int y = 0) {
    return qpow_half(2 * c, 2 * a, 2 * x, 2 * y);
}
inline RationalFunction qbracket(int c, int a = 0, int x = 0, int y = 0) {
    return qbracket_half(2 * c, 2 * a, 2 * x, 2 * y);
}

// ---------------------------------------------------------------------------
// Canonical radicand key.

struct RadicalKey {
    Int content{1};                        // square-free integer; the sign of the
                                           // canonical unit of the radicand rides here
    std::array<int, kNumGens> parity{0, 0, 0, 0};  // 0/1 exponents of the unit part
    Laurent base{Laurent(1)};              // primitive square-free polynomial part

    bool trivial() const {
        return content == 1 && parity == std::array<int, kNumGens>{0, 0, 0, 0} && base.is_one();
    }
    // The radicand as an actual Laurent polynomial.
    Laurent radicand() const {
        Expo m;
        for (int g = 0; g < kNumGens; ++g) m.e[g] = parity[g];
        return base.shifted(m) * Rat(content);
    }
    friend bool operator==(const RadicalKey& a, const RadicalKey& b) {
        return a.content == b.content && a.parity == b.parity && a.base == b.base;
    }
    friend bool operator<(const RadicalKey& a, const RadicalKey& b) {
        if (a.content != b.content) return a.content < b.content;
        if (a.parity != b.parity) return a.parity < b.parity;
        return a.base < b.base;
    }
};

namespace detail {

// Split a positive integer n = k^2 * s with s square-free (trial division;
// the integers appearing under radicals here are tiny).
inline void int_square_split(Int n, Int& k, Int& s) {
    k = 1;
    s = 1;
    for (Int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) k *= p;
        if (e % 2) s *= p;
    }
    s *= n;
}

}  // namespace detail

class Scalar {
public:
    using TermMap = std::map<RadicalKey, RationalFunction>;

    Scalar() = default;
    explicit Scalar(const Rat& c) { set(RadicalKey{}, RationalFunction(c)); }
    explicit Scalar(long c) { set(RadicalKey{}, RationalFunction(c)); }
    explicit Scalar(const RationalFunction& f) { set(RadicalKey{}, f); }
    explicit Scalar(const Laurent& p) { set(RadicalKey{}, RationalFunction(p)); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1L); }
    static Scalar single(const RadicalKey& k, const RationalFunction& f) {
        Scalar s;
        s.set(k, f);
        return s;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.trivial() &&
               terms_.begin()->second.is_one();
    }
    // Radical-free scalars are plain rational functions.
    bool is_radical_free() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.trivial());
    }
    RationalFunction rational_part() const {
        if (terms_.empty()) return RationalFunction();
        if (!is_radical_free()) throw std::domain_error("NotRadicalFree");
        return terms_.begin()->second;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [k, f] : b.terms_) r.add(k, f);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [k, f] : b.terms_) r.add(k, -f);
        return r;
    }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [k, f] : terms_) r.terms_[k] = -f;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, fa] : a.terms_)
            for (const auto& [kb, fb] : b.terms_) {
                auto [k, extra] = mul_keys(ka, kb);
                r.add(k, fa * fb * extra);
            }
        return r;
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    // Multiplicative inverse.  Only single-term scalars f*sqrt(K) are
    // invertible in closed form here: 1/(f*sqrt(K)) = (1/(f*K)) * sqrt(K).
    Scalar inverse() const {
        if (terms_.empty()) throw std::domain_error("ZeroDivision");
        if (terms_.size() != 1) throw std::domain_error("MultiTermRadicalInverse");
        const auto& [k, f] = *terms_.begin();
        Scalar r;
        r.set(k, (f * RationalFunction(k.radicand())).inverse());
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    // Canonical square root of a radical-free scalar.
    //
    // With f = num/den, write num*den = c * q^m * P (unit decomposition,
    // P primitive square-free-factored as P = S^2 * F).  Then
    //   sqrt(f) = [S * q^{m_even/2} * sqrt(c_square_part) / den] *
    //             sqrt(c_sf * q^{m_odd} * F_primitive),
    // and the bracketed factor is an ordinary rational function.
    static Scalar sqrt(const RationalFunction& f) {
        Scalar r;
        if (f.is_zero()) return r;
        Laurent radicand = f.num() * f.den();  // sqrt(num/den) = sqrt(num*den)/den
        auto d = radicand.unit_decompose();
        // A genuinely negative constant has no square root in the field; for
        // polynomial radicands the canonical-unit sign is an artifact of the
        // monomial order (the value may well be positive) and is carried in
        // the key so that sqrt(f)^2 = f stays exact.
        if (d.sign < 0 && radicand.is_constant())
            throw std::domain_error("NegativeRadicand");
        // sqrt of the positive rational content c = a/b: sqrt(a*b)/b.
        Int a = boost::multiprecision::numerator(d.content);
        Int b = boost::multiprecision::denominator(d.content);
        Int k, s;
        detail::int_square_split(a * b, k, s);
        RadicalKey key;
        key.content = d.sign < 0 ? -s : s;
        Expo half;
        for (int g = 0; g < kNumGens; ++g) {
            int e = d.unit.e[g];
            key.parity[g] = ((e % 2) + 2) % 2;
            half.e[g] = (e - key.parity[g]) / 2;
        }
        Laurent sq, sf;
        squarefree_decompose(d.primitive, sq, sf);
        // P = sq^2 * sf exactly and P is primitive, so content(sf) is a
        // perfect rational square: sqrt(content(sf)) = 1/content(sq).
        Rat csf = sf.content();
        Int rn, sn, rd, sd;
        detail::int_square_split(boost::multiprecision::numerator(csf), rn, sn);
        detail::int_square_split(boost::multiprecision::denominator(csf), rd, sd);
        if (sn != 1 || sd != 1)
            throw std::logic_error("sqrt: square-free cofactor content not a square");
        key.base = sf.unit_decompose().primitive;  // sign is + since P and sq^2 lead positive
        RationalFunction coeff(sq * Laurent::monomial(Rat(k) / b * Rat(rn, rd), half), f.den());
        r.set(key, coeff);
        return r;
    }
    static Scalar sqrt(const Scalar& s) {
        return sqrt(s.rational_part());
    }

    // Bar involution q -> 1/q (and likewise for the alpha/x/y powers).
    Scalar bar() const {
        Scalar r;
        for (const auto& [k, f] : terms_) {
            if (k.trivial()) {
                r.add(k, f.bar());
                continue;
            }
            Scalar root = sqrt_of_laurent(k.radicand().bar());
            for (const auto& [k2, f2] : root.terms_) r.add(k2, f.bar() * f2);
        }
        return r;
    }

    // Substitute spectral generators (used for the shifted R-matrix factors).
    Scalar substitute_gens(const std::array<Expo, kNumGens>& images) const {
        Scalar r;
        for (const auto& [k, f] : terms_) {
            if (k.trivial()) {
                r.add(k, f.substitute_gens(images));
                continue;
            }
            Scalar root = sqrt_of_laurent(k.radicand().substitute_gens(images));
            for (const auto& [k2, f2] : root.terms_)
                r.add(k2, f.substitute_gens(images) * f2);
        }
        return r;
    }

    std::complex<double> eval(const std::array<std::complex<double>, kNumGens>& pt) const {
        std::complex<double> s = 0.0;
        for (const auto& [k, f] : terms_)
            s += f.eval(pt) * std::sqrt(k.radicand().eval(pt));
        return s;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, f] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + f.num().to_string() + ")/(" + f.den().to_string() + ")";
            if (!k.trivial()) s += "*sqrt{" + k.radicand().to_string() + "}";
        }
        return s;
    }

private:
    static Scalar sqrt_of_laurent(const Laurent& p) {
        return sqrt(RationalFunction(p));
    }

    void add(const RadicalKey& k, const RationalFunction& f) {
        if (f.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void set(const RadicalKey& k, const RationalFunction& f) {
        if (!f.is_zero()) terms_[k] = f;
    }

    // sqrt(K1)*sqrt(K2) = extra * sqrt(K); collapses shared factors exactly.
    static std::pair<RadicalKey, RationalFunction> mul_keys(const RadicalKey& a,
                                                            const RadicalKey& b) {
        if (a.trivial()) return {b, RationalFunction(1L)};
        if (b.trivial()) return {a, RationalFunction(1L)};
        RadicalKey k;
        // sqrt(s1 X) * sqrt(s2 Y) with signs s_i: the key keeps the sign of
        // s1*s2 and a factor -1 appears when both are negative, matching the
        // principal branch for negative real radicands (i * i = -1).
        Int ksq, ssf;
        detail::int_square_split(boost::multiprecision::abs(a.content * b.content), ksq, ssf);
        k.content = a.content * b.content < 0 ? -ssf : ssf;
        bool both_negative = a.content < 0 && b.content < 0;
        Expo half;
        for (int g = 0; g < kNumGens; ++g) {
            int sum = a.parity[g] + b.parity[g];
            k.parity[g] = sum % 2;
            half.e[g] = sum / 2;
        }
        Laurent g = laurent_gcd(a.base, b.base);
        Laurent prod = divide_exact(a.base, g) * divide_exact(b.base, g);
        k.base = prod;  // primitive * primitive is primitive (Gauss)
        RationalFunction extra(g * Laurent::monomial(both_negative ? -Rat(ksq) : Rat(ksq), half));
        return {k, extra};
    }

    TermMap terms_;
};

inline Scalar operator*(const Scalar& a, const Rat& c) { return a * Scalar(c); }
inline Scalar operator*(const Rat& c, const Scalar& a) { return a * Scalar(c); }

}  // namespace qglmn

#endif  // QGLMN_SCALAR_HPP
