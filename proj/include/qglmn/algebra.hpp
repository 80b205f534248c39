// Structural layer for U_q[gl(m|n)]: generator references, gradings,
// weights, the root system, the total generator ordering, expansion of
// nonsimple generators, Hermitian conjugation, and the Kac-Weyl dimension
// formula.
#ifndef QGLMN_ALGEBRA_HPP
#define QGLMN_ALGEBRA_HPP

#include <vector>

#include "qglmn/scalar.hpp"

namespace qglmn {

// Index set {1..m+n}; indices <= m are even ([a]=0), the rest odd ([a]=1).
struct AlgebraParams {
    int m = 1;
    int n = 1;
    int dim() const { return m + n; }
    int grading(int a) const { return a <= m ? 0 : 1; }
    bool valid_index(int a) const { return a >= 1 && a <= m + n; }
};

// A single generator: E^a_b for a != b (exponent fixed at 1), or the Cartan
// power K_a^N for a == b (N a rational exponent; N=0 is the identity and is
// elided from words).
struct GenRef {
    int a = 1;
    int b = 1;
    Rat exponent{1};

    bool is_cartan() const { return a == b; }
    // Lifting class: -1 lowering (a > b), 0 Cartan, +1 raising (a < b).
    int lifting() const { return a == b ? 0 : (a > b ? -1 : 1); }

    static GenRef E(int a, int b) { return GenRef{a, b, Rat(1)}; }
    static GenRef K(int a, Rat N = Rat(1)) { return GenRef{a, a, std::move(N)}; }

    friend bool operator==(const GenRef& x, const GenRef& y) {
        return x.a == y.a && x.b == y.b && x.exponent == y.exponent;
    }
    friend bool operator!=(const GenRef& x, const GenRef& y) { return !(x == y); }
    // Structural key order for use in maps (distinct from gen_compare).
    friend bool operator<(const GenRef& x, const GenRef& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.exponent < y.exponent;
    }

    std::string to_string() const {
        if (is_cartan()) {
            std::string s = "K_" + std::to_string(a);
            if (exponent != Rat(1)) s += "^{" + rat_to_string(exponent) + "}";
            return s;
        }
        return "E^" + std::to_string(a) + "_" + std::to_string(b);
    }
};

inline int gen_grading(const AlgebraParams& p, const GenRef& g) {
    if (g.is_cartan()) return 0;
    return (p.grading(g.a) + p.grading(g.b)) % 2;
}

// One component of a weight in the epsilon basis: constant + alpha_coeff * alpha.
struct WeightEntry {
    Rat c{0};
    Rat alpha{0};

    bool is_zero() const { return c == 0 && alpha == 0; }
    // alpha is treated as positive and dominant (the unitary regime keeps it
    // large), so the sign is decided by the alpha coefficient first.
    int sign() const {
        if (alpha != 0) return alpha > 0 ? 1 : -1;
        if (c != 0) return c > 0 ? 1 : -1;
        return 0;
    }
    friend WeightEntry operator+(const WeightEntry& x, const WeightEntry& y) {
        return WeightEntry{x.c + y.c, x.alpha + y.alpha};
    }
    friend WeightEntry operator-(const WeightEntry& x, const WeightEntry& y) {
        return WeightEntry{x.c - y.c, x.alpha - y.alpha};
    }
    WeightEntry operator-() const { return WeightEntry{-c, -alpha}; }
    friend WeightEntry operator*(const Rat& k, const WeightEntry& x) {
        return WeightEntry{k * x.c, k * x.alpha};
    }
    friend bool operator==(const WeightEntry& x, const WeightEntry& y) {
        return x.c == y.c && x.alpha == y.alpha;
    }
    friend bool operator!=(const WeightEntry& x, const WeightEntry& y) { return !(x == y); }

    std::string to_string() const {
        if (alpha == 0) return rat_to_string(c);
        std::string s;
        if (alpha == 1)
            s = "alpha";
        else if (alpha == -1)
            s = "-alpha";
        else
            s = rat_to_string(alpha) + "*alpha";
        if (c > 0) s += "+" + rat_to_string(c);
        if (c < 0) s += "-" + rat_to_string(-c);
        return s;
    }
};

struct Weight {
    std::vector<WeightEntry> entries;

    static Weight zero(int len) {
        Weight w;
        w.entries.resize(len);
        return w;
    }
    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
    friend Weight operator+(const Weight& x, const Weight& y) {
        Weight r = x;
        for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = r.entries[i] + y.entries[i];
        return r;
    }
    friend Weight operator-(const Weight& x, const Weight& y) {
        Weight r = x;
        for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] = r.entries[i] - y.entries[i];
        return r;
    }
    friend bool operator==(const Weight& x, const Weight& y) { return x.entries == y.entries; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += entries[i].to_string();
        }
        return s + ")";
    }
};

// Weight precedence: w1 precedes w2 iff the first nonzero component of
// w1 - w2 is positive.  Returns -1 (w1 first), 0 (equal), +1 (w2 first).
inline int weight_compare(const Weight& w1, const Weight& w2) {
    for (size_t i = 0; i < w1.entries.size(); ++i) {
        int s = (w1.entries[i] - w2.entries[i]).sign();
        if (s > 0) return -1;
        if (s < 0) return 1;
    }
    return 0;
}

// Weight of a generator in the adjoint representation: eps_a - eps_b
// (zero for Cartan generators).
inline Weight gen_weight(const AlgebraParams& p, const GenRef& g) {
    Weight w = Weight::zero(p.dim());
    if (!g.is_cartan()) {
        w.entries[g.a - 1].c += 1;
        w.entries[g.b - 1].c -= 1;
    }
    return w;
}

// The total generator order: odd lowering < odd raising < even lowering <
// Cartan < even raising.  Odd generators precede even; within a parity the
// lifting class (-1 lowering, 0 Cartan, +1 raising) decides; Cartans are
// ordered by index (exponent ignored); otherwise the adjoint weight order
// decides.  Returns -1, 0, +1.
inline int gen_compare(const AlgebraParams& p, const GenRef& g1, const GenRef& g2) {
    int gr1 = gen_grading(p, g1), gr2 = gen_grading(p, g2);
    if (gr1 != gr2) return gr1 > gr2 ? -1 : 1;  // odd first
    int l1 = g1.lifting(), l2 = g2.lifting();
    if (l1 != l2) return l1 < l2 ? -1 : 1;
    if (l1 == 0) {
        if (g1.a != g2.a) return g1.a < g2.a ? -1 : 1;
        return 0;
    }
    return weight_compare(gen_weight(p, g1), gen_weight(p, g2));
}

// A word is an ordered product of generators; an element is a finite
// Scalar-linear combination of words.  The empty word is the identity.
using Word = std::vector<GenRef>;

class AlgebraElement {
public:
    using TermMap = std::map<Word, Scalar>;

    AlgebraElement() = default;
    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement identity() { return single(Word{}, Scalar::one()); }
    static AlgebraElement single(Word w, Scalar c) {
        AlgebraElement e;
        e.add(std::move(w), std::move(c));
        return e;
    }
    static AlgebraElement generator(const GenRef& g) {
        return single(Word{g}, Scalar::one());
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Word w, Scalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement r = x;
        for (const auto& [w, c] : y.terms_) r.add(w, c);
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement r = x;
        for (const auto& [w, c] : y.terms_) r.add(w, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement r;
        for (const auto& [wx, cx] : x.terms_)
            for (const auto& [wy, cy] : y.terms_) {
                Word w = wx;
                w.insert(w.end(), wy.begin(), wy.end());
                r.add(std::move(w), cx * cy);
            }
        return r;
    }
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
        AlgebraElement r;
        for (const auto& [w, cx] : x.terms_) r.add(w, c * cx);
        return r;
    }
    AlgebraElement& operator+=(const AlgebraElement& y) { return *this = *this + y; }
    AlgebraElement& operator-=(const AlgebraElement& y) { return *this = *this - y; }
    AlgebraElement& operator*=(const AlgebraElement& y) { return *this = *this * y; }
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) {
        return !(x == y);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "[" + c.to_string() + "]";
            for (const auto& g : w) s += " " + g.to_string();
            if (w.empty()) s += " Id";
        }
        return s;
    }

private:
    TermMap terms_;
};

inline int word_grading(const AlgebraParams& p, const Word& w) {
    int g = 0;
    for (const auto& x : w) g ^= gen_grading(p, x);
    return g;
}

// q_c^{e} for integer exponent e, as a Scalar (q_c = q^{(-1)^{[c]}}).
inline Scalar q_sub(const AlgebraParams& p, int c, int e) {
    int s = p.grading(c) == 0 ? 1 : -1;
    return Scalar(qpow(s * e));
}

// Fully recursive expansion of a nonsimple generator E^a_b into words over
// simple generators:  E^a_b = E^a_c E^c_b - q_c^{sgn(a-b)} E^c_b E^a_c with
// c the neighbor of b; the bold variant uses the inverse power of q_c and
// recurses with bold throughout.
inline AlgebraElement expand_nonsimple(const AlgebraParams& p, int a, int b, bool bold = false) {
    if (a == b) throw std::invalid_argument("expand_nonsimple requires a != b");
    int S = a > b ? 1 : -1;
    if (a - b == S)  // |a-b| == 1: already simple
        return AlgebraElement::generator(GenRef::E(a, b));
    int c = b + S;
    AlgebraElement Eac = expand_nonsimple(p, a, c, bold);
    AlgebraElement Ecb = AlgebraElement::generator(GenRef::E(c, b));
    Scalar qc = q_sub(p, c, bold ? -S : S);
    return Eac * Ecb - qc * (Ecb * Eac);
}

// Hermitian conjugation: reverses words (ordinary, not graded), fixes
// Cartan powers, and maps E^a_b to the bold conjugate generator expanded
// over simple generators.  Scalar coefficients are fixed: conjugation is
// complex conjugation, and the coefficient field is real-valued for real
// q, alpha, x, y.  (Applying the q -> 1/q involution instead would send
// E^a_b to the plain rather than the bold conjugate and break the
// involution property.)
inline AlgebraElement hermitian_conjugate(const AlgebraParams& p, const AlgebraElement& e) {
    AlgebraElement r;
    for (const auto& [w, c] : e.terms()) {
        AlgebraElement prod = AlgebraElement::single(Word{}, c);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (it->is_cartan())
                prod *= AlgebraElement::generator(*it);
            else
                prod *= expand_nonsimple(p, it->b, it->a, /*bold=*/true);
        }
        r += prod;
    }
    return r;
}

// Root-system data: positive even/odd roots, their half sums, and rho.
struct RootData {
    std::vector<Weight> even_positive;  // eps_a - eps_b, a < b, [a] == [b]
    std::vector<Weight> odd_positive;   // eps_a - eps_b, a <= m < b
    Weight rho0, rho1, rho;

    // (eps_a, eps_b) = (-1)^{[a]} delta_ab, extended bilinearly.
    static WeightEntry inner(const AlgebraParams& p, const Weight& x, const Weight& y) {
        WeightEntry r;
        for (int a = 1; a <= p.dim(); ++a) {
            Rat s = p.grading(a) == 0 ? Rat(1) : Rat(-1);
            const WeightEntry &xa = x.entries[a - 1], &ya = y.entries[a - 1];
            if (ya.alpha != 0 && xa.alpha != 0)
                throw std::domain_error("QuadraticAlphaInnerProduct");
            r.c += s * (xa.c * ya.c);
            r.alpha += s * (xa.alpha * ya.c + xa.c * ya.alpha);
        }
        return r;
    }

    static RootData build(const AlgebraParams& p) {
        RootData rd;
        int d = p.dim();
        for (int a = 1; a <= d; ++a)
            for (int b = a + 1; b <= d; ++b) {
                Weight w = Weight::zero(d);
                w.entries[a - 1].c = 1;
                w.entries[b - 1].c = -1;
                if (p.grading(a) == p.grading(b))
                    rd.even_positive.push_back(w);
                else
                    rd.odd_positive.push_back(w);
            }
        rd.rho0 = Weight::zero(d);
        rd.rho1 = Weight::zero(d);
        for (int a = 1; a <= p.m; ++a) {
            rd.rho0.entries[a - 1].c = Rat(p.m - 2 * a + 1, 2);
            rd.rho1.entries[a - 1].c = Rat(p.n, 2);
        }
        for (int a = p.m + 1; a <= d; ++a) {
            rd.rho0.entries[a - 1].c = Rat(p.m + p.n - 2 * a + 1, 2);
            rd.rho1.entries[a - 1].c = Rat(-p.m, 2);
        }
        rd.rho = rd.rho0 - rd.rho1;
        return rd;
    }
};

// Kac-Weyl dimension formula: dim V^0 = prod over even positive roots of
// (lambda+rho0, gamma)/(rho0, gamma); dim V = 2^{mn} dim V^0.  The alpha
// dependence must cancel in each factor; the product must be a positive
// integer.
inline std::pair<Int, Int> kac_weyl_dim(const AlgebraParams& p, const Weight& lambda) {
    RootData rd = RootData::build(p);
    Weight shifted = lambda + rd.rho0;
    Rat prod(1);
    for (const auto& gamma : rd.even_positive) {
        WeightEntry num = RootData::inner(p, shifted, gamma);
        WeightEntry den = RootData::inner(p, rd.rho0, gamma);
        if (num.alpha != 0 || den.alpha != 0)
            throw std::domain_error("NonIntegerDimension");
        // roots inside the second block pick up the graded sign, so the
        // numerator and denominator are both negative there; only the
        // ratio must be positive, which the final product check enforces
        if (den.c == 0) throw std::domain_error("NonIntegerDimension");
        prod *= num.c / den.c;
    }
    if (prod <= 0 || boost::multiprecision::denominator(prod) != 1)
        throw std::domain_error("NonIntegerDimension");
    Int dim0 = boost::multiprecision::numerator(prod);
    Int dim = dim0;
    for (int i = 0; i < p.m * p.n; ++i) dim *= 2;
    return {dim0, dim};
}

}  // namespace qglmn

#endif  // QGLMN_ALGEBRA_HPP
