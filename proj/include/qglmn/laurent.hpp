// Sparse Laurent polynomials in the four power generators
//   u = q^{1/2},  v = q^{alpha/2},  w1 = q^{x/2},  w2 = q^{y/2}
// over exact rationals.  Half-integer powers of q, q^alpha, q^x, q^y are
// therefore whole powers of the generators; no fractional exponents are
// ever stored.  Provides the polynomial utilities the rest of the library
// is built on: graded-lex ordering, exact division, modular multivariate gcd
// (Brown's evaluation/interpolation algorithm) and square-free decomposition.
#ifndef QGLMN_LAURENT_HPP
#define QGLMN_LAURENT_HPP

#include <algorithm>
#include <array>
#include <complex>
#include <random>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qglmn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr int kNumGens = 4;
inline constexpr const char* kGenNames[kNumGens] = {"u", "v", "w1", "w2"};

// Exponent vector of one monomial u^a v^b w1^c w2^d.
struct Expo {
    std::array<int, kNumGens> e{0, 0, 0, 0};

    int total() const { return e[0] + e[1] + e[2] + e[3]; }

    friend Expo operator+(const Expo& x, const Expo& y) {
        Expo r;
        for (int i = 0; i < kNumGens; ++i) r.e[i] = x.e[i] + y.e[i];
        return r;
    }
    friend Expo operator-(const Expo& x, const Expo& y) {
        Expo r;
        for (int i = 0; i < kNumGens; ++i) r.e[i] = x.e[i] - y.e[i];
        return r;
    }
    friend bool operator==(const Expo& x, const Expo& y) { return x.e == y.e; }
    friend bool operator!=(const Expo& x, const Expo& y) { return x.e != y.e; }
};

// Graded lexicographic order: total degree first, then lexicographic on
// (u, v, w1, w2).  This is the fixed monomial order used for all
// normalization (fraction reduction, sign conventions, leading terms).
struct GradedLex {
    bool operator()(const Expo& x, const Expo& y) const {
        int tx = x.total(), ty = y.total();
        if (tx != ty) return tx < ty;
        return x.e < y.e;
    }
};

class Laurent {
public:
    using TermMap = std::map<Expo, Rat, GradedLex>;

    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) terms_[Expo{}] = c;
    }
    explicit Laurent(long c) : Laurent(Rat(c)) {}

    // Monomial c * u^a v^b w1^c w2^d.
    static Laurent monomial(const Rat& c, const Expo& x) {
        Laurent p;
        if (c != 0) p.terms_[x] = c;
        return p;
    }
    static Laurent gen(int which, int power = 1) {
        Expo x;
        x.e[which] = power;
        return monomial(Rat(1), x);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.find(Expo{});
        if (it == terms_.end() || terms_.size() != 1)
            throw std::logic_error("Laurent: not a constant");
        return it->second;
    }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

    // Single-term test; returns the term if so.
    bool is_monomial() const { return terms_.size() == 1; }
    std::pair<Expo, Rat> leading() const {
        if (terms_.empty()) throw std::logic_error("Laurent: leading of zero");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    void add_term(const Expo& x, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [x, c] : b.terms_) r.add_term(x, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [x, c] : b.terms_) r.add_term(x, -c);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [x, c] : terms_) r.terms_[x] = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [xa, ca] : a.terms_)
            for (const auto& [xb, cb] : b.terms_) r.add_term(xa + xb, ca * cb);
        return r;
    }
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
    friend Laurent operator*(const Laurent& a, const Rat& c) {
        Laurent r;
        if (c == 0) return r;
        for (const auto& [x, cc] : a.terms_) r.terms_[x] = cc * c;
        return r;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    // Arbitrary strict total order (for use as a map key).
    friend bool operator<(const Laurent& a, const Laurent& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        GradedLex lt;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return lt(ia->first, ib->first);
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.terms_.end() && ib != b.terms_.end();
    }

    // Map generators to their inverses (q -> 1/q etc.).
    Laurent bar() const {
        Laurent r;
        for (const auto& [x, c] : terms_) {
            Expo y;
            for (int i = 0; i < kNumGens; ++i) y.e[i] = -x.e[i];
            r.terms_[y] = c;
        }
        return r;
    }

    // Remap generator exponents: new_exp[i] = sum_j map[i][j]*old_exp[j]-style
    // substitutions are not needed; we only need gen -> product of gens, i.e.
    // exponent of source gen is added onto targets.  `images[g]` gives, for
    // generator g, its image as an exponent vector (e.g. w1 -> w1*w2 is
    // images[2] = {0,0,1,1}).
    Laurent substitute_gens(const std::array<Expo, kNumGens>& images) const {
        Laurent r;
        for (const auto& [x, c] : terms_) {
            Expo y;
            for (int g = 0; g < kNumGens; ++g)
                for (int i = 0; i < kNumGens; ++i) y.e[i] += x.e[g] * images[g].e[i];
            r.add_term(y, c);
        }
        return r;
    }

    // Formal derivative with respect to generator g (valid for Laurent terms).
    Laurent derivative(int g) const {
        Laurent r;
        for (const auto& [x, c] : terms_) {
            if (x.e[g] == 0) continue;
            Expo y = x;
            y.e[g] -= 1;
            r.add_term(y, c * x.e[g]);
        }
        return r;
    }

    int min_exp(int g) const {
        if (terms_.empty()) return 0;
        int m = terms_.begin()->first.e[g];
        for (const auto& [x, c] : terms_) { (void)c; if (x.e[g] < m) m = x.e[g]; }
        return m;
    }
    int max_exp(int g) const {
        if (terms_.empty()) return 0;
        int m = terms_.begin()->first.e[g];
        for (const auto& [x, c] : terms_) { (void)c; if (x.e[g] > m) m = x.e[g]; }
        return m;
    }
    Expo min_exps() const {
        Expo m;
        for (int g = 0; g < kNumGens; ++g) m.e[g] = min_exp(g);
        return m;
    }
    // Multiply by the monomial u^s.e[0].. (unit shift).
    Laurent shifted(const Expo& s) const {
        Laurent r;
        for (const auto& [x, c] : terms_) r.terms_[x + s] = c;
        return r;
    }

    // Rational content: positive rational c such that (*this)/c has coprime
    // integer coefficients; sign carried by the leading coefficient.
    Rat content() const {
        if (terms_.empty()) return Rat(0);
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [x, c] : terms_) {
            (void)x;
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
            den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, boost::multiprecision::denominator(c)) *
                      boost::multiprecision::denominator(c);
        }
        if (num_gcd < 0) num_gcd = -num_gcd;
        return Rat(num_gcd, den_lcm);
    }

    // Write *this = sign * content * monomial * primitive_part, where the
    // primitive part has min exponent 0 in every generator, integer coprime
    // coefficients, and positive leading coefficient.
    struct UnitDecomp;
    UnitDecomp unit_decompose() const;

    std::complex<double> eval(const std::array<std::complex<double>, kNumGens>& pt) const {
        std::complex<double> s = 0.0;
        for (const auto& [x, c] : terms_) {
            std::complex<double> t(static_cast<double>(c));
            for (int g = 0; g < kNumGens; ++g)
                if (x.e[g] != 0) t *= std::pow(pt[g], x.e[g]);
            s += t;
        }
        return s;
    }

    std::string to_string() const;

private:
    TermMap terms_;
};

struct Laurent::UnitDecomp {
    int sign = 1;       // +-1
    Rat content{1};     // positive rational
    Expo unit;          // monomial shift
    Laurent primitive;  // canonical polynomial part
};

inline Laurent::UnitDecomp Laurent::unit_decompose() const {
    UnitDecomp d;
    if (terms_.empty()) {
        d.content = 0;
        return d;
    }
    d.unit = min_exps();
    Rat c = content();
    Laurent p;
    Expo neg;
    for (int g = 0; g < kNumGens; ++g) neg.e[g] = -d.unit.e[g];
    for (const auto& [x, cc] : terms_) p.terms_[x + neg] = cc / c;
    if (p.leading().second < 0) {
        d.sign = -1;
        p = -p;
    }
    d.content = c;
    d.primitive = std::move(p);
    return d;
}

// ---------------------------------------------------------------------------
// Printing (canonical: descending graded-lex term order).

inline std::string rat_to_string(const Rat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

inline std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed_coeff = false;
        if (ac != 1 || it->first == Expo{}) {
            os << rat_to_string(ac);
            printed_coeff = true;
        }
        for (int g = 0; g < kNumGens; ++g) {
            int e = it->first.e[g];
            if (e == 0) continue;
            if (printed_coeff) os << "*";
            os << kGenNames[g];
            if (e != 1) os << "^" << e;
            printed_coeff = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact division: returns q with a = q*b; throws if the division is not exact.
// Works by leading-term cancellation under the graded-lex order, which
// terminates exactly when b | a in the Laurent ring.

inline Laurent divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
    Laurent rem = a, q;
    auto [lb, cb] = b.is_zero() ? std::pair<Expo, Rat>{} : b.leading();
    while (!rem.is_zero()) {
        auto [lr, cr] = rem.leading();
        Expo x = lr - lb;
        Rat c = cr / cb;
        q.add_term(x, c);
        rem = rem - Laurent::monomial(c, x) * b;
        if (!rem.is_zero()) {
            GradedLex lt;
            if (!lt(rem.leading().first, lr)) throw std::domain_error("divide_exact: not exact");
        }
    }
    return q;
}

inline bool try_divide_exact(const Laurent& a, const Laurent& b, Laurent& out) {
    try {
        out = divide_exact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Multivariate gcd via recursive subresultant PRS.
//
// Laurent units (rational multiples of monomials) are stripped first; the
// returned gcd is canonical: min exponent 0 in every generator, integer
// coprime coefficients, positive leading coefficient.

namespace detail {

// View of a Laurent polynomial as univariate in generator g with Laurent
// coefficients in the remaining generators.
inline std::map<int, Laurent> univariate_view(const Laurent& p, int g) {
    std::map<int, Laurent> coeffs;
    for (const auto& [x, c] : p.terms()) {
        Expo y = x;
        int d = y.e[g];
        y.e[g] = 0;
        coeffs[d].add_term(y, c);
    }
    return coeffs;
}

inline Laurent from_univariate(const std::map<int, Laurent>& coeffs, int g) {
    Laurent p;
    for (const auto& [d, c] : coeffs) {
        Expo shift;
        shift.e[g] = d;
        p += c.shifted(shift);
    }
    return p;
}

inline int univ_degree(const std::map<int, Laurent>& coeffs) {
    return coeffs.empty() ? -1 : coeffs.rbegin()->first;
}

Laurent gcd_impl(Laurent a, Laurent b);
Laurent gcd_z(Laurent a, Laurent b);

// Content of a univariate view (gcd of its Laurent coefficients).
inline Laurent univ_content(const std::map<int, Laurent>& coeffs) {
    Laurent c;
    for (const auto& [d, cc] : coeffs) {
        (void)d;
        c = c.is_zero() ? cc : gcd_impl(c, cc);
        if (c.is_one()) break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Modular multivariate gcd (Brown's algorithm).
//
// The gcd over the integers is reconstructed from gcds modulo machine-word
// primes; each modular gcd is reconstructed from univariate gcds over F_p by
// dense interpolation on the non-main variables.  The interpolation target is
// Ghat = gamma * g / lc(g), where gamma = gcd of the leading coefficients
// with respect to the main variable (computed recursively over Z): for
// primitive inputs Ghat is an integer polynomial by Gauss's lemma, so it can
// be assembled by CRT and the true gcd recovered as its primitive part.

namespace modgcd {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
inline u64 next_prime_below(u64 n) {
    while (!is_prime(n)) --n;
    return n;
}

// Sparse polynomial over F_p sharing the Expo keys (all exponents >= 0 here).
using MPoly = std::map<Expo, u64, GradedLex>;

inline MPoly reduce_mod(const Laurent& a, u64 p) {
    MPoly r;
    for (const auto& [x, c] : a.terms()) {
        Int num = boost::multiprecision::numerator(c);
        Int den = boost::multiprecision::denominator(c);
        Int nm = num % p;
        if (nm < 0) nm += p;
        u64 nv = static_cast<u64>(nm);
        if (den != 1) {
            Int dm = den % p;
            if (dm == 0) throw std::overflow_error("prime divides denominator");
            nv = mulmod(nv, invmod(static_cast<u64>(dm), p), p);
        }
        if (nv != 0) r[x] = nv;
    }
    return r;
}

inline MPoly eval_mod(const MPoly& a, int var, u64 val, u64 p) {
    MPoly r;
    for (const auto& [x, c] : a) {
        Expo y = x;
        int e = y.e[var];
        y.e[var] = 0;
        u64 v = mulmod(c, powmod(val, e, p), p);
        auto [it, ins] = r.emplace(y, v);
        if (!ins) {
            it->second = addmod(it->second, v, p);
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

inline int mdeg(const MPoly& a, int var) {
    int d = 0;
    for (const auto& [x, c] : a) { (void)c; d = std::max(d, x.e[var]); }
    return d;
}

// Monic univariate gcd over F_p (dense Euclid); inputs nonzero.
inline std::vector<u64> univ_gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 lb = invmod(b.back(), p);
        for (int k = static_cast<int>(a.size()) - static_cast<int>(b.size()); k >= 0; --k) {
            u64 f = mulmod(a[k + b.size() - 1], lb, p);
            if (f == 0) continue;
            for (size_t i = 0; i < b.size(); ++i)
                a[k + i] = submod(a[k + i], mulmod(f, b[i], p), p);
        }
        trim(a);
        std::swap(a, b);
    }
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

inline std::vector<u64> to_univ(const MPoly& a, int xm) {
    std::vector<u64> v(static_cast<size_t>(mdeg(a, xm)) + 1, 0);
    for (const auto& [x, c] : a) v[x.e[xm]] = c;
    return v;
}

struct GridState {
    u64 p;
    int xm;
    std::vector<int> vars;                 // interpolation variables
    std::vector<std::vector<u64>> nodes;   // nodes per interpolation variable
    int leaf_deg = -1;                     // common degree of univariate gcd images
    bool bad = false;                      // inconsistent leaf degrees / zero gamma
};

// Newton interpolation of MPoly values along one variable.
inline MPoly interp_nodes(int var, const std::vector<u64>& xs, const std::vector<MPoly>& ys,
                          u64 p) {
    size_t n = xs.size();
    std::vector<MPoly> coef = ys;  // divided differences in place
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            u64 inv = invmod(submod(xs[i], xs[i - j], p), p);
            MPoly d = coef[i];
            for (const auto& [x, c] : coef[i - 1]) {
                auto [it, ins] = d.emplace(x, submod(0, c, p));
                if (!ins) {
                    it->second = submod(it->second, c, p);
                    if (it->second == 0) d.erase(it);
                }
            }
            for (auto& [x, c] : d) c = mulmod(c, inv, p);
            coef[i] = std::move(d);
        }
    // Horner expansion: acc = acc*(x - xs[i]) + coef[i]
    MPoly acc;
    for (size_t ii = n; ii-- > 0;) {
        MPoly next;
        for (const auto& [x, c] : acc) {
            Expo y = x;
            y.e[var] += 1;
            next[y] = c;  // exponents distinct, no clash from shift alone
        }
        u64 neg = submod(0, xs[ii], p);
        for (const auto& [x, c] : acc) {
            u64 v = mulmod(c, neg, p);
            auto [it, ins] = next.emplace(x, v);
            if (!ins) {
                it->second = addmod(it->second, v, p);
                if (it->second == 0) next.erase(it);
            }
        }
        for (const auto& [x, c] : coef[ii]) {
            auto [it, ins] = next.emplace(x, c);
            if (!ins) {
                it->second = addmod(it->second, c, p);
                if (it->second == 0) next.erase(it);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// Recursive grid evaluation: returns gamma(t)*monic_gcd at fully evaluated
// points, interpolated back along ctx.vars[0..vi].
inline MPoly grid_gcd(const MPoly& A, const MPoly& B, const MPoly& G, int vi, GridState& st) {
    if (st.bad) return {};
    if (vi < 0) {
        if (A.empty() || B.empty() || G.empty()) {
            st.bad = true;
            return {};
        }
        auto g = univ_gcd_mod(to_univ(A, st.xm), to_univ(B, st.xm), st.p);
        int d = static_cast<int>(g.size()) - 1;
        if (st.leaf_deg < 0)
            st.leaf_deg = d;
        else if (d != st.leaf_deg) {
            if (d < st.leaf_deg) st.leaf_deg = d;  // previous leaves were unlucky
            st.bad = true;
            return {};
        }
        u64 gs = G.begin()->second;  // G fully evaluated: single constant term
        MPoly r;
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            Expo x;
            x.e[st.xm] = static_cast<int>(i);
            r[x] = mulmod(g[i], gs, st.p);
        }
        return r;
    }
    int var = st.vars[vi];
    std::vector<MPoly> ys;
    ys.reserve(st.nodes[vi].size());
    for (u64 t : st.nodes[vi]) {
        ys.push_back(grid_gcd(eval_mod(A, var, t, st.p), eval_mod(B, var, t, st.p),
                              eval_mod(G, var, t, st.p), vi - 1, st));
        if (st.bad) return {};
    }
    return interp_nodes(var, st.nodes[vi], ys, st.p);
}

}  // namespace modgcd

// Integer content (assumes integer coefficients; sign of leading coeff kept).
inline Int int_content(const Laurent& a) {
    Int g = 0;
    for (const auto& [x, c] : a.terms()) {
        (void)x;
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
    }
    return g < 0 ? Int(-g) : g;
}

inline Laurent gcdz_of_coeffs(const Laurent& a, int var) {
    Laurent c;
    for (const auto& [d, cc] : univariate_view(a, var)) {
        (void)d;
        c = c.is_zero() ? cc : gcd_z(c, cc);
        if (c.is_one()) break;
    }
    return c;
}

// True gcd in Z[u,v,w1,w2] (integer-coefficient polynomial inputs, min
// exponents >= 0), including the integer content, positive leading sign.
inline Laurent gcd_z(Laurent a, Laurent b) {
    using namespace modgcd;
    if (a.is_zero() || b.is_zero()) throw std::logic_error("gcd_z: zero input");
    Int ia = int_content(a), ib = int_content(b);
    Int g0 = boost::multiprecision::gcd(ia, ib);
    a = a * Rat(Rat(1) / ia);
    b = b * Rat(Rat(1) / ib);
    if (a.is_constant() || b.is_constant()) return Laurent(Rat(g0));
    // Variables present in only one operand cannot survive into the gcd.
    while (true) {
        bool changed = false;
        for (int i = 0; i < kNumGens; ++i) {
            bool ina = a.max_exp(i) > 0, inb = b.max_exp(i) > 0;
            if (ina && !inb) {
                a = gcdz_of_coeffs(a, i);
                changed = true;
            } else if (inb && !ina) {
                b = gcdz_of_coeffs(b, i);
                changed = true;
            }
            if (a.is_constant() || b.is_constant()) return Laurent(Rat(g0));
        }
        if (!changed) break;
    }
    std::vector<int> shared;
    for (int i = 0; i < kNumGens; ++i)
        if (a.max_exp(i) > 0) shared.push_back(i);
    if (shared.empty()) return Laurent(Rat(g0));
    // Main variable: largest minimum degree.
    int xm = shared[0];
    int best = -1;
    for (int v : shared) {
        int d = std::min(a.max_exp(v), b.max_exp(v));
        if (d > best) {
            best = d;
            xm = v;
        }
    }
    // Contents with respect to the main variable.
    Laurent ca = gcdz_of_coeffs(a, xm), cb = gcdz_of_coeffs(b, xm);
    Laurent cont = gcd_z(ca, cb);
    Laurent A = divide_exact(a, ca), B = divide_exact(b, cb);
    Laurent lcA = univariate_view(A, xm).rbegin()->second;
    Laurent lcB = univariate_view(B, xm).rbegin()->second;
    Laurent gamma = (lcA.is_constant() && lcB.is_constant())
                        ? Laurent(Rat(boost::multiprecision::gcd(
                              Int(boost::multiprecision::numerator(lcA.content())),
                              Int(boost::multiprecision::numerator(lcB.content())))))
                        : gcd_z(lcA, lcB);
    // Interpolation variables and per-variable node counts.
    std::vector<int> ivars;
    std::vector<int> bounds;
    for (int v : shared) {
        if (v == xm) continue;
        ivars.push_back(v);
        bounds.push_back(std::min(A.max_exp(v), B.max_exp(v)) + gamma.max_exp(v));
    }
    // CRT reconstruction of Ghat = gamma * g / lc(g).
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    Int M = 0;
    std::map<Expo, Int, GradedLex> lift;
    int cur_deg = -1;
    int stable = 0;
    u64 prime = 2147483648ULL;
    for (int pi = 0; pi < 200; ++pi) {
        prime = modgcd::next_prime_below(prime - 1);
        MPoly Ap, Bp, Gp;
        try {
            Ap = reduce_mod(A, prime);
            Bp = reduce_mod(B, prime);
            Gp = reduce_mod(gamma, prime);
        } catch (const std::overflow_error&) {
            continue;
        }
        if (mdeg(Ap, xm) != A.max_exp(xm) || mdeg(Bp, xm) != B.max_exp(xm) || Gp.empty())
            continue;  // prime kills a leading coefficient
        MPoly Ghat;
        bool ok = false;
        GridState st;
        for (int attempt = 0; attempt < 12 && !ok; ++attempt) {
            st.p = prime;
            st.xm = xm;
            st.vars = ivars;
            st.nodes.clear();
            st.bad = false;
            // keep st.leaf_deg across attempts: the minimum seen is an upper
            // bound for the true degree
            for (size_t i = 0; i < ivars.size(); ++i) {
                std::vector<u64> ns;
                while (static_cast<int>(ns.size()) < bounds[i] + 1) {
                    u64 t = 1 + rng() % (prime - 1);
                    if (std::find(ns.begin(), ns.end(), t) == ns.end()) ns.push_back(t);
                }
                st.nodes.push_back(std::move(ns));
            }
            Ghat = grid_gcd(Ap, Bp, Gp, static_cast<int>(ivars.size()) - 1, st);
            ok = !st.bad;
        }
        if (!ok) continue;
        if (st.leaf_deg == 0) return Laurent(Rat(g0)) * cont;  // coprime beyond content
        if (cur_deg >= 0 && st.leaf_deg > cur_deg) continue;   // unlucky prime
        if (cur_deg < 0 || st.leaf_deg < cur_deg) {
            cur_deg = st.leaf_deg;
            M = 0;
            lift.clear();
            stable = 0;
        }
        // CRT merge.
        bool changed = false;
        if (M == 0) {
            for (const auto& [x, c] : Ghat) lift[x] = c;
            M = prime;
            changed = true;
        } else {
            Int newM = M * prime;
            std::map<Expo, Int, GradedLex> merged;
            auto keys = lift;
            for (const auto& [x, c] : Ghat)
                if (!keys.count(x)) keys[x] = 0;
            for (auto& [x, c0] : keys) {
                Int r = c0 % M;
                if (r < 0) r += M;
                auto it = Ghat.find(x);
                u64 rp = it == Ghat.end() ? 0 : it->second;
                // solve c = r (mod M), c = rp (mod prime)
                Int mInv = 1;
                {
                    Int mp = M % prime;
                    mInv = Int(modgcd::invmod(static_cast<u64>(mp), prime));
                }
                Int diff = (Int(rp) - r % prime + prime) % prime;
                Int c = r + M * ((diff * mInv) % prime);
                // symmetric range
                if (c * 2 > newM) c -= newM;
                merged[x] = c;
            }
            M = newM;
            // compare with previous symmetric lift
            std::map<Expo, Int, GradedLex> prev;
            for (auto& [x, c] : lift) prev[x] = c;
            changed = (merged != prev);
            lift = std::move(merged);
        }
        if (!changed)
            ++stable;
        else
            stable = 0;
        if (stable >= 1 && M > 1) {
            Laurent C;
            for (const auto& [x, c] : lift)
                if (c != 0) C.add_term(x, Rat(c));
            if (!C.is_zero()) {
                Int cc = int_content(C);
                C = C * Rat(Rat(1) / cc);
                Laurent tmp;
                if (try_divide_exact(A, C, tmp) && try_divide_exact(B, C, tmp)) {
                    Laurent res = C * cont * Rat(g0);
                    // sign convention: positive leading coefficient
                    if (res.leading().second < 0) res = -res;
                    return res;
                }
            }
        }
    }
    throw std::runtime_error("NonTermination: modular gcd failed to stabilize");
}

inline Laurent gcd_impl(Laurent a, Laurent b) {
    if (a.is_zero()) return b.unit_decompose().primitive;
    if (b.is_zero()) return a.unit_decompose().primitive;
    a = a.unit_decompose().primitive;
    b = b.unit_decompose().primitive;
    if (a.is_constant() || b.is_constant()) return Laurent(1);
    return gcd_z(a, b).unit_decompose().primitive;
}

}  // namespace detail

// Canonical gcd (primitive, min-exponent 0, positive leading coefficient).
inline Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    return detail::gcd_impl(a, b);
}

// ---------------------------------------------------------------------------
// Square-free decomposition of a primitive polynomial part:
// p = s^2 * r with r square-free; both returned primitive up to sign.
// Algorithm: with w = squarefree part p / gcd(p, all partials) and
// (s', r') the decomposition of that gcd, one has s = s'*r', r = w/r'.

inline void squarefree_decompose(const Laurent& p, Laurent& s, Laurent& r) {
    if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero");
    if (p.is_constant()) {
        s = Laurent(1);
        r = p;
        return;
    }
    Laurent g = p;
    for (int i = 0; i < kNumGens; ++i) {
        Laurent d = p.derivative(i);
        if (d.is_zero()) continue;
        g = laurent_gcd(g, d);
        if (g.is_constant()) break;
    }
    g = g.unit_decompose().primitive;
    if (g.is_constant()) {
        s = Laurent(1);
        r = p;
        return;
    }
    Laurent w = divide_exact(p, g);
    Laurent s1, r1;
    squarefree_decompose(g, s1, r1);
    s = s1 * r1;
    r = divide_exact(w, r1);
}

}  // namespace qglmn

#endif  // QGLMN_LAURENT_HPP
