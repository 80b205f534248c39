// Normal-ordering rewrite engine: rewrites any element to its PBW normal
// form under the total generator order (odd lowering < odd raising < even
// lowering < Cartan < even raising) using the directed exchange-rule ledger.
#ifndef QGLMN_PBW_HPP
#define QGLMN_PBW_HPP

#include <functional>
#include <random>

#include "qglmn/algebra.hpp"

namespace qglmn {

enum class RewriteStrategy { Leftmost, Rightmost, Randomized };

struct NormalOrderOptions {
    long long budget = 10'000'000;  // maximum number of rewrites
    RewriteStrategy strategy = RewriteStrategy::Leftmost;
    unsigned rng_seed = 0;           // used by Randomized only
    std::function<void(const std::string&)> trace;  // optional debug sink
};

namespace detail {

// (-1)^g as a Scalar sign.
inline Scalar parity_sign(int g) { return g ? -Scalar::one() : Scalar::one(); }

// Delta_x = (-1)^{[x]} (q - qbar) as a Scalar.
inline Scalar delta_sub(const AlgebraParams& p, int x) {
    Scalar d{q_delta()};
    return p.grading(x) ? -d : d;
}

// 1/Delta_x.
inline Scalar delta_bar_sub(const AlgebraParams& p, int x) {
    return delta_sub(p, x).inverse();
}

// q_a^{e} for a rational exponent e; e must be a half-integer multiple
// so that it lands in the Laurent ring generated by u = q^{1/2}.
inline Scalar q_sub_rat(const AlgebraParams& p, int a, const Rat& e) {
    Rat two_e = e * 2;
    if (boost::multiprecision::denominator(two_e) != 1)
        throw std::domain_error("NonHalfIntegerCartanExponent");
    Int num = boost::multiprecision::numerator(two_e);
    int half_units = static_cast<int>(num);
    if (p.grading(a)) half_units = -half_units;
    return Scalar(qpow_half(half_units));
}

// True if the adjacent pair (g1, g2) triggers a rewrite.
inline bool pair_reducible(const AlgebraParams& p, const GenRef& g1, const GenRef& g2) {
    if (g1.is_cartan() && g2.is_cartan() && g1.a == g2.a) return true;  // merge
    if (g1 == g2 && !g1.is_cartan() && gen_grading(p, g1) == 1) return true;  // odd square
    return gen_compare(p, g1, g2) > 0;
}

// Apply the exchange ledger to the pair (g1, g2), returning the replacing
// element (a sum of short words).  Precondition: pair_reducible.
inline AlgebraElement rewrite_pair(const AlgebraParams& p, const GenRef& g1, const GenRef& g2,
                                   std::string* rule_id) {
    auto name = [&](const char* id) {
        if (rule_id) *rule_id = id;
    };
    const Scalar one = Scalar::one();

    // Cartan-Cartan: merge equal indices (eliding zero exponents) or swap.
    if (g1.is_cartan() && g2.is_cartan()) {
        if (g1.a == g2.a) {
            name("cartan-merge");
            Rat N = g1.exponent + g2.exponent;
            if (N == 0) return AlgebraElement::identity();
            return AlgebraElement::generator(GenRef::K(g1.a, N));
        }
        name("cartan-swap");
        return AlgebraElement::single(Word{g2, g1}, one);
    }

    // Cartan past a root generator: K_a^N E^b_c = q_a^{N(d^a_b - d^a_c)} E^b_c K_a^N.
    if (g1.is_cartan() || g2.is_cartan()) {
        const GenRef& k = g1.is_cartan() ? g1 : g2;
        const GenRef& e = g1.is_cartan() ? g2 : g1;
        int d = (k.a == e.a ? 1 : 0) - (k.a == e.b ? 1 : 0);
        Rat expo = k.exponent * d;
        if (!g1.is_cartan()) expo = -expo;  // moving K leftwards
        name(g1.is_cartan() ? "cartan-past-root" : "root-past-cartan");
        return AlgebraElement::single(Word{g2, g1}, q_sub_rat(p, k.a, expo));
    }

    int a = g1.a, b = g1.b, c = g2.a, d = g2.b;
    int gr1 = gen_grading(p, g1), gr2 = gen_grading(p, g2);

    // Squared odd generator vanishes.
    if (a == c && b == d) {
        name("odd-square");
        return AlgebraElement::zero();
    }

    // E^a_b E^b_a = (-1)^{[E^a_b]} E^b_a E^a_b + (1/Delta_a)(K_a Kbar_b - Kbar_a K_b).
    if (b == c && a == d) {
        name("opposite-pair");
        AlgebraElement r = AlgebraElement::single(Word{g2, g1}, parity_sign(gr1));
        Scalar db = delta_bar_sub(p, a);
        r.add(Word{GenRef::K(a), GenRef::K(b, Rat(-1))}, db);
        r.add(Word{GenRef::K(a, Rat(-1)), GenRef::K(b)}, -db);
        return r;
    }

    // Shared middle index, composing: E^A_C E^C_B with A=a, C=b=c, B=d.
    if (b == c) {
        int A = a, C = b, B = d;
        GenRef EAB = GenRef::E(A, B);
        name("compose-forward");
        if ((A < C && C < B) || (B < C && C < A)) {
            AlgebraElement r = AlgebraElement::generator(EAB);
            r.add(Word{g2, g1}, q_sub(p, C, A > B ? 1 : -1));
            return r;
        }
        AlgebraElement r;
        if (C < B && B < A) {
            r.add(Word{g2, g1}, parity_sign(gen_grading(p, g2)));
            r.add(Word{GenRef::K(C), GenRef::K(B, Rat(-1)), EAB}, one);
        } else if (C < A && A < B) {
            r.add(Word{g2, g1}, parity_sign(gen_grading(p, g1)));
            r.add(Word{EAB, GenRef::K(A), GenRef::K(C, Rat(-1))}, one);
        } else if (B < A && A < C) {
            r.add(Word{g2, g1}, parity_sign(gen_grading(p, g1)));
            r.add(Word{EAB, GenRef::K(C), GenRef::K(A, Rat(-1))}, one);
        } else {  // A < B && B < C
            r.add(Word{g2, g1}, parity_sign(gen_grading(p, g2)));
            r.add(Word{GenRef::K(B), GenRef::K(C, Rat(-1)), EAB}, one);
        }
        return r;
    }

    // Shared outer index, decomposing: E^C_B E^A_C with C=a=d's partner:
    // here g1 = E^{C'}_{B'}, g2 = E^{A'}_{C'} with C' = a = d.
    if (a == d) {
        int C = a, B = b, A = c;
        GenRef EAB = GenRef::E(A, B);
        name("compose-reverse");
        if ((A < C && C < B) || (B < C && C < A)) {
            Scalar qc = q_sub(p, C, B > A ? 1 : -1);
            AlgebraElement r = AlgebraElement::single(Word{g2, g1}, qc);
            r.add(Word{EAB}, -qc);
            return r;
        }
        Scalar sg;
        Word tail;
        bool tail_right = false;
        if (C < B && B < A) {
            sg = parity_sign(gen_grading(p, g1));
            tail = Word{GenRef::K(C), GenRef::K(B, Rat(-1)), EAB};
        } else if (C < A && A < B) {
            sg = parity_sign(gen_grading(p, g2));
            tail = Word{EAB, GenRef::K(A), GenRef::K(C, Rat(-1))};
            tail_right = true;
        } else if (B < A && A < C) {
            sg = parity_sign(gen_grading(p, g2));
            tail = Word{EAB, GenRef::K(C), GenRef::K(A, Rat(-1))};
            tail_right = true;
        } else {  // A < B && B < C
            sg = parity_sign(gen_grading(p, g1));
            tail = Word{GenRef::K(B), GenRef::K(C, Rat(-1)), EAB};
        }
        (void)tail_right;
        AlgebraElement r = AlgebraElement::single(Word{g2, g1}, sg);
        r.add(tail, -sg);
        return r;
    }

    // Same row (shared upper) or same column (shared lower): pure exchange
    // with a kappa factor depending on the middle index.
    if (a == c || b == d) {
        int shared = (a == c) ? a : b;
        int x = (a == c) ? b : a;  // first free index
        int y = (a == c) ? d : c;  // second free index
        name(a == c ? "same-row-swap" : "same-column-swap");
        // middle element of {x, y, shared}
        int lo = std::min({x, y, shared}), hi = std::max({x, y, shared});
        int z = x + y + shared - lo - hi;
        Scalar kappa = one;
        if (z != shared) {
            int gz = (p.grading(z) + p.grading(shared)) % 2;
            kappa = parity_sign(gz) * q_sub(p, shared, x > y ? -1 : 1);
        }
        return AlgebraElement::single(Word{g2, g1}, kappa);
    }

    // Four distinct indices: graded swap plus a correction term for
    // interleaved or half-nested index patterns.
    name("disjoint-swap");
    AlgebraElement r = AlgebraElement::single(Word{g2, g1}, parity_sign(gr1 * gr2));
    GenRef Ead = GenRef::E(a, d), Ecb = GenRef::E(c, b);
    if (a < c && c < b && b < d) {
        r.add(Word{Ead, Ecb}, delta_sub(p, b));
    } else if (c < a && a < d && d < b) {
        r.add(Word{Ead, Ecb}, -delta_sub(p, d));
    } else if (b < d && d < a && a < c) {
        r.add(Word{Ecb, Ead}, delta_sub(p, a));
    } else if (d < b && b < c && c < a) {
        r.add(Word{Ecb, Ead}, -delta_sub(p, c));
    } else if (a < d && d < b && b < c) {
        r.add(Word{GenRef::K(b, Rat(-1)), GenRef::K(d), Ead, Ecb}, -delta_sub(p, b));
    } else if (d < a && a < c && c < b) {
        r.add(Word{Ecb, Ead, GenRef::K(a, Rat(-1)), GenRef::K(c)}, delta_sub(p, c));
    } else if (b < c && c < a && a < d) {
        r.add(Word{Ead, Ecb, GenRef::K(c, Rat(-1)), GenRef::K(a)}, -delta_sub(p, c));
    } else if (c < b && b < d && d < a) {
        r.add(Word{GenRef::K(d, Rat(-1)), GenRef::K(b), Ecb, Ead}, delta_sub(p, b));
    }
    return r;
}

// Position of the reducible pair to rewrite in w, or -1 if w is normal.
inline int find_pair(const AlgebraParams& p, const Word& w, RewriteStrategy strategy,
                     std::mt19937& rng) {
    std::vector<int> hits;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
        if (pair_reducible(p, w[i], w[i + 1])) {
            if (strategy == RewriteStrategy::Leftmost) return i;
            hits.push_back(i);
        }
    }
    if (hits.empty()) return -1;
    if (strategy == RewriteStrategy::Rightmost) return hits.back();
    std::uniform_int_distribution<size_t> pick(0, hits.size() - 1);
    return hits[pick(rng)];
}

}  // namespace detail

// True iff every word is sorted under gen_compare with Cartan powers merged,
// no zero Cartan exponents, and no squared odd generators.
inline bool is_normal(const AlgebraParams& p, const AlgebraElement& e) {
    for (const auto& [w, c] : e.terms()) {
        for (const auto& g : w)
            if (g.is_cartan() && g.exponent == 0) return false;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (detail::pair_reducible(p, w[i], w[i + 1])) return false;
    }
    return true;
}

// Rewrite e to its PBW normal form: repeatedly replace a reducible adjacent
// pair (leftmost by default) until no word contains one.
inline AlgebraElement normal_order(const AlgebraParams& p, const AlgebraElement& e,
                                   const NormalOrderOptions& opts = {}) {
    std::mt19937 rng(opts.rng_seed);
    AlgebraElement done;
    std::map<Word, Scalar> pending;
    for (const auto& [w, c] : e.terms()) {
        Word cleaned;  // elide identity Cartan powers up front
        for (const auto& g : w)
            if (!(g.is_cartan() && g.exponent == 0)) cleaned.push_back(g);
        auto it = pending.find(cleaned);
        if (it == pending.end())
            pending.emplace(std::move(cleaned), c);
        else
            it->second += c;
    }
    long long steps = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar coeff = it->second;
        pending.erase(it);
        if (coeff.is_zero()) continue;
        int pos = detail::find_pair(p, w, opts.strategy, rng);
        if (pos < 0) {
            done.add(std::move(w), std::move(coeff));
            continue;
        }
        if (++steps > opts.budget) throw std::runtime_error("NonTermination");
        std::string rule_id;
        AlgebraElement rep =
            detail::rewrite_pair(p, w[pos], w[pos + 1], opts.trace ? &rule_id : nullptr);
        if (opts.trace) {
            std::string line = rule_id + ": ";
            for (const auto& g : w) line += g.to_string() + " ";
            line += "-> " + std::to_string(rep.terms().size()) + " terms";
            opts.trace(line);
        }
        for (const auto& [frag, fc] : rep.terms()) {
            Word nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), frag.begin(), frag.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            auto pit = pending.find(nw);
            if (pit == pending.end())
                pending.emplace(std::move(nw), coeff * fc);
            else
                pit->second += coeff * fc;
        }
    }
    return done;
}

}  // namespace qglmn

#endif  // QGLMN_PBW_HPP
