// The tensor square V (x) V: graded coproduct action, the orthogonal
// submodule decomposition labelled by Young diagrams, highest weight
// vectors, even-subalgebra and full submodule bases, and the
// weight-partitioned Gram-Schmidt orthonormalisation.
#ifndef QGLMN_TENSOR_HPP
#define QGLMN_TENSOR_HPP

#include "qglmn/repn.hpp"

namespace qglmn {

// Sparse vector on V (x) V: entries index basis pairs |i> (x) |j>
// (1-based).  All vectors handled here are homogeneous in weight and
// grading.
struct TensorVector {
    std::map<std::pair<int, int>, Scalar> entries;

    bool is_zero() const { return entries.empty(); }
    Scalar entry(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Scalar() : it->second;
    }
    void add(int i, int j, const Scalar& v) {
        if (v.is_zero()) return;
        auto it = entries.find({i, j});
        if (it == entries.end()) {
            entries.emplace(std::make_pair(i, j), v);
        } else {
            it->second += v;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    static TensorVector unit(int i, int j) {
        TensorVector v;
        v.add(i, j, Scalar::one());
        return v;
    }

    friend TensorVector operator+(const TensorVector& a, const TensorVector& b) {
        TensorVector r = a;
        for (const auto& [ij, v] : b.entries) r.add(ij.first, ij.second, v);
        return r;
    }
    friend TensorVector operator-(const TensorVector& a, const TensorVector& b) {
        TensorVector r = a;
        for (const auto& [ij, v] : b.entries) r.add(ij.first, ij.second, -v);
        return r;
    }
    TensorVector operator-() const {
        TensorVector r;
        for (const auto& [ij, v] : entries) r.entries.emplace(ij, -v);
        return r;
    }
    friend TensorVector operator*(const Scalar& c, const TensorVector& a) {
        TensorVector r;
        for (const auto& [ij, v] : a.entries) r.add(ij.first, ij.second, c * v);
        return r;
    }
    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

    std::string to_string() const {
        std::string s;
        for (const auto& [ij, v] : entries) {
            if (!s.empty()) s += " + ";
            s += "[" + v.to_string() + "] |" + std::to_string(ij.first) + "," +
                 std::to_string(ij.second) + ">";
        }
        return s.empty() ? "0" : s;
    }
};

// Weight of a homogeneous tensor vector: the common sum of the slot
// weights over the support.
inline Weight tensor_weight(const Representation& rep, const TensorVector& v) {
    if (v.is_zero()) throw std::domain_error("ZeroVectorWeight");
    const auto& basis = rep.basis();
    const auto& [ij, c] = *v.entries.begin();
    return basis[ij.first - 1].weight + basis[ij.second - 1].weight;
}

// Grading of a homogeneous tensor vector: [i] + [j] mod 2.
inline int tensor_grading(const Representation& rep, const TensorVector& v) {
    if (v.is_zero()) throw std::domain_error("ZeroVectorGrading");
    const auto& basis = rep.basis();
    const auto& [ij, c] = *v.entries.begin();
    return (basis[ij.first - 1].grading + basis[ij.second - 1].grading) % 2;
}

namespace detail {

// Eigenvalue of K_a^N on a weight-lambda vector: q_a^{N lambda(a)} with
// q_a = q^{(-1)^{[a]}}.
inline Scalar cartan_eigenvalue(const AlgebraParams& p, int a, const Rat& N, const Weight& w) {
    const WeightEntry& e = w.entries[a - 1];
    Rat s = p.grading(a) == 0 ? Rat(1) : Rat(-1);
    Rat tc = 2 * s * N * e.c;
    Rat ta = 2 * s * N * e.alpha;
    if (boost::multiprecision::denominator(tc) != 1 ||
        boost::multiprecision::denominator(ta) != 1)
        throw std::domain_error("NonHalfIntegerCartanExponent");
    return Scalar(qpow_half(static_cast<int>(boost::multiprecision::numerator(tc)),
                            static_cast<int>(boost::multiprecision::numerator(ta))));
}

// Eigenvalue of K_a^{N} K_b^{-N} on a weight-lambda vector.
inline Scalar cartan_pair_eigenvalue(const AlgebraParams& p, int a, int b, const Rat& N,
                                     const Weight& w) {
    return cartan_eigenvalue(p, a, N, w) * cartan_eigenvalue(p, b, -N, w);
}

}  // namespace detail

// Action of the coproduct of a generator on a tensor vector.  For a
// Cartan power, Delta(K^N) = K^N (x) K^N.  For a simple E^a_b with
// S = sign(a-b),
//   Delta(E^a_b) = E^a_b (x) K_a^{S/2} Kbar_b^{S/2}
//                + Kbar_a^{S/2} K_b^{S/2} (x) E^a_b,
// applied with the graded rule (X (x) Y)(|i>|j>) = (-)^{[Y][i]} X|i> (x) Y|j>.
// Nonsimple generators act through the defining product
// E^a_b = E^a_c E^c_b - q_c^S E^c_b E^a_c since the coproduct is an
// algebra homomorphism.
inline TensorVector coproduct_action(const Representation& rep, const GenRef& g,
                                     const TensorVector& v) {
    const AlgebraParams& p = rep.params();
    const auto& basis = rep.basis();
    TensorVector out;
    if (g.is_cartan()) {
        for (const auto& [ij, c] : v.entries) {
            Scalar s = detail::cartan_eigenvalue(p, g.a, g.exponent, basis[ij.first - 1].weight) *
                       detail::cartan_eigenvalue(p, g.a, g.exponent, basis[ij.second - 1].weight);
            out.add(ij.first, ij.second, c * s);
        }
        return out;
    }
    if (std::abs(g.a - g.b) > 1) {
        int S = g.a > g.b ? 1 : -1;
        int c = g.b + S;
        GenRef ac = GenRef::E(g.a, c), cb = GenRef::E(c, g.b);
        return coproduct_action(rep, ac, coproduct_action(rep, cb, v)) -
               q_sub(p, c, S) * coproduct_action(rep, cb, coproduct_action(rep, ac, v));
    }
    Rat half_s(g.a > g.b ? 1 : -1, 2);
    const MatrixRep& E = rep.matrix(g);
    int gg = gen_grading(p, g);
    for (const auto& [ij, c] : v.entries) {
        int i = ij.first, j = ij.second;
        // E on the first slot; the Cartan factor on the second slot is even,
        // so no sign arises.
        Scalar kr = c * detail::cartan_pair_eigenvalue(p, g.a, g.b, half_s,
                                                       basis[j - 1].weight);
        for (const auto& [rc, e] : E.entries())
            if (rc.second == i) out.add(rc.first, j, kr * e);
        // E on the second slot; passing E past |i> costs (-)^{[E][i]}.
        Scalar kl = c * detail::cartan_pair_eigenvalue(p, g.a, g.b, -half_s,
                                                       basis[i - 1].weight);
        if (gg == 1 && basis[i - 1].grading == 1) kl = -kl;
        for (const auto& [rc, e] : E.entries())
            if (rc.second == j) out.add(i, rc.first, kl * e);
    }
    return out;
}

// Inner product on V (x) V: the basis pairs are orthonormal,
// (|i>|j>, |k>|l>) = delta^i_k delta^j_l, the graded signs from the
// dual-basis pairing cancelling exactly.  On formal real coefficients
// the self-pairing is the plain sum of squares; this is the
// normalisation the closed-form submodule bases satisfy.
inline Scalar tensor_inner(const Representation& rep, const TensorVector& v,
                           const TensorVector& w) {
    (void)rep;
    Scalar r;
    for (const auto& [ij, c] : v.entries) {
        auto it = w.entries.find(ij);
        if (it != w.entries.end()) r += c * it->second;
    }
    return r;
}

// Scale a vector so its graded self-pairing is exactly 1.  The raw norm
// must be a radical-free rational function; the canonical square root
// fixes the overall sign.
inline TensorVector normalized(const Representation& rep, const TensorVector& v) {
    Scalar nu = tensor_inner(rep, v, v);
    if (nu.is_zero()) throw std::domain_error("ZeroNorm");
    if (!nu.is_radical_free()) throw std::domain_error("NonRadicalFreeNorm");
    return Scalar::sqrt(nu.rational_part()).inverse() * v;
}

// One irreducible constituent of V (x) V, labelled by a Young diagram
// gamma fitting in an m x n box.
struct SubmoduleLabel {
    std::vector<int> gamma;  // partition, weakly decreasing parts <= n
    Weight weight;           // highest weight 2*Lambda + lambda_gamma
    int z_level = 0;         // sum of the parts
    Int dim0{0};             // dimension of the even-subalgebra top component
    Int dim{0};              // dimension of the constituent
};

// Highest weight of the constituent for diagram gamma: even part
// (0,...,0, -gamma_r, ..., -gamma_1), odd part (2 alpha + gamma'_j)_j
// with gamma' the conjugate partition.
inline Weight submodule_weight(const AlgebraParams& p, const std::vector<int>& gamma) {
    Weight w = Weight::zero(p.dim());
    int r = static_cast<int>(gamma.size());
    for (int t = 0; t < r; ++t) w.entries[p.m - 1 - t].c = -gamma[t];
    for (int j = 1; j <= p.n; ++j) {
        int conj = 0;
        for (int part : gamma)
            if (part >= j) ++conj;
        w.entries[p.m + j - 1] = WeightEntry{Rat(conj), Rat(2)};
    }
    return w;
}

// The multiplicity-free decomposition of V (x) V: one constituent per
// Young diagram with at most m rows and n columns, sorted by level and
// then by decreasing highest weight.  Only m >= n is covered here.
inline std::vector<SubmoduleLabel> decomposition(const AlgebraParams& p) {
    if (p.n > p.m) throw std::domain_error("NotSupported");
    std::vector<std::vector<int>> diagrams;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        diagrams.push_back(cur);
        if (static_cast<int>(cur.size()) == p.m) return;
        for (int part = 1; part <= max_part; ++part) {
            cur.push_back(part);
            self(self, part);
            cur.pop_back();
        }
    };
    rec(rec, p.n);
    std::vector<SubmoduleLabel> labels;
    for (auto& gamma : diagrams) {
        // rec caps each part by the previous one, so gamma is already
        // weakly decreasing
        SubmoduleLabel lab;
        lab.gamma = gamma;
        lab.weight = submodule_weight(p, gamma);
        lab.z_level = 0;
        for (int part : gamma) lab.z_level += part;
        auto [d0, d] = kac_weyl_dim(p, lab.weight);
        lab.dim0 = d0;
        lab.dim = d;
        labels.push_back(std::move(lab));
    }
    std::sort(labels.begin(), labels.end(), [](const SubmoduleLabel& x, const SubmoduleLabel& y) {
        if (x.z_level != y.z_level) return x.z_level < y.z_level;
        return weight_compare(x.weight, y.weight) < 0;
    });
    return labels;
}

namespace detail {

// Fraction-free Gauss-Jordan elimination over Scalar rows.  Each stored
// row keeps a pivot column that has been eliminated from all other rows
// by cross-multiplication, so no division is ever performed.
struct Eliminator {
    std::vector<std::pair<size_t, std::vector<Scalar>>> rows;  // (pivot, row)

    // Returns true if the row was independent (and was absorbed).
    bool add(std::vector<Scalar> row) {
        for (const auto& [piv, r] : rows) {
            if (row[piv].is_zero()) continue;
            Scalar f = row[piv];
            for (size_t t = 0; t < row.size(); ++t) row[t] = r[piv] * row[t] - f * r[t];
        }
        size_t piv = row.size();
        for (size_t t = 0; t < row.size(); ++t)
            if (!row[t].is_zero()) {
                piv = t;
                break;
            }
        if (piv == row.size()) return false;
        for (auto& [opiv, r] : rows) {
            if (r[piv].is_zero()) continue;
            Scalar f = r[piv];
            for (size_t t = 0; t < r.size(); ++t) r[t] = row[piv] * r[t] - f * row[t];
        }
        rows.emplace_back(piv, std::move(row));
        return true;
    }
};

}  // namespace detail

// The highest weight vector of a constituent: the unique (up to scale)
// weight-matching combination annihilated by every simple raising
// coproduct.  The unknown attached to the first pair in slot-2-major
// order is set to 1 before normalisation, which pins the sign.
inline TensorVector highest_weight_vector(const Representation& rep,
                                          const SubmoduleLabel& label) {
    const AlgebraParams& p = rep.params();
    const auto& basis = rep.basis();
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= rep.dim(); ++j)
        for (int i = 1; i <= rep.dim(); ++i)
            if (basis[i - 1].weight + basis[j - 1].weight == label.weight)
                pairs.emplace_back(i, j);
    if (pairs.empty()) throw std::domain_error("RankDeficient");
    size_t T = pairs.size();

    detail::Eliminator elim;
    // one block of constraint rows per simple raising generator
    for (int a = 1; a < p.dim(); ++a) {
        GenRef g = GenRef::E(a, a + 1);
        std::map<std::pair<int, int>, std::vector<Scalar>> block;
        for (size_t t = 0; t < T; ++t) {
            TensorVector img =
                coproduct_action(rep, g, TensorVector::unit(pairs[t].first, pairs[t].second));
            for (const auto& [ij, c] : img.entries) {
                auto [it, fresh] = block.try_emplace(ij, T);
                it->second[t] = c;
            }
        }
        for (auto& [ij, row] : block) elim.add(std::move(row));
    }
    if (T - elim.rows.size() != 1) throw std::domain_error("RankDeficient");

    // back-substitute the one-dimensional null space without division
    std::vector<bool> is_pivot(T, false);
    for (const auto& [piv, r] : elim.rows) is_pivot[piv] = true;
    size_t free_col = T;
    for (size_t t = 0; t < T; ++t)
        if (!is_pivot[t]) free_col = t;
    std::vector<Scalar> theta(T);
    theta[free_col] = Scalar::one();
    for (const auto& [piv, r] : elim.rows) {
        // r[piv] * theta[piv] + r[free] * theta[free] = 0; rescale all
        // previously fixed components by r[piv] instead of dividing
        Scalar s = r[free_col] * theta[free_col];
        for (auto& th : theta) th *= r[piv];
        theta[piv] = -s;
    }
    // set the first unknown to 1, then normalise
    if (theta[0].is_zero()) throw std::domain_error("RankDeficient");
    Scalar scale = theta[0].inverse();
    TensorVector v;
    for (size_t t = 0; t < T; ++t) v.add(pairs[t].first, pairs[t].second, scale * theta[t]);
    return normalized(rep, v);
}

namespace detail {

// Rescale a vector by the inverse of the first term of its first entry,
// keeping the scale factor positive.  This strips the irrational
// prefactors that accumulate while generating vectors (their radicands
// need not factor, so carrying them would make every later inner
// product explode) without touching the overall sign.
inline TensorVector lead_reduced(const TensorVector& v) {
    const Scalar& c0 = v.entries.begin()->second;
    Scalar lead = Scalar::single(c0.terms().begin()->first, c0.terms().begin()->second);
    if (c0.terms().begin()->second.num().leading().second < 0) lead = -lead;
    return lead.inverse() * v;
}

// Closure of a seed set under the coproducts of the given lowering
// generators: breadth-first levels, each new vector normalised and
// discarded if linearly dependent on the vectors already found at its
// weight.  The result is sorted by decreasing weight, stably, so
// insertion order breaks ties inside a weight class.
inline std::vector<TensorVector> lowering_closure(const Representation& rep,
                                                  const std::vector<TensorVector>& seeds,
                                                  const std::vector<GenRef>& gens) {
    std::vector<TensorVector> found = seeds;
    auto wless = [](const Weight& x, const Weight& y) {
        for (size_t t = 0; t < x.entries.size(); ++t) {
            if (x.entries[t].c != y.entries[t].c) return x.entries[t].c < y.entries[t].c;
            if (x.entries[t].alpha != y.entries[t].alpha)
                return x.entries[t].alpha < y.entries[t].alpha;
        }
        return false;
    };
    // Per weight class keep pairwise-orthogonal raw remainders together
    // with their norms; projecting fraction-free (r := nu * r - <o,r> * o)
    // avoids normalising the shadow vectors, whose square roots would
    // otherwise blow up the coefficients.
    struct ShadowClass {
        std::vector<TensorVector> rem;
        std::vector<Scalar> norm;
    };
    std::map<Weight, ShadowClass, decltype(wless)> classes(wless);
    auto install = [&](const TensorVector& v) -> bool {
        ShadowClass& cl = classes[tensor_weight(rep, v)];
        TensorVector r = v;
        for (size_t t = 0; t < cl.rem.size(); ++t) {
            Scalar ip = tensor_inner(rep, cl.rem[t], r);
            if (!ip.is_zero()) r = cl.norm[t] * r - ip * cl.rem[t];
        }
        if (r.is_zero()) return false;
        cl.norm.push_back(tensor_inner(rep, r, r));
        cl.rem.push_back(std::move(r));
        return true;
    };
    for (const auto& s : seeds)
        if (!install(s)) throw std::domain_error("DependentSeed");
    std::vector<TensorVector> level = seeds;
    while (!level.empty()) {
        std::vector<TensorVector> next;
        // generator-outer iteration fixes the order in which same-weight
        // vectors are first produced, and hence the flag sequence the
        // later orthonormalisation works through
        for (const auto& g : gens)
            for (const auto& v : level) {
                TensorVector w = coproduct_action(rep, g, v);
                if (w.is_zero()) continue;
                w = lead_reduced(w);
                if (!install(w)) continue;
                next.push_back(w);
                found.push_back(w);
            }
        level = std::move(next);
    }
    for (auto& v : found) v = normalized(rep, v);
    std::stable_sort(found.begin(), found.end(),
                     [&](const TensorVector& x, const TensorVector& y) {
                         return weight_compare(tensor_weight(rep, x), tensor_weight(rep, y)) < 0;
                     });
    return found;
}

}  // namespace detail

// Orthonormal basis of the even-subalgebra top component: repeated even
// simple lowering coproducts applied to the highest weight vector.
inline std::vector<TensorVector> even_submodule_basis(const Representation& rep,
                                                      const TensorVector& hwv) {
    const AlgebraParams& p = rep.params();
    std::vector<GenRef> gens;
    for (int a = 1; a < p.dim(); ++a)
        if (a != p.m) gens.push_back(GenRef::E(a + 1, a));
    return detail::lowering_closure(rep, {hwv}, gens);
}

// Weight basis of the full constituent: the closure of the even-top
// basis under all odd lowering coproducts.  Nonorthogonal inside weight
// classes with multiplicity.
inline std::vector<TensorVector> full_submodule_basis(const Representation& rep,
                                                      const std::vector<TensorVector>& b0,
                                                      const SubmoduleLabel& label) {
    std::vector<TensorVector> b = detail::lowering_closure(rep, b0, odd_lowering_generators(rep.params()));
    if (Int(b.size()) != label.dim) throw std::domain_error("DimensionMismatch");
    return b;
}

// Gram-Schmidt inside each equal-weight class of a weight-sorted list;
// distinct weights are automatically orthogonal.  Every output vector
// has graded self-pairing exactly 1.
inline std::vector<TensorVector> gram_schmidt(const Representation& rep,
                                              const std::vector<TensorVector>& vs) {
    std::vector<TensorVector> out;
    size_t s = 0;
    while (s < vs.size()) {
        Weight w = tensor_weight(rep, vs[s]);
        size_t e = s + 1;
        while (e < vs.size() && tensor_weight(rep, vs[e]) == w) ++e;
        // fraction-free projections against lead-reduced remainders, so
        // no irrational prefactor is ever carried into an inner product
        std::vector<TensorVector> rem;
        std::vector<Scalar> norms;
        for (size_t l = s; l < e; ++l) {
            TensorVector r = vs[l];
            for (size_t t = 0; t < rem.size(); ++t) {
                Scalar ip = tensor_inner(rep, rem[t], r);
                if (!ip.is_zero()) r = norms[t] * r - ip * rem[t];
            }
            if (r.is_zero()) throw std::domain_error("ZeroNorm");
            r = detail::lead_reduced(r);
            Scalar nu = tensor_inner(rep, r, r);
            if (!nu.is_radical_free()) throw std::domain_error("NonRadicalFreePivot");
            out.push_back(Scalar::sqrt(nu.rational_part()).inverse() * r);
            norms.push_back(std::move(nu));
            rem.push_back(std::move(r));
        }
        s = e;
    }
    return out;
}

// A fully processed constituent: its label and an orthonormal weight
// basis.
struct SubmoduleBasis {
    SubmoduleLabel label;
    std::vector<TensorVector> vectors;
    bool orthonormal = false;
};

// End-to-end construction for one constituent.
inline SubmoduleBasis submodule_basis(const Representation& rep, const SubmoduleLabel& label) {
    TensorVector hwv = highest_weight_vector(rep, label);
    std::vector<TensorVector> b0 = even_submodule_basis(rep, hwv);
    if (Int(b0.size()) != label.dim0) throw std::domain_error("DimensionMismatch");
    std::vector<TensorVector> full = full_submodule_basis(rep, b0, label);
    return SubmoduleBasis{label, gram_schmidt(rep, full), true};
}

}  // namespace qglmn

#endif  // QGLMN_TENSOR_HPP
