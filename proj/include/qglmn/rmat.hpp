// Projectors onto the tensor-square constituents, the eigenvalues of the
// trigonometric and quantum R matrices on them, assembly of both R
// matrices, the spectral-limit cross-check, grading removal, and the
// permuted form.
#ifndef QGLMN_RMAT_HPP
#define QGLMN_RMAT_HPP

#include "qglmn/tensor.hpp"

namespace qglmn {

// Sparse exact rank-4 tensor on V (x) V.  The key {i, k, j, l} holds the
// coefficient of e^{ik}_{jl} = e^i_j (x) e^k_l, i.e. (i, k) are the two
// upper (row) indices and (j, l) the two lower (column) indices.
class Rank4Tensor {
public:
    using Key = std::array<int, 4>;

    Rank4Tensor() = default;
    explicit Rank4Tensor(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<Key, Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    size_t nonzero_count() const { return entries_.size(); }

    Scalar entry(int i, int k, int j, int l) const {
        auto it = entries_.find(Key{i, k, j, l});
        return it == entries_.end() ? Scalar() : it->second;
    }
    void add(const Key& key, const Scalar& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = entries_.emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    static Rank4Tensor identity(int dim) {
        Rank4Tensor t(dim);
        for (int a = 1; a <= dim; ++a)
            for (int b = 1; b <= dim; ++b) t.add(Key{a, b, a, b}, Scalar::one());
        return t;
    }

    friend Rank4Tensor operator+(const Rank4Tensor& a, const Rank4Tensor& b) {
        Rank4Tensor r = a;
        for (const auto& [k, v] : b.entries_) r.add(k, v);
        return r;
    }
    friend Rank4Tensor operator-(const Rank4Tensor& a, const Rank4Tensor& b) {
        Rank4Tensor r = a;
        for (const auto& [k, v] : b.entries_) r.add(k, -v);
        return r;
    }
    friend Rank4Tensor operator*(const Scalar& c, const Rank4Tensor& a) {
        Rank4Tensor r(a.dim_);
        for (const auto& [k, v] : a.entries_) r.add(k, c * v);
        return r;
    }
    friend bool operator==(const Rank4Tensor& a, const Rank4Tensor& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Rank4Tensor& a, const Rank4Tensor& b) { return !(a == b); }

    // Apply a Scalar-valued map entrywise (drops entries that become 0).
    template <typename F>
    Rank4Tensor mapped(F&& f) const {
        Rank4Tensor r(dim_);
        for (const auto& [k, v] : entries_) r.add(k, f(k, v));
        return r;
    }

private:
    int dim_ = 0;
    std::map<Key, Scalar> entries_;
};

// Graded composition of two rank-4 tensors as operators on V (x) V:
// (e^i_j (x) e^k_l)(e^p_r (x) e^s_t) = (-)^{([k]+[l])([p]+[r])}
// delta^j_p delta^l_s  e^i_r (x) e^k_t.
inline Rank4Tensor graded_mul(const Representation& rep, const Rank4Tensor& a,
                              const Rank4Tensor& b) {
    auto gr = [&](int x) { return rep.basis()[x - 1].grading; };
    Rank4Tensor r(a.dim());
    // group b's entries by their upper index pair for the sparse join
    std::map<std::pair<int, int>, std::vector<std::pair<Rank4Tensor::Key, Scalar>>> by_upper;
    for (const auto& [k, v] : b.entries()) by_upper[{k[0], k[1]}].emplace_back(k, v);
    for (const auto& [ka, va] : a.entries()) {
        auto it = by_upper.find({ka[2], ka[3]});
        if (it == by_upper.end()) continue;
        for (const auto& [kb, vb] : it->second) {
            int sign = ((gr(ka[1]) + gr(ka[3])) * (gr(kb[0]) + gr(kb[2]))) % 2;
            Scalar v = va * vb;
            r.add(Rank4Tensor::Key{ka[0], ka[1], kb[2], kb[3]}, sign ? -v : v);
        }
    }
    return r;
}

// Projector onto one constituent from its orthonormal basis:
// P = sum_l |Psi_l><Psi_l| with the graded outer product
// (|i>|j>)(<k|<l|) = (-)^{[j][k]} e^i_k (x) e^j_l and the dual-basis sign
// <Psi| = sum theta_{kl} (-)^{[k][l]} <k|<l|.
inline Rank4Tensor projector(const Representation& rep, const SubmoduleBasis& basis) {
    if (!basis.orthonormal) throw std::domain_error("NotOrthonormal");
    auto gr = [&](int x) { return rep.basis()[x - 1].grading; };
    Rank4Tensor p(rep.dim());
    for (const auto& v : basis.vectors)
        for (const auto& [ij, ti] : v.entries)
            for (const auto& [kl, tk] : v.entries) {
                int sign = (gr(kl.first) * gr(kl.second) + gr(ij.second) * gr(kl.first)) % 2;
                Scalar c = ti * tk;
                p.add(Rank4Tensor::Key{ij.first, ij.second, kl.first, kl.second},
                      sign ? -c : c);
            }
    return p;
}

// Eigenvalue of the trigonometric R matrix on the constituent labelled by
// gamma: the product over the diagram cells of [alpha+j-i+u]/[alpha+j-i-u],
// with u entering through w1 = q^{u/2}.
inline Scalar eigenvalue_trig(const SubmoduleLabel& label) {
    RationalFunction xi(1L);
    for (size_t j = 1; j <= label.gamma.size(); ++j)
        for (int i = 1; i <= label.gamma[j - 1]; ++i) {
            int tc = 2 * (static_cast<int>(j) - i);
            xi = xi * qbracket_half(tc, 2, 2) * qbracket_half(tc, 2, -2).inverse();
        }
    return Scalar(xi);
}

// Eigenvalue of the quantum R matrix: the spectral limit
// (-)^N q^{sum_j gamma_j (2 alpha + 2j - gamma_j - 1)} with N the graded
// level of the constituent.
inline Scalar eigenvalue_quantum(const SubmoduleLabel& label) {
    int c = 0;
    for (size_t j = 1; j <= label.gamma.size(); ++j)
        c += label.gamma[j - 1] * (2 * static_cast<int>(j) - label.gamma[j - 1] - 1);
    Scalar s(qpow_half(2 * c, 4 * label.z_level));
    return label.z_level % 2 ? -s : s;
}

// All projectors, in the decomposition order of the labels.
inline std::vector<Rank4Tensor> projectors(const Representation& rep,
                                           const std::vector<SubmoduleLabel>& labels) {
    std::vector<Rank4Tensor> ps;
    for (const auto& lab : labels) ps.push_back(projector(rep, submodule_basis(rep, lab)));
    return ps;
}

// Weighted sum of projectors with the chosen eigenvalue family; the
// coefficient of e^{11}_{11} comes out exactly 1.
inline Rank4Tensor rmatrix_from(const std::vector<SubmoduleLabel>& labels,
                                const std::vector<Rank4Tensor>& ps, bool quantum) {
    if (labels.size() != ps.size()) throw std::domain_error("SizeMismatch");
    Rank4Tensor r(ps.empty() ? 0 : ps.front().dim());
    for (size_t t = 0; t < ps.size(); ++t)
        r = r + (quantum ? eigenvalue_quantum(labels[t]) : eigenvalue_trig(labels[t])) * ps[t];
    return r;
}

inline Rank4Tensor rmatrix(const Representation& rep, bool quantum) {
    auto labels = decomposition(rep.params());
    return rmatrix_from(labels, projectors(rep, labels), quantum);
}

// Leading behaviour of a rational function as w1 -> infinity: the ratio of
// the numerator and denominator coefficients of the top power of w1.
// Throws if the degrees differ (no finite nonzero limit).
inline Scalar spectral_leading(const RationalFunction& f) {
    if (f.is_zero()) return Scalar();
    int dn = f.num().max_exp(2), dd = f.den().max_exp(2);
    if (dn != dd) throw std::domain_error("NoFiniteSpectralLimit");
    auto top = [](const Laurent& p, int d) {
        Laurent r;
        for (const auto& [x, c] : p.terms())
            if (x.e[2] == d) {
                Expo y = x;
                y.e[2] = 0;
                r.add_term(y, c);
            }
        return r;
    };
    return Scalar(RationalFunction(top(f.num(), dn), top(f.den(), dd)));
}

// True iff, for every label, the w1 -> infinity limit of the trigonometric
// eigenvalue equals the quantum eigenvalue exactly.
inline bool spectral_limit_check(const std::vector<SubmoduleLabel>& labels) {
    for (const auto& lab : labels)
        if (spectral_leading(eigenvalue_trig(lab).rational_part()) != eigenvalue_quantum(lab))
            return false;
    return true;
}

// Remove the parity factors from the graded Yang-Baxter equation:
// R^{a'b'}_{ab} -> (-)^{[a]([b]+[b'])} R^{a'b'}_{ab}.  With the key
// {a', b', a, b} this is the sign (-)^{[k2]([k3... lower-first times
// (lower-second + upper-second)).  Involutive.
inline Rank4Tensor ungrade(const Representation& rep, const Rank4Tensor& t) {
    auto gr = [&](int x) { return rep.basis()[x - 1].grading; };
    return t.mapped([&](const Rank4Tensor::Key& k, const Scalar& v) {
        return (gr(k[2]) * (gr(k[3]) + gr(k[1]))) % 2 ? -v : v;
    });
}

// Permuted form R = P * Rcheck: R^{a'b'}_{ab} = Rcheck^{b'a'}_{ab}, i.e.
// the two upper indices swap.  Involutive.
inline Rank4Tensor permute(const Rank4Tensor& t) {
    Rank4Tensor r(t.dim());
    for (const auto& [k, v] : t.entries())
        r.add(Rank4Tensor::Key{k[1], k[0], k[2], k[3]}, v);
    return r;
}

// Spectral substitutions used for the Yang-Baxter factors: the R matrix is
// built with spectral generator w1 = q^{u/2}; the same matrix at argument v
// substitutes w1 -> w2, and at u + v substitutes w1 -> w1 w2.
inline Rank4Tensor substitute_spectral(const Rank4Tensor& t, bool shift_by_both) {
    std::array<Expo, kNumGens> images;
    for (int g = 0; g < kNumGens; ++g) images[g].e[g] = 1;
    images[2] = Expo{};
    if (shift_by_both) images[2].e[2] = 1;
    images[2].e[3] = 1;
    return t.mapped([&](const Rank4Tensor::Key&, const Scalar& v) {
        return v.substitute_gens(images);
    });
}

}  // namespace qglmn

#endif  // QGLMN_RMAT_HPP
