// Construction of the 2^{mn}-dimensional module V with highest weight
// (0,...,0 | alpha,...,alpha): ordered weight basis from odd lowering
// words, normalization constants, and exact sparse matrices for every
// generator.
#ifndef QGLMN_REPN_HPP
#define QGLMN_REPN_HPP

#include "qglmn/pbw.hpp"

namespace qglmn {

struct BasisVector {
    int index = 1;       // 1-based position in the module basis
    Word word;           // ordered product of odd lowering generators
    Weight weight;
    int grading = 0;     // |word| mod 2
    int z_level = 0;     // |word|
};

// Sparse exact matrix over Scalar; rows/cols are 1-based basis indices.
class MatrixRep {
public:
    MatrixRep() = default;
    explicit MatrixRep(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Scalar entry(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Scalar() : it->second;
    }
    void add(int r, int c, const Scalar& v) {
        if (v.is_zero()) return;
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            entries_.emplace(std::make_pair(r, c), v);
        } else {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    MatrixRep transpose() const {
        MatrixRep t(dim_);
        for (const auto& [rc, v] : entries_) t.add(rc.second, rc.first, v);
        return t;
    }
    // Entrywise q -> 1/q (and alpha, x, y likewise inverted).
    MatrixRep bar_entries() const {
        MatrixRep t(dim_);
        for (const auto& [rc, v] : entries_) t.add(rc.first, rc.second, v.bar());
        return t;
    }
    friend MatrixRep operator+(const MatrixRep& a, const MatrixRep& b) {
        MatrixRep r = a;
        for (const auto& [rc, v] : b.entries_) r.add(rc.first, rc.second, v);
        return r;
    }
    friend MatrixRep operator-(const MatrixRep& a, const MatrixRep& b) {
        MatrixRep r = a;
        for (const auto& [rc, v] : b.entries_) r.add(rc.first, rc.second, -v);
        return r;
    }
    friend MatrixRep operator*(const Scalar& c, const MatrixRep& a) {
        MatrixRep r(a.dim_);
        for (const auto& [rc, v] : a.entries_) r.add(rc.first, rc.second, c * v);
        return r;
    }
    friend MatrixRep operator*(const MatrixRep& a, const MatrixRep& b) {
        MatrixRep r(a.dim_);
        // group b's entries by row for the sparse product
        for (const auto& [rc, va] : a.entries_) {
            auto it = b.entries_.lower_bound({rc.second, 0});
            for (; it != b.entries_.end() && it->first.first == rc.second; ++it)
                r.add(rc.first, it->first.second, va * it->second);
        }
        return r;
    }
    friend bool operator==(const MatrixRep& a, const MatrixRep& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const MatrixRep& a, const MatrixRep& b) { return !(a == b); }

    std::string to_string() const {
        std::string s;
        for (const auto& [rc, v] : entries_) {
            if (!s.empty()) s += " + ";
            s += "[" + v.to_string() + "] e^" + std::to_string(rc.first) + "_" +
                 std::to_string(rc.second);
        }
        return s.empty() ? "0" : s;
    }

private:
    int dim_ = 0;
    std::map<std::pair<int, int>, Scalar> entries_;
};

// Sparse column vector over the module basis (1-based indices).
using KetVector = std::map<int, Scalar>;

// Highest weight (0,...,0 | alpha,...,alpha).
inline Weight highest_weight(const AlgebraParams& p) {
    Weight w = Weight::zero(p.dim());
    for (int a = p.m + 1; a <= p.dim(); ++a) w.entries[a - 1] = WeightEntry{Rat(0), Rat(1)};
    return w;
}

// The odd lowering generators E^a_b, a in m+1..m+n, b in 1..m, in the
// total generator order.
inline std::vector<GenRef> odd_lowering_generators(const AlgebraParams& p) {
    std::vector<GenRef> gens;
    for (int a = p.m + 1; a <= p.dim(); ++a)
        for (int b = 1; b <= p.m; ++b) gens.push_back(GenRef::E(a, b));
    std::sort(gens.begin(), gens.end(),
              [&](const GenRef& x, const GenRef& y) { return gen_compare(p, x, y) < 0; });
    return gens;
}

// All 2^{mn} nonrepeated ordered products of odd lowering generators,
// numbered by decreasing weight within increasing z-graded levels.
inline std::vector<BasisVector> build_basis(const AlgebraParams& p) {
    auto olgs = odd_lowering_generators(p);
    int mn = static_cast<int>(olgs.size());
    Weight lambda = highest_weight(p);
    std::vector<BasisVector> basis;
    for (unsigned long mask = 0; mask < (1UL << mn); ++mask) {
        BasisVector v;
        v.weight = lambda;
        for (int j = 0; j < mn; ++j)
            if (mask & (1UL << j)) {
                v.word.push_back(olgs[j]);
                v.weight = v.weight + gen_weight(p, olgs[j]);
            }
        v.z_level = static_cast<int>(v.word.size());
        v.grading = v.z_level % 2;
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), [&](const BasisVector& x, const BasisVector& y) {
        if (x.z_level != y.z_level) return x.z_level < y.z_level;
        int wc = weight_compare(x.weight, y.weight);
        if (wc != 0) return wc < 0;
        // equal weights can occur for n >= 2; break ties by the letter order
        return std::lexicographical_compare(
            x.word.begin(), x.word.end(), y.word.begin(), y.word.end(),
            [&](const GenRef& g1, const GenRef& g2) { return gen_compare(p, g1, g2) < 0; });
    });
    for (size_t i = 0; i < basis.size(); ++i) basis[i].index = static_cast<int>(i) + 1;
    return basis;
}

class Representation {
public:
    explicit Representation(AlgebraParams p)
        : p_(p), lambda_(highest_weight(p)), basis_(build_basis(p)) {
        for (const auto& v : basis_) word_index_[v.word] = v.index;
        compute_betas();
    }

    const AlgebraParams& params() const { return p_; }
    const Weight& lambda() const { return lambda_; }
    const std::vector<BasisVector>& basis() const { return basis_; }
    const std::vector<Scalar>& betas() const { return betas_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    // Evaluate a normal-ordered element applied to the highest weight
    // vector.  Surviving terms are odd-lowering prefixes (basis words)
    // followed by Cartan powers; anything containing a raising or even
    // lowering generator annihilates.
    KetVector act_on_hwv(const AlgebraElement& normal) const {
        KetVector kv;
        for (const auto& [w, c] : normal.terms()) {
            size_t split = 0;
            while (split < w.size() && !w[split].is_cartan() && w[split].lifting() < 0 &&
                   gen_grading(p_, w[split]) == 1)
                ++split;
            bool killed = false;
            Scalar cartan = Scalar::one();
            for (size_t i = split; i < w.size(); ++i) {
                if (!w[i].is_cartan()) {
                    killed = true;  // raising or even lowering annihilates
                    break;
                }
                cartan *= cartan_on_hwv(w[i]);
            }
            if (killed) continue;
            Word prefix(w.begin(), w.begin() + split);
            auto it = word_index_.find(prefix);
            if (it == word_index_.end()) throw std::runtime_error("UnmatchedWord");
            Scalar v = c * cartan * betas_[it->second - 1].inverse();
            auto kit = kv.find(it->second);
            if (kit == kv.end()) {
                if (!v.is_zero()) kv.emplace(it->second, std::move(v));
            } else {
                kit->second += v;
                if (kit->second.is_zero()) kv.erase(kit);
            }
        }
        return kv;
    }

    // pi(g) as a sparse matrix, cached.  Cartan and simple raising via the
    // direct action on basis words; simple lowering as the transpose of the
    // raising partner; nonsimple recursively through the defining product.
    const MatrixRep& matrix(const GenRef& g) const {
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        MatrixRep m(dim());
        if (g.is_cartan() || (std::abs(g.a - g.b) == 1 && g.a < g.b)) {
            m = direct_matrix(g);
        } else if (std::abs(g.a - g.b) == 1) {
            m = matrix(GenRef::E(g.b, g.a)).transpose();
        } else {
            int S = g.a > g.b ? 1 : -1;
            int c = g.b + S;
            const MatrixRep& ac = matrix(GenRef::E(g.a, c));
            const MatrixRep& cb = matrix(GenRef::E(c, g.b));
            m = ac * cb - q_sub(p_, c, S) * (cb * ac);
        }
        return cache_.emplace(g, std::move(m)).first->second;
    }

    // The diagonal of the unexponentiated Cartan element: entry i is the
    // a-th weight component of basis vector i (a rational plus a rational
    // multiple of alpha).
    std::vector<WeightEntry> weight_diagonal(int a) const {
        std::vector<WeightEntry> d;
        for (const auto& v : basis_) d.push_back(v.weight.entries[a - 1]);
        return d;
    }

private:
    // K_a^N |1> = q_a^{N lambda_a} |1>; lambda_a = 0 below the diagonal
    // split, alpha above, so the scalar is 1 or q^{-N alpha}.
    Scalar cartan_on_hwv(const GenRef& k) const {
        if (k.a <= p_.m) return Scalar::one();
        Rat e = -2 * k.exponent;  // q_a = 1/q for odd a
        if (boost::multiprecision::denominator(e) != 1)
            throw std::domain_error("NonHalfIntegerCartanExponent");
        return Scalar(qpow_half(0, static_cast<int>(boost::multiprecision::numerator(e))));
    }

    // Vacuum expectation of a normal-ordered element: only pure Cartan
    // words survive between the highest weight vector and its dual.
    Scalar vacuum_expectation(const AlgebraElement& normal) const {
        Scalar r;
        for (const auto& [w, c] : normal.terms()) {
            Scalar cartan = Scalar::one();
            bool killed = false;
            for (const auto& g : w) {
                if (!g.is_cartan()) {
                    killed = true;
                    break;
                }
                cartan *= cartan_on_hwv(g);
            }
            if (!killed) r += c * cartan;
        }
        return r;
    }

    void compute_betas() {
        betas_.assign(basis_.size(), Scalar::one());
        for (const auto& v : basis_) {
            if (v.word.empty()) continue;  // beta_1 = 1
            AlgebraElement z =
                hermitian_conjugate(p_, AlgebraElement::single(v.word, Scalar::one())) *
                AlgebraElement::single(v.word, Scalar::one());
            Scalar norm = vacuum_expectation(normal_order(p_, z));
            if (!norm.is_radical_free()) throw std::domain_error("NonRadicalFreeNorm");
            betas_[v.index - 1] = Scalar::sqrt(norm.rational_part()).inverse();
        }
    }

    MatrixRep direct_matrix(const GenRef& g) const {
        MatrixRep m(dim());
        for (const auto& v : basis_) {
            AlgebraElement y = AlgebraElement::generator(g) *
                               AlgebraElement::single(v.word, betas_[v.index - 1]);
            KetVector col = act_on_hwv(normal_order(p_, y));
            for (const auto& [row, val] : col) m.add(row, v.index, val);
        }
        return m;
    }

    AlgebraParams p_;
    Weight lambda_;
    std::vector<BasisVector> basis_;
    std::map<Word, int> word_index_;
    std::vector<Scalar> betas_;
    mutable std::map<GenRef, MatrixRep> cache_;
};

}  // namespace qglmn

#endif  // QGLMN_REPN_HPP
