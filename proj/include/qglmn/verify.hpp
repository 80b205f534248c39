// Yang-Baxter verification: the graded and plain trigonometric equations
// and the braid relation, in exact symbolic and sampled numeric modes,
// plus sparsity / dimension reports against the built-in reference table.
#ifndef QGLMN_VERIFY_HPP
#define QGLMN_VERIFY_HPP

#include <complex>
#include <random>
#include <string>

#include "qglmn/rmat.hpp"

namespace qglmn {

struct YbeReport {
    std::string kind;  // "graded-trig" | "trig" | "braid"
    std::string mode;  // "symbolic" | "numeric"
    bool pass = false;
    double max_residual = 0.0;  // numeric mode; 0 for a symbolic pass
    std::vector<std::array<double, kNumGens>> samples;  // points used (numeric)
};

namespace detail {

// Free indices of the six-fold contraction, in the order a, b, c (lower)
// then a'', b'', c'' (upper).
using SixKey = std::array<int, 6>;

template <typename V>
bool value_is_zero(const V& v) {
    return v.is_zero();
}
inline bool value_is_zero(const std::complex<double>&) { return false; }

template <typename V>
void side_add(std::map<SixKey, V>& out, const SixKey& k, const V& v) {
    auto [it, inserted] = out.emplace(k, v);
    if (!inserted) it->second += v;
}

template <typename V>
void side_cleanup(std::map<SixKey, V>& out) {
    for (auto it = out.begin(); it != out.end();)
        it = value_is_zero(it->second) ? out.erase(it) : std::next(it);
}

// Left side: sum over a', b', c' of
// (-)^{[b'][c'] + [a'][c] + [a][b] + [b'][b'']}
//   R1^{c'' b''}_{b' c'}  R2^{c' a''}_{a' c}  R3^{b' a'}_{a b}.
template <typename V, typename Gr>
std::map<SixKey, V> ybe_lhs(const std::map<Rank4Tensor::Key, V>& r1,
                            const std::map<Rank4Tensor::Key, V>& r2,
                            const std::map<Rank4Tensor::Key, V>& r3, Gr gr,
                            bool graded) {
    std::map<int, std::vector<std::pair<Rank4Tensor::Key, V>>> r2_by_ap;
    for (const auto& [k, v] : r2) r2_by_ap[k[2]].emplace_back(k, v);
    std::map<std::pair<int, int>, std::vector<std::pair<Rank4Tensor::Key, V>>> r1_by_bc;
    for (const auto& [k, v] : r1) r1_by_bc[{k[2], k[3]}].emplace_back(k, v);
    std::map<SixKey, V> out;
    for (const auto& [k3, v3] : r3) {  // {b', a', a, b}
        const int bp = k3[0], ap = k3[1], a = k3[2], b = k3[3];
        auto i2 = r2_by_ap.find(ap);
        if (i2 == r2_by_ap.end()) continue;
        for (const auto& [k2, v2] : i2->second) {  // {c', a'', a', c}
            const int cp = k2[0], app = k2[1], c = k2[3];
            auto i1 = r1_by_bc.find({bp, cp});
            if (i1 == r1_by_bc.end()) continue;
            for (const auto& [k1, v1] : i1->second) {  // {c'', b'', b', c'}
                const int cpp = k1[0], bpp = k1[1];
                V term = v1 * v2 * v3;
                if (graded &&
                    (gr(bp) * gr(cp) + gr(ap) * gr(c) + gr(a) * gr(b) + gr(bp) * gr(bpp)) % 2)
                    term = -term;
                side_add(out, SixKey{a, b, c, app, bpp, cpp}, term);
            }
        }
    }
    side_cleanup(out);
    return out;
}

// Right side: sum over a', b', c' of
// (-)^{[a'][b'] + [a][c'] + [b][c] + [b][b']}
//   R1^{b'' a''}_{a' b'}  R2^{c'' a'}_{a c'}  R3^{c' b'}_{b c}.
template <typename V, typename Gr>
std::map<SixKey, V> ybe_rhs(const std::map<Rank4Tensor::Key, V>& r1,
                            const std::map<Rank4Tensor::Key, V>& r2,
                            const std::map<Rank4Tensor::Key, V>& r3, Gr gr,
                            bool graded) {
    std::map<int, std::vector<std::pair<Rank4Tensor::Key, V>>> r2_by_cp;
    for (const auto& [k, v] : r2) r2_by_cp[k[3]].emplace_back(k, v);
    std::map<std::pair<int, int>, std::vector<std::pair<Rank4Tensor::Key, V>>> r1_by_ab;
    for (const auto& [k, v] : r1) r1_by_ab[{k[2], k[3]}].emplace_back(k, v);
    std::map<SixKey, V> out;
    for (const auto& [k3, v3] : r3) {  // {c', b', b, c}
        const int cp = k3[0], bp = k3[1], b = k3[2], c = k3[3];
        auto i2 = r2_by_cp.find(cp);
        if (i2 == r2_by_cp.end()) continue;
        for (const auto& [k2, v2] : i2->second) {  // {c'', a', a, c'}
            const int cpp = k2[0], ap = k2[1], a = k2[2];
            auto i1 = r1_by_ab.find({ap, bp});
            if (i1 == r1_by_ab.end()) continue;
            for (const auto& [k1, v1] : i1->second) {  // {b'', a'', a', b'}
                const int bpp = k1[0], app = k1[1];
                V term = v1 * v2 * v3;
                if (graded &&
                    (gr(ap) * gr(bp) + gr(a) * gr(cp) + gr(b) * gr(c) + gr(b) * gr(bp)) % 2)
                    term = -term;
                side_add(out, SixKey{a, b, c, app, bpp, cpp}, term);
            }
        }
    }
    side_cleanup(out);
    return out;
}

using EvalPoint = std::array<std::complex<double>, kNumGens>;

// A point is admissible when every denominator and radicand of every entry
// of every factor stays away from zero.
inline bool admissible(const std::vector<const Rank4Tensor*>& ts, const EvalPoint& pt) {
    constexpr double kFloor = 1e-8;
    for (const Rank4Tensor* t : ts)
        for (const auto& [k, v] : t->entries())
            for (const auto& [rk, f] : v.terms()) {
                if (std::abs(f.den().eval(pt)) < kFloor) return false;
                if (!rk.trivial() && std::abs(rk.radicand().eval(pt)) < kFloor) return false;
            }
    return true;
}

inline std::map<Rank4Tensor::Key, std::complex<double>> evaluated(const Rank4Tensor& t,
                                                                  const EvalPoint& pt) {
    std::map<Rank4Tensor::Key, std::complex<double>> out;
    for (const auto& [k, v] : t.entries()) out.emplace(k, v.eval(pt));
    return out;
}

// Sample points sit on the positive real axis: q in (1.1, 2) and positive
// real exponents for the alpha and spectral directions.
inline EvalPoint draw_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> dq(1.1, 2.0), de(0.3, 2.5);
    double q = dq(rng);
    auto p = [&](double e) { return std::pow(q, e / 2.0); };
    return EvalPoint{std::sqrt(q), p(de(rng)), p(de(rng)), p(de(rng))};
}

template <typename Gr>
YbeReport check_ybe(const Rank4Tensor& r1, const Rank4Tensor& r2, const Rank4Tensor& r3,
                    Gr gr, bool graded, const std::string& kind, bool symbolic,
                    int nsamples, unsigned seed) {
    YbeReport rep;
    rep.kind = kind;
    rep.mode = symbolic ? "symbolic" : "numeric";
    // The two sides consume the spectral factors in opposite order: the
    // left side reads (r1, r2, r3), the right side (r3, r2, r1).
    if (symbolic) {
        auto lhs = ybe_lhs(r1.entries(), r2.entries(), r3.entries(), gr, graded);
        auto rhs = ybe_rhs(r3.entries(), r2.entries(), r1.entries(), gr, graded);
        for (const auto& [k, v] : rhs) {
            auto it = lhs.find(k);
            if (it == lhs.end())
                lhs.emplace(k, -v);
            else {
                it->second -= v;
                if (it->second.is_zero()) lhs.erase(it);
            }
        }
        rep.pass = lhs.empty();
        return rep;
    }
    std::mt19937 rng(seed);
    for (int s = 0; s < nsamples; ++s) {
        EvalPoint pt = draw_point(rng);
        int guard = 0;
        while (!admissible({&r1, &r2, &r3}, pt)) {
            if (++guard > 1000) throw std::domain_error("NoAdmissiblePoint");
            pt = draw_point(rng);
        }
        auto lhs = ybe_lhs(evaluated(r1, pt), evaluated(r2, pt), evaluated(r3, pt), gr, graded);
        auto rhs = ybe_rhs(evaluated(r3, pt), evaluated(r2, pt), evaluated(r1, pt), gr, graded);
        for (const auto& [k, v] : rhs) lhs[k] -= v;
        for (const auto& [k, v] : lhs)
            rep.max_residual = std::max(rep.max_residual, std::abs(v));
        std::array<double, kNumGens> real_pt{};
        for (int g = 0; g < kNumGens; ++g) real_pt[g] = pt[g].real();
        rep.samples.push_back(real_pt);
    }
    rep.pass = rep.max_residual < 1e-9;
    return rep;
}

}  // namespace detail

// Trigonometric equation with spectral arguments u, u + v, v realized by
// the generator substitutions w1, w1 w2, w2.  With `graded` the parity
// factors are included; without, the caller should pass the parity-removed
// matrix.
inline YbeReport check_tybe(const Representation& rep, const Rank4Tensor& rtrig,
                            bool graded, bool symbolic, int nsamples = 20,
                            unsigned seed = 20260824) {
    auto gr = [&](int x) { return rep.basis()[x - 1].grading; };
    return detail::check_ybe(rtrig, substitute_spectral(rtrig, true),
                             substitute_spectral(rtrig, false), gr, graded,
                             graded ? "graded-trig" : "trig", symbolic, nsamples, seed);
}

inline YbeReport check_graded_tybe(const Representation& rep, const Rank4Tensor& rtrig,
                                   bool symbolic, int nsamples = 20,
                                   unsigned seed = 20260824) {
    return check_tybe(rep, rtrig, true, symbolic, nsamples, seed);
}

// Braid relation for the constant matrix: all three factors equal.
inline YbeReport check_braid(const Representation& rep, const Rank4Tensor& rq,
                             bool graded, bool symbolic, int nsamples = 20,
                             unsigned seed = 20260824) {
    auto gr = [&](int x) { return rep.basis()[x - 1].grading; };
    return detail::check_ybe(rq, rq, rq, gr, graded, "braid", symbolic, nsamples, seed);
}

// ---------------------------------------------------------------------------
// Sparsity and dimension reports.

struct StatsReport {
    int m = 0, n = 0;
    unsigned long long components = 0;  // total component count of a rank-4 tensor
    std::vector<unsigned long long> submodule_dims;
    std::vector<unsigned long long> projector_sizes;
    unsigned long long trig_nonzeros = 0;
    unsigned long long quantum_nonzeros = 0;
    double sparsity_percent = 0.0;  // 100 * quantum_nonzeros / components
};

inline StatsReport report_stats(const Representation& rep,
                                const std::vector<SubmoduleLabel>& labels,
                                const std::vector<Rank4Tensor>& ps,
                                const Rank4Tensor& rtrig, const Rank4Tensor& rquantum) {
    StatsReport s;
    s.m = rep.params().m;
    s.n = rep.params().n;
    s.components = 1ULL << (4 * s.m * s.n);
    for (const auto& lab : labels)
        s.submodule_dims.push_back(lab.dim.convert_to<unsigned long long>());
    for (const auto& p : ps) s.projector_sizes.push_back(p.nonzero_count());
    s.trig_nonzeros = rtrig.nonzero_count();
    s.quantum_nonzeros = rquantum.nonzero_count();
    s.sparsity_percent = 100.0 * static_cast<double>(s.quantum_nonzeros) /
                         static_cast<double>(s.components);
    return s;
}

// Built-in reference rows for n = 1, m = 1..4.
struct ReferenceRow {
    int m;
    unsigned long long components;
    unsigned long long trig, quantum;
    double sparsity_percent;
    std::vector<unsigned long long> submodule_dims;
    std::vector<unsigned long long> projector_sizes;
};

inline const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {1, 16, 6, 5, 31.3, {2, 2}, {5, 5}},
        {2, 256, 36, 26, 10.2, {4, 8, 4}, {25, 34, 25}},
        {3, 4096, 216, 139, 3.4, {8, 24, 24, 8}, {125, 199, 199, 125}},
        {4, 65536, 1296, 758, 1.1, {16, 64, 96, 64, 16}, {625, 1124, 1254, 1124, 625}},
    };
    return rows;
}

inline const ReferenceRow* reference_row(int m) {
    for (const auto& r : reference_rows())
        if (r.m == m) return &r;
    return nullptr;
}

// True when the computed report agrees with the built-in row (sparsity to
// the table's one-decimal precision).
inline bool matches_reference(const StatsReport& s) {
    const ReferenceRow* r = s.n == 1 ? reference_row(s.m) : nullptr;
    if (!r) return false;
    return s.components == r->components && s.trig_nonzeros == r->trig &&
           s.quantum_nonzeros == r->quantum && s.submodule_dims == r->submodule_dims &&
           s.projector_sizes == r->projector_sizes &&
           std::abs(s.sparsity_percent - r->sparsity_percent) < 0.05;
}

}  // namespace qglmn

#endif  // QGLMN_VERIFY_HPP
