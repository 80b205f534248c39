// Tests for the tensor square: coproduct action, inner product, the
// submodule decomposition, highest weight vectors, even and full
// submodule bases, and Gram-Schmidt orthonormalisation.  Golden values
// are for the 8-dimensional gl(3|1) module.
#include <catch2/catch_amalgamated.hpp>

#include "qglmn/tensor.hpp"

using namespace qglmn;

namespace {

// [i*alpha + j]_q and q^{i*alpha+j} + qbar^{i*alpha+j}.
RationalFunction A(int i, int j) { return qbracket_half(2 * j, 2 * i); }
RationalFunction C(int i, int j) {
    return RationalFunction(qpow_half(2 * j, 2 * i) + qpow_half(-2 * j, -2 * i));
}
// q^{(tc + ta*alpha)/2} as a scalar.
Scalar mono(int tc, int ta = 0) { return Scalar(qpow_half(tc, ta)); }
Scalar rt(const RationalFunction& f) { return Scalar::sqrt(f); }

TensorVector tv(std::initializer_list<std::tuple<int, int, Scalar>> terms) {
    TensorVector v;
    for (const auto& [i, j, c] : terms) v.add(i, j, c);
    return v;
}

bool same_up_to_sign(const TensorVector& a, const TensorVector& b) {
    return a == b || a == -b;
}

Weight make_weight(std::vector<std::pair<Rat, Rat>> entries) {
    Weight w;
    for (auto& [c, al] : entries) w.entries.push_back(WeightEntry{c, al});
    return w;
}

const Representation& rep31() {
    static Representation rep(AlgebraParams{3, 1});
    return rep;
}

// The four gl(3|1) highest weight vectors in closed form.
TensorVector golden_hwv31(int k) {
    switch (k) {
        case 0:
            return TensorVector::unit(1, 1);
        case 1: {
            Scalar pref = rt(C(1, 0)).inverse();
            return tv({{2, 1, mono(0, 1) * pref}, {1, 2, -mono(0, -1) * pref}});
        }
        case 2: {
            Scalar pref = rt(C(1, 1) * A(2, 1)).inverse();
            return tv({{1, 5, mono(-2, -2) * rt(A(1, 0)) * pref},
                       {5, 1, mono(2, 2) * rt(A(1, 0)) * pref},
                       {2, 3, -mono(-1, 0) * rt(A(1, 1)) * pref},
                       {3, 2, mono(1, 0) * rt(A(1, 1)) * pref}});
        }
        default: {
            Scalar pref = rt(C(1, 1) * C(1, 2) * A(2, 3)).inverse();
            return tv({{1, 8, -mono(-6, -3) * rt(A(1, 0)) * pref},
                       {8, 1, mono(6, 3) * rt(A(1, 0)) * pref},
                       {2, 7, mono(-4, -1) * rt(A(1, 2)) * pref},
                       {7, 2, -mono(4, 1) * rt(A(1, 2)) * pref},
                       {3, 6, -mono(-2, -1) * rt(A(1, 2)) * pref},
                       {6, 3, mono(2, 1) * rt(A(1, 2)) * pref},
                       {4, 5, mono(0, -1) * rt(A(1, 2)) * pref},
                       {5, 4, -mono(0, 1) * rt(A(1, 2)) * pref}});
        }
    }
}

}  // namespace

TEST_CASE("coproduct action on basis pairs") {
    const Representation& rep = rep31();

    // Cartan coproducts act diagonally on both slots
    TensorVector v = coproduct_action(rep, GenRef::K(4), TensorVector::unit(2, 3));
    // wt(|2>) = wt(|3>) = (...|alpha+1), and q_4 = 1/q
    CHECK(v == tv({{2, 3, mono(-4, -4)}}));
    TensorVector h = coproduct_action(rep, GenRef::K(4, Rat(1, 2)), TensorVector::unit(1, 1));
    CHECK(h == tv({{1, 1, mono(0, -2)}}));

    // odd raising on a level-2 (x) level-0 pair
    CHECK(coproduct_action(rep, GenRef::E(3, 4), TensorVector::unit(5, 1)) ==
          tv({{3, 1, mono(0, -1) * rt(A(1, 1))}}));

    // weight homogeneity: the action shifts by the adjoint weight
    for (const GenRef& g : {GenRef::E(2, 1), GenRef::E(3, 4), GenRef::E(4, 1), GenRef::E(1, 3)}) {
        TensorVector w = coproduct_action(rep, g, TensorVector::unit(5, 2));
        if (w.is_zero()) continue;
        CHECK(tensor_weight(rep, w) ==
              tensor_weight(rep, TensorVector::unit(5, 2)) + gen_weight(rep.params(), g));
    }
}

TEST_CASE("coproduct action respects the commutation relations") {
    const Representation& rep = rep31();
    Scalar delta_inv = Scalar(q_delta()).inverse();
    // [E^a_b, E^b_a] = (-)^{[a]} (K_a Kbar_b - Kbar_a K_b)/(q - qbar),
    // with the graded bracket (anticommutator for odd generators)
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 4}}) {
        GenRef e = GenRef::E(a, b), f = GenRef::E(b, a);
        bool odd = gen_grading(rep.params(), e) == 1;
        for (int i = 1; i <= rep.dim(); ++i)
            for (int j = 1; j <= rep.dim(); ++j) {
                TensorVector u = TensorVector::unit(i, j);
                TensorVector lhs =
                    coproduct_action(rep, e, coproduct_action(rep, f, u));
                TensorVector rhs_term =
                    coproduct_action(rep, f, coproduct_action(rep, e, u));
                lhs = odd ? lhs + rhs_term : lhs - rhs_term;
                TensorVector cartan =
                    coproduct_action(rep, GenRef::K(a),
                                     coproduct_action(rep, GenRef::K(b, Rat(-1)), u)) -
                    coproduct_action(rep, GenRef::K(a, Rat(-1)),
                                     coproduct_action(rep, GenRef::K(b), u));
                CHECK(lhs == delta_inv * cartan);
            }
    }
}

TEST_CASE("tensor inner product") {
    const Representation& rep = rep31();
    CHECK(tensor_inner(rep, TensorVector::unit(1, 1), TensorVector::unit(1, 1)) == Scalar::one());
    CHECK(tensor_inner(rep, TensorVector::unit(2, 3), TensorVector::unit(2, 3)) == Scalar::one());
    CHECK(tensor_inner(rep, TensorVector::unit(1, 2), TensorVector::unit(2, 1)).is_zero());
    // the closed-form highest weight vectors are unit vectors
    for (int k = 0; k <= 3; ++k)
        CHECK(tensor_inner(rep, golden_hwv31(k), golden_hwv31(k)) == Scalar::one());
}

TEST_CASE("decomposition gl(3|1)") {
    auto labels = decomposition(AlgebraParams{3, 1});
    REQUIRE(labels.size() == 4);
    std::vector<std::vector<int>> gammas = {{}, {1}, {1, 1}, {1, 1, 1}};
    std::vector<Int> dim0s = {1, 3, 3, 1}, dims = {8, 24, 24, 8};
    for (int k = 0; k <= 3; ++k) {
        CHECK(labels[k].gamma == gammas[k]);
        CHECK(labels[k].z_level == k);
        CHECK(labels[k].dim0 == dim0s[k]);
        CHECK(labels[k].dim == dims[k]);
    }
    CHECK(labels[0].weight == make_weight({{0, 0}, {0, 0}, {0, 0}, {0, 2}}));
    CHECK(labels[1].weight == make_weight({{0, 0}, {0, 0}, {-1, 0}, {1, 2}}));
    CHECK(labels[2].weight == make_weight({{0, 0}, {-1, 0}, {-1, 0}, {2, 2}}));
    CHECK(labels[3].weight == make_weight({{-1, 0}, {-1, 0}, {-1, 0}, {3, 2}}));
}

TEST_CASE("decomposition gl(2|2), gl(1|1) and the unsupported case") {
    auto labels = decomposition(AlgebraParams{2, 2});
    REQUIRE(labels.size() == 6);
    std::vector<std::vector<int>> gammas = {{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
    Int total = 0;
    for (size_t k = 0; k < labels.size(); ++k) {
        CHECK(labels[k].gamma == gammas[k]);
        total += labels[k].dim;
    }
    CHECK(total == 256);

    auto small = decomposition(AlgebraParams{1, 1});
    REQUIRE(small.size() == 2);
    CHECK(small[0].dim == 2);
    CHECK(small[1].dim == 2);

    CHECK_THROWS_WITH(decomposition(AlgebraParams{1, 2}), "NotSupported");
}

TEST_CASE("highest weight vectors gl(3|1)") {
    const Representation& rep = rep31();
    auto labels = decomposition(rep.params());
    for (int k = 0; k <= 3; ++k) {
        TensorVector psi = highest_weight_vector(rep, labels[k]);
        INFO("k = " << k << ": " << psi.to_string());
        CHECK(psi == golden_hwv31(k));
        // annihilated by every simple raising coproduct
        for (int a = 1; a < rep.params().dim(); ++a)
            CHECK(coproduct_action(rep, GenRef::E(a, a + 1), psi).is_zero());
        CHECK(tensor_weight(rep, psi) == labels[k].weight);
    }
}

TEST_CASE("even submodule bases gl(3|1)") {
    const Representation& rep = rep31();
    auto labels = decomposition(rep.params());
    for (int k = 0; k <= 3; ++k) {
        auto b0 = even_submodule_basis(rep, highest_weight_vector(rep, labels[k]));
        CHECK(Int(b0.size()) == labels[k].dim0);
    }
    // the k=1 basis in closed form, in decreasing-weight order
    auto b0 = even_submodule_basis(rep, highest_weight_vector(rep, labels[1]));
    REQUIRE(b0.size() == 3);
    Scalar pref = rt(C(1, 0)).inverse();
    CHECK(b0[0] == golden_hwv31(1));
    CHECK(b0[1] == tv({{1, 3, mono(0, -1) * pref}, {3, 1, -mono(0, 1) * pref}}));
    CHECK(b0[2] == tv({{4, 1, mono(0, 1) * pref}, {1, 4, -mono(0, -1) * pref}}));
}

TEST_CASE("full submodule bases gl(3|1)") {
    const Representation& rep = rep31();
    auto labels = decomposition(rep.params());
    std::vector<std::vector<TensorVector>> bases;
    size_t total = 0;
    for (int k = 0; k <= 3; ++k) {
        auto b0 = even_submodule_basis(rep, highest_weight_vector(rep, labels[k]));
        bases.push_back(full_submodule_basis(rep, b0, labels[k]));
        CHECK(Int(bases.back().size()) == labels[k].dim);
        total += bases.back().size();
    }
    CHECK(total == 64);  // the full tensor square

    // weight-class structure of the 24-element k=1 basis: fifteen
    // singletons, three pairs, one triple
    const auto& b1 = bases[1];
    std::map<size_t, int> class_sizes;
    size_t s = 0;
    while (s < b1.size()) {
        Weight w = tensor_weight(rep, b1[s]);
        size_t e = s + 1;
        while (e < b1.size() && tensor_weight(rep, b1[e]) == w) ++e;
        ++class_sizes[e - s];
        s = e;
    }
    CHECK(class_sizes == std::map<size_t, int>{{1, 15}, {2, 3}, {3, 1}});

    // representative members, up to the sign gauge of the generation
    auto contains = [&](const TensorVector& v) {
        for (const auto& u : b1)
            if (same_up_to_sign(u, v)) return true;
        return false;
    };
    CHECK(contains(TensorVector::unit(2, 2)));
    CHECK(contains(TensorVector::unit(3, 3)));
    CHECK(contains(TensorVector::unit(4, 4)));
    Scalar p1 = rt(C(1, 1)).inverse();
    CHECK(contains(tv({{2, 5, -mono(1, 1) * p1}, {5, 2, mono(-1, -1) * p1}})));
    CHECK(contains(tv({{3, 5, mono(1, 1) * p1}, {5, 3, -mono(-1, -1) * p1}})));
    CHECK(contains(tv({{4, 7, -mono(1, 1) * p1}, {7, 4, mono(-1, -1) * p1}})));
}

TEST_CASE("gram_schmidt orthonormalises the k=1 basis") {
    const Representation& rep = rep31();
    auto labels = decomposition(rep.params());
    auto b0 = even_submodule_basis(rep, highest_weight_vector(rep, labels[1]));
    auto bbar = full_submodule_basis(rep, b0, labels[1]);
    auto b = gram_schmidt(rep, bbar);
    REQUIRE(b.size() == 24);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i; j < b.size(); ++j) {
            Scalar ip = tensor_inner(rep, b[i], b[j]);
            if (i == j)
                CHECK(ip == Scalar::one());
            else
                CHECK(ip.is_zero());
        }

    // the size-3 weight class in closed form, up to the sign gauge
    std::vector<TensorVector> triple;
    size_t s = 0;
    while (s < b.size()) {
        Weight w = tensor_weight(rep, b[s]);
        size_t e = s + 1;
        while (e < b.size() && tensor_weight(rep, b[e]) == w) ++e;
        if (e - s == 3)
            for (size_t t = s; t < e; ++t) triple.push_back(b[t]);
        s = e;
    }
    REQUIRE(triple.size() == 3);
    Scalar pref1 = rt(C(1, 0) * C(1, 1) * A(2, 1)).inverse();
    TensorVector w1 = tv({{1, 8, mono(0, 1) * rt(A(1, 2)) * pref1},
                          {8, 1, -mono(0, -1) * rt(A(1, 2)) * pref1},
                          {2, 7, mono(-2, -1) * rt(A(1, 0)) * pref1},
                          {7, 2, -mono(2, 1) * rt(A(1, 0)) * pref1},
                          {3, 6, -mono(0, -1) * rt(A(1, 0)) * pref1},
                          {6, 3, mono(0, 1) * rt(A(1, 0)) * pref1},
                          {4, 5, -mono(2, 3) * rt(A(1, 0)) * pref1},
                          {5, 4, mono(-2, -3) * rt(A(1, 0)) * pref1}});
    Scalar pref2 = Scalar(C(1, 1).inverse()) * rt(A(2, 1)).inverse();
    TensorVector w2 =
        tv({{1, 8, -mono(0, 1) * rt(A(1, 0) * A(1, 2)) * rt(A(1, 1)).inverse() * pref2},
            {8, 1, mono(0, -1) * rt(A(1, 0) * A(1, 2)) * rt(A(1, 1)).inverse() * pref2},
            {2, 7, -mono(-2, -1) * Scalar(A(1, 0)) * rt(A(1, 1)).inverse() * pref2},
            {7, 2, mono(2, 1) * Scalar(A(1, 0)) * rt(A(1, 1)).inverse() * pref2},
            {3, 6, -mono(2, 3) * rt(A(1, 1)) * pref2},
            {6, 3, mono(-2, -3) * rt(A(1, 1)) * pref2},
            {4, 5, -mono(0, -1) * rt(A(1, 1)) * pref2},
            {5, 4, mono(0, 1) * rt(A(1, 1)) * pref2}});
    Scalar pref3 = Scalar(C(1, 1).inverse()) * rt(A(2, 3)).inverse();
    TensorVector w3 =
        tv({{1, 8, mono(0, 1) * rt(A(1, 0) * A(1, 2)) * rt(A(1, 1)).inverse() * pref3},
            {8, 1, -mono(0, -1) * rt(A(1, 0) * A(1, 2)) * rt(A(1, 1)).inverse() * pref3},
            {2, 7, -mono(2, 3) * Scalar(A(1, 2)) * rt(A(1, 1)).inverse() * pref3},
            {7, 2, mono(-2, -3) * Scalar(A(1, 2)) * rt(A(1, 1)).inverse() * pref3},
            {3, 6, -mono(-2, -1) * rt(A(1, 1)) * pref3},
            {6, 3, mono(2, 1) * rt(A(1, 1)) * pref3},
            {4, 5, mono(0, -1) * rt(A(1, 1)) * pref3},
            {5, 4, -mono(0, 1) * rt(A(1, 1)) * pref3}});
    INFO("triple[0] = " << triple[0].to_string());
    INFO("triple[1] = " << triple[1].to_string());
    INFO("triple[2] = " << triple[2].to_string());
    CHECK(same_up_to_sign(triple[0], w1));
    CHECK(same_up_to_sign(triple[1], w2));
    CHECK(same_up_to_sign(triple[2], w3));
}

TEST_CASE("submodule_basis end to end for gl(3|1) k=3") {
    const Representation& rep = rep31();
    auto labels = decomposition(rep.params());
    SubmoduleBasis sb = submodule_basis(rep, labels[3]);
    CHECK(sb.orthonormal);
    REQUIRE(Int(sb.vectors.size()) == labels[3].dim);
    CHECK(sb.vectors.front() == golden_hwv31(3));
    for (size_t i = 0; i < sb.vectors.size(); ++i)
        for (size_t j = i; j < sb.vectors.size(); ++j) {
            Scalar ip = tensor_inner(rep, sb.vectors[i], sb.vectors[j]);
            CHECK(ip == (i == j ? Scalar::one() : Scalar()));
        }
}
