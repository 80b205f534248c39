// Tests for the PBW normal-ordering engine.
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "qglmn/pbw.hpp"

using namespace qglmn;

namespace {

AlgebraElement word_elem(Word w) { return AlgebraElement::single(std::move(w), Scalar::one()); }

// Graded commutator [X, Y] = XY - (-1)^{[X][Y]} YX for homogeneous words.
AlgebraElement graded_comm(const AlgebraParams& p, const Word& x, const Word& y) {
    AlgebraElement xy = word_elem(x) * word_elem(y);
    AlgebraElement yx = word_elem(y) * word_elem(x);
    if (word_grading(p, x) && word_grading(p, y)) return xy + yx;
    return xy - yx;
}

std::vector<GenRef> letter_pool(const AlgebraParams& p) {
    std::vector<GenRef> pool;
    for (int a = 1; a <= p.dim(); ++a)
        for (int b = 1; b <= p.dim(); ++b) {
            if (a == b) {
                pool.push_back(GenRef::K(a));
                pool.push_back(GenRef::K(a, Rat(-1)));
                pool.push_back(GenRef::K(a, Rat(1, 2)));
            } else {
                pool.push_back(GenRef::E(a, b));
            }
        }
    return pool;
}

Word random_word(std::mt19937& rng, const std::vector<GenRef>& pool, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    Word w;
    int L = len(rng);
    for (int i = 0; i < L; ++i) w.push_back(pool[pick(rng)]);
    return w;
}

}  // namespace

TEST_CASE("normal_order examples") {
    AlgebraParams p{3, 1};
    // K_4 E^4_3 -> qbar E^4_3 K_4
    AlgebraElement got = normal_order(p, word_elem({GenRef::K(4), GenRef::E(4, 3)}));
    CHECK(got == AlgebraElement::single({GenRef::E(4, 3), GenRef::K(4)}, Scalar(qpow(-1))));
    // E^3_4 E^4_3 -> -E^4_3 E^3_4 + (1/Delta)(K_3 Kbar_4 - Kbar_3 K_4)
    AlgebraElement got2 = normal_order(p, word_elem({GenRef::E(3, 4), GenRef::E(4, 3)}));
    Scalar dbar = Scalar(q_delta()).inverse();
    AlgebraElement expect2 =
        AlgebraElement::single({GenRef::E(4, 3), GenRef::E(3, 4)}, -Scalar::one());
    expect2.add({GenRef::K(3), GenRef::K(4, Rat(-1))}, dbar);
    expect2.add({GenRef::K(3, Rat(-1)), GenRef::K(4)}, -dbar);
    CHECK(got2 == expect2);
    // squared odd generator vanishes
    CHECK(normal_order(p, word_elem({GenRef::E(4, 3), GenRef::E(4, 3)})).is_zero());
    // the identity is already normal
    CHECK(normal_order(p, AlgebraElement::identity()) == AlgebraElement::identity());
}

TEST_CASE("is_normal") {
    AlgebraParams p{3, 1};
    CHECK(is_normal(p, word_elem({GenRef::E(4, 3), GenRef::E(4, 2), GenRef::E(4, 1)})));
    CHECK_FALSE(is_normal(p, word_elem({GenRef::E(3, 4), GenRef::E(4, 3)})));
    CHECK_FALSE(is_normal(p, word_elem({GenRef::K(1), GenRef::K(1)})));
    CHECK_FALSE(is_normal(p, word_elem({GenRef::K(1, Rat(0))})));
    CHECK(is_normal(p, AlgebraElement::identity()));
    CHECK(is_normal(p, AlgebraElement::zero()));
}

TEST_CASE("normal_order reassembles nonsimple generators") {
    // The expansion of E^a_b over simple generators normal-orders back to
    // the single letter E^a_b.
    for (auto [m, n] : {std::pair{3, 1}, {2, 2}}) {
        AlgebraParams p{m, n};
        for (int a = 1; a <= p.dim(); ++a)
            for (int b = 1; b <= p.dim(); ++b) {
                if (a == b) continue;
                AlgebraElement nf = normal_order(p, expand_nonsimple(p, a, b));
                CHECK(nf == AlgebraElement::generator(GenRef::E(a, b)));
            }
    }
}

TEST_CASE("bold expansion matches the recursive sum formula") {
    // bold E^a_b = E^a_b + sgn(a-b) * sum_{c between a,b} Delta_c E^c_b bold E^a_c,
    // compared after normal ordering.
    for (auto [m, n] : {std::pair{3, 1}, {2, 2}}) {
        AlgebraParams p{m, n};
        for (int a = 1; a <= p.dim(); ++a)
            for (int b = 1; b <= p.dim(); ++b) {
                if (std::abs(a - b) < 2) continue;
                AlgebraElement rhs = AlgebraElement::generator(GenRef::E(a, b));
                int S = a > b ? 1 : -1;
                for (int c = std::min(a, b) + 1; c < std::max(a, b); ++c) {
                    Scalar coeff = Scalar(q_delta());
                    if (p.grading(c)) coeff = -coeff;
                    if (S < 0) coeff = -coeff;
                    rhs += coeff * (AlgebraElement::generator(GenRef::E(c, b)) *
                                    expand_nonsimple(p, a, c, true));
                }
                AlgebraElement lhs = expand_nonsimple(p, a, b, true);
                CHECK(normal_order(p, lhs - rhs).is_zero());
            }
    }
}

TEST_CASE("splitting index independence") {
    // E^a_b = E^a_c E^c_b - q_c^{sgn(a-b)} E^c_b E^a_c for every c strictly
    // between a and b; all splits normal-order to the same element.
    for (auto [m, n] : {std::pair{3, 1}, {1, 3}, {2, 2}}) {
        AlgebraParams p{m, n};
        for (int a = 1; a <= p.dim(); ++a)
            for (int b = 1; b <= p.dim(); ++b) {
                if (std::abs(a - b) < 2) continue;
                int S = a > b ? 1 : -1;
                AlgebraElement reference = normal_order(p, expand_nonsimple(p, a, b));
                for (int c = std::min(a, b) + 1; c < std::max(a, b); ++c) {
                    AlgebraElement Eac = AlgebraElement::generator(GenRef::E(a, c));
                    AlgebraElement Ecb = AlgebraElement::generator(GenRef::E(c, b));
                    AlgebraElement split = Eac * Ecb - q_sub(p, c, S) * (Ecb * Eac);
                    CHECK(normal_order(p, split) == reference);
                }
            }
    }
}

TEST_CASE("property: idempotence") {
    std::mt19937 rng(2024);
    for (auto [m, n] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
        AlgebraParams p{m, n};
        auto pool = letter_pool(p);
        for (int i = 0; i < 40; ++i) {
            AlgebraElement e = word_elem(random_word(rng, pool, 5));
            AlgebraElement nf = normal_order(p, e);
            CHECK(is_normal(p, nf));
            CHECK(normal_order(p, nf) == nf);
        }
    }
}

TEST_CASE("property: strategy independence") {
    std::mt19937 rng(555);
    int total = 0;
    for (auto [m, n] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
        AlgebraParams p{m, n};
        auto pool = letter_pool(p);
        for (int i = 0; i < 167 && total < 500; ++i, ++total) {
            AlgebraElement e = word_elem(random_word(rng, pool, 5));
            NormalOrderOptions left, right, rand1, rand2;
            right.strategy = RewriteStrategy::Rightmost;
            rand1.strategy = RewriteStrategy::Randomized;
            rand1.rng_seed = 11 + i;
            rand2.strategy = RewriteStrategy::Randomized;
            rand2.rng_seed = 7000 + i;
            AlgebraElement nf = normal_order(p, e, left);
            CHECK(normal_order(p, e, right) == nf);
            CHECK(normal_order(p, e, rand1) == nf);
            CHECK(normal_order(p, e, rand2) == nf);
        }
    }
    CHECK(total >= 500);
}

TEST_CASE("property: graded Leibniz identities") {
    std::mt19937 rng(909);
    for (auto [m, n] : {std::pair{2, 1}, {2, 2}}) {
        AlgebraParams p{m, n};
        auto pool = letter_pool(p);
        for (int i = 0; i < 25; ++i) {
            Word x = random_word(rng, pool, 2), y = random_word(rng, pool, 2),
                 z = random_word(rng, pool, 2);
            int gx = word_grading(p, x), gy = word_grading(p, y), gz = word_grading(p, z);
            // [XY, Z] = X[Y,Z] + (-1)^{[Y][Z]} [X,Z] Y
            Word xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            AlgebraElement lhs = graded_comm(p, xy, z);
            AlgebraElement rhs = word_elem(x) * graded_comm(p, y, z) +
                                 detail::parity_sign(gy * gz) *
                                     (graded_comm(p, x, z) * word_elem(y));
            CHECK(normal_order(p, lhs - rhs).is_zero());
            // [X, YZ] = [X,Y] Z + (-1)^{[X][Y]} Y [X,Z]
            Word yz = y;
            yz.insert(yz.end(), z.begin(), z.end());
            AlgebraElement lhs2 = graded_comm(p, x, yz);
            AlgebraElement rhs2 = graded_comm(p, x, y) * word_elem(z) +
                                  detail::parity_sign(gx * gy) *
                                      (word_elem(y) * graded_comm(p, x, z));
            CHECK(normal_order(p, lhs2 - rhs2).is_zero());
        }
    }
}

TEST_CASE("hermitian conjugation is an involution after normal ordering") {
    AlgebraParams p{3, 1};
    std::vector<Word> samples = {
        {GenRef::E(4, 3), GenRef::E(4, 2)},
        {GenRef::E(4, 1)},
        {GenRef::K(2, Rat(1, 2)), GenRef::E(3, 2)},
        {GenRef::E(2, 4), GenRef::K(4, Rat(-1))},
    };
    for (const auto& w : samples) {
        AlgebraElement x = word_elem(w);
        AlgebraElement back = hermitian_conjugate(p, hermitian_conjugate(p, x));
        CHECK(normal_order(p, back - x).is_zero());
    }
}

TEST_CASE("budget exhaustion reports nontermination") {
    AlgebraParams p{3, 1};
    NormalOrderOptions opts;
    opts.budget = 2;
    Word w = {GenRef::E(1, 4), GenRef::E(2, 4), GenRef::E(4, 3), GenRef::E(4, 2)};
    CHECK_THROWS_WITH(normal_order(p, word_elem(w), opts), "NonTermination");
}

TEST_CASE("debug trace emits one line per rewrite") {
    AlgebraParams p{3, 1};
    std::vector<std::string> lines;
    NormalOrderOptions opts;
    opts.trace = [&](const std::string& s) { lines.push_back(s); };
    normal_order(p, word_elem({GenRef::K(4), GenRef::E(4, 3)}), opts);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].find("cartan-past-root") == 0);
    CHECK(lines[0].find("-> 1 terms") != std::string::npos);
}
