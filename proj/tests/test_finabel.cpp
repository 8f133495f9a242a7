#include <gtest/gtest.h>

#include <random>

#include "iwmod/errors.hpp"
#include "iwmod/finabel.hpp"
#include "oracle_finabel.hpp"

using namespace iwmod;

namespace {

FinAbPGroup random_group(std::mt19937_64& rng, std::int64_t p, int max_rank, int max_exp) {
    int g = std::uniform_int_distribution<int>(1, max_rank)(rng);
    std::vector<int> e;
    for (int i = 0; i < g; ++i) e.push_back(std::uniform_int_distribution<int>(1, max_exp)(rng));
    std::sort(e.begin(), e.end());
    return FinAbPGroup(p, e);
}

GroupElem random_elem(std::mt19937_64& rng, const FinAbPGroup& G) {
    GroupElem x = G.zero();
    for (int i = 0; i < G.rank(); ++i)
        x[i] = std::uniform_int_distribution<std::int64_t>(0, oracle::ipow(G.p(), G.exponents()[i]) - 1)(rng);
    return x;
}

Subgroup random_subgroup(std::mt19937_64& rng, const FinAbPGroup& G) {
    std::vector<GroupElem> gens;
    int n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < n; ++i) gens.push_back(random_elem(rng, G));
    return Subgroup(G, gens);
}

Endo random_endo(std::mt19937_64& rng, const FinAbPGroup& G) {
    const int g = G.rank();
    std::vector<std::vector<std::int64_t>> m(g, std::vector<std::int64_t>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            std::int64_t scale = oracle::ipow(G.p(), std::max(0, G.exponents()[i] - G.exponents()[j]));
            m[i][j] = std::uniform_int_distribution<std::int64_t>(0, 30)(rng) * scale;
        }
    return Endo(G, m);
}

}  // namespace

TEST(FinAbel, RejectsBadExponents) {
    EXPECT_THROW(FinAbPGroup(3, {0}), std::invalid_argument);
    EXPECT_THROW(FinAbPGroup(3, {2, 1}), std::invalid_argument);
    EXPECT_THROW(FinAbPGroup(4, {1}), std::invalid_argument);
}

TEST(FinAbel, QuotientExamples) {
    const std::int64_t p = 3;
    FinAbPGroup G(p, {2});
    EXPECT_EQ(quotient_structure(G, Subgroup(G, {{3}})), FinAbPGroup(p, {1}));
    EXPECT_EQ(quotient_structure(G, Subgroup::whole(G)), FinAbPGroup(p, {}));
    FinAbPGroup G2(p, {1, 2});
    EXPECT_EQ(quotient_structure(G2, Subgroup(G2, {{0, 1}})), FinAbPGroup(p, {1}));
}

TEST(FinAbel, SubgroupOrderAndMembershipMatchClosure) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 300; ++it) {
        FinAbPGroup G = random_group(rng, it % 2 ? 3 : 5, 3, 3);
        if (G.order_exponent() > 7) continue;
        Subgroup H = random_subgroup(rng, G);
        auto set = oracle::span(G, H.generators());
        EXPECT_EQ(H.order_exponent(), oracle::log_p(G.p(), set.size()));
        for (int k = 0; k < 10; ++k) {
            GroupElem x = random_elem(rng, G);
            EXPECT_EQ(H.contains(x), set.count(x) == 1);
        }
        FinAbPGroup Q = quotient_structure(G, H);
        EXPECT_EQ(Q.order_exponent() + H.order_exponent(), G.order_exponent());
    }
}

TEST(FinAbel, IntersectionMatchesSets) {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 200; ++it) {
        FinAbPGroup G = random_group(rng, 3, 3, 3);
        if (G.order_exponent() > 7) continue;
        Subgroup A = random_subgroup(rng, G), B = random_subgroup(rng, G);
        auto sa = oracle::span(G, A.generators()), sb = oracle::span(G, B.generators());
        std::size_t common = 0;
        for (const auto& x : sa) common += sb.count(x);
        Subgroup I = intersect(A, B);
        EXPECT_EQ(I.order_exponent(), oracle::log_p(3, common));
        for (const auto& x : oracle::span(G, I.generators())) EXPECT_TRUE(sa.count(x) && sb.count(x));
        EXPECT_EQ(sum(A, B).order_exponent() + I.order_exponent(), A.order_exponent() + B.order_exponent());
    }
}

TEST(FinAbel, KernelImageExamples) {
    const std::int64_t p = 5;
    FinAbPGroup G(p, {2});
    Endo mp = Endo::multiplication(G, p);
    EXPECT_EQ(kernel(mp), Subgroup(G, {{p}}));
    EXPECT_EQ(image(mp), Subgroup(G, {{p}}));
    Endo zero = Endo::multiplication(G, 0);
    EXPECT_EQ(kernel(zero), Subgroup::whole(G));
    EXPECT_EQ(image(zero).order_exponent(), 0);

    FinAbPGroup V(p, {1, 1});
    Endo nil(V, {{0, 1}, {0, 0}});
    EXPECT_EQ(kernel(nil), Subgroup(V, {{1, 0}}));
    EXPECT_EQ(image(nil), Subgroup(V, {{1, 0}}));
}

TEST(FinAbel, KernelImageOrdersMultiply) {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 300; ++it) {
        FinAbPGroup G = random_group(rng, 3, 3, 4);
        Endo phi = random_endo(rng, G);
        Subgroup K = kernel(phi), I = image(phi);
        EXPECT_EQ(K.order_exponent() + I.order_exponent(), G.order_exponent());
        for (const auto& x : K.generators()) EXPECT_TRUE(G.is_zero(phi.apply(x)));
    }
}

TEST(FinAbel, RejectsIllDefinedEndo) {
    FinAbPGroup G(3, {1, 2});
    EXPECT_THROW(Endo(G, {{0, 0}, {1, 0}}), PreconditionError);
    EXPECT_NO_THROW(Endo(G, {{0, 1}, {3, 0}}));
}

TEST(FinAbel, AdaptedExamples) {
    const std::int64_t p = 3;
    FinAbPGroup G(p, {2});
    AdaptedBasis b = adapted_generators(G, Subgroup(G, {{p}}));
    ASSERT_EQ(b.generators.size(), 1u);
    EXPECT_EQ(G.element_order(b.generators[0]), 2);

    FinAbPGroup G2(p, {1, 2});
    AdaptedBasis b2 = adapted_generators(G2, Subgroup(G2, {{0, 1}}));
    EXPECT_EQ(b2.generators, (std::vector<GroupElem>{{1, 0}, {0, 1}}));

    FinAbPGroup G3(p, {1, 1});
    Subgroup diag(G3, {{1, 1}});
    AdaptedBasis b3 = adapted_generators(G3, diag);
    EXPECT_EQ(G3.element_order(b3.generators[0]), 1);
    EXPECT_FALSE(diag.contains(b3.generators[0]));
    EXPECT_EQ(b3.generators[1], (GroupElem{1, 1}));
}

TEST(FinAbel, AdaptedDegenerateAndNonCyclic) {
    FinAbPGroup G(3, {1, 2});
    EXPECT_TRUE(adapted_generators(G, Subgroup::whole(G)).degenerate);
    EXPECT_THROW(adapted_generators(G, Subgroup::trivial(G)), PreconditionError);
}

TEST(FinAbel, AdaptedSatisfiesBothConditionsOnSmallGroups) {
    for (std::int64_t p : {3, 5}) {
        for (const auto& exps : oracle::exponent_lists_up_to(p == 3 ? 4 : 3)) {
            FinAbPGroup G(p, exps);
            auto all = G.elements();
            for (const auto& s : oracle::cyclic_quotients(G)) {
                Subgroup H = s.kernel_subgroup(G);
                ASSERT_EQ(H.order_exponent(), G.order_exponent() - s.k);
                AdaptedBasis b = adapted_generators(G, H);
                EXPECT_EQ(b.quotient_exponent, s.k);
                EXPECT_EQ(oracle::verify_adapted(G, s, b.generators, all), "") << G.to_string();
            }
        }
    }
}

TEST(FinAbel, AdaptedLargeGroupUsesSolver) {
    // 3^14 elements: too many to enumerate, so x1 comes from the linear solve
    FinAbPGroup G(3, {3, 5, 6});
    Subgroup H(G, {{1, 0, 0}, {0, 1, 0}, {0, 0, 9}});
    AdaptedBasis b = adapted_generators(G, H);
    EXPECT_EQ(G.element_order(b.generators[0]), 6);
    EXPECT_TRUE(H.contains(b.generators[1]));
    EXPECT_TRUE(H.contains(b.generators[2]));
    EXPECT_FALSE(H.contains(G.scale(3, b.generators[0])));
}

TEST(FinAbel, KerImExamples) {
    const std::int64_t p = 3;
    FinAbPGroup M(p, {2});
    Endo mp = Endo::multiplication(M, p);
    Subgroup L(M, {{p}});
    KerImResult r = check_kerim_identity(mp, L);
    EXPECT_EQ(r.lhs.exponent, 1);
    EXPECT_EQ(r.rhs.exponent, 1);

    FinAbPGroup T(p, {});
    KerImResult z = check_kerim_identity(Endo::multiplication(T, 0), Subgroup::trivial(T));
    EXPECT_EQ(z.lhs.exponent, 0);
    EXPECT_EQ(z.rhs.exponent, 0);

    FinAbPGroup V(p, {1, 1});
    KerImResult z2 = check_kerim_identity(Endo::multiplication(V, 0), Subgroup::trivial(V));
    EXPECT_EQ(z2.lhs.exponent, 0);
    EXPECT_EQ(z2.rhs.exponent, 0);

    FinAbPGroup M3(p, {3});
    KerImResult n2 = check_kerim_nilpotent(Endo::multiplication(M3, p), Subgroup(M3, {{9}}), 2);
    EXPECT_EQ(n2.lhs.exponent, 1);
    EXPECT_EQ(n2.rhs.exponent, 1);
    KerImResult autodetect = check_kerim_nilpotent(Endo::multiplication(M3, p), Subgroup(M3, {{9}}));
    EXPECT_EQ(autodetect.n, 2);

    FinAbPGroup W(p, {1, 1, 1});
    Endo jordan(W, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    KerImResult j = check_kerim_nilpotent(jordan, image(jordan), 1);
    EXPECT_TRUE(j.equal());

    KerImResult f = check_kerim_free_case(mp, L);
    EXPECT_EQ(f.lhs.exponent, 1);
    EXPECT_EQ(f.rhs.exponent, 1);
    FinAbPGroup M2(p, {1, 2});
    Endo mp2 = Endo::multiplication(M2, p);
    EXPECT_THROW(check_kerim_free_case(mp2, image(mp2)), PreconditionError);
    EXPECT_THROW(check_kerim_identity(mp, Subgroup::trivial(M)), PreconditionError);
}

TEST(FinAbel, KerImIdentityOnRandomInstances) {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 300; ++it) {
        KerImInstance inst = random_kerim_instance(rng, it % 2 ? 3 : 5, 3, 4, 1);
        KerImResult r = check_kerim_identity(inst.beta, inst.L);
        EXPECT_TRUE(r.equal()) << r.lhs.to_string() << " vs " << r.rhs.to_string();
    }
}
