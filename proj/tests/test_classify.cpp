#include <gtest/gtest.h>

#include <map>

#include "gen.hpp"
#include "iwmod/classify.hpp"
#include "iwmod/errors.hpp"

using namespace iwmod;

namespace {

const Dvr& Zp(std::int64_t p) { return Dvr::make(DvrSpec::zp(p)); }

Lambda2Input profile(int k, int oa, int ob, int gap, int mu21, int mu22, int n1, int n2) {
    Lambda2Input in;
    in.k = k;
    in.ord_alpha = oa;
    in.ord_beta = ob;
    in.ord_gap = gap;
    in.ord_mu21 = mu21;
    in.ord_mu22 = mu22;
    in.n1 = n1;
    in.n2 = n2;
    return in;
}

KoikeEmbedding embed(const Dvr& R, std::int64_t a, std::int64_t b, int k, std::array<std::int64_t, 4> lam) {
    return KoikeEmbedding(R.from_int(a), R.from_int(b), k,
                          {{{R.from_int(lam[0]), R.from_int(lam[1])}, {R.from_int(lam[2]), R.from_int(lam[3])}}});
}

}  // namespace

TEST(Classify, NonSplitExamples) {
    auto dim = [](int g, int lambda, int m, bool lk) { return dim_coinvariants_nonsplit({g, lambda, m, lk}); };
    DimensionReport a = dim(2, 3, 0, false);
    EXPECT_TRUE(a.exact());
    EXPECT_EQ(a.lo, 2);
    EXPECT_EQ(dim(1, 1, 1, false).lo, 1);
    EXPECT_EQ(dim(1, 3, 1, false).lo, 2);
    EXPECT_EQ(dim(1, 3, 1, true).lo, 1);
    DimensionReport u = dim(3, 2, 2, false);
    EXPECT_EQ(u.kind, VerdictKind::Undetermined);
    EXPECT_EQ(u.lo, 2);
    EXPECT_EQ(u.hi, 4);
    EXPECT_FALSE(u.exact());
    EXPECT_THROW(dim(1, 2, 0, true), PreconditionError);
    EXPECT_THROW(dim(0, 2, 0, false), PreconditionError);
    EXPECT_EQ(dim(1, 0, 1, false).kind, VerdictKind::OutOfScope);
}

TEST(Classify, NonSplitMatchesDirectComputation) {
    testgen::Rng rng(61);
    for (std::int64_t p : {3, 5}) {
        const Dvr& R = Zp(p);
        for (int it = 0; it < 40; ++it) {
            int lambda = static_cast<int>(testgen::uniform(rng, 1, 3));
            DistPoly F = testgen::random_dist(rng, R, lambda, 3);
            int n = F.coeff(0).valuation().value;
            int m = static_cast<int>(testgen::uniform(rng, 1, n));
            DimensionReport rep = dim_coinvariants_nonsplit({1, lambda, m, m == n});
            ASSERT_TRUE(rep.exact());
            EXPECT_EQ(coinvariant_dimension_direct(F, m), rep.lo) << F.to_string() << " m=" << m;
        }
    }
}

TEST(Classify, Lambda2Examples) {
    EXPECT_EQ(is_cyclic_lambda2(profile(1, 2, 2, 2, 0, 0, 0, 0)).kind, VerdictKind::Cyclic);
    EXPECT_EQ(is_cyclic_lambda2(profile(0, 1, 1, 2, 0, 0, 0, 0)).kind, VerdictKind::NotCyclic);
    EXPECT_EQ(is_cyclic_lambda2(profile(0, 1, 2, 1, 0, 0, 1, 2)).kind, VerdictKind::Cyclic);
    EXPECT_EQ(is_cyclic_lambda2(profile(0, 1, 2, 1, 0, 1, 2, 1)).kind, VerdictKind::Cyclic);
    EXPECT_EQ(is_cyclic_lambda2(profile(0, 1, 2, 1, 0, 0, 2, 1)).kind, VerdictKind::NotCyclic);
    EXPECT_THROW(is_cyclic_lambda2(profile(3, 1, 1, 2, 0, 0, 0, 0)), PreconditionError);
    EXPECT_THROW(is_cyclic_lambda2(profile(0, 2, 2, 1, 0, 0, 0, 0)), PreconditionError);
}

TEST(Classify, OracleExamples) {
    const Dvr& R = Zp(3);
    // α = p, β = p + p², k = 1, x1 = e2, x2 = e1
    KoikeEmbedding one = embed(R, 3, 12, 1, {0, 1, 1, 0});
    EXPECT_EQ(criterion_solvable(one).status, Feasibility::Feasible);
    KoikeEmbedding two = embed(R, 3, 12, 0, {1, 0, 0, 1});
    OracleResult r = criterion_solvable(two);
    EXPECT_EQ(r.status, Feasibility::Infeasible);
    EXPECT_TRUE(r.routes_agree);
    EXPECT_THROW(embed(R, 3, 12, 0, {1, 3, 3, 9}), PreconditionError);
}

TEST(Classify, RulesAgreeWithOracle) {
    ProfileRange range;
    range.max_ord = 6;
    range.max_k = 3;
    range.max_coord_ord = 2;
    CrossValidationReport rep = cross_validate(range);
    std::map<std::string, int> rules;
    for (const auto& e : rep.entries) {
        ++rules[e.verdict.reason];
        EXPECT_TRUE(e.agree) << e.profile.to_string() << " rule: " << e.verdict.reason;
        EXPECT_TRUE(e.oracle.routes_agree);
    }
    EXPECT_GT(rep.entries.size(), 1000u);
    EXPECT_EQ(rules.size(), 8u);
    EXPECT_EQ(rep.disagreements(), 0);
}

TEST(Classify, CrossValidationEdgeCases) {
    ProfileRange empty;
    empty.min_ord = 3;
    empty.max_ord = 2;
    EXPECT_TRUE(cross_validate(empty).entries.empty());
    ProfileRange none;
    none.primes.clear();
    EXPECT_TRUE(cross_validate(none).entries.empty());

    Realization r;
    r.p = 3;
    r.k = 1;
    r.ord_alpha = 2;
    r.ord_gap = 2;
    r.u = 1;
    r.v = 1;
    r.coord_unit = {{{1, 1}, {1, 1}}};
    int found = 0;
    for (int c = 0; c < 81; ++c) {
        r.coord_ord = {{{c % 3 - 1, c / 3 % 3 - 1}, {c / 9 % 3 - 1, c / 27 - 1}}};
        try {
            CrossValidationEntry e = validate_instance(r);
            if (!e.admissible) continue;
            ++found;
            EXPECT_EQ(e.verdict.kind, VerdictKind::Cyclic);
            EXPECT_TRUE(e.agree);
        } catch (const PreconditionError&) {
        }
    }
    EXPECT_GT(found, 0);
}

TEST(Classify, VerdictsIgnoreCommonUnitScaling) {
    ProfileRange range;
    range.max_ord = 3;
    range.max_coord_ord = 1;
    range.primes = {5};
    CrossValidationReport rep = cross_validate(range);
    for (const auto& e : rep.entries) {
        Realization s = e.instance;
        s.u *= 7;
        s.v *= 7;
        for (auto& row : s.coord_unit)
            for (auto& w : row) w *= 7;
        CrossValidationEntry t = validate_instance(s);
        EXPECT_EQ(t.verdict.kind, e.verdict.kind);
        EXPECT_EQ(t.oracle.status, e.oracle.status);
    }
}
