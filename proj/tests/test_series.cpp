#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "iwmod/berkowitz.hpp"
#include "iwmod/errors.hpp"
#include "iwmod/series.hpp"

using namespace iwmod;
using iwmod::testgen::Rng;

namespace {

const Dvr& Z3() { return Dvr::make(DvrSpec::zp(3)); }

std::int64_t cofactor_det(const Matrix<std::int64_t>& A) {
    const std::size_t n = A.size();
    if (n == 0) return 1;
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<std::int64_t> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(A[i][k]);
            minor.push_back(row);
        }
        std::int64_t term = A[0][j] * cofactor_det(minor);
        acc += j % 2 == 0 ? term : -term;
    }
    return acc;
}

}  // namespace

TEST(Series, DivideExamples) {
    const Dvr& R = Z3();
    auto f = TruncSeries::polynomial(R, {0, 0, 1});
    auto d = DistPoly::from_ints(R, {-3, 1});
    auto [q, r] = weierstrass_divide(f, d);
    EXPECT_TRUE(agrees(q, TruncSeries::polynomial(R, {3, 1})));
    EXPECT_TRUE(agrees(r, TruncSeries::polynomial(R, {9})));

    auto [q2, r2] = weierstrass_divide(d.series(), d);
    EXPECT_TRUE(agrees(q2, TruncSeries::one(R)));
    EXPECT_TRUE(r2.is_zero());

    auto [q3, r3] = weierstrass_divide(TruncSeries::polynomial(R, {0, -3, 0, 1}), DistPoly::from_ints(R, {-3, 0, 1}));
    EXPECT_TRUE(agrees(q3, TruncSeries::polynomial(R, {0, 1})));
    EXPECT_TRUE(r3.is_zero());
}

TEST(Series, DivideNeedsEnoughTerms) {
    const Dvr& R = Z3();
    TruncSeries f(R, {R.one()}, 1);
    EXPECT_THROW(weierstrass_divide(f, DistPoly::from_ints(R, {3, 0, 1})), PrecisionError);
}

TEST(Series, DivideInvertsMultiplyAdd) {
    Rng rng(21);
    for (const DvrSpec& s : {DvrSpec::zp(3), DvrSpec::ramified_sqrt_p(5)}) {
        const Dvr& R = Dvr::make(s);
        for (int i = 0; i < 100; ++i) {
            int n = static_cast<int>(testgen::uniform(rng, 1, 3));
            DistPoly d = testgen::random_dist(rng, R, n);
            TruncSeries q = testgen::random_poly(rng, R, static_cast<int>(testgen::uniform(rng, 0, 4)));
            TruncSeries r = testgen::random_poly(rng, R, n - 1);
            auto [q2, r2] = weierstrass_divide(q * d.series() + r, d);
            EXPECT_TRUE(agrees(q, q2));
            EXPECT_TRUE(agrees(r, r2));
        }
    }
}

TEST(Series, TruncatedDivisionCapsQuotient) {
    Rng rng(22);
    const Dvr& R = Z3();
    DistPoly d = DistPoly::from_ints(R, {-3, 1});
    // Any completion of f beyond S^M must agree with the reported q, r.
    for (int i = 0; i < 50; ++i) {
        TruncSeries full = testgen::random_poly(rng, R, 9);
        TruncSeries cut = full.truncated(6);
        auto [q, r] = weierstrass_divide(cut, d);
        auto [qf, rf] = weierstrass_divide(full, d);
        EXPECT_TRUE(agrees(q, qf));
        EXPECT_TRUE(agrees(r, rf));
    }
}

TEST(Series, InverseOfUnit) {
    Rng rng(23);
    const Dvr& R = Z3();
    for (int i = 0; i < 50; ++i) {
        TruncSeries u = testgen::random_poly(rng, R, 4);
        if (!u.is_unit()) continue;
        TruncSeries prod = u.truncated(10) * u.inverse(10);
        EXPECT_TRUE(agrees(prod, TruncSeries(R, {R.one()}, 10)));
    }
}

TEST(Series, NewtonExamples) {
    const Dvr& R = Z3();
    auto slopes = newton_polygon(DistPoly::from_ints(R, {27, -12, 1}));
    ASSERT_EQ(slopes.size(), 2u);
    EXPECT_EQ(slopes[0], (NewtonSlope{Rational::make(1, 1), 1}));
    EXPECT_EQ(slopes[1], (NewtonSlope{Rational::make(2, 1), 1}));

    const Dvr& Rr = Dvr::make(DvrSpec::ramified_sqrt_p(3));
    auto s2 = newton_polygon(DistPoly::from_ints(Rr, {-3, 0, 1}));
    ASSERT_EQ(s2.size(), 1u);
    EXPECT_EQ(s2[0], (NewtonSlope{Rational::make(1, 2), 2}));

    auto s3 = newton_polygon(DistPoly::from_ints(R, {3, 3, 1}));
    ASSERT_EQ(s3.size(), 1u);
    EXPECT_EQ(s3[0], (NewtonSlope{Rational::make(1, 2), 2}));
}

TEST(Series, NewtonMatchesRootValuations) {
    Rng rng(24);
    for (const DvrSpec& s : {DvrSpec::zp(5), DvrSpec::ramified_sqrt_p(3)}) {
        const Dvr& R = Dvr::make(s);
        for (int i = 0; i < 200; ++i) {
            int va = static_cast<int>(testgen::uniform(rng, 1, 5));
            int vb = static_cast<int>(testgen::uniform(rng, 1, 5));
            DvrElem a = testgen::with_valuation(rng, R, va);
            DvrElem b = testgen::with_valuation(rng, R, vb);
            auto slopes = newton_polygon(DistPoly::from_roots(R, {a, b}));
            std::vector<Rational> got;
            for (const auto& sl : slopes)
                for (int k = 0; k < sl.multiplicity; ++k) got.push_back(sl.slope);
            std::vector<Rational> want{Rational::make(std::min(va, vb), R.e()),
                                       Rational::make(std::max(va, vb), R.e())};
            EXPECT_EQ(got, want);
        }
    }
}

TEST(Series, NewtonRejectsVanishingConstant) {
    const Dvr& R = Z3();
    EXPECT_THROW(newton_polygon(DistPoly::from_ints(R, {0, 3, 1})), PrecisionError);
}

TEST(Series, RootGapExamples) {
    const Dvr& R = Z3();
    EXPECT_EQ(root_gap_valuation(DistPoly::from_roots(R, {R.from_int(3), R.from_int(9)})), 1);
    EXPECT_EQ(root_gap_valuation(DistPoly::from_roots(R, {R.from_int(9), R.from_int(9 + 27)})), 3);
    const Dvr& Rr = Dvr::make(DvrSpec::ramified_sqrt_p(3));
    EXPECT_EQ(root_gap_valuation(DistPoly::from_ints(Rr, {-3, 0, 1})), 1);
    EXPECT_THROW(root_gap_valuation(DistPoly::from_roots(R, {R.from_int(3), R.from_int(3)})), PrecisionError);
}

TEST(Series, RootGapMatchesDifference) {
    Rng rng(25);
    for (const DvrSpec& s : {DvrSpec::zp(3), DvrSpec::zp(5), DvrSpec::ramified_sqrt_p(3)}) {
        const Dvr& R = Dvr::make(s);
        int done = 0;
        while (done < 200) {
            DvrElem a = testgen::with_valuation(rng, R, static_cast<int>(testgen::uniform(rng, 1, 6)));
            DvrElem b = testgen::with_valuation(rng, R, static_cast<int>(testgen::uniform(rng, 1, 6)));
            Valuation gap = (b - a).valuation();
            if (!gap.determined() || 2 * gap.value >= R.precision()) continue;
            ++done;
            EXPECT_EQ(root_gap_valuation(DistPoly::from_roots(R, {a, b})), gap.value);
        }
    }
}

TEST(Series, QuadSplitExamples) {
    const Dvr& R = Z3();
    auto [a, b] = quad_split(DistPoly::from_ints(R, {27, -12, 1}), 8);
    EXPECT_TRUE(agrees(a, R.from_int(3)));
    EXPECT_TRUE(agrees(b, R.from_int(9)));
    EXPECT_THROW(quad_split(DistPoly::from_ints(R, {-3, 0, 1}), 8), PreconditionError);

    const Dvr& Rr = Dvr::make(DvrSpec::ramified_sqrt_p(3));
    auto [x, y] = quad_split(DistPoly::from_ints(Rr, {-3, 0, 1}), 8);
    DvrElem pi = Rr.uniformizer();
    EXPECT_TRUE((agrees(x, pi) && agrees(y, -pi)) || (agrees(x, -pi) && agrees(y, pi)));
    EXPECT_THROW(quad_split(DistPoly::from_ints(R, {27, -12, 1}), 100), PrecisionError);
}

TEST(Series, QuadSplitRecoversRoots) {
    Rng rng(26);
    for (const DvrSpec& s : {DvrSpec::zp(5), DvrSpec::ramified_sqrt_p(3), DvrSpec::unramified_sqrt(3, 2)}) {
        const Dvr& R = Dvr::make(s);
        for (int i = 0; i < 100; ++i) {
            DvrElem a = testgen::with_valuation(rng, R, static_cast<int>(testgen::uniform(rng, 1, 4)));
            DvrElem b = testgen::with_valuation(rng, R, static_cast<int>(testgen::uniform(rng, 1, 4)));
            if ((a - b).valuation().value > 4) continue;
            DistPoly F = DistPoly::from_roots(R, {a, b});
            auto [x, y] = quad_split(F, 0);
            EXPECT_TRUE((agrees(x, a) && agrees(y, b)) || (agrees(x, b) && agrees(y, a)));
            EXPECT_TRUE(agrees(DistPoly::from_roots(R, {x, y}), F));
        }
    }
}

TEST(Series, PreparationRecoversFactors) {
    Rng rng(27);
    for (const DvrSpec& s : {DvrSpec::zp(3), DvrSpec::ramified_sqrt_p(5)}) {
        const Dvr& R = Dvr::make(s);
        for (int i = 0; i < 60; ++i) {
            int mu = static_cast<int>(testgen::uniform(rng, 0, 2));
            DistPoly F = testgen::random_dist(rng, R, static_cast<int>(testgen::uniform(rng, 0, 3)));
            TruncSeries U = testgen::random_poly(rng, R, 3);
            if (!U.is_unit()) continue;
            TruncSeries g = R.pi_pow(mu) * (F.series() * U);
            WeierstrassForm w = weierstrass_prepare(g);
            EXPECT_EQ(w.mu, mu);
            EXPECT_TRUE(agrees(w.distinguished, F)) << w.distinguished.to_string() << " vs " << F.to_string();
        }
    }
}

TEST(Series, PreparationOfZeroFails) {
    const Dvr& R = Z3();
    EXPECT_THROW(weierstrass_prepare(TruncSeries::zero(R)), PrecisionError);
}

TEST(Berkowitz, MatchesCofactorExpansion) {
    Rng rng(28);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = static_cast<std::size_t>(testgen::uniform(rng, 0, 5));
        Matrix<std::int64_t> A(n, std::vector<std::int64_t>(n));
        for (auto& row : A)
            for (auto& x : row) x = testgen::uniform(rng, -9, 9);
        EXPECT_EQ(berkowitz_det<std::int64_t>(A, 0, 1), cofactor_det(A));
    }
}

TEST(Berkowitz, CharpolyOfCompanion) {
    // companion of x^3 - 2x^2 + 5x - 7
    Matrix<std::int64_t> C{{0, 0, 7}, {1, 0, -5}, {0, 1, 2}};
    EXPECT_EQ(berkowitz_charpoly<std::int64_t>(C, 0, 1), (std::vector<std::int64_t>{1, -2, 5, -7}));
}
