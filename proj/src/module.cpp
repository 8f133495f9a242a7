#include "iwmod/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "iwmod/errors.hpp"

namespace iwmod {

namespace {

bool zero_at_full_precision(const DvrElem& x) { return compare(x, x.ring().zero()) == Comparison::Equal; }

TruncSeries series_pow(const TruncSeries& f, int n) {
    TruncSeries acc = TruncSeries::one(f.ring());
    for (int i = 0; i < n; ++i) acc *= f;
    return acc;
}

}  // namespace

TruncSeries ElementaryFactor::generator() const {
    if (uniformizer) return TruncSeries::constant(f.ring().pi_pow(power));
    return series_pow(f.series(), power);
}

std::string ElementaryFactor::to_string() const {
    std::string base = uniformizer ? "pi" : "(" + f.to_string() + ")";
    return power == 1 ? base : base + "^" + std::to_string(power);
}

ElementaryModule::ElementaryModule(const Dvr& ring, std::vector<ElementaryFactor> factors)
    : ring_(&ring), factors_(std::move(factors)) {
    for (const auto& fac : factors_) {
        if (fac.power < 1) throw std::invalid_argument("factor powers must be positive");
        if (&fac.f.ring() != ring_) throw std::invalid_argument("factor over a different ring");
        if (!fac.uniformizer && fac.f.degree() < 1)
            throw PreconditionError("each factor is a nonunit", "distinguished factor of degree 0");
    }
}

TruncSeries ElementaryModule::char_series() const {
    TruncSeries acc = TruncSeries::one(*ring_);
    for (const auto& fac : factors_) acc *= fac.generator();
    return acc;
}

LambdaPresentation ElementaryModule::presentation() const {
    const std::size_t r = factors_.size();
    Matrix<TruncSeries> m(r, std::vector<TruncSeries>(r, TruncSeries::zero(*ring_)));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = factors_[i].generator();
    return LambdaPresentation(*ring_, m);
}

LambdaPresentation::LambdaPresentation(const Dvr& ring, Matrix<TruncSeries> relations)
    : ring_(&ring), rel_(std::move(relations)) {
    for (const auto& row : rel_) {
        if (row.size() != rel_.size()) throw std::invalid_argument("presentation matrix must be square");
        for (const auto& x : row)
            if (&x.ring() != ring_) throw std::invalid_argument("presentation entry over a different ring");
    }
}

LambdaPresentation LambdaPresentation::cyclic(const TruncSeries& f) { return LambdaPresentation(f.ring(), {{f}}); }

TruncSeries LambdaPresentation::determinant() const {
    return berkowitz_det(rel_, TruncSeries::zero(*ring_), TruncSeries::one(*ring_));
}

WeierstrassForm char_series(const LambdaPresentation& P) {
    TruncSeries det = P.determinant();
    if (det.is_zero()) throw PrecisionError("determinant is zero at the working precision; module is not torsion");
    return weierstrass_prepare(det);
}

LeadingCoefficient first_nonvanishing_coeff(const TruncSeries& f) {
    const int N = f.ring().precision();
    for (int i = 0; i < f.size(); ++i) {
        const DvrElem& c = f.coeffs()[i];
        if (c.valuation().determined()) return {i, c};
        if (c.abs_precision() < N)
            throw PrecisionError("coefficient of S^" + std::to_string(i) + " is known only modulo pi^" +
                                 std::to_string(c.abs_precision()));
    }
    throw PrecisionError("every inspected coefficient vanishes at the working precision");
}

LeadingCoefficient first_nonvanishing_coeff(const WeierstrassForm& f) {
    LeadingCoefficient lc = first_nonvanishing_coeff(f.distinguished.series());
    lc.coeff = lc.coeff.mul_pi_pow(f.mu);
    return lc;
}

PPower quotient_order(const DvrElem& x) {
    Valuation v = x.valuation();
    return {x.ring().p(), x.ring().f() * v.value, v.at_least};
}

PPower elementary_coinvariant_order(const ElementaryModule& E) {
    const Dvr& R = E.ring();
    PPower total{R.p(), 0, false};
    for (const auto& fac : E.factors()) {
        TruncSeries g = fac.generator();
        DvrElem g0 = g.coeff(0);
        DvrElem lead = g0;
        if (zero_at_full_precision(g0)) {
            // g = S·h: the contribution is #O/h(0)
            lead = g.coeff(1);
            if (zero_at_full_precision(lead))
                throw PreconditionError("S^2 divides no factor", "S^2 divides " + fac.to_string());
        } else if (!g0.valuation().determined()) {
            throw PrecisionError("constant term of " + fac.to_string() + " is zero at reduced precision");
        }
        PPower part = quotient_order(lead);
        total.exponent += part.exponent;
        total.at_least = total.at_least || part.at_least;
    }
    return total;
}

PPower coinvariant_order_from_char(const WeierstrassForm& f) { return quotient_order(first_nonvanishing_coeff(f).coeff); }
PPower coinvariant_order_from_char(const TruncSeries& f) { return quotient_order(first_nonvanishing_coeff(f).coeff); }

std::vector<int> dvr_quotient_exponents(const Dvr& R, int d) {
    std::vector<int> out;
    if (R.f() == 2) {
        out = {d, d};
    } else if (R.e() == 2) {
        out = {(d + 1) / 2, d / 2};
    } else {
        out = {d};
    }
    std::erase(out, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void push_shifts(DvrMatrix& rows, const std::vector<TruncSeries>& vec, int M) {
    const int r = static_cast<int>(vec.size());
    const Dvr& R = vec[0].ring();
    for (int s = 0; s < M; ++s) {
        std::vector<DvrElem> row(static_cast<std::size_t>(r * M), R.zero());
        for (int i = 0; i < r; ++i)
            for (int j = s; j < M; ++j) row[i * M + j] = vec[i].coeff(j - s);
        rows.push_back(std::move(row));
    }
}

struct Divisors {
    std::vector<Valuation> vals;
    bool finite = true;
    int total = 0;
};

Divisors divisors_of(const DvrMatrix& rows, int ncols) {
    Divisors d;
    d.vals = snf_dvr(rows);
    const int N = rows[0][0].ring().precision();
    if (static_cast<int>(d.vals.size()) < ncols) d.finite = false;
    for (const auto& v : d.vals) {
        if (!v.determined() || v.value >= N) d.finite = false;
        d.total += v.value;
    }
    return d;
}

}  // namespace

FinAbPGroup truncated_coinvariants(const LambdaPresentation& P, const std::vector<TruncSeries>& ideal,
                                   TruncationBound bound) {
    const Dvr& R = P.ring();
    const int r = P.size();
    const int M = bound.s_order;
    if (r == 0) return FinAbPGroup(R.p(), {});
    if (M < 1) throw std::invalid_argument("S-truncation order must be positive");
    DvrMatrix rows;
    for (const auto& rel : P.relations()) push_shifts(rows, rel, M);
    for (const auto& h : ideal) {
        if (&h.ring() != &R) throw std::invalid_argument("ideal generator over a different ring");
        for (int i = 0; i < r; ++i) {
            std::vector<TruncSeries> v(r, TruncSeries::zero(R));
            v[i] = h;
            push_shifts(rows, v, M);
        }
    }
    const std::string where = "(pi^" + std::to_string(R.precision()) + ", S^" + std::to_string(M) + ")";
    Divisors d = divisors_of(rows, r * M);
    DvrMatrix extended = rows;
    for (int i = 0; i < r; ++i) {
        std::vector<DvrElem> row(static_cast<std::size_t>(r * M), R.zero());
        row[i * M + M - 1] = R.one();
        extended.push_back(std::move(row));
    }
    Divisors de = divisors_of(extended, r * M);
    if (!d.finite || !de.finite || de.total != d.total)
        throw PrecisionError("quotient is not finite at the truncation bound " + where);
    std::vector<int> exps;
    for (const auto& v : d.vals)
        for (int e : dvr_quotient_exponents(R, v.value)) exps.push_back(e);
    std::sort(exps.begin(), exps.end());
    return FinAbPGroup(R.p(), exps);
}

FinAbPGroup elementary_coinvariants_direct(const ElementaryModule& E, TruncationBound bound) {
    const Dvr& R = E.ring();
    std::vector<int> exps;
    for (const auto& fac : E.factors()) {
        TruncSeries g = fac.generator();
        std::vector<TruncSeries> ideal{TruncSeries::monomial(R, 1)};
        if (zero_at_full_precision(g.coeff(0))) {
            // E[S] = (g/S)·Λ/(g)
            std::vector<DvrElem> h(g.coeffs().begin() + 1, g.coeffs().end());
            ideal.emplace_back(R, h);
        }
        FinAbPGroup part = truncated_coinvariants(LambdaPresentation::cyclic(g), ideal, bound);
        exps.insert(exps.end(), part.exponents().begin(), part.exponents().end());
    }
    std::sort(exps.begin(), exps.end());
    return FinAbPGroup(R.p(), exps);
}

// --- embedding ----------------------------------------------------------------------

KoikeEmbedding::KoikeEmbedding(DvrElem alpha, DvrElem beta, int k, std::array<std::array<DvrElem, 2>, 2> lambda)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), k_(k), lambda_(std::move(lambda)) {
    if (!alpha_.valuation().determined() || !beta_.valuation().determined())
        throw PrecisionError("alpha or beta is zero at the working precision");
    Valuation gap = (beta_ - alpha_).valuation();
    if (!gap.determined()) throw PrecisionError("alpha = beta at the working precision; alpha != beta unverifiable");
    if (k_ < 0 || k_ > gap.value)
        throw PreconditionError("0 <= k <= ord(beta - alpha)",
                                "k = " + std::to_string(k_) + ", ord(beta - alpha) = " + std::to_string(gap.value));
    gamma_ = (beta_ - alpha_).div_pi_pow(k_);
    DvrElem det = lambda_[0][0] * lambda_[1][1] - lambda_[0][1] * lambda_[1][0];
    if (!det.is_unit())
        throw PreconditionError("x1 and x2 generate", "lambda determinant " + det.to_string() + " is not a unit");
}

DvrElem KoikeEmbedding::mu(int i, int j) const {
    if (j == 0) return lambda_[i][0];
    return lambda_[i][0] + lambda_[i][1] * ring().pi_pow(k_);
}

AkStructure ak_tensor_structure(const KoikeEmbedding& emb) {
    const Dvr& R = emb.ring();
    DvrMatrix A{{emb.alpha(), R.zero()}, {emb.gamma(), emb.beta()}};
    std::vector<Valuation> v = snf_dvr(A);
    std::sort(v.begin(), v.end(), [](const Valuation& a, const Valuation& b) { return a.value < b.value; });
    const int m = std::min(emb.alpha().valuation().value, emb.beta().valuation().value);
    Valuation vg = emb.gamma().valuation();
    if (!vg.determined() && vg.value < m)
        throw PrecisionError("ord(gamma) versus min(ord alpha, ord beta) is undetermined");
    std::vector<int> exps;
    for (const auto& d : v) {
        if (!d.determined()) throw PrecisionError("elementary divisor of the S-action is zero at precision");
        for (int e : dvr_quotient_exponents(R, d.value)) exps.push_back(e);
    }
    std::sort(exps.begin(), exps.end());
    return {{v[0], v[1]}, !vg.determined() || vg.value >= m, FinAbPGroup(R.p(), exps)};
}

namespace {

bool valuation_at_least(const DvrElem& x, int extra, int target) {
    Valuation v = x.valuation();
    if (v.determined()) return v.value + extra >= target;
    if (v.value + extra >= target) return true;
    throw PrecisionError("divisibility undetermined at the working precision");
}

}  // namespace

bool divisibility_conditions(const KoikeEmbedding& emb, int N1, int N2) {
    const int va = emb.alpha().valuation().value;
    const int vb = emb.beta().valuation().value;
    const int Ns[2] = {N1, N2};
    for (int i = 0; i < 2; ++i) {
        const DvrElem& l1 = emb.lambda(i, 0);
        const DvrElem& l2 = emb.lambda(i, 1);
        if (!valuation_at_least(l1, Ns[i], va)) return false;
        if (!valuation_at_least(l2 * emb.alpha() - l1 * emb.gamma(), Ns[i], va + vb)) return false;
    }
    return true;
}

}  // namespace iwmod
