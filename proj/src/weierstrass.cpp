#include <algorithm>
#include <limits>

#include "iwmod/errors.hpp"
#include "iwmod/series.hpp"

namespace iwmod {

namespace {

// Smallest valuation among the non-leading coefficients; INT_MAX when all vanish.
int low_valuation(const std::vector<DvrElem>& c, int n) {
    int w = std::numeric_limits<int>::max();
    for (int i = 0; i < n; ++i) {
        Valuation v = c[i].valuation();
        if (v.determined() || v.value < c[i].ring().precision()) w = std::min(w, v.value);
    }
    return w;
}

int tail_cap(int w, long steps) {
    if (w == std::numeric_limits<int>::max()) return std::numeric_limits<int>::max();
    return static_cast<int>(std::min<long>(static_cast<long>(w) * steps, std::numeric_limits<int>::max()));
}

long ceil_div(long a, long b) { return a <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace

WeierstrassDivision weierstrass_divide(const TruncSeries& f, const DistPoly& d) {
    const Dvr& R = f.ring();
    if (&d.ring() != &R) throw std::invalid_argument("divisor over a different ring");
    const int n = d.degree();
    if (!f.is_exact() && f.order() < n)
        throw PrecisionError("series truncation order " + std::to_string(f.order()) +
                             " is below the divisor degree " + std::to_string(n));
    if (n == 0) return {f, TruncSeries::zero(R)};

    std::vector<DvrElem> a = f.coeffs();
    const int len = static_cast<int>(a.size());
    std::vector<DvrElem> q(std::max(0, len - n), R.zero());
    for (int j = len - 1; j >= n; --j) {
        DvrElem t = a[j];
        q[j - n] = t;
        for (int i = 0; i <= n; ++i) a[j - n + i] -= t * d.coeff(i);
    }

    int qorder = TruncSeries::kExact;
    if (!f.is_exact()) {
        const int M = f.order();
        qorder = M - n;
        const int w = low_valuation(d.coeffs(), n);
        for (int j = 0; j < static_cast<int>(q.size()); ++j) q[j] = q[j].with_precision(tail_cap(w, ceil_div(M - n - j, n)));
    }

    std::vector<DvrElem> r;
    for (int j = 0; j < n; ++j) {
        DvrElem s = f.coeff(j);
        for (int i = 0; i <= j; ++i)
            if (j - i < static_cast<int>(q.size())) s -= q[j - i] * d.coeff(i);
        r.push_back(s);
    }
    return {TruncSeries(R, std::move(q), qorder), TruncSeries(R, std::move(r))};
}

WeierstrassForm weierstrass_prepare(const TruncSeries& g) {
    const Dvr& R = g.ring();
    const int N = R.precision();

    int mu = std::numeric_limits<int>::max();
    for (const auto& c : g.coeffs()) {
        Valuation v = c.valuation();
        if (v.determined()) mu = std::min(mu, v.value);
    }
    if (mu == std::numeric_limits<int>::max())
        throw PrecisionError("series is zero at the working precision; mu and lambda are not determined");
    for (const auto& c : g.coeffs())
        if (!c.valuation().determined() && c.valuation().value < mu)
            throw PrecisionError("a coefficient known only modulo pi^" + std::to_string(c.valuation().value) +
                                 " may lower mu");

    std::vector<DvrElem> h;
    for (const auto& c : g.coeffs()) h.push_back(c.div_pi_pow(mu));
    int lambda = -1;
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
        if (h[i].is_unit()) {
            lambda = i;
            break;
        }
        if (h[i].valuation().value < 1)
            throw PrecisionError("coefficient of S^" + std::to_string(i) + " is not known to be a non-unit");
    }
    if (lambda == 0) return {mu, DistPoly::one(R)};

    const int T = lambda * (N + 2) + 1;
    TruncSeries cur(R, h, T);
    bool done = false;
    for (int iter = 0; iter <= N + 1 && !done; ++iter) {
        std::vector<DvrElem> hi(cur.coeffs().begin() + lambda, cur.coeffs().end());
        TruncSeries H(R, hi, cur.order() - lambda);
        done = agrees(H, TruncSeries::one(R));
        if (!done) cur = cur * H.inverse();
    }
    if (!done) throw PrecisionError("Weierstrass iteration did not stabilise");

    std::vector<DvrElem> F(cur.coeffs().begin(), cur.coeffs().begin() + lambda);
    if (!g.is_exact()) {
        const int w = low_valuation(F, lambda);
        const int cap = tail_cap(w, ceil_div(g.order() - lambda + 1, lambda));
        for (auto& c : F) c = c.with_precision(cap);
    }
    F.push_back(R.one());
    return {mu, DistPoly(R, std::move(F))};
}

}  // namespace iwmod
