#include <algorithm>
#include <numeric>

#include "iwmod/errors.hpp"
#include "iwmod/series.hpp"

namespace iwmod {

Rational Rational::make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) n = -n, d = -d;
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<NewtonSlope> newton_polygon(const DistPoly& F) {
    const int n = F.degree();
    const int e = F.ring().e();
    struct Pt {
        long x, y;
    };
    std::vector<Pt> known;
    std::vector<Pt> bounds;
    for (int i = 0; i <= n; ++i) {
        Valuation v = F.coeff(i).valuation();
        if (v.determined()) {
            known.push_back({i, v.value});
        } else if (i == 0) {
            throw PrecisionError("constant coefficient is zero at the working precision");
        } else {
            bounds.push_back({i, v.value});
        }
    }

    std::vector<Pt> hull;
    for (const Pt& p : known) {
        while (hull.size() >= 2) {
            const Pt& o = hull[hull.size() - 2];
            const Pt& a = hull.back();
            long cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }

    for (const Pt& b : bounds) {
        for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
            const Pt& l = hull[k];
            const Pt& r = hull[k + 1];
            if (b.x < l.x || b.x > r.x) continue;
            if (b.y * (r.x - l.x) < l.y * (r.x - l.x) + (r.y - l.y) * (b.x - l.x))
                throw PrecisionError("coefficient of S^" + std::to_string(b.x) +
                                     " is too imprecise to fix the Newton polygon");
        }
    }

    std::vector<NewtonSlope> out;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        long len = hull[k + 1].x - hull[k].x;
        out.push_back({Rational::make(hull[k].y - hull[k + 1].y, len * e), static_cast<int>(len)});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

DvrElem discriminant(const DistPoly& F) {
    if (F.degree() != 2) throw std::invalid_argument("quadratic polynomial expected");
    const Dvr& R = F.ring();
    return F.coeff(1) * F.coeff(1) - R.from_int(4) * F.coeff(0);
}

int even_disc_valuation(const DvrElem& d) {
    Valuation v = d.valuation();
    if (!v.determined())
        throw PrecisionError("discriminant is zero at the working precision; distinct roots cannot be verified");
    if (v.value % 2 != 0)
        throw PreconditionError("roots lie in the declared ring",
                                "discriminant has odd valuation " + std::to_string(v.value));
    return v.value;
}

}  // namespace

int root_gap_valuation(const DistPoly& F) { return even_disc_valuation(discriminant(F)) / 2; }

DvrElem dvr_sqrt(const DvrElem& x) {
    const Dvr& R = x.ring();
    int v = even_disc_valuation(x);
    DvrElem u = x.div_pi_pow(v);
    DvrElem s;
    bool found = false;
    for (const auto& r : R.residue_representatives()) {
        if ((r * r - u).valuation().value >= 1) {
            s = r;
            found = true;
            break;
        }
    }
    if (!found) throw PreconditionError("square in the declared ring", "residue is not a square");
    DvrElem half = R.from_int(2).inverse();
    for (int i = 0; i < 12; ++i) s = (s + u * s.inverse()) * half;
    return s.mul_pi_pow(v / 2);
}

std::pair<DvrElem, DvrElem> quad_split(const DistPoly& F, int target_precision) {
    const Dvr& R = F.ring();
    DvrElem d = discriminant(F);
    DvrElem sq;
    try {
        sq = dvr_sqrt(d);
    } catch (const PreconditionError& err) {
        throw PreconditionError("F splits over the declared ring", err.what());
    }
    DvrElem half = R.from_int(2).inverse();
    DvrElem alpha = (-F.coeff(1) + sq) * half;
    DvrElem beta = (-F.coeff(1) - sq) * half;
    if (beta.valuation().value < alpha.valuation().value) std::swap(alpha, beta);
    int got = std::min(alpha.abs_precision(), beta.abs_precision());
    if (target_precision > 0 && got < target_precision)
        throw PrecisionError("roots known to pi^" + std::to_string(got) + ", below the requested " +
                             std::to_string(target_precision));
    return {alpha, beta};
}

}  // namespace iwmod
