#include "iwmod/classify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "iwmod/errors.hpp"

namespace iwmod {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Cyclic: return "cyclic";
        case VerdictKind::NotCyclic: return "not cyclic";
        case VerdictKind::OutOfScope: return "out of scope";
        case VerdictKind::Undetermined: return "undetermined";
    }
    return "?";
}

DimensionReport dim_coinvariants_nonsplit(const NonSplitInput& in) {
    if (in.g < 1) throw PreconditionError("g >= 1", "g = " + std::to_string(in.g));
    if (in.lambda < 0) throw PreconditionError("lambda >= 0", "lambda = " + std::to_string(in.lambda));
    if (in.m < 0) throw PreconditionError("m >= 0", "m = " + std::to_string(in.m));
    if (in.m == 0 && in.lk_in_ktilde)
        throw PreconditionError("L_K in K~ forces L_K cap K~ != K", "flag set with m = 0 and a nontrivial class group");
    DimensionReport r;
    if (in.m == 0) {
        r.kind = VerdictKind::NotCyclic;
        r.lo = r.hi = in.g;
        r.reason = "trivial intersection: dimension equals g";
        return r;
    }
    if (in.g >= 2) {
        r.kind = VerdictKind::Undetermined;
        r.lo = in.g - 1;
        r.hi = in.g + 1;
        r.reason = "g >= 2 with nontrivial intersection: only g-1 <= dim <= g+1 is known";
        return r;
    }
    if (in.lambda == 0) {
        r.kind = VerdictKind::OutOfScope;
        r.reason = "lambda >= 1";
        return r;
    }
    r.kind = VerdictKind::NotCyclic;
    if (in.lambda == 1) {
        r.lo = r.hi = 1;
        r.reason = "g = 1, lambda = 1";
    } else {
        r.lo = r.hi = in.lk_in_ktilde ? 1 : 2;
        r.reason = in.lk_in_ktilde ? "g = 1, lambda >= 2, L_K in K~" : "g = 1, lambda >= 2, L_K not in K~";
    }
    if (r.lo == 1) r.kind = VerdictKind::Cyclic;
    return r;
}

int coinvariant_dimension_direct(const DistPoly& F, int m) {
    const Dvr& R = F.ring();
    if (R.e() != 1 || R.f() != 1) throw PreconditionError("O = Z_p", "ring " + R.spec().to_string());
    Valuation n = F.coeff(0).valuation();
    if (!n.determined()) throw PrecisionError("F(0) vanishes at the working precision");
    if (m < 1 || m > n.value)
        throw PreconditionError("0 < m <= ord F(0)", "m = " + std::to_string(m) + ", ord F(0) = " + std::to_string(n.value));
    auto pc = [&](int k) { return TruncSeries::constant(R.pi_pow(k)); };
    TruncSeries S = TruncSeries::monomial(R, 1);
    LambdaPresentation P = LambdaPresentation::cyclic(F.series());
    FinAbPGroup big = truncated_coinvariants(P, {pc(m + 1), pc(1) * S, S * S});
    FinAbPGroup small = truncated_coinvariants(P, {pc(m), S});
    return big.order_exponent() - small.order_exponent();
}

// --- λ = 2 ---------------------------------------------------------------------

std::string Lambda2Input::to_string() const {
    auto ord = [](int v) { return v == kInfinite ? std::string("inf") : std::to_string(v); };
    std::ostringstream os;
    os << "k=" << k << " ord_alpha=" << ord_alpha << " ord_beta=" << ord_beta << " ord_gap=" << ord_gap
       << " ord_mu21=" << ord(ord_mu21) << " ord_mu22=" << ord(ord_mu22) << " n1=" << n1 << " n2=" << n2 << " e=" << e;
    return os.str();
}

Verdict is_cyclic_lambda2(const Lambda2Input& input) {
    Lambda2Input in = input;
    if (in.ord_alpha < 1 || in.ord_beta < 1)
        throw PreconditionError("alpha and beta are nonunits", in.to_string());
    const int l = std::min(in.ord_alpha, in.ord_beta);
    if (in.k < 0 || in.k > in.ord_gap) throw PreconditionError("0 <= k <= ord(beta - alpha)", in.to_string());
    if (in.ord_gap < l || (in.ord_alpha != in.ord_beta && in.ord_gap != l))
        throw PreconditionError("ord(beta - alpha) is consistent with ord alpha, ord beta", in.to_string());
    if (in.k == 0 && in.ord_alpha > in.ord_beta) {
        std::swap(in.ord_alpha, in.ord_beta);
        std::swap(in.ord_mu21, in.ord_mu22);
    }
    const int og = in.ord_gap - in.k;
    if (og > l) return {VerdictKind::NotCyclic, "ord(gamma) > l"};
    if (in.k > 0) {
        if (og < l) return {VerdictKind::Cyclic, "k > 0, ord(gamma) < l"};
        if (in.ord_mu21 == 0) return {VerdictKind::Cyclic, "k > 0, ord(gamma) = l, mu21 unit"};
        return {VerdictKind::NotCyclic, "k > 0, ord(gamma) = l, mu21 nonunit"};
    }
    if (in.ord_mu21 != 0) return {VerdictKind::NotCyclic, "k = 0, ord(gamma) = l, mu21 nonunit"};
    if (in.n1 < in.n2) return {VerdictKind::Cyclic, "k = 0, ord(gamma) = l, n1 < n2, mu21 unit"};
    if (in.ord_mu22 == in.ord_beta - in.ord_alpha)
        return {VerdictKind::Cyclic, "k = 0, ord(gamma) = l, n1 >= n2, mu21 unit, ord(mu22) = ord beta - ord alpha"};
    return {VerdictKind::NotCyclic, "k = 0, ord(gamma) = l, n1 >= n2, ord(mu22) != ord beta - ord alpha"};
}

namespace {

int ord_or_inf(const DvrElem& x) {
    Valuation v = x.valuation();
    return v.determined() ? v.value : Lambda2Input::kInfinite;
}

std::array<DvrElem, 2> image_coords(const KoikeEmbedding& emb, int i) { return {emb.mu(i, 0), emb.mu(i, 1)}; }

}  // namespace

std::array<int, 2> generator_orders(const KoikeEmbedding& emb) {
    const int va = emb.alpha().valuation().value, vb = emb.beta().valuation().value;
    std::array<int, 2> out{};
    for (int i = 0; i < 2; ++i) {
        const DvrElem& l1 = emb.lambda(i, 0);
        DvrElem second = emb.lambda(i, 1) * emb.alpha() - l1 * emb.gamma();
        int n = 0;
        int v1 = ord_or_inf(l1), v2 = ord_or_inf(second);
        if (v1 != Lambda2Input::kInfinite) n = std::max(n, va - v1);
        if (v2 != Lambda2Input::kInfinite) n = std::max(n, va + vb - v2);
        out[i] = n;
    }
    return out;
}

bool is_direct_sum(const KoikeEmbedding& emb) {
    auto n = generator_orders(emb);
    return n[0] + n[1] == emb.alpha().valuation().value + emb.beta().valuation().value;
}

bool is_admissible(const KoikeEmbedding& emb) {
    auto n = generator_orders(emb);
    return n[0] >= 1 && n[1] >= 1 && is_direct_sum(emb);
}

Lambda2Input profile_of(const KoikeEmbedding& emb) {
    Lambda2Input in;
    in.k = emb.k();
    in.ord_alpha = emb.alpha().valuation().value;
    in.ord_beta = emb.beta().valuation().value;
    in.ord_gap = (emb.beta() - emb.alpha()).valuation().value;
    auto mu2 = image_coords(emb, 1);
    in.ord_mu21 = ord_or_inf(mu2[0]);
    in.ord_mu22 = ord_or_inf(mu2[1]);
    auto n = generator_orders(emb);
    in.n1 = n[0];
    in.n2 = n[1];
    in.e = emb.ring().e();
    return in;
}

OracleResult criterion_solvable(const KoikeEmbedding& emb) {
    const Dvr& R = emb.ring();
    const DvrElem& a = emb.alpha();
    const DvrElem& b = emb.beta();
    const DvrElem pi = R.uniformizer();
    const DvrElem pik = R.pi_pow(emb.k());
    auto x1 = image_coords(emb, 0);
    auto x2 = image_coords(emb, 1);
    std::vector<DvrElem> rhs{a * x1[0], b * x1[1]};
    const DvrElem z = R.zero();

    // unknowns f(α), (f(β) - f(α))/(β - α), g(β)
    DvrMatrix eval{{x2[0] * pi, z, z},
                   {x2[1] * pi, x2[1] * pi * (b - a), x2[1] * emb.gamma() * pik}};
    // O-span of v, Sv for the two Λ-generators of (π, S)N
    DvrElem w = x2[1] * emb.gamma() * pik;
    DvrMatrix span{{x2[0] * pi, a * x2[0] * pi, z, z},
                   {x2[1] * pi, b * x2[1] * pi, w, b * w}};
    Feasibility r1 = solve_dvr(eval, rhs).status;
    Feasibility r2 = solve_dvr(span, rhs).status;
    OracleResult out;
    out.precision = R.precision();
    if (r1 == Feasibility::Undetermined || r2 == Feasibility::Undetermined) {
        out.status = Feasibility::Undetermined;
        out.routes_agree = r1 == r2 || r1 == Feasibility::Undetermined || r2 == Feasibility::Undetermined;
        return out;
    }
    out.status = r1;
    out.routes_agree = r1 == r2;
    return out;
}

OracleResult criterion_solvable(const std::function<KoikeEmbedding(const Dvr&)>& build, const Dvr& ring) {
    OracleResult r = criterion_solvable(build(ring));
    if (r.status != Feasibility::Undetermined) return r;
    return criterion_solvable(build(ring.with_precision(2 * ring.precision())));
}

// --- cross validation ------------------------------------------------------------

KoikeEmbedding Realization::build(const Dvr& R) const {
    DvrElem alpha = R.from_int(u).mul_pi_pow(ord_alpha);
    DvrElem beta = alpha + R.from_int(v).mul_pi_pow(ord_gap);
    std::array<std::array<DvrElem, 2>, 2> lam;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            lam[i][j] = coord_ord[i][j] < 0 ? R.zero() : R.from_int(coord_unit[i][j]).mul_pi_pow(coord_ord[i][j]);
    return KoikeEmbedding(alpha, beta, k, lam);
}

int CrossValidationReport::disagreements() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.agree; }));
}

CrossValidationEntry validate_instance(const Realization& r, int precision) {
    const Dvr& R = Dvr::make(DvrSpec::zp(r.p), precision);
    CrossValidationEntry out;
    out.instance = r;
    KoikeEmbedding emb = r.build(R);
    out.profile = profile_of(emb);
    out.admissible = is_admissible(emb);
    out.verdict = is_cyclic_lambda2(out.profile);
    out.oracle = criterion_solvable([&r](const Dvr& ring) { return r.build(ring); }, R);
    bool oracle_cyclic = out.oracle.status == Feasibility::Feasible;
    out.agree = out.oracle.routes_agree && out.oracle.status != Feasibility::Undetermined &&
                oracle_cyclic == (out.verdict.kind == VerdictKind::Cyclic);
    return out;
}

namespace {

std::int64_t random_unit(std::mt19937_64& rng, std::int64_t p) {
    for (;;) {
        std::int64_t x = std::uniform_int_distribution<std::int64_t>(1, 1000)(rng);
        if (x % p != 0) return x;
    }
}

std::int64_t ipow(std::int64_t p, int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= p;
    return r;
}

std::vector<Realization> enumerate(const ProfileRange& range) {
    std::mt19937_64 rng(range.seed);
    std::vector<Realization> out;
    for (std::int64_t p : range.primes)
        for (int oa = range.min_ord; oa <= range.max_ord; ++oa)
            for (int ob = range.min_ord; ob <= range.max_ord; ++ob) {
                std::vector<int> gaps;
                if (oa != ob)
                    gaps.push_back(std::min(oa, ob));
                else
                    for (int g = oa; g <= range.max_ord; ++g) gaps.push_back(g);
                for (int gap : gaps)
                    for (int k = 0; k <= std::min(range.max_k, gap); ++k)
                        for (int c = 0; c < (range.max_coord_ord + 2) * (range.max_coord_ord + 2) *
                                                (range.max_coord_ord + 2) * (range.max_coord_ord + 2);
                             ++c) {
                            Realization r;
                            r.p = p;
                            r.k = k;
                            r.ord_alpha = oa;
                            r.ord_gap = gap;
                            r.u = random_unit(rng, p);
                            if (ob > oa) {
                                r.v = ipow(p, ob - oa) * random_unit(rng, p) - r.u;
                            } else {
                                do r.v = random_unit(rng, p);
                                while (ob == oa && gap == oa && (r.u + r.v) % p == 0);
                            }
                            int rest = c;
                            for (int i = 0; i < 2; ++i)
                                for (int j = 0; j < 2; ++j) {
                                    r.coord_ord[i][j] = rest % (range.max_coord_ord + 2) - 1;
                                    rest /= range.max_coord_ord + 2;
                                    r.coord_unit[i][j] = random_unit(rng, p);
                                }
                            out.push_back(r);
                        }
            }
    return out;
}

}  // namespace

CrossValidationReport cross_validate(const ProfileRange& range) {
    CrossValidationReport report;
    if (range.primes.empty() || range.min_ord > range.max_ord) return report;
    for (std::int64_t p : range.primes)
        if (p < 3 || p > 97) throw PreconditionError("p is an odd prime below 100", "p = " + std::to_string(p));
    std::vector<Realization> all = enumerate(range);
    std::vector<std::optional<CrossValidationEntry>> results(all.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < all.size(); i = next++) {
            const Realization& r = all[i];
            try {
                const Dvr& R = Dvr::make(DvrSpec::zp(r.p));
                KoikeEmbedding emb = r.build(R);
                if (!is_admissible(emb)) continue;
                results[i] = validate_instance(r);
            } catch (const PreconditionError&) {
                // not an embedding: determinant is a nonunit
            }
        }
    };
    unsigned n = range.threads > 0 ? static_cast<unsigned>(range.threads) : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& r : results) {
        if (r)
            report.entries.push_back(std::move(*r));
        else
            ++report.skipped;
    }
    return report;
}

}  // namespace iwmod
