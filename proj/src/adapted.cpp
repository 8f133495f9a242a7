#include <algorithm>
#include <cmath>

#include "howell.hpp"
#include "iwmod/errors.hpp"
#include "iwmod/finabel.hpp"

namespace iwmod {

using detail::ChainRing;
using detail::Row;

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::vector<Row> lifted_generators(const Subgroup& H) {
    const FinAbPGroup& G = H.parent();
    std::vector<Row> rows(H.generators().begin(), H.generators().end());
    for (int i = 0; i < G.rank(); ++i) {
        if (G.exponents()[i] == G.exponent()) continue;
        Row r(G.rank(), 0);
        r[i] = ipow(G.p(), G.exponents()[i]);
        rows.push_back(r);
    }
    return rows;
}

// Some y in the left kernel of `rows` with y_0 a unit.
Row kernel_vector_with_unit_head(const ChainRing& R, const std::vector<Row>& rows, int ncols) {
    for (const Row& y : detail::left_kernel(R, rows, ncols))
        if (R.val(y[0]) == 0) return y;
    throw std::logic_error("no kernel vector with unit leading coordinate");
}

bool enumerable(const FinAbPGroup& G) { return G.order_exponent() * std::log2(static_cast<double>(G.p())) <= 20.0; }

}  // namespace

AdaptedBasis adapted_generators(const FinAbPGroup& G, const Subgroup& H) {
    if (!(H.parent() == G)) throw std::invalid_argument("subgroup of a different group");
    const int g = G.rank();
    FinAbPGroup Q = quotient_structure(G, H);
    AdaptedBasis out;
    if (Q.rank() == 0) {
        for (int i = 0; i < g; ++i) out.generators.push_back(G.basis(i));
        out.degenerate = true;
        return out;
    }
    if (Q.rank() > 1) throw PreconditionError("G/H cyclic", "G/H is " + Q.to_string());
    const int k = Q.exponent();
    out.quotient_exponent = k;
    auto generates = [&](const GroupElem& x) { return !H.contains(G.scale(ipow(G.p(), k - 1), x)); };

    int istar = -1;
    for (int i = 0; i < g && istar < 0; ++i)
        if (generates(G.basis(i))) istar = i;
    const GroupElem x0 = G.basis(istar);

    ChainRing R(G.p(), G.exponent());
    const std::vector<Row> hrows = lifted_generators(H);
    std::vector<GroupElem> rest;
    for (int i = 0; i < g; ++i) {
        if (i == istar) continue;
        std::vector<Row> rows{G.basis(i), x0};
        rows.insert(rows.end(), hrows.begin(), hrows.end());
        Row y = kernel_vector_with_unit_head(R, rows, g);
        std::int64_t a = R.mul(R.reduce(-static_cast<__int128>(y[1])), R.unit_inverse(y[0]));
        GroupElem h = G.sub(G.basis(i), G.scale(a, x0));
        if (!H.contains(h)) throw std::logic_error("correction term left H");
        rest.push_back(h);
    }

    int t = k;
    for (;; ++t) {
        std::vector<GroupElem> scaled;
        for (const auto& h : H.generators()) scaled.push_back(G.scale(ipow(G.p(), t), h));
        if (Subgroup(G, scaled).contains(G.scale(ipow(G.p(), t), x0))) break;
    }

    GroupElem x1;
    if (enumerable(G)) {
        for (const auto& x : G.elements()) {
            if (G.element_order(x) == t && generates(x)) {
                x1 = x;
                break;
            }
        }
    } else {
        const std::int64_t pt = ipow(G.p(), t);
        std::vector<Row> rows{G.scale(pt, x0)};
        for (const auto& h : hrows) rows.push_back(G.scale(pt, G.reduce(h)));
        for (const auto& r : lifted_generators(Subgroup::trivial(G))) rows.push_back(r);
        Row y = kernel_vector_with_unit_head(R, rows, g);
        std::int64_t inv = R.unit_inverse(y[0]);
        x1 = x0;
        for (std::size_t j = 0; j < hrows.size(); ++j)
            x1 = G.add(x1, G.scale(R.mul(y[j + 1], inv), G.reduce(hrows[j])));
    }

    out.generators.push_back(x1);
    out.generators.insert(out.generators.end(), rest.begin(), rest.end());
    return out;
}

// --- ker/im identities ------------------------------------------------------------

namespace {

void require_subgroup_of_domain(const Endo& beta, const Subgroup& L) {
    if (!(L.parent() == beta.group())) throw std::invalid_argument("L is not a subgroup of the domain of beta");
}

void require_stable(const Endo& beta, const Subgroup& L) {
    if (!L.contains(image(beta, L))) throw PreconditionError("L is beta-stable", "beta(L) is not contained in L");
}

KerImResult both_sides(const Endo& beta, const Subgroup& L, int n) {
    const FinAbPGroup& M = beta.group();
    Subgroup Mb = kernel(beta);
    Subgroup bM = image(beta);
    Subgroup La = intersect(L, Mb);
    Subgroup aL = image(beta, L);
    int lhs = M.order_exponent() - sum(Mb, bM).order_exponent();
    int rhs = (L.order_exponent() - sum(La, aL).order_exponent()) +
              (intersect(Mb, bM).order_exponent() - intersect(La, aL).order_exponent());
    return {{M.p(), lhs, false}, {M.p(), rhs, false}, n};
}

}  // namespace

KerImResult check_kerim_identity(const Endo& beta, const Subgroup& L) {
    require_subgroup_of_domain(beta, L);
    if (!L.contains(image(beta))) throw PreconditionError("beta(M) is contained in L", "beta(M) is not contained in L");
    require_stable(beta, L);
    return both_sides(beta, L, 1);
}

KerImResult check_kerim_nilpotent(const Endo& beta, const Subgroup& L, std::optional<int> n) {
    require_subgroup_of_domain(beta, L);
    require_stable(beta, L);
    if (n) {
        if (*n < 1) throw std::invalid_argument("n must be positive");
        if (!L.contains(image(beta.pow(*n))))
            throw PreconditionError("beta^n(M) is contained in L",
                                    "fails for n = " + std::to_string(*n));
        return both_sides(beta, L, *n);
    }
    const int limit = std::max(1, beta.group().order_exponent());
    Endo bn = beta;
    for (int m = 1; m <= limit; ++m) {
        if (L.contains(image(bn))) return both_sides(beta, L, m);
        bn = beta.compose(bn);
    }
    throw PreconditionError("beta^n(M) is contained in L for some n",
                            "no n <= " + std::to_string(limit) + " works");
}

KerImResult check_kerim_free_case(const Endo& beta, const Subgroup& L) {
    require_subgroup_of_domain(beta, L);
    const FinAbPGroup& M = beta.group();
    Subgroup bM = image(beta);
    if (!L.contains(bM)) throw PreconditionError("beta(M) is contained in L", "beta(M) is not contained in L");
    Subgroup Mb = kernel(beta);
    if (!bM.contains(Mb)) throw PreconditionError("M[beta] is contained in beta(M)", "kernel of beta escapes its image");
    int lhs = M.order_exponent() - sum(Mb, bM).order_exponent();
    int rhs = L.order_exponent() - image(beta, L).order_exponent();
    return {{M.p(), lhs, false}, {M.p(), rhs, false}, 1};
}

KerImInstance random_kerim_instance(std::mt19937_64& rng, std::int64_t p, int max_rank, int max_exp, int n) {
    auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
    const int g = static_cast<int>(uni(1, max_rank));
    std::vector<int> exps;
    for (int i = 0; i < g; ++i) exps.push_back(static_cast<int>(uni(1, max_exp)));
    std::sort(exps.begin(), exps.end());
    FinAbPGroup M(p, exps);
    const std::int64_t mod = ipow(p, M.exponent());
    std::vector<std::vector<std::int64_t>> phi(g, std::vector<std::int64_t>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) phi[i][j] = uni(0, mod - 1) * ipow(p, std::max(0, exps[i] - exps[j])) % mod;
    Endo beta(M, phi);

    std::vector<GroupElem> gens = image(beta.pow(n)).generators();
    const int extra = static_cast<int>(uni(0, 2));
    for (int r = 0; r < extra; ++r) {
        GroupElem v = M.zero();
        for (int i = 0; i < g; ++i) v[i] = uni(0, ipow(p, exps[i]) - 1);
        for (int s = 0; s < n; ++s) {
            gens.push_back(v);
            v = beta.apply(v);
        }
    }
    return {beta, Subgroup(M, gens), n};
}

}  // namespace iwmod
