#pragma once

// Brute-force references for finite abelian p-groups. Everything here works on
// explicit element sets or coordinate formulas and shares no code with the
// echelon-based library routines.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "iwmod/finabel.hpp"

namespace iwmod::oracle {

inline std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

using ElemSet = std::set<GroupElem>;

/// Closure of a generating set under addition.
inline ElemSet span(const FinAbPGroup& G, const std::vector<GroupElem>& gens) {
    ElemSet seen{G.zero()};
    std::vector<GroupElem> frontier{G.zero()};
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElem y = G.add(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

inline int log_p(std::int64_t p, std::size_t n) {
    int k = 0;
    while (n > 1) n /= static_cast<std::size_t>(p), ++k;
    return k;
}

/// Cyclic quotient described by a surjection φ: G -> Z/p^k with values phi[i]
/// on the basis; the first unit value is 1.
struct Surjection {
    int k;
    std::vector<std::int64_t> phi;
    int lead;  // index of the first unit value

    std::int64_t eval(const FinAbPGroup& G, const GroupElem& x) const {
        const std::int64_t m = ipow(G.p(), k);
        __int128 s = 0;
        for (std::size_t i = 0; i < phi.size(); ++i) s += static_cast<__int128>(phi[i]) * x[i];
        std::int64_t r = static_cast<std::int64_t>(s % m);
        return r < 0 ? r + m : r;
    }

    Subgroup kernel_subgroup(const FinAbPGroup& G) const {
        std::vector<GroupElem> gens;
        for (int i = 0; i < G.rank(); ++i) {
            if (i == lead) continue;
            GroupElem x = G.basis(i);
            x[lead] = -phi[i];
            gens.push_back(G.reduce(x));
        }
        gens.push_back(G.scale(ipow(G.p(), k), G.basis(lead)));
        return Subgroup(G, gens);
    }
};

/// Every surjection onto a nontrivial cyclic p-group, one per kernel.
inline std::vector<Surjection> cyclic_quotients(const FinAbPGroup& G) {
    std::vector<Surjection> out;
    const std::int64_t p = G.p();
    for (int k = 1; k <= G.exponent(); ++k) {
        const std::int64_t m = ipow(p, k);
        std::vector<std::int64_t> steps;
        std::vector<std::int64_t> counts;
        for (int e : G.exponents()) {
            std::int64_t step = ipow(p, std::max(0, k - e));
            steps.push_back(step);
            counts.push_back(m / step);
        }
        std::vector<std::int64_t> idx(G.rank(), 0);
        for (;;) {
            std::vector<std::int64_t> phi(G.rank());
            int lead = -1;
            for (int i = 0; i < G.rank(); ++i) {
                phi[i] = idx[i] * steps[i];
                if (lead < 0 && phi[i] % p != 0) lead = i;
            }
            if (lead >= 0 && phi[lead] == 1) {
                bool normal = true;
                for (int i = 0; i < lead; ++i) normal = normal && phi[i] % p == 0;
                if (normal) out.push_back({k, phi, lead});
            }
            int i = G.rank() - 1;
            while (i >= 0 && ++idx[i] == counts[i]) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

/// Rank over F_p of the images of xs in G/pG.
inline int rank_mod_p(const FinAbPGroup& G, std::vector<GroupElem> xs) {
    const std::int64_t p = G.p();
    for (auto& x : xs)
        for (auto& c : x) c = ((c % p) + p) % p;
    int rank = 0;
    for (int col = 0; col < G.rank(); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(xs.size()); ++r)
            if (xs[r][col] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(xs[rank], xs[piv]);
        std::int64_t inv = 1;
        while (inv * xs[rank][col] % p != 1) ++inv;
        for (int r = 0; r < static_cast<int>(xs.size()); ++r) {
            if (r == rank || xs[r][col] == 0) continue;
            std::int64_t f = xs[r][col] * inv % p;
            for (int c = 0; c < G.rank(); ++c) xs[r][c] = ((xs[r][c] - f * xs[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Checks the two conditions on an adapted generating system; returns an empty
/// string on success and a description of the first failure otherwise.
inline std::string verify_adapted(const FinAbPGroup& G, const Surjection& s, const std::vector<GroupElem>& xs,
                                  const std::vector<GroupElem>& all_elements) {
    const std::int64_t p = G.p();
    if (static_cast<int>(xs.size()) != G.rank()) return "wrong number of generators";
    if (rank_mod_p(G, xs) != G.rank()) return "not a generating system";
    if (s.eval(G, xs[0]) % p == 0) return "x1 does not generate G/H";
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (s.eval(G, xs[i]) != 0) return "x" + std::to_string(i + 1) + " is outside H";
    int best = G.exponent() + 1;
    for (const auto& x : all_elements)
        if (s.eval(G, x) % p != 0) best = std::min(best, G.element_order(x));
    if (G.element_order(xs[0]) != best) return "x1 order is not minimal";
    return {};
}

/// All partitions of n into parts (ascending), as exponent lists.
inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        std::vector<int> asc(cur.rbegin(), cur.rend());
        out.push_back(asc);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> exponent_lists_up_to(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int n = 1; n <= total; ++n) partitions(n, n, cur, out);
    return out;
}

}  // namespace iwmod::oracle
