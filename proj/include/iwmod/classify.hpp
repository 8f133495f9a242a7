#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iwmod/dvr_linalg.hpp"
#include "iwmod/module.hpp"

namespace iwmod {

enum class VerdictKind { Cyclic, NotCyclic, OutOfScope, Undetermined };

std::string to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Undetermined;
    /// Name of the rule that fired, or the violated hypothesis for OutOfScope.
    std::string reason;
};

// --- coinvariant dimension in the non-split case ------------------------------

struct NonSplitInput {
    int g = 1;
    int lambda = 0;
    int m = 0;
    bool lk_in_ktilde = false;
};

struct DimensionReport {
    VerdictKind kind = VerdictKind::Undetermined;  // Cyclic is unused here
    int lo = 0;
    int hi = 0;
    std::string reason;
    bool exact() const { return kind != VerdictKind::Undetermined && kind != VerdictKind::OutOfScope && lo == hi; }
};

/// dim_{F_p} of the two-variable module modulo (p, S, T).
DimensionReport dim_coinvariants_nonsplit(const NonSplitInput& in);

/// F_p-dimension of (p^m, S)Λ/(F) modulo (p^{m+1}, pS, S^2), computed through
/// truncated quotients. Requires 0 < m <= ord F(0).
int coinvariant_dimension_direct(const DistPoly& F, int m);

// --- cyclicity for λ = 2 ------------------------------------------------------

struct Lambda2Input {
    static constexpr int kInfinite = INT_MAX;
    int k = 0;
    int ord_alpha = 1;
    int ord_beta = 1;
    int ord_gap = 1;
    int ord_mu21 = 0;
    int ord_mu22 = 0;
    int n1 = 0;
    int n2 = 0;
    int e = 1;

    friend bool operator==(const Lambda2Input&, const Lambda2Input&) = default;
    std::string to_string() const;
};

Verdict is_cyclic_lambda2(const Lambda2Input& in);

/// Orders π^{N1}, π^{N2} of x1, x2 in the S-coinvariants.
std::array<int, 2> generator_orders(const KoikeEmbedding& emb);

/// The valuation profile of an embedding (n_i taken in π-units).
Lambda2Input profile_of(const KoikeEmbedding& emb);

/// Whether <x1> ⊕ <x2> is the whole S-coinvariant group.
bool is_direct_sum(const KoikeEmbedding& emb);

/// Direct sum with both summands nontrivial, so the coinvariants have rank two.
bool is_admissible(const KoikeEmbedding& emb);

struct OracleResult {
    Feasibility status = Feasibility::Undetermined;
    /// The evaluation system and the O-span membership test gave the same answer.
    bool routes_agree = true;
    int precision = 0;
};

/// Decides whether f, g in Λ exist with S·x1 = f·(π x2) + g·(γ π^k e-part)
/// by two independent O-linear reductions.
OracleResult criterion_solvable(const KoikeEmbedding& emb);

/// Same, rebuilding the instance at doubled precision once if undetermined.
OracleResult criterion_solvable(const std::function<KoikeEmbedding(const Dvr&)>& build, const Dvr& ring);

// --- cross validation ---------------------------------------------------------

struct ProfileRange {
    std::vector<std::int64_t> primes{3, 5};
    int min_ord = 1;
    int max_ord = 4;
    int max_k = 2;
    int max_coord_ord = 2;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 picks the hardware concurrency
};

/// A concrete instance: α = π^{ord_alpha}·u, β = α + π^{ord_gap}·v and
/// coordinates λ_ij = π^{c_ij}·w_ij (w_ij units, or zero when c_ij is -1).
struct Realization {
    std::int64_t p = 3;
    int k = 0;
    int ord_alpha = 1;
    int ord_gap = 1;
    std::int64_t u = 1;
    std::int64_t v = 1;
    std::array<std::array<int, 2>, 2> coord_ord{};
    std::array<std::array<std::int64_t, 2>, 2> coord_unit{};

    KoikeEmbedding build(const Dvr& ring) const;
};

struct CrossValidationEntry {
    Realization instance;
    Lambda2Input profile;
    Verdict verdict;
    OracleResult oracle;
    bool admissible = false;
    bool agree = false;
};

struct CrossValidationReport {
    std::vector<CrossValidationEntry> entries;
    int skipped = 0;
    int disagreements() const;
};

CrossValidationReport cross_validate(const ProfileRange& range);

/// Runs both procedures on one instance.
CrossValidationEntry validate_instance(const Realization& r, int precision = 0);

}  // namespace iwmod
