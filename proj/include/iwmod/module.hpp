#pragma once

#include <array>
#include <string>
#include <vector>

#include "iwmod/dvr.hpp"
#include "iwmod/dvr_linalg.hpp"
#include "iwmod/finabel.hpp"
#include "iwmod/series.hpp"

namespace iwmod {

class LambdaPresentation;

/// f(S)^power, or π^power when f is absent.
struct ElementaryFactor {
    bool uniformizer = false;
    DistPoly f;
    int power = 1;

    static ElementaryFactor poly(DistPoly f, int power = 1) { return {false, std::move(f), power}; }
    static ElementaryFactor pi(const Dvr& R, int power = 1) { return {true, DistPoly::one(R), power}; }
    /// f^power as a series (π^power for the uniformizer).
    TruncSeries generator() const;
    std::string to_string() const;
};

/// ⊕_j Λ/(f_j^{n_j}).
class ElementaryModule {
public:
    ElementaryModule(const Dvr& ring, std::vector<ElementaryFactor> factors);

    const Dvr& ring() const { return *ring_; }
    const std::vector<ElementaryFactor>& factors() const { return factors_; }
    /// Product of the factor generators.
    TruncSeries char_series() const;
    LambdaPresentation presentation() const;

private:
    const Dvr* ring_;
    std::vector<ElementaryFactor> factors_;
};

/// Λ^r modulo the rows of a square relation matrix.
class LambdaPresentation {
public:
    LambdaPresentation(const Dvr& ring, Matrix<TruncSeries> relations);
    static LambdaPresentation cyclic(const TruncSeries& f);

    const Dvr& ring() const { return *ring_; }
    int size() const { return static_cast<int>(rel_.size()); }
    const Matrix<TruncSeries>& relations() const { return rel_; }
    TruncSeries determinant() const;

private:
    const Dvr* ring_;
    Matrix<TruncSeries> rel_;
};

/// Characteristic series in Weierstrass form π^mu·F.
WeierstrassForm char_series(const LambdaPresentation& P);

struct LeadingCoefficient {
    int index = 0;
    DvrElem coeff;
};

LeadingCoefficient first_nonvanishing_coeff(const WeierstrassForm& f);
LeadingCoefficient first_nonvanishing_coeff(const TruncSeries& f);

/// #O/(x) as a power of p; a lower bound when x is zero at precision.
PPower quotient_order(const DvrElem& x);

/// #(E/(E[S] + SE)) from the factor constants.
PPower elementary_coinvariant_order(const ElementaryModule& E);

/// #O/f* for the first non-vanishing coefficient f*.
PPower coinvariant_order_from_char(const WeierstrassForm& f);
PPower coinvariant_order_from_char(const TruncSeries& f);

/// Decomposition of Λ^r/(relations + ideal·Λ^r) computed in
/// (O/π^N)[S]/(S^M). Throws PrecisionError when the quotient does not
/// stabilise inside the bound.
struct TruncationBound {
    int s_order = 12;
};

FinAbPGroup truncated_coinvariants(const LambdaPresentation& P, const std::vector<TruncSeries>& ideal,
                                   TruncationBound bound = {});

/// E/(E[S] + SE) computed summand by summand through truncated quotients.
FinAbPGroup elementary_coinvariants_direct(const ElementaryModule& E, TruncationBound bound = {});

/// O/π^d as a finite abelian p-group (exponents of its cyclic factors).
std::vector<int> dvr_quotient_exponents(const Dvr& R, int d);

// --- the rank-two embedding --------------------------------------------------

/// X ↪ O/α ⊕ O/β with e1 ↦ (1, 1), e2 ↦ (0, π^k) and generators
/// x_i = λ_i1·e1 + λ_i2·e2.
class KoikeEmbedding {
public:
    KoikeEmbedding(DvrElem alpha, DvrElem beta, int k, std::array<std::array<DvrElem, 2>, 2> lambda);

    const DvrElem& alpha() const { return alpha_; }
    const DvrElem& beta() const { return beta_; }
    int k() const { return k_; }
    const DvrElem& lambda(int i, int j) const { return lambda_[i][j]; }
    /// (β - α)/π^k
    const DvrElem& gamma() const { return gamma_; }
    /// Coordinates of x_i in the standard basis of O/α ⊕ O/β.
    DvrElem mu(int i, int j) const;
    const Dvr& ring() const { return alpha_.ring(); }

private:
    DvrElem alpha_, beta_, gamma_;
    int k_;
    std::array<std::array<DvrElem, 2>, 2> lambda_;
};

struct AkStructure {
    /// π-valuations of the two elementary divisors, ascending.
    std::array<Valuation, 2> divisors;
    /// true when ord γ >= min(ord α, ord β), giving O/α ⊕ O/β
    bool separated = false;
    FinAbPGroup group;
};

AkStructure ak_tensor_structure(const KoikeEmbedding& emb);

/// The four divisibility conditions on the coordinates of x_1, x_2 relative to
/// the cyclic orders π^{N1}, π^{N2}.
bool divisibility_conditions(const KoikeEmbedding& emb, int N1, int N2);

}  // namespace iwmod
