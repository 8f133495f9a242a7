#pragma once

#include <optional>
#include <vector>

#include "iwmod/berkowitz.hpp"
#include "iwmod/dvr.hpp"

namespace iwmod {

using DvrMatrix = Matrix<DvrElem>;

/// U·A·V = D with U, V invertible and D diagonal, valuations non-decreasing.
struct SmithForm {
    DvrMatrix U;
    DvrMatrix D;
    DvrMatrix V;
    std::vector<DvrElem> diagonal() const;
    std::vector<Valuation> valuations() const;
};

/// Smith normal form over O by pivoting on entries of least valuation. Throws
/// PrecisionError when an imprecise entry might undercut the chosen pivot.
SmithForm smith_form(const DvrMatrix& A);

/// Valuations of the elementary divisors of A.
std::vector<Valuation> snf_dvr(const DvrMatrix& A);

enum class Feasibility { Feasible, Infeasible, Undetermined };

struct LinearSolution {
    Feasibility status = Feasibility::Undetermined;
    std::vector<DvrElem> x;  // set when Feasible
};

/// Decide whether A·x = b has a solution x in O^n.
LinearSolution solve_dvr(const DvrMatrix& A, const std::vector<DvrElem>& b);

DvrMatrix mat_mul(const DvrMatrix& A, const DvrMatrix& B);
std::vector<DvrElem> mat_vec(const DvrMatrix& A, const std::vector<DvrElem>& x);
DvrMatrix identity_matrix(const Dvr& R, std::size_t n);

}  // namespace iwmod
