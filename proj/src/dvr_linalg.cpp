#include "iwmod/dvr_linalg.hpp"

#include <limits>
#include <stdexcept>

#include "iwmod/errors.hpp"

namespace iwmod {

DvrMatrix identity_matrix(const Dvr& R, std::size_t n) {
    DvrMatrix I(n, std::vector<DvrElem>(n, R.zero()));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = R.one();
    return I;
}

DvrMatrix mat_mul(const DvrMatrix& A, const DvrMatrix& B) {
    if (A.empty() || B.empty()) return {};
    const std::size_t m = A.size(), k = B.size(), n = B[0].size();
    if (A[0].size() != k) throw std::invalid_argument("matrix shapes do not match");
    const Dvr& R = A[0][0].ring();
    DvrMatrix C(m, std::vector<DvrElem>(n, R.zero()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < k; ++t) C[i][j] += A[i][t] * B[t][j];
    return C;
}

std::vector<DvrElem> mat_vec(const DvrMatrix& A, const std::vector<DvrElem>& x) {
    std::vector<DvrElem> y;
    for (const auto& row : A) {
        if (row.size() != x.size()) throw std::invalid_argument("matrix and vector shapes do not match");
        DvrElem s = x.empty() ? DvrElem() : x[0].ring().zero();
        for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
        y.push_back(s);
    }
    return y;
}

std::vector<DvrElem> SmithForm::diagonal() const {
    std::vector<DvrElem> d;
    for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
    return d;
}

std::vector<Valuation> SmithForm::valuations() const {
    std::vector<Valuation> v;
    for (const auto& d : diagonal()) v.push_back(d.valuation());
    return v;
}

SmithForm smith_form(const DvrMatrix& A) {
    if (A.empty() || A[0].empty()) throw std::invalid_argument("empty matrix");
    const std::size_t m = A.size(), n = A[0].size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("ragged matrix");
    const Dvr& R = A[0][0].ring();
    SmithForm S{identity_matrix(R, m), A, identity_matrix(R, n)};
    DvrMatrix& D = S.D;
    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t bi = m, bj = n;
        int bv = std::numeric_limits<int>::max();
        int lowest_bound = std::numeric_limits<int>::max();
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                Valuation v = D[i][j].valuation();
                if (v.determined()) {
                    if (v.value < bv) bv = v.value, bi = i, bj = j;
                } else {
                    lowest_bound = std::min(lowest_bound, v.value);
                }
            }
        if (bi == m) break;  // everything left is zero at precision
        if (lowest_bound < bv)
            throw PrecisionError("an entry known only modulo pi^" + std::to_string(lowest_bound) +
                                 " could undercut the pivot of valuation " + std::to_string(bv));
        std::swap(D[t], D[bi]);
        std::swap(S.U[t], S.U[bi]);
        for (auto& row : D) std::swap(row[t], row[bj]);
        for (auto& row : S.V) std::swap(row[t], row[bj]);
        const DvrElem piv = D[t][t];
        for (std::size_t i = t + 1; i < m; ++i) {
            if (compare(D[i][t], R.zero()) == Comparison::Equal) continue;
            DvrElem f = exact_div(D[i][t], piv);
            for (std::size_t j = t + 1; j < n; ++j) D[i][j] -= f * D[t][j];
            D[i][t] = R.zero();
            for (std::size_t j = 0; j < m; ++j) S.U[i][j] -= f * S.U[t][j];
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (compare(D[t][j], R.zero()) == Comparison::Equal) continue;
            DvrElem f = exact_div(D[t][j], piv);
            D[t][j] = R.zero();
            for (std::size_t i = 0; i < n; ++i) S.V[i][j] -= f * S.V[i][t];
        }
    }
    return S;
}

std::vector<Valuation> snf_dvr(const DvrMatrix& A) { return smith_form(A).valuations(); }

LinearSolution solve_dvr(const DvrMatrix& A, const std::vector<DvrElem>& b) {
    if (A.size() != b.size()) throw std::invalid_argument("right-hand side has the wrong length");
    const Dvr& R = b.at(0).ring();
    const int N = R.precision();
    SmithForm S = smith_form(A);
    const std::size_t m = A.size(), n = A[0].size(), k = std::min(m, n);
    std::vector<DvrElem> c = mat_vec(S.U, b);
    std::vector<DvrElem> y(n, R.zero());
    bool undetermined = false;
    auto full_zero = [&](const DvrElem& x) { return x.is_zero() && x.abs_precision() >= N; };
    for (std::size_t i = 0; i < m; ++i) {
        Valuation vc = c[i].valuation();
        if (i >= k) {
            if (vc.determined()) return {Feasibility::Infeasible, {}};
            if (!full_zero(c[i])) undetermined = true;
            continue;
        }
        const DvrElem& d = S.D[i][i];
        Valuation vd = d.valuation();
        if (vd.determined()) {
            if (vc.determined() && vc.value < vd.value) return {Feasibility::Infeasible, {}};
            if (!vc.determined() && vc.value < vd.value) {
                undetermined = true;
                continue;
            }
            y[i] = exact_div(c[i], d);
        } else {
            if (vc.determined() && vc.value < vd.value) return {Feasibility::Infeasible, {}};
            if (!(full_zero(c[i]) && full_zero(d))) undetermined = true;
        }
    }
    if (undetermined) return {Feasibility::Undetermined, {}};
    return {Feasibility::Feasible, mat_vec(S.V, y)};
}

}  // namespace iwmod
