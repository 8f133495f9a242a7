#pragma once

#include <stdexcept>
#include <vector>

namespace iwmod {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Coefficients of det(x·I - A), highest degree first, computed without
/// division (Berkowitz). Works over any commutative ring type R.
template <class R>
std::vector<R> berkowitz_charpoly(const Matrix<R>& A, const R& zero, const R& one) {
    const std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("square matrix expected");
    std::vector<R> chi{one};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t m = r - 1;  // size of the leading block
        std::vector<R> q{one, zero - A[m][m]};
        // v = A_{m} ^ k · c, starting from the column above the new diagonal entry
        std::vector<R> v(m, zero);
        for (std::size_t i = 0; i < m; ++i) v[i] = A[i][m];
        for (std::size_t k = 0; k + 1 < r; ++k) {
            R s = zero;
            for (std::size_t j = 0; j < m; ++j) s = s + A[m][j] * v[j];
            q.push_back(zero - s);
            std::vector<R> w(m, zero);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) w[i] = w[i] + A[i][j] * v[j];
            v = std::move(w);
        }
        std::vector<R> next(r + 1, zero);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < chi.size() && j <= i; ++j) next[i] = next[i] + q[i - j] * chi[j];
        chi = std::move(next);
    }
    return chi;
}

/// det(A) = (-1)^n · (constant term of the characteristic polynomial).
template <class R>
R berkowitz_det(const Matrix<R>& A, const R& zero, const R& one) {
    if (A.empty()) return one;
    std::vector<R> chi = berkowitz_charpoly(A, zero, one);
    return A.size() % 2 == 0 ? chi.back() : zero - chi.back();
}

}  // namespace iwmod
