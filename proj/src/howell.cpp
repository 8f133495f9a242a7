#include "howell.hpp"

#include <stdexcept>

namespace iwmod::detail {

ChainRing::ChainRing(std::int64_t p_, int E_) : p(p_), E(E_), mod(1) {
    if (E < 0) throw std::invalid_argument("negative exponent");
    for (int i = 0; i < E; ++i) {
        if (mod > (std::int64_t{1} << 62) / p) throw std::invalid_argument("group exponent too large for 64-bit arithmetic");
        mod *= p;
    }
}

std::int64_t ChainRing::reduce(__int128 x) const {
    x %= mod;
    if (x < 0) x += mod;
    return static_cast<std::int64_t>(x);
}

std::int64_t ChainRing::pow_p(int k) const {
    if (k >= E) return 0;
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

int ChainRing::val(std::int64_t x) const {
    x = reduce(x);
    if (x == 0) return E;
    int v = 0;
    while (x % p == 0) x /= p, ++v;
    return v;
}

std::int64_t ChainRing::unit_inverse(std::int64_t u) const {
    __int128 old_r = reduce(u), r = mod, old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r, t = old_r - q * r;
        old_r = r, r = t;
        t = old_s - q * s;
        old_s = s, s = t;
    }
    if (old_r != 1) throw std::invalid_argument("not a unit");
    return reduce(old_s);
}

namespace {

bool is_zero_row(const Row& r) {
    for (auto x : r)
        if (x != 0) return false;
    return true;
}

void axpy(const ChainRing& R, Row& y, std::int64_t a, const Row& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = R.reduce(static_cast<__int128>(y[i]) - static_cast<__int128>(R.mul(a, x[i])));
}

}  // namespace

Echelon::Echelon(const ChainRing& R, int ncols, std::vector<Row> work) : R_(&R), n_(ncols) {
    for (auto& r : work) {
        if (static_cast<int>(r.size()) != ncols) throw std::invalid_argument("row length mismatch");
        for (auto& x : r) x = R.reduce(x);
    }
    for (int col = 0; col < ncols; ++col) {
        int best = -1, bv = R.E;
        for (std::size_t i = 0; i < work.size(); ++i) {
            int v = R.val(work[i][col]);
            if (v < bv) bv = v, best = static_cast<int>(i);
        }
        if (best < 0) continue;
        Row piv = work[best];
        work.erase(work.begin() + best);
        std::int64_t pv = R.pow_p(bv);
        std::int64_t uinv = R.unit_inverse(piv[col] / pv);
        for (auto& x : piv) x = R.mul(x, uinv);
        for (auto& r : work)
            if (r[col] != 0) axpy(R, r, r[col] / pv, piv);
        if (bv > 0) {
            Row sat = piv;
            std::int64_t s = R.pow_p(R.E - bv);
            for (auto& x : sat) x = R.mul(x, s);
            work.push_back(std::move(sat));
        }
        std::erase_if(work, is_zero_row);
        rows_.push_back(std::move(piv));
        cols_.push_back(col);
        vals_.push_back(bv);
    }
}

int Echelon::order_exponent() const {
    int s = 0;
    for (int v : vals_) s += R_->E - v;
    return s;
}

Row Echelon::reduce(Row x) const {
    for (auto& c : x) c = R_->reduce(c);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int c = cols_[i];
        if (x[c] == 0) continue;
        if (R_->val(x[c]) < vals_[i]) return x;
        axpy(*R_, x, x[c] / R_->pow_p(vals_[i]), rows_[i]);
    }
    return x;
}

bool Echelon::contains(const Row& x) const { return is_zero_row(reduce(x)); }

std::vector<Row> left_kernel(const ChainRing& R, const std::vector<Row>& A, int ncols) {
    const int m = static_cast<int>(A.size());
    std::vector<Row> aug;
    for (int i = 0; i < m; ++i) {
        Row r(A[i]);
        r.resize(ncols + m, 0);
        r[ncols + i] = 1;
        aug.push_back(std::move(r));
    }
    Echelon ech(R, ncols + m, std::move(aug));
    std::vector<Row> out;
    for (std::size_t i = 0; i < ech.rows().size(); ++i) {
        if (ech.pivot_cols()[i] < ncols) continue;
        out.emplace_back(ech.rows()[i].begin() + ncols, ech.rows()[i].end());
    }
    return out;
}

std::vector<int> smith_valuations(const ChainRing& R, std::vector<Row> A, int ncols) {
    const int m = static_cast<int>(A.size());
    const int k = std::min(m, ncols);
    for (auto& r : A)
        for (auto& x : r) x = R.reduce(x);
    std::vector<int> out;
    for (int t = 0; t < k; ++t) {
        int bi = -1, bj = -1, bv = R.E;
        for (int i = t; i < m; ++i)
            for (int j = t; j < ncols; ++j) {
                int v = R.val(A[i][j]);
                if (v < bv) bv = v, bi = i, bj = j;
            }
        if (bi < 0) {
            for (; t < k; ++t) out.push_back(R.E);
            break;
        }
        std::swap(A[t], A[bi]);
        for (auto& r : A) std::swap(r[t], r[bj]);
        std::int64_t pv = R.pow_p(bv);
        std::int64_t uinv = R.unit_inverse(A[t][t] / pv);
        for (auto& x : A[t]) x = R.mul(x, uinv);
        for (int i = t + 1; i < m; ++i)
            if (A[i][t] != 0) axpy(R, A[i], A[i][t] / pv, A[t]);
        for (int j = t + 1; j < ncols; ++j) A[t][j] = 0;
        out.push_back(bv);
    }
    return out;
}

}  // namespace iwmod::detail
