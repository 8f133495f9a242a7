#pragma once

#include <cstdint>
#include <vector>

namespace iwmod::detail {

using Row = std::vector<std::int64_t>;

/// Arithmetic in the chain ring Z/p^E.
struct ChainRing {
    std::int64_t p;
    int E;
    std::int64_t mod;

    ChainRing(std::int64_t p, int E);

    std::int64_t reduce(__int128 x) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(static_cast<__int128>(a) * b); }
    std::int64_t pow_p(int k) const;
    /// v_p(x) for x in [0, p^E); E for zero.
    int val(std::int64_t x) const;
    std::int64_t unit_inverse(std::int64_t u) const;
};

/// Howell-style echelon form of a submodule of (Z/p^E)^n. Supports membership,
/// reduction and order computation.
class Echelon {
public:
    Echelon(const ChainRing& R, int ncols, std::vector<Row> rows);

    /// log_p of the number of elements in the span.
    int order_exponent() const;
    /// Reduce x against the pivots; zero iff x lies in the span.
    Row reduce(Row x) const;
    bool contains(const Row& x) const;
    /// Pivot rows; rows with leading zeros in the first k columns span the
    /// intersection with the coordinate subspace {x : x_0 = ... = x_{k-1} = 0}.
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return cols_; }
    const std::vector<int>& pivot_vals() const { return vals_; }

private:
    const ChainRing* R_;
    int n_;
    std::vector<Row> rows_;
    std::vector<int> cols_;
    std::vector<int> vals_;
};

/// Generators of {y : y·A = 0} for A given as a list of rows.
std::vector<Row> left_kernel(const ChainRing& R, const std::vector<Row>& A, int ncols);

/// Valuations of the Smith diagonal of A (length min(rows, cols); E marks 0).
std::vector<int> smith_valuations(const ChainRing& R, std::vector<Row> A, int ncols);

}  // namespace iwmod::detail
