#pragma once

#include <string>
#include <vector>

#include "iwmod/berkowitz.hpp"
#include "iwmod/series.hpp"
#include "iwmod/valuation.hpp"

namespace iwmod {

/// A polynomial in S whose coefficients are series in T. Every T-coefficient
/// is truncated at the common order `t_order` (kExact for polynomials).
class BiSeries {
public:
    BiSeries() = default;
    BiSeries(const Dvr& ring, std::vector<TruncSeries> s_coeffs, int t_order = TruncSeries::kExact);
    /// rows[i][j] is the coefficient of S^i T^j.
    static BiSeries from_ints(const Dvr& ring, const std::vector<std::vector<std::int64_t>>& rows,
                              int t_order = TruncSeries::kExact);
    static BiSeries constant(const TruncSeries& c) { return BiSeries(c.ring(), {c}, c.order()); }
    static BiSeries s_var(const Dvr& ring, int t_order = TruncSeries::kExact);
    static BiSeries t_var(const Dvr& ring, int t_order = TruncSeries::kExact);

    const Dvr& ring() const { return *ring_; }
    int t_order() const { return t_order_; }
    /// -1 for zero.
    int degree_s() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<TruncSeries>& s_coeffs() const { return c_; }
    /// Coefficient of S^i as a series in T.
    TruncSeries coeff(int i) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    BiSeries pow(int n) const;

    /// Zero at the available precision.
    bool is_zero() const;
    /// f(S, 0).
    TruncSeries at_t0() const;
    /// f(0, 0).
    DvrElem at_00() const;
    std::string to_string() const;

private:
    void normalize();

    const Dvr* ring_ = nullptr;
    std::vector<TruncSeries> c_;
    int t_order_ = TruncSeries::kExact;
};

/// O[[T]]^r with S acting through an r×r matrix of T-series.
class TwoVarModule {
public:
    static constexpr int kDefaultTOrder = 12;
    TwoVarModule(const Dvr& ring, Matrix<TruncSeries> s_action, int t_order = kDefaultTOrder);

    const Dvr& ring() const { return *ring_; }
    int rank() const { return static_cast<int>(a_.size()); }
    int t_order() const { return t_order_; }
    const Matrix<TruncSeries>& s_action() const { return a_; }

private:
    const Dvr* ring_;
    Matrix<TruncSeries> a_;
    int t_order_;
};

/// det(S·I - A), monic of degree r in S.
BiSeries char_det(const TwoVarModule& M);

/// f(S, 0) as a one-variable series.
TruncSeries specialize_t(const BiSeries& f);

/// Whether f(S, 0) and g generate the same ideal of O[[S]].
bool specialization_matches(const BiSeries& f, const TruncSeries& g);

/// #O/f(0,0); throws PrecisionError when f(0,0) vanishes at precision.
PPower evaluate_00(const BiSeries& f);

/// Companion matrix of a monic polynomial in S (coefficients lowest first).
Matrix<TruncSeries> companion_matrix(const DistPoly& f, int t_order = TwoVarModule::kDefaultTOrder);

/// Whether a lies in q·O[[S,T]] at the working precision. q must be either free
/// of S or a distinguished polynomial in S over O[[T]] up to a unit.
bool divides(const BiSeries& q, const BiSeries& a);

/// E = ⊕ O[[S,T]]/(q_i^{n_i}) and X generated by `generators` (vectors of
/// length #primes). True when ∏ q_i^{n_i} kills X and lowering any single
/// exponent by one does not.
bool check_ann_char_consistency(const std::vector<BiSeries>& primes, const std::vector<int>& powers,
                                const std::vector<std::vector<BiSeries>>& generators);

}  // namespace iwmod
