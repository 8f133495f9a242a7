#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "iwmod/dvr.hpp"

namespace iwmod {

/// Power series over O known modulo S^order, or an exact polynomial when
/// order == kExact.
class TruncSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    TruncSeries() = default;
    TruncSeries(const Dvr& ring, std::vector<DvrElem> coeffs, int order = kExact);

    static TruncSeries polynomial(const Dvr& ring, const std::vector<std::int64_t>& coeffs);
    static TruncSeries constant(const DvrElem& c) { return TruncSeries(c.ring(), {c}); }
    static TruncSeries zero(const Dvr& ring) { return TruncSeries(ring, {}); }
    static TruncSeries one(const Dvr& ring) { return constant(ring.one()); }
    /// The monomial S^k.
    static TruncSeries monomial(const Dvr& ring, int k);

    const Dvr& ring() const { return *ring_; }
    int order() const { return order_; }
    bool is_exact() const { return order_ == kExact; }
    /// Number of stored coefficients.
    int size() const { return static_cast<int>(c_.size()); }
    const std::vector<DvrElem>& coeffs() const { return c_; }
    /// Coefficient of S^i; zero beyond the stored range of an exact polynomial,
    /// zero with precision 0 beyond the truncation of a series.
    DvrElem coeff(int i) const;
    /// Degree of an exact polynomial (-1 for zero).
    int degree() const { return size() - 1; }

    TruncSeries truncated(int order) const;
    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const DvrElem& c, const TruncSeries& a);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    bool is_unit() const { return coeff(0).is_unit(); }
    /// Inverse of a unit series modulo S^order (order defaults to own order).
    TruncSeries inverse(int order = 0) const;
    /// Value at x with v(x) >= 1 (any x for exact polynomials).
    DvrElem evaluate(const DvrElem& x) const;
    /// Every stored coefficient is zero at precision.
    bool is_zero() const;

    std::string to_string() const;

private:
    void normalize();

    const Dvr* ring_ = nullptr;
    std::vector<DvrElem> c_;
    int order_ = kExact;
};

/// Coefficient-wise agreement at the available precision.
bool agrees(const TruncSeries& a, const TruncSeries& b);

/// Monic polynomial whose non-leading coefficients lie in πO.
class DistPoly {
public:
    DistPoly() = default;
    /// Coefficients from S^0 up to the leading 1 (which must be included).
    DistPoly(const Dvr& ring, std::vector<DvrElem> coeffs);
    static DistPoly from_ints(const Dvr& ring, const std::vector<std::int64_t>& coeffs);
    static DistPoly one(const Dvr& ring) { return DistPoly(ring, {ring.one()}); }
    /// (S - r1)(S - r2)...
    static DistPoly from_roots(const Dvr& ring, const std::vector<DvrElem>& roots);

    const Dvr& ring() const { return *ring_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<DvrElem>& coeffs() const { return c_; }
    const DvrElem& coeff(int i) const { return c_.at(i); }
    TruncSeries series() const { return TruncSeries(*ring_, c_); }

    friend DistPoly operator*(const DistPoly& a, const DistPoly& b);
    DistPoly pow(int n) const;

    std::string to_string() const { return series().to_string(); }

private:
    const Dvr* ring_ = nullptr;
    std::vector<DvrElem> c_;
};

bool agrees(const DistPoly& a, const DistPoly& b);

// --- Weierstrass division and preparation ----------------------------------

struct WeierstrassDivision {
    TruncSeries quotient;
    TruncSeries remainder;  // exact polynomial of degree < deg d
};

/// f = q·d + r modulo (π^N, S^M) with deg r < deg d.
WeierstrassDivision weierstrass_divide(const TruncSeries& f, const DistPoly& d);

/// g = π^mu · F · (unit) with F distinguished.
struct WeierstrassForm {
    int mu = 0;
    DistPoly distinguished;
};

WeierstrassForm weierstrass_prepare(const TruncSeries& g);

// --- Newton polygon and quadratic roots -------------------------------------

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    static Rational make(std::int64_t n, std::int64_t d);
    friend bool operator==(const Rational&, const Rational&) = default;
    std::string to_string() const;
};

/// One edge of the Newton polygon: `multiplicity` roots whose p-adic valuation
/// is `slope` (π-valuation slope·e).
struct NewtonSlope {
    Rational slope;
    int multiplicity = 0;
    friend bool operator==(const NewtonSlope&, const NewtonSlope&) = default;
};

/// Slopes sorted ascending.
std::vector<NewtonSlope> newton_polygon(const DistPoly& F);

/// ord_π(β - α) for the roots of a quadratic distinguished polynomial.
int root_gap_valuation(const DistPoly& F);

/// Roots (α, β) of a quadratic F inside the declared O, α of lower valuation.
std::pair<DvrElem, DvrElem> quad_split(const DistPoly& F, int target_precision);

/// Square root in O of an element with even valuation and square residue.
DvrElem dvr_sqrt(const DvrElem& x);

}  // namespace iwmod
