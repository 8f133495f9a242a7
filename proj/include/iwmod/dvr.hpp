#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwmod/valuation.hpp"

namespace iwmod {

/// Shape of a discrete valuation ring O finite over Z_p with [O : Z_p] <= 2.
///
/// When e*f == 2 the ring is Z_p[θ] with θ² + c1·θ + c0 = 0. For e == 2 the
/// polynomial must be Eisenstein and θ is the uniformizer; for f == 2 it must
/// be irreducible modulo p and the uniformizer is p itself.
struct DvrSpec {
    std::int64_t p = 3;
    int e = 1;
    int f = 1;
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;

    friend bool operator==(const DvrSpec&, const DvrSpec&) = default;

    static DvrSpec zp(std::int64_t p) { return {p, 1, 1, 0, 0}; }
    /// Z_p[π] with π² = p.
    static DvrSpec ramified_sqrt_p(std::int64_t p) { return {p, 2, 1, -p, 0}; }
    /// Z_p[θ] with θ² = d, d a non-residue modulo p.
    static DvrSpec unramified_sqrt(std::int64_t p, std::int64_t d) { return {p, 1, 2, -d, 0}; }

    int degree() const { return e * f; }
    std::string to_string() const;
};

class DvrElem;
enum class Comparison : int;

/// A ring O together with a working absolute precision N (in π-units).
///
/// Instances are interned and never destroyed, so elements may refer to them
/// by pointer. Obtain one through `Dvr::make`.
class Dvr {
public:
    static constexpr int kDefaultPrecisionPerE = 12;

    /// `precision` <= 0 selects the default 12·e; other values are rounded up
    /// to a multiple of e.
    static const Dvr& make(const DvrSpec& spec, int precision = 0);

    const DvrSpec& spec() const { return spec_; }
    std::int64_t p() const { return spec_.p; }
    int e() const { return spec_.e; }
    int f() const { return spec_.f; }
    int degree() const { return spec_.degree(); }
    /// Working precision N in π-units.
    int precision() const { return precision_; }
    /// Number of p-adic digits stored per coordinate (N / e).
    int digits() const { return digits_; }
    std::int64_t modulus() const { return modulus_; }

    /// Same ring at a different working precision.
    const Dvr& with_precision(int precision) const { return make(spec_, precision); }

    DvrElem zero() const;
    DvrElem one() const;
    DvrElem from_int(std::int64_t n) const;
    DvrElem from_coords(std::int64_t a0, std::int64_t a1) const;
    DvrElem uniformizer() const;
    /// π^k for k >= 0.
    DvrElem pi_pow(int k) const;

    /// Representatives of the residue field (p or p² elements).
    std::vector<DvrElem> residue_representatives() const;

    friend bool operator==(const Dvr& a, const Dvr& b) { return &a == &b; }

    std::int64_t reduce(__int128 x) const;
    std::int64_t mulmod(std::int64_t a, std::int64_t b) const;
    std::int64_t inverse_mod(std::int64_t a) const;

private:
    Dvr(const DvrSpec& spec, int precision);
    friend class DvrElem;
    friend DvrElem operator*(const DvrElem& a, const DvrElem& b);
    friend Comparison compare(const DvrElem& a, const DvrElem& b);

    DvrSpec spec_;
    int precision_;
    int digits_;
    std::int64_t modulus_;
    std::int64_t c0_;
    std::int64_t c1_;
};

/// Three-valued outcome of comparing two elements at finite precision.
enum class Comparison : int { Equal, Unequal, Undetermined };

/// An element of O known modulo π^abs_precision.
///
/// Coordinates are taken in the basis (1, θ) and stored modulo p^digits.
/// Arithmetic tracks absolute precision and never raises it.
class DvrElem {
public:
    DvrElem() = default;

    const Dvr& ring() const { return *ring_; }
    int abs_precision() const { return prec_; }
    std::int64_t coord(int i) const { return c_[i]; }
    /// Coordinates in the balanced range (-m/2, m/2].
    std::int64_t balanced_coord(int i) const;

    Valuation valuation() const;
    bool is_zero() const { return valuation().at_least; }
    bool is_unit() const {
        auto v = valuation();
        return v.determined() && v.value == 0;
    }

    DvrElem operator-() const;
    friend DvrElem operator+(const DvrElem& a, const DvrElem& b);
    friend DvrElem operator-(const DvrElem& a, const DvrElem& b);
    friend DvrElem operator*(const DvrElem& a, const DvrElem& b);
    DvrElem& operator+=(const DvrElem& o) { return *this = *this + o; }
    DvrElem& operator-=(const DvrElem& o) { return *this = *this - o; }
    DvrElem& operator*=(const DvrElem& o) { return *this = *this * o; }

    /// Inverse of a unit; throws PrecisionError if the element is not a unit.
    DvrElem inverse() const;
    /// Exact quotient by π^k; requires valuation >= k (lower bounds accepted).
    DvrElem div_pi_pow(int k) const;
    DvrElem mul_pi_pow(int k) const;
    /// Exact quotient a / b in O; throws PrecisionError when v(b) is not
    /// determined and PreconditionError when b does not divide a.
    friend DvrElem exact_div(const DvrElem& a, const DvrElem& b);

    /// Forget everything below π^prec (prec is clamped to the current one).
    DvrElem with_precision(int prec) const;

    /// Congruent modulo the smaller of the two precisions.
    friend bool agrees(const DvrElem& a, const DvrElem& b) { return (a - b).is_zero(); }
    friend Comparison compare(const DvrElem& a, const DvrElem& b);

    std::string to_string() const;

private:
    friend class Dvr;
    DvrElem(const Dvr* ring, std::int64_t a0, std::int64_t a1, int prec);
    void canonicalize();
    DvrElem div_pi() const;

    const Dvr* ring_ = nullptr;
    std::array<std::int64_t, 2> c_{0, 0};
    int prec_ = 0;
};

/// Integer p-adic valuation with a cap; v_p(0) returns `cap`.
int vp_capped(std::int64_t x, std::int64_t p, int cap);

}  // namespace iwmod
