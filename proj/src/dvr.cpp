#include "iwmod/dvr.hpp"

#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "iwmod/errors.hpp"

namespace iwmod {

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

bool is_square_mod_p(std::int64_t a, std::int64_t p) {
    a = mod_floor(a, p);
    if (a == 0) return true;
    for (std::int64_t x = 1; x < p; ++x)
        if ((x * x) % p == a) return true;
    return false;
}

void validate(const DvrSpec& s) {
    if (!is_prime(s.p) || s.p == 2) throw std::invalid_argument("residue characteristic must be an odd prime");
    if (s.e < 1 || s.f < 1 || s.e * s.f > 2)
        throw std::invalid_argument("only Z_p and quadratic extensions are supported (e*f in {1,2})");
    if (s.e == 2) {
        if (vp_capped(s.c1, s.p, 64) < 1 || vp_capped(s.c0, s.p, 64) != 1)
            throw std::invalid_argument("ramified defining polynomial must be Eisenstein");
    }
    if (s.f == 2) {
        if (is_square_mod_p(s.c1 * s.c1 - 4 * s.c0, s.p))
            throw std::invalid_argument("unramified defining polynomial must be irreducible mod p");
    }
}

}  // namespace

int vp_capped(std::int64_t x, std::int64_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % p == 0 && v < cap) {
        x /= p;
        ++v;
    }
    return v;
}

std::string DvrSpec::to_string() const {
    std::ostringstream os;
    if (degree() == 1) {
        os << "Z_" << p;
    } else if (e == 2) {
        os << "Z_" << p << "[pi], pi^2 + " << c1 << "*pi + " << c0 << " = 0";
    } else {
        os << "Z_" << p << "[t], t^2 + " << c1 << "*t + " << c0 << " = 0 (unramified)";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Dvr::Dvr(const DvrSpec& spec, int precision) : spec_(spec) {
    int e = spec.e;
    if (precision <= 0) precision = kDefaultPrecisionPerE * e;
    digits_ = (precision + e - 1) / e;
    precision_ = digits_ * e;
    __int128 m = 1;
    for (int i = 0; i < digits_; ++i) {
        m *= spec.p;
        if (m > (static_cast<__int128>(1) << 62))
            throw std::invalid_argument("precision too large for 64-bit coordinates");
    }
    modulus_ = static_cast<std::int64_t>(m);
    c0_ = mod_floor(spec.c0, modulus_);
    c1_ = mod_floor(spec.c1, modulus_);
}

const Dvr& Dvr::make(const DvrSpec& spec, int precision) {
    validate(spec);
    static std::mutex mu;
    static std::deque<Dvr> registry;
    Dvr candidate(spec, precision);
    std::lock_guard lock(mu);
    for (const Dvr& d : registry)
        if (d.spec_ == spec && d.precision_ == candidate.precision_) return d;
    registry.push_back(candidate);
    return registry.back();
}

std::int64_t Dvr::reduce(__int128 x) const {
    x %= modulus_;
    if (x < 0) x += modulus_;
    return static_cast<std::int64_t>(x);
}

std::int64_t Dvr::mulmod(std::int64_t a, std::int64_t b) const {
    return reduce(static_cast<__int128>(a) * b);
}

std::int64_t Dvr::inverse_mod(std::int64_t a) const {
    // extended Euclid on (a, modulus)
    __int128 old_r = mod_floor(a, modulus_), r = modulus_;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw PrecisionError("element is not a unit");
    return reduce(old_s);
}

DvrElem Dvr::zero() const { return DvrElem(this, 0, 0, precision_); }
DvrElem Dvr::one() const { return DvrElem(this, 1, 0, precision_); }
DvrElem Dvr::from_int(std::int64_t n) const { return DvrElem(this, mod_floor(n, modulus_), 0, precision_); }
DvrElem Dvr::from_coords(std::int64_t a0, std::int64_t a1) const {
    if (degree() == 1 && a1 != 0) throw std::invalid_argument("Z_p elements have a single coordinate");
    return DvrElem(this, mod_floor(a0, modulus_), mod_floor(a1, modulus_), precision_);
}
DvrElem Dvr::uniformizer() const { return e() == 2 ? from_coords(0, 1) : from_int(p()); }
DvrElem Dvr::pi_pow(int k) const { return one().mul_pi_pow(k); }

std::vector<DvrElem> Dvr::residue_representatives() const {
    std::vector<DvrElem> out;
    if (f() == 1) {
        for (std::int64_t a = 0; a < p(); ++a) out.push_back(from_int(a));
    } else {
        for (std::int64_t a1 = 0; a1 < p(); ++a1)
            for (std::int64_t a0 = 0; a0 < p(); ++a0) out.push_back(from_coords(a0, a1));
    }
    return out;
}

// ---------------------------------------------------------------------------

DvrElem::DvrElem(const Dvr* ring, std::int64_t a0, std::int64_t a1, int prec)
    : ring_(ring), c_{a0, a1}, prec_(prec) {
    canonicalize();
}

void DvrElem::canonicalize() {
    const Dvr& r = *ring_;
    prec_ = std::clamp(prec_, 0, r.precision_);
    if (r.e() == 1) {
        std::int64_t m = ipow(r.p(), prec_);
        c_[0] = mod_floor(c_[0], m);
        c_[1] = mod_floor(c_[1], m);
    } else {
        int t = prec_ / 2;
        c_[0] = mod_floor(c_[0], ipow(r.p(), prec_ - t));
        c_[1] = mod_floor(c_[1], ipow(r.p(), t));
    }
}

std::int64_t DvrElem::balanced_coord(int i) const {
    const Dvr& r = *ring_;
    int digits = r.e() == 1 ? prec_ : (i == 0 ? prec_ - prec_ / 2 : prec_ / 2);
    std::int64_t m = ipow(r.p(), digits);
    std::int64_t v = c_[i];
    return v > m / 2 ? v - m : v;
}

Valuation DvrElem::valuation() const {
    const Dvr& r = *ring_;
    const int cap = r.digits_ + 1;
    int v0 = vp_capped(c_[0], r.p(), cap);
    int v1 = vp_capped(c_[1], r.p(), cap);
    int v;
    if (r.e() == 2) {
        v = std::min(2 * v0, 2 * v1 + 1);
    } else {
        v = std::min(v0, v1);
    }
    if (v >= prec_) return Valuation::lower_bound(prec_);
    return Valuation::exact(v);
}

DvrElem DvrElem::operator-() const { return DvrElem(ring_, -c_[0], -c_[1], prec_); }

namespace {
void check_same_ring(const DvrElem& a, const DvrElem& b) {
    if (&a.ring() != &b.ring()) throw std::invalid_argument("elements belong to different rings or precisions");
}
}  // namespace

DvrElem operator+(const DvrElem& a, const DvrElem& b) {
    check_same_ring(a, b);
    const Dvr& r = *a.ring_;
    return DvrElem(a.ring_, r.reduce(static_cast<__int128>(a.c_[0]) + b.c_[0]),
                   r.reduce(static_cast<__int128>(a.c_[1]) + b.c_[1]), std::min(a.prec_, b.prec_));
}

DvrElem operator-(const DvrElem& a, const DvrElem& b) {
    check_same_ring(a, b);
    const Dvr& r = *a.ring_;
    return DvrElem(a.ring_, r.reduce(static_cast<__int128>(a.c_[0]) - b.c_[0]),
                   r.reduce(static_cast<__int128>(a.c_[1]) - b.c_[1]), std::min(a.prec_, b.prec_));
}

DvrElem operator*(const DvrElem& a, const DvrElem& b) {
    check_same_ring(a, b);
    const Dvr& r = *a.ring_;
    std::int64_t x0, x1;
    if (r.degree() == 1) {
        x0 = r.mulmod(a.c_[0], b.c_[0]);
        x1 = 0;
    } else {
        // θ² = -c1·θ - c0
        std::int64_t hh = r.mulmod(a.c_[1], b.c_[1]);
        x0 = r.reduce(static_cast<__int128>(r.mulmod(a.c_[0], b.c_[0])) - r.mulmod(hh, r.c0_));
        x1 = r.reduce(static_cast<__int128>(r.mulmod(a.c_[0], b.c_[1])) + r.mulmod(a.c_[1], b.c_[0]) -
                      r.mulmod(hh, r.c1_));
    }
    int prec = std::min(a.prec_ + b.valuation().value, b.prec_ + a.valuation().value);
    return DvrElem(a.ring_, x0, x1, prec);
}

DvrElem DvrElem::inverse() const {
    if (!is_unit()) throw PrecisionError("inverse of a non-unit (or of an element zero at precision)");
    const Dvr& r = *ring_;
    if (r.degree() == 1) return DvrElem(ring_, r.inverse_mod(c_[0]), 0, prec_);
    // conj(a0 + a1θ) = (a0 - a1·c1) - a1·θ, N = a0² - c1·a0·a1 + c0·a1²
    std::int64_t a0 = c_[0], a1 = c_[1];
    std::int64_t conj0 = r.reduce(static_cast<__int128>(a0) - r.mulmod(a1, r.c1_));
    std::int64_t conj1 = r.reduce(-static_cast<__int128>(a1));
    std::int64_t norm = r.reduce(static_cast<__int128>(r.mulmod(a0, a0)) - r.mulmod(r.mulmod(r.c1_, a0), a1) +
                                 r.mulmod(r.mulmod(r.c0_, a1), a1));
    std::int64_t ninv = r.inverse_mod(norm);
    return DvrElem(ring_, r.mulmod(conj0, ninv), r.mulmod(conj1, ninv), prec_);
}

DvrElem DvrElem::div_pi() const {
    const Dvr& r = *ring_;
    if (prec_ == 0) return *this;
    if (valuation().value < 1) throw PreconditionError("divisibility by pi", "element is a unit");
    if (r.e() == 1) return DvrElem(ring_, c_[0] / r.p(), c_[1] / r.p(), prec_ - 1);
    // x/π = a1 + (a0/p)·(-c1 - π)/u0 with c0 = p·u0
    std::int64_t h = r.mulmod(c_[0] / r.p(), r.inverse_mod(r.spec_.c0 / r.p()));
    std::int64_t y0 = r.reduce(static_cast<__int128>(c_[1]) - r.mulmod(h, r.c1_));
    std::int64_t y1 = r.reduce(-static_cast<__int128>(h));
    return DvrElem(ring_, y0, y1, prec_ - 1);
}

DvrElem DvrElem::div_pi_pow(int k) const {
    DvrElem x = *this;
    for (int i = 0; i < k; ++i) x = x.div_pi();
    return x;
}

DvrElem DvrElem::mul_pi_pow(int k) const {
    const Dvr& r = *ring_;
    DvrElem x = *this;
    for (int i = 0; i < k; ++i) {
        if (r.e() == 1) {
            x = DvrElem(ring_, r.mulmod(x.c_[0], r.p()), r.mulmod(x.c_[1], r.p()), x.prec_ + 1);
        } else {
            // (a0 + a1π)π = -a1·c0 + (a0 - a1·c1)π
            std::int64_t y0 = r.reduce(-static_cast<__int128>(r.mulmod(x.c_[1], r.c0_)));
            std::int64_t y1 = r.reduce(static_cast<__int128>(x.c_[0]) - r.mulmod(x.c_[1], r.c1_));
            x = DvrElem(ring_, y0, y1, x.prec_ + 1);
        }
    }
    return x;
}

DvrElem exact_div(const DvrElem& a, const DvrElem& b) {
    check_same_ring(a, b);
    Valuation vb = b.valuation();
    if (!vb.determined()) throw PrecisionError("division by an element that is zero at precision");
    Valuation va = a.valuation();
    if (va.determined() && va.value < vb.value)
        throw PreconditionError("divisibility", "valuation of dividend is below that of divisor");
    DvrElem unit = b.div_pi_pow(vb.value);
    return a.div_pi_pow(vb.value) * unit.inverse();
}

DvrElem DvrElem::with_precision(int prec) const { return DvrElem(ring_, c_[0], c_[1], std::min(prec, prec_)); }

Comparison compare(const DvrElem& a, const DvrElem& b) {
    DvrElem d = a - b;
    if (!d.is_zero()) return Comparison::Unequal;
    return d.prec_ >= a.ring_->precision_ ? Comparison::Equal : Comparison::Undetermined;
}

std::string DvrElem::to_string() const {
    std::int64_t a0 = balanced_coord(0);
    if (ring_->degree() == 1 || c_[1] == 0) return std::to_string(a0);
    std::ostringstream os;
    os << "(" << a0 << (balanced_coord(1) < 0 ? " - " : " + ") << std::llabs(balanced_coord(1))
       << (ring_->e() == 2 ? "*pi)" : "*t)");
    return os.str();
}

}  // namespace iwmod
