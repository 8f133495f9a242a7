#include "iwmod/twovar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iwmod/errors.hpp"

namespace iwmod {

BiSeries::BiSeries(const Dvr& ring, std::vector<TruncSeries> s_coeffs, int t_order)
    : ring_(&ring), c_(std::move(s_coeffs)), t_order_(t_order) {
    for (const auto& c : c_)
        if (&c.ring() != ring_) throw std::invalid_argument("coefficient over a different ring");
    normalize();
}

void BiSeries::normalize() {
    for (auto& c : c_) c = c.truncated(t_order_);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiSeries BiSeries::from_ints(const Dvr& ring, const std::vector<std::vector<std::int64_t>>& rows, int t_order) {
    std::vector<TruncSeries> c;
    for (const auto& row : rows) c.push_back(TruncSeries::polynomial(ring, row));
    return BiSeries(ring, std::move(c), t_order);
}

BiSeries BiSeries::s_var(const Dvr& ring, int t_order) {
    return BiSeries(ring, {TruncSeries::zero(ring), TruncSeries::one(ring)}, t_order);
}

BiSeries BiSeries::t_var(const Dvr& ring, int t_order) {
    return BiSeries(ring, {TruncSeries::monomial(ring, 1)}, t_order);
}

TruncSeries BiSeries::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return TruncSeries::zero(*ring_).truncated(t_order_);
    return c_[i];
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    const int n = std::max(a.degree_s(), b.degree_s()) + 1;
    std::vector<TruncSeries> c;
    for (int i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return BiSeries(*a.ring_, std::move(c), std::min(a.t_order_, b.t_order_));
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    const int n = std::max(a.degree_s(), b.degree_s()) + 1;
    std::vector<TruncSeries> c;
    for (int i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return BiSeries(*a.ring_, std::move(c), std::min(a.t_order_, b.t_order_));
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    const int order = std::min(a.t_order_, b.t_order_);
    if (a.c_.empty() || b.c_.empty()) return BiSeries(*a.ring_, {}, order);
    std::vector<TruncSeries> c(a.c_.size() + b.c_.size() - 1, TruncSeries::zero(*a.ring_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return BiSeries(*a.ring_, std::move(c), order);
}

BiSeries BiSeries::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    BiSeries acc(*ring_, {TruncSeries::one(*ring_)}, t_order_);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

bool BiSeries::is_zero() const { return c_.empty(); }

TruncSeries BiSeries::at_t0() const {
    std::vector<DvrElem> c;
    for (const auto& x : c_) c.push_back(x.coeff(0));
    return TruncSeries(*ring_, std::move(c));
}

DvrElem BiSeries::at_00() const { return c_.empty() ? ring_->zero() : c_[0].coeff(0); }

std::string BiSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j < c_[i].size(); ++j) {
            const DvrElem& x = c_[i].coeffs()[j];
            if (x.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string mono;
            if (i > 0) mono += "S" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (j > 0) mono += (mono.empty() ? "T" : "*T") + (j > 1 ? "^" + std::to_string(j) : std::string());
            if (mono.empty())
                os << "(" << x.to_string() << ")";
            else if (compare(x, ring_->one()) == Comparison::Equal)
                os << mono;
            else
                os << "(" << x.to_string() << ")*" << mono;
        }
    if (first) os << "0";
    if (t_order_ != TruncSeries::kExact) os << " + O(T^" << t_order_ << ")";
    return os.str();
}

TwoVarModule::TwoVarModule(const Dvr& ring, Matrix<TruncSeries> s_action, int t_order)
    : ring_(&ring), a_(std::move(s_action)), t_order_(t_order) {
    if (a_.empty()) throw PreconditionError("rank r >= 1", "empty S-action matrix");
    if (t_order_ < 1) throw std::invalid_argument("T-truncation order must be positive");
    for (auto& row : a_) {
        if (row.size() != a_.size()) throw std::invalid_argument("S-action matrix must be square");
        for (auto& x : row) {
            if (&x.ring() != ring_) throw std::invalid_argument("S-action entry over a different ring");
            x = x.truncated(t_order_);
        }
    }
}

BiSeries char_det(const TwoVarModule& M) {
    const Dvr& R = M.ring();
    TruncSeries zero = TruncSeries::zero(R).truncated(M.t_order());
    TruncSeries one = TruncSeries::one(R).truncated(M.t_order());
    std::vector<TruncSeries> chi = berkowitz_charpoly(M.s_action(), zero, one);
    std::reverse(chi.begin(), chi.end());
    return BiSeries(R, std::move(chi), M.t_order());
}

TruncSeries specialize_t(const BiSeries& f) { return f.at_t0(); }

bool specialization_matches(const BiSeries& f, const TruncSeries& g) {
    WeierstrassForm a = weierstrass_prepare(specialize_t(f));
    WeierstrassForm b = weierstrass_prepare(g);
    return a.mu == b.mu && agrees(a.distinguished, b.distinguished);
}

PPower evaluate_00(const BiSeries& f) {
    DvrElem c = f.at_00();
    Valuation v = c.valuation();
    if (!v.determined())
        throw PrecisionError("f(0,0) vanishes modulo pi^" + std::to_string(c.abs_precision()) +
                             "; the quotient is infinite or beyond the working precision");
    return {f.ring().p(), f.ring().f() * v.value, false};
}

Matrix<TruncSeries> companion_matrix(const DistPoly& f, int t_order) {
    const Dvr& R = f.ring();
    const int r = f.degree();
    if (r < 1) throw PreconditionError("rank r >= 1", "companion of a constant");
    Matrix<TruncSeries> A(r, std::vector<TruncSeries>(r, TruncSeries::zero(R).truncated(t_order)));
    for (int i = 1; i < r; ++i) A[i][i - 1] = TruncSeries::one(R).truncated(t_order);
    for (int i = 0; i < r; ++i) A[i][r - 1] = TruncSeries::constant(-f.coeff(i)).truncated(t_order);
    return A;
}

namespace {

bool series_divides(const TruncSeries& q, const TruncSeries& a) {
    if (q.is_zero()) throw PreconditionError("nonzero prime", "prime vanishes at precision");
    WeierstrassForm w = weierstrass_prepare(q);
    std::vector<DvrElem> shifted;
    for (const auto& c : a.coeffs()) {
        Valuation v = c.valuation();
        if (v.determined() && v.value < w.mu) return false;
        if (!v.determined() && v.value < w.mu)
            throw PrecisionError("divisibility by pi^" + std::to_string(w.mu) + " is undetermined");
        shifted.push_back(c.div_pi_pow(w.mu));
    }
    if (w.distinguished.degree() == 0) return true;
    return weierstrass_divide(TruncSeries(a.ring(), shifted, a.order()), w.distinguished).remainder.is_zero();
}

}  // namespace

bool divides(const BiSeries& q, const BiSeries& a) {
    if (q.degree_s() < 0) throw PreconditionError("nonzero prime", "prime vanishes at precision");
    if (q.degree_s() == 0) {
        for (const auto& c : a.s_coeffs())
            if (!series_divides(q.coeff(0), c)) return false;
        return true;
    }
    const int d = q.degree_s();
    const int order = std::min(q.t_order(), a.t_order());
    TruncSeries lead = q.coeff(d);
    if (!lead.is_unit())
        throw PreconditionError("prime is free of S or distinguished in S",
                                "leading S-coefficient of " + q.to_string() + " is not a unit");
    for (int i = 0; i < d; ++i)
        if (q.coeff(i).is_unit())
            throw PreconditionError("prime is free of S or distinguished in S",
                                    "S-coefficient " + std::to_string(i) + " of " + q.to_string() + " is a unit");
    const int inv_order = order == TruncSeries::kExact ? std::max(1, a.ring().precision()) * 4 : order;
    TruncSeries inv = lead.is_exact() && lead.size() == 1 ? TruncSeries::constant(lead.coeff(0).inverse())
                                                          : lead.truncated(inv_order).inverse();
    std::vector<TruncSeries> r = a.s_coeffs();
    for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
        TruncSeries c = r[i] * inv;
        for (int j = 0; j <= d; ++j) r[i - d + j] -= c * q.coeff(j);
    }
    for (int i = 0; i < std::min<int>(d, static_cast<int>(r.size())); ++i)
        if (!r[i].truncated(order).is_zero()) return false;
    return true;
}

bool check_ann_char_consistency(const std::vector<BiSeries>& primes, const std::vector<int>& powers,
                                const std::vector<std::vector<BiSeries>>& generators) {
    const std::size_t r = primes.size();
    if (powers.size() != r) throw std::invalid_argument("one power per prime expected");
    if (r == 0) throw PreconditionError("E is a nonzero elementary module", "no prime factors");
    for (int n : powers)
        if (n < 1) throw std::invalid_argument("prime powers must be positive");
    std::vector<BiSeries> moduli;
    for (std::size_t i = 0; i < r; ++i) moduli.push_back(primes[i].pow(powers[i]));
    for (const auto& x : generators)
        if (x.size() != r)
            throw PreconditionError("X is contained in E", "generator has " + std::to_string(x.size()) +
                                                               " coordinates, E has " + std::to_string(r) + " summands");
    auto kills = [&](const BiSeries& g) {
        for (const auto& x : generators)
            for (std::size_t i = 0; i < r; ++i)
                if (!divides(moduli[i], g * x[i])) return false;
        return true;
    };
    auto product = [&](std::size_t skip) {
        BiSeries g = BiSeries::constant(TruncSeries::one(primes[0].ring()));
        for (std::size_t i = 0; i < r; ++i) g = g * primes[i].pow(powers[i] - (i == skip ? 1 : 0));
        return g;
    };
    if (!kills(product(r))) return false;
    for (std::size_t j = 0; j < r; ++j)
        if (kills(product(j))) return false;
    return true;
}

}  // namespace iwmod
