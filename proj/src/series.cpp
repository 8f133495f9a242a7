#include "iwmod/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iwmod/errors.hpp"

namespace iwmod {

namespace {

DvrElem unknown(const Dvr& r) { return r.zero().with_precision(0); }

bool exact_zero(const DvrElem& x) { return compare(x, x.ring().zero()) == Comparison::Equal; }

void check_ring(const TruncSeries& a, const TruncSeries& b) {
    if (&a.ring() != &b.ring()) throw std::invalid_argument("series over different rings or precisions");
}

}  // namespace

TruncSeries::TruncSeries(const Dvr& ring, std::vector<DvrElem> coeffs, int order)
    : ring_(&ring), c_(std::move(coeffs)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("negative truncation order");
    for (const auto& c : c_)
        if (&c.ring() != ring_) throw std::invalid_argument("coefficient from a different ring");
    normalize();
}

void TruncSeries::normalize() {
    if (is_exact()) {
        while (!c_.empty() && exact_zero(c_.back())) c_.pop_back();
        return;
    }
    if (static_cast<int>(c_.size()) > order_) c_.resize(order_);
    while (static_cast<int>(c_.size()) < order_) c_.push_back(ring_->zero());
}

TruncSeries TruncSeries::polynomial(const Dvr& ring, const std::vector<std::int64_t>& coeffs) {
    std::vector<DvrElem> c;
    c.reserve(coeffs.size());
    for (auto x : coeffs) c.push_back(ring.from_int(x));
    return TruncSeries(ring, std::move(c));
}

TruncSeries TruncSeries::monomial(const Dvr& ring, int k) {
    std::vector<DvrElem> c(k + 1, ring.zero());
    c[k] = ring.one();
    return TruncSeries(ring, std::move(c));
}

DvrElem TruncSeries::coeff(int i) const {
    if (i < 0) throw std::out_of_range("negative coefficient index");
    if (i < size()) return c_[i];
    return is_exact() ? ring_->zero() : unknown(*ring_);
}

TruncSeries TruncSeries::truncated(int order) const {
    return TruncSeries(*ring_, c_, std::min(order, order_));
}

TruncSeries TruncSeries::operator-() const {
    std::vector<DvrElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return TruncSeries(*ring_, std::move(c), order_);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_ring(a, b);
    int order = std::min(a.order_, b.order_);
    int len = std::max(a.size(), b.size());
    if (order != TruncSeries::kExact) len = std::min(len, order);
    std::vector<DvrElem> c;
    c.reserve(len);
    for (int i = 0; i < len; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return TruncSeries(*a.ring_, std::move(c), order);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_ring(a, b);
    int order = std::min(a.order_, b.order_);
    if (a.size() == 0 || b.size() == 0) return TruncSeries(*a.ring_, {}, order);
    int len = a.size() + b.size() - 1;
    if (order != TruncSeries::kExact) len = std::min(len, order);
    std::vector<DvrElem> c(len, a.ring_->zero());
    for (int i = 0; i < a.size() && i < len; ++i)
        for (int j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a.c_[i] * b.c_[j];
    return TruncSeries(*a.ring_, std::move(c), order);
}

TruncSeries operator*(const DvrElem& s, const TruncSeries& a) {
    std::vector<DvrElem> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(s * x);
    return TruncSeries(*a.ring_, std::move(c), a.order_);
}

TruncSeries TruncSeries::inverse(int order) const {
    int m = order > 0 ? std::min(order, order_) : order_;
    if (m == kExact) throw std::invalid_argument("inverse of an exact polynomial needs a truncation order");
    DvrElem b0 = coeff(0).inverse();
    std::vector<DvrElem> b{b0};
    b.reserve(m);
    for (int n = 1; n < m; ++n) {
        DvrElem s = ring_->zero();
        for (int i = 1; i <= n; ++i) s += coeff(i) * b[n - i];
        b.push_back(-(b0 * s));
    }
    return TruncSeries(*ring_, std::move(b), m);
}

DvrElem TruncSeries::evaluate(const DvrElem& x) const {
    if (&x.ring() != ring_) throw std::invalid_argument("evaluation point from a different ring");
    Valuation vx = x.valuation();
    if (!is_exact() && vx.determined() && vx.value == 0)
        throw PreconditionError("evaluation point in the maximal ideal", "series evaluated at a unit");
    DvrElem acc = ring_->zero();
    for (int i = size() - 1; i >= 0; --i) acc = acc * x + c_[i];
    if (!is_exact()) {
        long cap = static_cast<long>(order_) * vx.value;
        acc = acc.with_precision(static_cast<int>(std::min<long>(cap, ring_->precision())));
    }
    return acc;
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const DvrElem& x) { return x.is_zero(); });
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (c_[i].is_zero() && c_[i].abs_precision() == ring_->precision()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].to_string();
        if (i == 1) os << "*S";
        if (i > 1) os << "*S^" << i;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(S^" << order_ << ")";
    return os.str();
}

bool agrees(const TruncSeries& a, const TruncSeries& b) {
    int len = std::max(a.size(), b.size());
    len = std::min({len, a.order(), b.order()});
    for (int i = 0; i < len; ++i)
        if (!agrees(a.coeff(i), b.coeff(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------

DistPoly::DistPoly(const Dvr& ring, std::vector<DvrElem> coeffs) : ring_(&ring), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("distinguished polynomial needs a leading coefficient");
    if (compare(c_.back(), ring.one()) == Comparison::Unequal)
        throw PreconditionError("distinguished polynomial", "leading coefficient is not 1");
    c_.back() = ring.one();
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        if (&c_[i].ring() != ring_) throw std::invalid_argument("coefficient from a different ring");
        if (c_[i].is_unit())
            throw PreconditionError("distinguished polynomial",
                                    "coefficient of S^" + std::to_string(i) + " is a unit");
    }
}

DistPoly DistPoly::from_ints(const Dvr& ring, const std::vector<std::int64_t>& coeffs) {
    std::vector<DvrElem> c;
    for (auto x : coeffs) c.push_back(ring.from_int(x));
    return DistPoly(ring, std::move(c));
}

DistPoly DistPoly::from_roots(const Dvr& ring, const std::vector<DvrElem>& roots) {
    TruncSeries acc = TruncSeries::one(ring);
    for (const auto& r : roots) acc *= TruncSeries(ring, {-r, ring.one()});
    std::vector<DvrElem> c = acc.coeffs();
    c.resize(roots.size() + 1, ring.zero());
    return DistPoly(ring, std::move(c));
}

DistPoly operator*(const DistPoly& a, const DistPoly& b) {
    TruncSeries s = a.series() * b.series();
    std::vector<DvrElem> c = s.coeffs();
    c.resize(a.degree() + b.degree() + 1, a.ring().zero());
    return DistPoly(a.ring(), std::move(c));
}

DistPoly DistPoly::pow(int n) const {
    DistPoly acc = one(*ring_);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

bool agrees(const DistPoly& a, const DistPoly& b) {
    return a.degree() == b.degree() && agrees(a.series(), b.series());
}

}  // namespace iwmod
