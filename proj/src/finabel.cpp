#include "iwmod/finabel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "howell.hpp"
#include "iwmod/errors.hpp"

namespace iwmod {

using detail::ChainRing;
using detail::Echelon;
using detail::Row;

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::int64_t mod_floor(__int128 a, std::int64_t m) {
    __int128 r = a % m;
    return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Relations p^{e_i}·ε_i of G inside (Z/p^E)^g.
std::vector<Row> relations(const FinAbPGroup& G) {
    std::vector<Row> out;
    for (int i = 0; i < G.rank(); ++i) {
        if (G.exponents()[i] == G.exponent()) continue;
        Row r(G.rank(), 0);
        r[i] = ipow(G.p(), G.exponents()[i]);
        out.push_back(r);
    }
    return out;
}

int relation_exponent(const FinAbPGroup& G) {
    int s = 0;
    for (int e : G.exponents()) s += G.exponent() - e;
    return s;
}

void same_parent(const Subgroup& A, const Subgroup& B) {
    if (!(A.parent() == B.parent())) throw std::invalid_argument("subgroups of different groups");
}

}  // namespace

// --- FinAbPGroup -------------------------------------------------------------

FinAbPGroup::FinAbPGroup(std::int64_t p, std::vector<int> exponents) : p_(p), exps_(std::move(exponents)) {
    if (!is_prime(p_)) throw std::invalid_argument("p = " + std::to_string(p_) + " is not prime");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] < 1) throw std::invalid_argument("cyclic factor exponents must be >= 1");
        if (i > 0 && exps_[i] < exps_[i - 1]) throw std::invalid_argument("cyclic factor exponents must be non-decreasing");
    }
    ChainRing check(p_, exponent());
}

int FinAbPGroup::order_exponent() const {
    int s = 0;
    for (int e : exps_) s += e;
    return s;
}

GroupElem FinAbPGroup::basis(int i) const {
    GroupElem x = zero();
    x.at(i) = 1;
    return x;
}

GroupElem FinAbPGroup::reduce(GroupElem x) const {
    if (x.size() != exps_.size())
        throw std::invalid_argument("element has " + std::to_string(x.size()) + " coordinates, group rank is " +
                                    std::to_string(exps_.size()));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], ipow(p_, exps_[i]));
    return x;
}

GroupElem FinAbPGroup::add(const GroupElem& a, const GroupElem& b) const {
    GroupElem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(static_cast<__int128>(a.at(i)) + b.at(i), ipow(p_, exps_[i]));
    return r;
}

GroupElem FinAbPGroup::sub(const GroupElem& a, const GroupElem& b) const { return add(a, scale(-1, b)); }

GroupElem FinAbPGroup::scale(std::int64_t c, const GroupElem& a) const {
    GroupElem r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(static_cast<__int128>(c) * a.at(i), ipow(p_, exps_[i]));
    return r;
}

bool FinAbPGroup::is_zero(const GroupElem& x) const {
    GroupElem r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

int FinAbPGroup::element_order(const GroupElem& x) const {
    GroupElem r = reduce(x);
    int best = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        int v = 0;
        for (std::int64_t t = r[i]; t % p_ == 0; t /= p_) ++v;
        best = std::max(best, exps_[i] - v);
    }
    return best;
}

std::vector<GroupElem> FinAbPGroup::elements() const {
    if (order_exponent() > 24) throw std::invalid_argument("group too large to enumerate");
    std::vector<GroupElem> out;
    GroupElem x = zero();
    for (;;) {
        out.push_back(x);
        int i = rank() - 1;
        while (i >= 0) {
            if (++x[i] < ipow(p_, exps_[i])) break;
            x[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string FinAbPGroup::to_string() const {
    if (exps_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) os << " + ";
        os << "Z/" << p_;
        if (exps_[i] > 1) os << "^" << exps_[i];
    }
    return os.str();
}

// --- Subgroup ------------------------------------------------------------------

Subgroup::Subgroup(FinAbPGroup parent, std::vector<GroupElem> generators)
    : G_(std::move(parent)), gens_(std::move(generators)) {
    for (auto& g : gens_) g = G_.reduce(g);
    ring_ = std::make_shared<ChainRing>(G_.p(), G_.exponent());
    std::vector<Row> rows(gens_.begin(), gens_.end());
    for (auto& r : relations(G_)) rows.push_back(r);
    echelon_ = std::make_shared<Echelon>(*ring_, G_.rank(), std::move(rows));
    order_exp_ = echelon_->order_exponent() - relation_exponent(G_);
}

Subgroup Subgroup::whole(const FinAbPGroup& G) {
    std::vector<GroupElem> g;
    for (int i = 0; i < G.rank(); ++i) g.push_back(G.basis(i));
    return Subgroup(G, g);
}

bool Subgroup::contains(const GroupElem& x) const { return echelon_->contains(G_.reduce(x)); }

bool Subgroup::contains(const Subgroup& H) const {
    same_parent(*this, H);
    return std::all_of(H.gens_.begin(), H.gens_.end(), [&](const GroupElem& x) { return contains(x); });
}

std::string Subgroup::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (std::size_t j = 0; j < gens_[i].size(); ++j) os << (j ? "," : "") << gens_[i][j];
        os << ")";
    }
    os << ">";
    return os.str();
}

// --- Endo ------------------------------------------------------------------------

Endo::Endo(const FinAbPGroup& G, std::vector<std::vector<std::int64_t>> matrix) : G_(G), m_(std::move(matrix)) {
    const int g = G_.rank();
    if (static_cast<int>(m_.size()) != g) throw std::invalid_argument("endomorphism matrix must be g x g");
    const std::int64_t mod = ipow(G_.p(), G_.exponent());
    for (int i = 0; i < g; ++i) {
        if (static_cast<int>(m_[i].size()) != g) throw std::invalid_argument("endomorphism matrix must be g x g");
        for (int j = 0; j < g; ++j) {
            m_[i][j] = mod_floor(m_[i][j], mod);
            __int128 t = static_cast<__int128>(m_[i][j]) * ipow(G_.p(), G_.exponents()[j]);
            if (t % ipow(G_.p(), G_.exponents()[i]) != 0)
                throw PreconditionError("well-defined endomorphism",
                                        "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") does not respect the cyclic orders");
        }
    }
}

Endo Endo::identity(const FinAbPGroup& G) { return multiplication(G, 1); }

Endo Endo::multiplication(const FinAbPGroup& G, std::int64_t c) {
    std::vector<std::vector<std::int64_t>> m(G.rank(), std::vector<std::int64_t>(G.rank(), 0));
    for (int i = 0; i < G.rank(); ++i) m[i][i] = c;
    return Endo(G, m);
}

GroupElem Endo::apply(const GroupElem& x) const {
    GroupElem xr = G_.reduce(x);
    GroupElem y = G_.zero();
    for (int i = 0; i < G_.rank(); ++i) {
        const std::int64_t mod = ipow(G_.p(), G_.exponents()[i]);
        __int128 s = 0;
        for (int j = 0; j < G_.rank(); ++j) s = (s + static_cast<__int128>(m_[i][j] % mod) * xr[j]) % mod;
        y[i] = mod_floor(s, mod);
    }
    return y;
}

Endo Endo::compose(const Endo& other) const {
    if (!(G_ == other.G_)) throw std::invalid_argument("composing endomorphisms of different groups");
    const int g = G_.rank();
    const std::int64_t mod = ipow(G_.p(), G_.exponent());
    std::vector<std::vector<std::int64_t>> m(g, std::vector<std::int64_t>(g, 0));
    for (int i = 0; i < g; ++i)
        for (int k = 0; k < g; ++k) {
            __int128 s = 0;
            for (int j = 0; j < g; ++j) s = (s + static_cast<__int128>(m_[i][j]) * other.m_[j][k]) % mod;
            m[i][k] = mod_floor(s, mod);
        }
    return Endo(G_, m);
}

Endo Endo::pow(int n) const {
    Endo acc = identity(G_);
    for (int i = 0; i < n; ++i) acc = compose(acc);
    return acc;
}

// --- lattice operations ----------------------------------------------------------

FinAbPGroup quotient_structure(const FinAbPGroup& G, const Subgroup& H) {
    if (!(H.parent() == G)) throw std::invalid_argument("subgroup generators lie outside G");
    ChainRing R(G.p(), G.exponent());
    std::vector<Row> rows(H.generators().begin(), H.generators().end());
    for (auto& r : relations(G)) rows.push_back(r);
    std::vector<int> vals = detail::smith_valuations(R, rows, G.rank());
    while (static_cast<int>(vals.size()) < G.rank()) vals.push_back(G.exponent());
    std::vector<int> exps;
    for (int v : vals)
        if (v > 0) exps.push_back(v);
    std::sort(exps.begin(), exps.end());
    return FinAbPGroup(G.p(), exps);
}

Subgroup kernel(const Endo& phi) {
    const FinAbPGroup& G = phi.group();
    const int g = G.rank();
    ChainRing R(G.p(), G.exponent());
    std::vector<Row> A;
    for (int j = 0; j < g; ++j) A.push_back(phi.apply(G.basis(j)));
    for (int i = 0; i < g; ++i) {
        Row r(g, 0);
        r[i] = R.reduce(-static_cast<__int128>(ipow(G.p(), G.exponents()[i])));
        A.push_back(r);
    }
    std::vector<GroupElem> gens;
    for (const Row& y : detail::left_kernel(R, A, g)) gens.emplace_back(y.begin(), y.begin() + g);
    return Subgroup(G, gens);
}

Subgroup image(const Endo& phi) { return image(phi, Subgroup::whole(phi.group())); }

Subgroup image(const Endo& phi, const Subgroup& A) {
    if (!(A.parent() == phi.group())) throw std::invalid_argument("subgroup of a different group");
    std::vector<GroupElem> gens;
    for (const auto& x : A.generators()) gens.push_back(phi.apply(x));
    return Subgroup(A.parent(), gens);
}

Subgroup sum(const Subgroup& A, const Subgroup& B) {
    same_parent(A, B);
    std::vector<GroupElem> gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return Subgroup(A.parent(), gens);
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    same_parent(A, B);
    const FinAbPGroup& G = A.parent();
    ChainRing R(G.p(), G.exponent());
    std::vector<Row> ga(A.generators().begin(), A.generators().end());
    for (auto& r : relations(G)) ga.push_back(r);
    std::vector<Row> rows = ga;
    for (const auto& b : B.generators()) {
        Row r(b);
        for (auto& x : r) x = R.reduce(-static_cast<__int128>(x));
        rows.push_back(r);
    }
    for (auto& r : relations(G)) {
        for (auto& x : r) x = R.reduce(-static_cast<__int128>(x));
        rows.push_back(r);
    }
    std::vector<GroupElem> gens;
    for (const Row& y : detail::left_kernel(R, rows, G.rank())) {
        GroupElem x = G.zero();
        for (std::size_t i = 0; i < ga.size(); ++i)
            for (int c = 0; c < G.rank(); ++c) x[c] = R.reduce(static_cast<__int128>(x[c]) + R.mul(y[i], ga[i][c]));
        gens.push_back(G.reduce(x));
    }
    return Subgroup(G, gens);
}

int index_exponent(const Subgroup& A, const Subgroup& B) {
    if (!A.contains(B)) throw std::invalid_argument("index of a non-subgroup");
    return A.order_exponent() - B.order_exponent();
}

}  // namespace iwmod
