#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "iwmod/valuation.hpp"

namespace iwmod {

namespace detail {
struct ChainRing;
class Echelon;
}  // namespace detail

using GroupElem = std::vector<std::int64_t>;

/// Z/p^{e_1} ⊕ ... ⊕ Z/p^{e_g} with 1 <= e_1 <= ... <= e_g.
class FinAbPGroup {
public:
    FinAbPGroup(std::int64_t p, std::vector<int> exponents);

    std::int64_t p() const { return p_; }
    const std::vector<int>& exponents() const { return exps_; }
    int rank() const { return static_cast<int>(exps_.size()); }
    /// log_p of the group order.
    int order_exponent() const;
    /// Largest e_i (0 for the trivial group).
    int exponent() const { return exps_.empty() ? 0 : exps_.back(); }
    PPower order() const { return {p_, order_exponent(), false}; }

    GroupElem zero() const { return GroupElem(exps_.size(), 0); }
    GroupElem basis(int i) const;
    GroupElem reduce(GroupElem x) const;
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem sub(const GroupElem& a, const GroupElem& b) const;
    GroupElem scale(std::int64_t c, const GroupElem& a) const;
    bool is_zero(const GroupElem& x) const;
    /// log_p of the order of x.
    int element_order(const GroupElem& x) const;
    /// All elements in lexicographic order of coordinates.
    std::vector<GroupElem> elements() const;

    std::string to_string() const;
    friend bool operator==(const FinAbPGroup&, const FinAbPGroup&) = default;

private:
    std::int64_t p_;
    std::vector<int> exps_;
};

/// Subgroup generated by a list of elements.
class Subgroup {
public:
    Subgroup(FinAbPGroup parent, std::vector<GroupElem> generators);
    static Subgroup whole(const FinAbPGroup& G);
    static Subgroup trivial(const FinAbPGroup& G) { return Subgroup(G, {}); }

    const FinAbPGroup& parent() const { return G_; }
    const std::vector<GroupElem>& generators() const { return gens_; }
    int order_exponent() const { return order_exp_; }
    PPower order() const { return {G_.p(), order_exp_, false}; }
    bool contains(const GroupElem& x) const;
    bool contains(const Subgroup& H) const;
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.contains(b) && b.contains(a); }

    std::string to_string() const;

private:
    FinAbPGroup G_;
    std::vector<GroupElem> gens_;
    std::shared_ptr<const detail::ChainRing> ring_;
    std::shared_ptr<const detail::Echelon> echelon_;
    int order_exp_ = 0;
};

/// Endomorphism acting on coordinates: φ(ε_j) = column j of the matrix.
class Endo {
public:
    Endo(const FinAbPGroup& G, std::vector<std::vector<std::int64_t>> matrix);
    static Endo identity(const FinAbPGroup& G);
    static Endo multiplication(const FinAbPGroup& G, std::int64_t c);

    const FinAbPGroup& group() const { return G_; }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return m_; }
    GroupElem apply(const GroupElem& x) const;
    Endo compose(const Endo& other) const;  // this ∘ other
    Endo pow(int n) const;

private:
    FinAbPGroup G_;
    std::vector<std::vector<std::int64_t>> m_;
};

FinAbPGroup quotient_structure(const FinAbPGroup& G, const Subgroup& H);
Subgroup kernel(const Endo& phi);
Subgroup image(const Endo& phi);
Subgroup image(const Endo& phi, const Subgroup& A);
Subgroup sum(const Subgroup& A, const Subgroup& B);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
/// log_p #(A/B) for B ⊆ A.
int index_exponent(const Subgroup& A, const Subgroup& B);

struct AdaptedBasis {
    std::vector<GroupElem> generators;
    /// H = G: no minimality statement applies.
    bool degenerate = false;
    /// log_p #(G/H)
    int quotient_exponent = 0;
};

/// Minimal generating system x_1..x_g with x_1 of least order among elements
/// generating G/H and x_2..x_g in H. G/H must be cyclic.
AdaptedBasis adapted_generators(const FinAbPGroup& G, const Subgroup& H);

struct KerImResult {
    PPower lhs;
    PPower rhs;
    int n = 1;
    bool equal() const { return lhs == rhs; }
};

KerImResult check_kerim_identity(const Endo& beta, const Subgroup& L);
/// n absent: smallest n <= log_p #M with β^n M ⊆ L.
KerImResult check_kerim_nilpotent(const Endo& beta, const Subgroup& L, std::optional<int> n = std::nullopt);
KerImResult check_kerim_free_case(const Endo& beta, const Subgroup& L);

struct KerImInstance {
    Endo beta;
    Subgroup L;
    int n;
};

/// Random valid instance: exponents <= max_exp, well-defined β, and
/// L = β^n M + span{v, βv, ..., β^{n-1}v}.
KerImInstance random_kerim_instance(std::mt19937_64& rng, std::int64_t p, int max_rank, int max_exp, int n);

}  // namespace iwmod
