#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commprob/errors.hpp"
#include "commprob/rational.hpp"

namespace commprob {

using Elt = int;
using Permutation = std::vector<int>;  // images of 0..d-1

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Full Cayley tables are capped; larger groups are served only by the
// sampling paths.
inline constexpr int kDefaultOrderCap = 2000;

Permutation perm_identity(int degree);
Permutation perm_compose(const Permutation& p, const Permutation& q);  // apply p, then q
Permutation perm_inverse(const Permutation& p);
std::string perm_to_cycles(const Permutation& p);  // 1-based cycle notation

struct ConjugacyData {
    std::vector<std::vector<Elt>> classes;  // ordered by least member
    std::vector<int> class_of;              // element -> class index
    std::vector<int> centralizer_size;      // |C_G(x)| per element
    std::vector<Elt> center;                // sorted; elements with singleton class
};

// Immutable multiplication/inverse tables over element indices 0..n-1.
// Identity is index 0. Safe to share across threads after construction.
class FiniteGroup {
public:
    static constexpr Elt identity = 0;

    int order() const { return n_; }
    Elt mul(Elt a, Elt b) const { return mult_[static_cast<size_t>(a) * n_ + b]; }
    Elt inverse(Elt a) const { return inv_[a]; }
    Elt conj(Elt x, Elt g) const { return mul(mul(inv_[g], x), g); }  // x^g
    Elt comm(Elt a, Elt b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }

    // x^e with e reduced modulo the order of x first (e may be negative).
    Elt power(Elt x, long long e) const;
    int element_order(Elt x) const;

    const std::vector<Elt>& generators() const { return gens_; }
    const std::vector<Elt>& table() const { return mult_; }

    bool has_labels() const { return !labels_.empty(); }
    const Permutation& label(Elt x) const { return labels_[x]; }
    std::string element_name(Elt x) const;
    // Index of the element carrying this permutation label, if any.
    std::optional<Elt> find_label(const Permutation& p) const;

    const ConjugacyData& conjugacy() const;  // computed once, cached
    long long exponent() const;              // lcm of element orders

    std::uint64_t digest() const;  // FNV-1a over order and table
    std::string digest_hex() const;

    // Wraps tables assumed correct (builders, quotients, closures).
    static GroupPtr from_tables_unchecked(std::vector<Elt> mult, std::vector<Elt> gens,
                                          std::vector<Permutation> labels = {});

private:
    FiniteGroup() = default;

    int n_ = 0;
    std::vector<Elt> mult_;  // flat n*n
    std::vector<Elt> inv_;
    std::vector<Elt> gens_;
    std::vector<Permutation> labels_;

    mutable std::once_flag conj_once_;
    mutable std::unique_ptr<ConjugacyData> conj_;
};

// Closed element-index set inside a parent group, stored as a bit-indexed
// set plus a sorted list.
class Subgroup {
public:
    Subgroup() = default;

    // Verifies identity membership, closure under mult and inverse, and the
    // Lagrange divisibility check.
    static Subgroup from_members(GroupPtr g, const std::vector<Elt>& members);
    static Subgroup trivial(GroupPtr g);
    static Subgroup whole(GroupPtr g);

    const GroupPtr& parent() const { return parent_; }
    int size() const { return static_cast<int>(elems_.size()); }
    long long index() const { return parent_->order() / size(); }
    bool contains(Elt x) const { return member_[x]; }
    const std::vector<Elt>& elements() const { return elems_; }
    const std::vector<bool>& bits() const { return member_; }

    bool contains_all(const Subgroup& other) const;  // other <= this
    bool is_normal() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.member_ == b.member_;
    }

    friend Subgroup subgroup_unchecked(GroupPtr g, std::vector<bool> member);

private:
    GroupPtr parent_;
    std::vector<bool> member_;
    std::vector<Elt> elems_;
};

Subgroup subgroup_unchecked(GroupPtr g, std::vector<bool> member);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Projection onto the coset group of a normal subgroup. Cosets are numbered
// by their minimal member index, so the identity coset is 0.
class QuotientMap {
public:
    QuotientMap() = default;
    QuotientMap(GroupPtr source, Subgroup kernel, GroupPtr target,
                std::vector<Elt> projection, std::vector<Elt> reps);

    const GroupPtr& source() const { return source_; }
    const Subgroup& kernel() const { return kernel_; }
    const GroupPtr& target() const { return target_; }
    Elt project(Elt x) const { return proj_[x]; }
    const std::vector<Elt>& projection() const { return proj_; }
    Elt rep(Elt bar) const { return reps_[bar]; }  // minimal member of the coset

    Subgroup image(const Subgroup& h) const;
    std::vector<Elt> image_set(std::span<const Elt> xs) const;  // sorted, deduped
    Subgroup preimage(const Subgroup& hbar) const;

private:
    GroupPtr source_;
    Subgroup kernel_;
    GroupPtr target_;
    std::vector<Elt> proj_;
    std::vector<Elt> reps_;
};

// Breadth-first word lengths over a generating set, with one shortest
// factorization per reachable element.
class WordMetric {
public:
    static constexpr int unreachable = -1;

    const std::vector<Elt>& generator_set() const { return gens_; }
    int length(Elt x) const { return lengths_[x]; }
    const std::vector<int>& lengths() const { return lengths_; }
    bool reachable(Elt x) const { return lengths_[x] >= 0; }
    std::vector<Elt> reachable_set() const;     // sorted = <X>
    std::vector<Elt> witness_word(Elt x) const; // factors over X, empty for identity
    int max_length() const;

    friend WordMetric word_metric(GroupPtr g, std::vector<Elt> x, bool symmetrize);

private:
    GroupPtr parent_;
    std::vector<Elt> gens_;
    std::vector<int> lengths_;
    std::vector<Elt> via_gen_;   // last factor on a shortest word
    std::vector<Elt> via_prev_;  // predecessor element
};

// --- operations ---------------------------------------------------------

// Closure of permutations under composition, breadth-first from the
// identity with generators in the given order.
GroupPtr close_generators(const std::vector<Permutation>& perms, int cap = kDefaultOrderCap);

// Full O(n^3) group-axiom check over an untrusted table.
GroupPtr validate_table(const std::vector<std::vector<Elt>>& mult);

Subgroup subgroup_generated(GroupPtr g, const std::vector<Elt>& seed);
Subgroup centralizer(GroupPtr g, Elt x);
Subgroup centralizer_of_set(GroupPtr g, std::span<const Elt> xs);
Subgroup center_subgroup(GroupPtr g);
Subgroup derived_subgroup(GroupPtr g);
Subgroup commutator_subgroup(GroupPtr g, const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(GroupPtr g, const std::vector<Elt>& seed);
Subgroup normal_closure(GroupPtr g, const Subgroup& s);
Subgroup normal_core(GroupPtr g, const Subgroup& h);
QuotientMap quotient(GroupPtr g, const Subgroup& n);
Subgroup power_subgroup(GroupPtr g, const Subgroup& k, long long e);

WordMetric word_metric(GroupPtr g, std::vector<Elt> x, bool symmetrize = false);

struct CosetRep {
    Elt rep;
    int length;
};

// One minimal-length representative per right coset of d inside <X>.
// Requires d <= <X>.
std::vector<CosetRep> coset_reps_over(GroupPtr g, const std::vector<Elt>& x, const Subgroup& d);
// As above but requires <X> = G and X symmetric.
std::vector<CosetRep> short_coset_reps(GroupPtr g, const std::vector<Elt>& x, const Subgroup& d);

// {x in domain : |x^conjugators| <= bound}, compared exactly.
std::vector<Elt> bounded_class_set(GroupPtr g, const Subgroup& domain,
                                   const Subgroup& conjugators, const Ratio& bound);

// |x^S| for the conjugation action of the subgroup s.
int class_size_under(const FiniteGroup& g, Elt x, const Subgroup& s);

// All normal subgroups, as the join closure of the normal closures <x^G>.
// Feasible for the corpus sizes this library targets.
std::vector<Subgroup> all_normal_subgroups(GroupPtr g);
// All distinct cyclic subgroups <x>.
std::vector<Subgroup> all_cyclic_subgroups(GroupPtr g);

}  // namespace commprob
