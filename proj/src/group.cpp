#include "commprob/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "commprob/kernels.hpp"

namespace commprob {

// --- permutations --------------------------------------------------------

Permutation perm_identity(int degree) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

Permutation perm_inverse(const Permutation& p) {
    Permutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

std::string perm_to_cycles(const Permutation& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        out << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

// --- FiniteGroup ---------------------------------------------------------

Elt FiniteGroup::power(Elt x, long long e) const {
    const int ord = element_order(x);
    long long r = e % ord;
    if (r < 0) r += ord;
    Elt acc = identity;
    for (long long i = 0; i < r; ++i) acc = mul(acc, x);
    return acc;
}

int FiniteGroup::element_order(Elt x) const {
    int ord = 1;
    Elt acc = x;
    while (acc != identity) {
        acc = mul(acc, x);
        ++ord;
    }
    return ord;
}

long long FiniteGroup::exponent() const {
    long long e = 1;
    for (Elt x = 0; x < n_; ++x) e = std::lcm(e, static_cast<long long>(element_order(x)));
    return e;
}

std::string FiniteGroup::element_name(Elt x) const {
    if (has_labels()) return perm_to_cycles(labels_[x]);
    return "#" + std::to_string(x);
}

std::optional<Elt> FiniteGroup::find_label(const Permutation& p) const {
    for (Elt x = 0; x < n_; ++x)
        if (labels_[x] == p) return x;
    return std::nullopt;
}

const ConjugacyData& FiniteGroup::conjugacy() const {
    std::call_once(conj_once_, [this] {
        auto data = std::make_unique<ConjugacyData>();
        data->centralizer_size = kernels::centralizer_sizes_parallel(*this);
        data->class_of.assign(n_, -1);
        // Classes are orbits under conjugation by generators.
        std::vector<Elt> conjugators = gens_;
        if (conjugators.empty())
            for (Elt g = 0; g < n_; ++g) conjugators.push_back(g);
        for (Elt x = 0; x < n_; ++x) {
            if (data->class_of[x] != -1) continue;
            const int id = static_cast<int>(data->classes.size());
            std::vector<Elt> orbit{x};
            data->class_of[x] = id;
            for (size_t head = 0; head < orbit.size(); ++head) {
                for (Elt g : conjugators) {
                    const Elt y = conj(orbit[head], g);
                    if (data->class_of[y] == -1) {
                        data->class_of[y] = id;
                        orbit.push_back(y);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            data->classes.push_back(std::move(orbit));
        }
        for (Elt x = 0; x < n_; ++x)
            if (data->centralizer_size[x] == n_) data->center.push_back(x);
        conj_ = std::move(data);
    });
    return *conj_;
}

std::uint64_t FiniteGroup::digest() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto feed = [&h](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xFF;
            h *= 0x100000001B3ULL;
        }
    };
    feed(static_cast<std::uint32_t>(n_));
    for (Elt v : mult_) feed(static_cast<std::uint32_t>(v));
    return h;
}

std::string FiniteGroup::digest_hex() const {
    std::ostringstream out;
    out << std::hex << digest();
    return out.str();
}

GroupPtr FiniteGroup::from_tables_unchecked(std::vector<Elt> mult, std::vector<Elt> gens,
                                            std::vector<Permutation> labels) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    const size_t n2 = mult.size();
    int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n2))));
    while (static_cast<size_t>(n) * n < n2) ++n;
    g->n_ = n;
    g->mult_ = std::move(mult);
    g->gens_ = std::move(gens);
    g->labels_ = std::move(labels);
    g->inv_.assign(n, 0);
    for (Elt a = 0; a < n; ++a) {
        for (Elt b = 0; b < n; ++b) {
            if (g->mul(a, b) == identity) {
                g->inv_[a] = b;
                break;
            }
        }
    }
    return g;
}

// --- Subgroup ------------------------------------------------------------

Subgroup subgroup_unchecked(GroupPtr g, std::vector<bool> member) {
    Subgroup s;
    s.parent_ = std::move(g);
    s.member_ = std::move(member);
    for (Elt x = 0; x < s.parent_->order(); ++x)
        if (s.member_[x]) s.elems_.push_back(x);
    return s;
}

Subgroup Subgroup::from_members(GroupPtr g, const std::vector<Elt>& members) {
    const int n = g->order();
    std::vector<bool> bits(n, false);
    for (Elt x : members) {
        if (x < 0 || x >= n) throw PreconditionError("subgroup member index out of range: " + std::to_string(x));
        bits[x] = true;
    }
    if (!bits[FiniteGroup::identity]) throw PreconditionError("subgroup does not contain the identity");
    for (Elt a = 0; a < n; ++a) {
        if (!bits[a]) continue;
        if (!bits[g->inverse(a)])
            throw PreconditionError("subgroup not closed under inverse at element " + std::to_string(a));
        for (Elt b = 0; b < n; ++b) {
            if (!bits[b]) continue;
            if (!bits[g->mul(a, b)])
                throw PreconditionError("subgroup not closed under product of " + std::to_string(a) +
                                        " and " + std::to_string(b));
        }
    }
    auto s = subgroup_unchecked(std::move(g), std::move(bits));
    if (s.parent()->order() % s.size() != 0)
        throw PreconditionError("subgroup size does not divide group order");  // unreachable when closed
    return s;
}

Subgroup Subgroup::trivial(GroupPtr g) {
    std::vector<bool> bits(g->order(), false);
    bits[FiniteGroup::identity] = true;
    return subgroup_unchecked(std::move(g), std::move(bits));
}

Subgroup Subgroup::whole(GroupPtr g) {
    std::vector<bool> bits(g->order(), true);
    return subgroup_unchecked(std::move(g), std::move(bits));
}

bool Subgroup::contains_all(const Subgroup& other) const {
    for (Elt x : other.elems_)
        if (!member_[x]) return false;
    return true;
}

bool Subgroup::is_normal() const {
    const auto& g = *parent_;
    for (Elt t = 0; t < g.order(); ++t)
        for (Elt h : elems_)
            if (!member_[g.conj(h, t)]) return false;
    return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw PreconditionError("intersecting subgroups of different groups");
    std::vector<bool> bits(a.parent()->order(), false);
    for (Elt x : a.elements())
        if (b.contains(x)) bits[x] = true;
    return subgroup_unchecked(a.parent(), std::move(bits));
}

// --- QuotientMap ---------------------------------------------------------

QuotientMap::QuotientMap(GroupPtr source, Subgroup kernel, GroupPtr target,
                         std::vector<Elt> projection, std::vector<Elt> reps)
    : source_(std::move(source)),
      kernel_(std::move(kernel)),
      target_(std::move(target)),
      proj_(std::move(projection)),
      reps_(std::move(reps)) {}

Subgroup QuotientMap::image(const Subgroup& h) const {
    if (h.parent() != source_) throw PreconditionError("image of a subgroup from a different group");
    std::vector<bool> bits(target_->order(), false);
    for (Elt x : h.elements()) bits[proj_[x]] = true;
    return subgroup_unchecked(target_, std::move(bits));
}

std::vector<Elt> QuotientMap::image_set(std::span<const Elt> xs) const {
    std::vector<bool> bits(target_->order(), false);
    for (Elt x : xs) bits[proj_[x]] = true;
    std::vector<Elt> out;
    for (Elt y = 0; y < target_->order(); ++y)
        if (bits[y]) out.push_back(y);
    return out;
}

Subgroup QuotientMap::preimage(const Subgroup& hbar) const {
    if (hbar.parent() != target_) throw PreconditionError("preimage of a subgroup from a different group");
    std::vector<bool> bits(source_->order(), false);
    for (Elt x = 0; x < source_->order(); ++x)
        if (hbar.contains(proj_[x])) bits[x] = true;
    return subgroup_unchecked(source_, std::move(bits));
}

// --- construction --------------------------------------------------------

GroupPtr close_generators(const std::vector<Permutation>& perms, int cap) {
    if (cap < 1) throw PreconditionError("order cap must be at least 1");
    size_t degree = perms.empty() ? 0 : perms[0].size();
    for (const auto& p : perms) {
        if (p.size() != degree) throw PreconditionError("generators act on different point sets");
        Permutation sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i)) throw PreconditionError("not a permutation");
    }

    std::vector<Permutation> elems{perm_identity(static_cast<int>(degree))};
    std::map<Permutation, Elt> index{{elems[0], 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : perms) {
            Permutation next = perm_compose(elems[head], gen);
            if (index.emplace(next, static_cast<Elt>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > cap)
                    throw SizeLimitError("closure exceeds the order cap of " + std::to_string(cap));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<Elt> mult(static_cast<size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            mult[static_cast<size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));

    std::vector<Elt> gens;
    for (const auto& p : perms) {
        const Elt g = index.at(p);
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    return FiniteGroup::from_tables_unchecked(std::move(mult), std::move(gens), std::move(elems));
}

GroupPtr validate_table(const std::vector<std::vector<Elt>>& mult) {
    const int n = static_cast<int>(mult.size());
    if (n == 0) throw ParseError("empty multiplication table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mult[i].size()) != n)
            throw ParseError("row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (mult[i][j] < 0 || mult[i][j] >= n)
                throw ParseError("table entry out of range at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
    for (int j = 0; j < n; ++j)
        if (mult[0][j] != j)
            throw ParseError("row 0 is not the identity map at column " + std::to_string(j));
    for (int i = 0; i < n; ++i)
        if (mult[i][0] != i)
            throw ParseError("column 0 is not the identity map at row " + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n; ++j) {
            if (mult[i][j] == 0 && mult[j][i] == 0) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) throw ParseError("element " + std::to_string(i) + " has no two-sided inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    throw ParseError("associativity fails at triple (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");

    std::vector<Elt> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = mult[i][j];

    // Greedy deterministic generating set: smallest element outside the
    // running closure, repeated until the whole set is covered.
    auto g = FiniteGroup::from_tables_unchecked(flat, {});
    std::vector<Elt> gens;
    std::vector<bool> closed(n, false);
    closed[0] = true;
    int covered = 1;
    while (covered < n) {
        Elt next = -1;
        for (Elt x = 0; x < n; ++x) {
            if (!closed[x]) {
                next = x;
                break;
            }
        }
        gens.push_back(next);
        std::vector<Elt> frontier;
        for (Elt x = 0; x < n; ++x)
            if (closed[x]) frontier.push_back(x);
        std::vector<Elt> work = frontier;
        closed[next] = true;
        ++covered;
        work.push_back(next);
        for (size_t head = 0; head < work.size(); ++head) {
            for (Elt s : gens) {
                for (Elt y : {g->mul(work[head], s), g->mul(work[head], g->inverse(s))}) {
                    if (!closed[y]) {
                        closed[y] = true;
                        ++covered;
                        work.push_back(y);
                    }
                }
            }
        }
    }
    return FiniteGroup::from_tables_unchecked(std::move(flat), std::move(gens));
}

// --- subgroup operations -------------------------------------------------

Subgroup subgroup_generated(GroupPtr g, const std::vector<Elt>& seed) {
    const int n = g->order();
    std::vector<Elt> gens;
    for (Elt x : seed) {
        if (x < 0 || x >= n) throw PreconditionError("seed element index out of range: " + std::to_string(x));
        gens.push_back(x);
        gens.push_back(g->inverse(x));
    }
    std::vector<bool> bits(n, false);
    bits[FiniteGroup::identity] = true;
    std::vector<Elt> work{FiniteGroup::identity};
    for (size_t head = 0; head < work.size(); ++head) {
        for (Elt s : gens) {
            const Elt y = g->mul(work[head], s);
            if (!bits[y]) {
                bits[y] = true;
                work.push_back(y);
            }
        }
    }
    return subgroup_unchecked(std::move(g), std::move(bits));
}

Subgroup centralizer(GroupPtr g, Elt x) {
    std::vector<bool> bits(g->order(), false);
    for (Elt y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x)) bits[y] = true;
    return subgroup_unchecked(std::move(g), std::move(bits));
}

Subgroup centralizer_of_set(GroupPtr g, std::span<const Elt> xs) {
    std::vector<bool> bits(g->order(), false);
    for (Elt y = 0; y < g->order(); ++y) {
        bool ok = true;
        for (Elt x : xs) {
            if (g->mul(x, y) != g->mul(y, x)) {
                ok = false;
                break;
            }
        }
        bits[y] = ok;
    }
    return subgroup_unchecked(std::move(g), std::move(bits));
}

Subgroup center_subgroup(GroupPtr g) {
    const auto& data = g->conjugacy();
    std::vector<bool> bits(g->order(), false);
    for (Elt x : data.center) bits[x] = true;
    return subgroup_unchecked(std::move(g), std::move(bits));
}

Subgroup derived_subgroup(GroupPtr g) {
    auto whole = Subgroup::whole(g);
    return commutator_subgroup(g, whole, whole);
}

Subgroup commutator_subgroup(GroupPtr g, const Subgroup& a, const Subgroup& b) {
    if (a.parent() != g || b.parent() != g)
        throw PreconditionError("commutator subgroup arguments from a different group");
    std::vector<bool> seen(g->order(), false);
    std::vector<Elt> seed;
    for (Elt x : a.elements()) {
        for (Elt y : b.elements()) {
            const Elt c = g->comm(x, y);
            if (!seen[c]) {
                seen[c] = true;
                seed.push_back(c);
            }
        }
    }
    return subgroup_generated(std::move(g), seed);
}

Subgroup normal_closure(GroupPtr g, const std::vector<Elt>& seed) {
    std::vector<bool> seen(g->order(), false);
    std::vector<Elt> conjugates;
    for (Elt x : seed) {
        if (x < 0 || x >= g->order()) throw PreconditionError("seed element index out of range");
        for (Elt t = 0; t < g->order(); ++t) {
            const Elt y = g->conj(x, t);
            if (!seen[y]) {
                seen[y] = true;
                conjugates.push_back(y);
            }
        }
    }
    return subgroup_generated(std::move(g), conjugates);
}

Subgroup normal_closure(GroupPtr g, const Subgroup& s) {
    if (s.parent() != g) throw PreconditionError("normal closure of a subgroup from a different group");
    return normal_closure(std::move(g), s.elements());
}

Subgroup normal_core(GroupPtr g, const Subgroup& h) {
    if (h.parent() != g) throw PreconditionError("normal core of a subgroup from a different group");
    std::vector<bool> core = h.bits();
    for (Elt t = 0; t < g->order(); ++t) {
        std::vector<bool> conjbits(g->order(), false);
        for (Elt x : h.elements()) conjbits[g->conj(x, t)] = true;
        for (Elt x = 0; x < g->order(); ++x)
            if (core[x] && !conjbits[x]) core[x] = false;
    }
    return subgroup_unchecked(std::move(g), std::move(core));
}

QuotientMap quotient(GroupPtr g, const Subgroup& n) {
    if (n.parent() != g) throw PreconditionError("quotient by a subgroup of a different group");
    for (Elt t = 0; t < g->order(); ++t) {
        for (Elt h : n.elements()) {
            if (!n.contains(g->conj(h, t)))
                throw PreconditionError("subgroup is not normal: conjugate of " + std::to_string(h) +
                                        " by " + std::to_string(t) + " leaves it");
        }
    }

    const int order = g->order();
    std::vector<Elt> coset_min(order, -1);
    std::vector<Elt> mins;
    for (Elt x = 0; x < order; ++x) {
        if (coset_min[x] != -1) continue;
        Elt lo = x;  // ascending scan: x is the minimal member of a fresh coset
        for (Elt k : n.elements()) coset_min[g->mul(k, x)] = lo;
        mins.push_back(lo);
    }
    std::sort(mins.begin(), mins.end());
    const int m = static_cast<int>(mins.size());
    std::vector<Elt> proj(order);
    std::vector<int> idx_of_min(order, -1);
    for (int i = 0; i < m; ++i) idx_of_min[mins[i]] = i;
    for (Elt x = 0; x < order; ++x) proj[x] = idx_of_min[coset_min[x]];

    std::vector<Elt> table(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<size_t>(i) * m + j] = proj[g->mul(mins[i], mins[j])];

    std::vector<Elt> gens;
    for (Elt s : g->generators()) {
        const Elt im = proj[s];
        if (im != FiniteGroup::identity && std::find(gens.begin(), gens.end(), im) == gens.end())
            gens.push_back(im);
    }
    auto target = FiniteGroup::from_tables_unchecked(std::move(table), std::move(gens));
    return QuotientMap(std::move(g), n, std::move(target), std::move(proj), std::move(mins));
}

Subgroup power_subgroup(GroupPtr g, const Subgroup& k, long long e) {
    if (k.parent() != g) throw PreconditionError("power subgroup of a subgroup from a different group");
    if (e < 1) throw PreconditionError("power subgroup exponent must be positive");
    std::vector<bool> seen(g->order(), false);
    std::vector<Elt> seed;
    for (Elt x : k.elements()) {
        const Elt y = g->power(x, e);
        if (!seen[y]) {
            seen[y] = true;
            seed.push_back(y);
        }
    }
    return subgroup_generated(std::move(g), seed);
}

WordMetric word_metric(GroupPtr g, std::vector<Elt> x, bool symmetrize) {
    const int n = g->order();
    for (Elt s : x)
        if (s < 0 || s >= n) throw PreconditionError("generator index out of range");
    if (symmetrize) {
        std::vector<bool> present(n, false);
        for (Elt s : x) present[s] = true;
        const size_t given = x.size();
        for (size_t i = 0; i < given; ++i) {
            const Elt inv = g->inverse(x[i]);
            if (!present[inv]) {
                present[inv] = true;
                x.push_back(inv);
            }
        }
    }
    WordMetric wm;
    wm.parent_ = g;
    wm.gens_ = x;
    wm.lengths_.assign(n, WordMetric::unreachable);
    wm.via_gen_.assign(n, -1);
    wm.via_prev_.assign(n, -1);
    wm.lengths_[FiniteGroup::identity] = 0;
    std::vector<Elt> work{FiniteGroup::identity};
    for (size_t head = 0; head < work.size(); ++head) {
        const Elt cur = work[head];
        for (Elt s : wm.gens_) {
            const Elt y = g->mul(cur, s);
            if (wm.lengths_[y] == WordMetric::unreachable) {
                wm.lengths_[y] = wm.lengths_[cur] + 1;
                wm.via_gen_[y] = s;
                wm.via_prev_[y] = cur;
                work.push_back(y);
            }
        }
    }
    // The identity may also be a generator; its length stays 0.
    return wm;
}

std::vector<Elt> WordMetric::reachable_set() const {
    std::vector<Elt> out;
    for (Elt x = 0; x < static_cast<Elt>(lengths_.size()); ++x)
        if (lengths_[x] >= 0) out.push_back(x);
    return out;
}

std::vector<Elt> WordMetric::witness_word(Elt x) const {
    if (lengths_[x] < 0) throw PreconditionError("element unreachable over the generator set");
    std::vector<Elt> word;
    while (x != FiniteGroup::identity && via_prev_[x] != -1) {
        word.push_back(via_gen_[x]);
        x = via_prev_[x];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int WordMetric::max_length() const {
    int best = 0;
    for (int len : lengths_) best = std::max(best, len);
    return best;
}

std::vector<CosetRep> coset_reps_over(GroupPtr g, const std::vector<Elt>& x, const Subgroup& d) {
    const auto wm = word_metric(g, x);
    for (Elt h : d.elements())
        if (!wm.reachable(h))
            throw PreconditionError("subgroup is not contained in the span of the generating set");

    // Visit reachable elements in BFS order (length, then discovery via the
    // ascending re-scan) and keep the first hit of each right coset Dx.
    std::vector<Elt> order = wm.reachable_set();
    std::stable_sort(order.begin(), order.end(),
                     [&wm](Elt a, Elt b) { return wm.length(a) < wm.length(b); });
    std::vector<Elt> coset_key(g->order(), -1);
    for (Elt y : order) {
        if (coset_key[y] != -1) continue;
        Elt lo = y;
        for (Elt h : d.elements()) lo = std::min(lo, g->mul(h, y));
        for (Elt h : d.elements()) coset_key[g->mul(h, y)] = lo;
    }
    std::map<Elt, CosetRep> reps;  // keyed by minimal coset member
    for (Elt y : order) {
        auto [it, fresh] = reps.try_emplace(coset_key[y], CosetRep{y, wm.length(y)});
        (void)it;
        (void)fresh;
    }
    std::vector<CosetRep> out;
    out.reserve(reps.size());
    for (const auto& [key, rep] : reps) out.push_back(rep);
    return out;
}

std::vector<CosetRep> short_coset_reps(GroupPtr g, const std::vector<Elt>& x, const Subgroup& d) {
    std::vector<bool> present(g->order(), false);
    for (Elt s : x) {
        if (s < 0 || s >= g->order()) throw PreconditionError("generator index out of range");
        present[s] = true;
    }
    for (Elt s : x)
        if (!present[g->inverse(s)]) throw PreconditionError("generating set is not symmetric");
    const auto wm = word_metric(g, x);
    if (static_cast<int>(wm.reachable_set().size()) != g->order())
        throw PreconditionError("generating set does not generate the group");
    auto reps = coset_reps_over(std::move(g), x, d);
    const long long m = d.index();
    for (const auto& rep : reps) {
        if (rep.length > m - 1)
            throw LemmaViolationError("coset representative of length " + std::to_string(rep.length) +
                                      " exceeds index-1 = " + std::to_string(m - 1));
    }
    return reps;
}

int class_size_under(const FiniteGroup& g, Elt x, const Subgroup& s) {
    std::vector<bool> seen(g.order(), false);
    int count = 0;
    for (Elt t : s.elements()) {
        const Elt y = g.conj(x, t);
        if (!seen[y]) {
            seen[y] = true;
            ++count;
        }
    }
    return count;
}

std::vector<Elt> bounded_class_set(GroupPtr g, const Subgroup& domain, const Subgroup& conjugators,
                                   const Ratio& bound) {
    if (bound <= 0) throw PreconditionError("class-size bound must be positive");
    if (domain.parent() != g || conjugators.parent() != g)
        throw PreconditionError("bounded class set arguments from a different group");
    std::vector<Elt> out;
    for (Elt x : domain.elements())
        if (Ratio(class_size_under(*g, x, conjugators)) <= bound) out.push_back(x);
    return out;
}

std::vector<Subgroup> all_normal_subgroups(GroupPtr g) {
    const auto& data = g->conjugacy();
    std::set<std::vector<bool>> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.bits()).second) found.push_back(std::move(s));
    };
    add(Subgroup::trivial(g));
    for (const auto& cls : data.classes) add(normal_closure(g, {cls.front()}));
    // Close under joins; the join of normal subgroups is normal.
    for (size_t i = 0; i < found.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (found[i].contains_all(found[j]) || found[j].contains_all(found[i])) continue;
            std::vector<Elt> both = found[i].elements();
            both.insert(both.end(), found[j].elements().begin(), found[j].elements().end());
            add(subgroup_generated(g, both));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a.elements() < b.elements();
              });
    return found;
}

std::vector<Subgroup> all_cyclic_subgroups(GroupPtr g) {
    std::set<std::vector<bool>> seen;
    std::vector<Subgroup> found;
    for (Elt x = 0; x < g->order(); ++x) {
        auto s = subgroup_generated(g, {x});
        if (seen.insert(s.bits()).second) found.push_back(std::move(s));
    }
    std::sort(found.begin(), found.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a.elements() < b.elements();
              });
    return found;
}

}  // namespace commprob
