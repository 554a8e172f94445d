#include "commprob/witnesses.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace commprob {

namespace {

Ratio ratio_pow(const Ratio& base, int exp) {
    Ratio out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// <[h, a] : h in H>; H-invariant by the standard commutator identities.
Subgroup comm_with_element(GroupPtr g, const Subgroup& h, Elt a) {
    std::vector<bool> seen(g->order(), false);
    std::vector<Elt> seed;
    for (Elt x : h.elements()) {
        const Elt c = g->comm(x, a);
        if (!seen[c]) {
            seen[c] = true;
            seed.push_back(c);
        }
    }
    return subgroup_generated(std::move(g), seed);
}

long long class_size_in_g(const FiniteGroup& g, Elt x) {
    const auto& data = g.conjugacy();
    return static_cast<long long>(data.classes[data.class_of[x]].size());
}

// Minimal positive r with (r+1) * mu > 1.
int minimal_r(const Ratio& mu) {
    if (mu <= 0) throw PreconditionError("measure must be positive");
    int r = 1;
    while (!(Ratio(r + 1) * mu > 1)) ++r;
    return r;
}

bool commutes_with_all(const FiniteGroup& g, Elt x, const std::vector<Elt>& set) {
    for (Elt y : set)
        if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

long long reduce_power(long long l, long long exponent) {
    const long long r = l % exponent;
    return r == 0 ? exponent : r;
}

std::vector<long long> divisors_ascending(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

EberhardReport eberhard_generation(GroupPtr g, const std::vector<Elt>& x) {
    std::vector<bool> present(g->order(), false);
    std::vector<Elt> xs;
    for (Elt s : x) {
        if (s < 0 || s >= g->order()) throw PreconditionError("set element out of range");
        if (!present[s]) {
            present[s] = true;
            xs.push_back(s);
        }
    }
    if (!present[FiniteGroup::identity]) throw PreconditionError("set must contain the identity");
    for (Elt s : xs)
        if (!present[g->inverse(s)]) throw PreconditionError("set must be symmetric");

    EberhardReport rep;
    rep.mu = Ratio(static_cast<long long>(xs.size()), g->order());
    rep.r = minimal_r(rep.mu);
    const auto wm = word_metric(g, xs);
    rep.span = subgroup_generated(g, xs);
    const int max_len = wm.max_length();
    rep.minimal_k = std::max(1, max_len);
    rep.stabilization = (max_len + 2) / 3;
    if (rep.minimal_k > 3 * rep.r)
        throw LemmaViolationError("X^k stabilizes only at k = " + std::to_string(rep.minimal_k) +
                                  " > 3r = " + std::to_string(3 * rep.r));
    if (rep.stabilization > rep.r)
        throw LemmaViolationError("X^(3i+1) = X^(3i) first holds at i = " +
                                  std::to_string(rep.stabilization) + " > r = " + std::to_string(rep.r));
    return rep;
}

Prop11Certificate prop11_witness(GroupPtr g, const Subgroup& k, const Ratio& eps) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (eps <= 0 || eps > 1) throw PreconditionError("epsilon must lie in (0, 1]");

    Prop11Certificate c;
    c.group = g;
    c.k = k;
    c.epsilon = eps;
    c.pr_kg = pr(k, g).value;
    if (c.pr_kg < eps)
        throw PreconditionError("Pr(K,G) = " + to_string(c.pr_kg) + " is below epsilon = " +
                                to_string(eps));

    const Ratio bound = 2 / eps;
    c.x = bounded_class_set(g, k, Subgroup::whole(g), bound);
    c.nu_x = Ratio(static_cast<long long>(c.x.size()), k.size());
    if (!(c.nu_x >= eps / 2))
        throw LemmaViolationError("nu(X) = " + to_string(c.nu_x) + " below eps/2");

    c.b = subgroup_generated(g, c.x);
    c.index_kb = k.size() / c.b.size();
    if (!(Ratio(c.index_kb) <= bound))
        throw LemmaViolationError("[K:B] = " + std::to_string(c.index_kb) + " exceeds 2/eps");

    c.r = minimal_r(c.nu_x);
    const auto wm = word_metric(g, c.x);
    c.max_word_length = 0;
    for (Elt bx : c.b.elements()) {
        if (!wm.reachable(bx)) throw LemmaViolationError("element of B not spanned by X");
        c.max_word_length = std::max(c.max_word_length, wm.length(bx));
    }
    if (c.max_word_length > 3 * c.r)
        throw LemmaViolationError("word length " + std::to_string(c.max_word_length) +
                                  " in B exceeds 3r = " + std::to_string(3 * c.r));

    const Ratio class_bound = ratio_pow(bound, 3 * c.r);
    for (Elt bx : c.b.elements())
        if (!(Ratio(class_size_in_g(*g, bx)) <= class_bound))
            throw LemmaViolationError("|b^G| exceeds (2/eps)^(3r) for b = " + std::to_string(bx));

    c.l = normal_closure(g, c.b);
    c.d = commutator_subgroup(g, c.l, c.l);
    c.quot = quotient(g, c.d);
    const auto& q = c.quot.target();
    const auto kbar = c.quot.image(k);

    c.y = bounded_class_set(q, Subgroup::whole(q), kbar, bound);
    c.mu_y = Ratio(static_cast<long long>(c.y.size()), q->order());
    if (!(c.mu_y >= eps / 2))
        throw LemmaViolationError("mu(Y) = " + to_string(c.mu_y) + " below eps/2");

    c.ebar = subgroup_generated(q, c.y);
    if (!(Ratio(q->order() / c.ebar.size()) <= bound))
        throw LemmaViolationError("[G/D : E] exceeds 2/eps");

    c.tbar = normal_core(q, c.ebar);
    c.t = c.quot.preimage(c.tbar);
    if (!c.t.is_normal()) throw LemmaViolationError("preimage T is not normal in G");

    c.tb_bar = commutator_subgroup(q, c.tbar, c.quot.image(c.b));
    c.tb = commutator_subgroup(g, c.t, c.b);
    if (!(static_cast<long long>(c.tb.size()) <=
          static_cast<long long>(c.tb_bar.size()) * c.d.size()))
        throw LemmaViolationError("|[T,B]| exceeds |[T,B] image| * |[L,L]|");
    return c;
}

DeriveLnResult derive_ln(GroupPtr g, const Subgroup& k, const Ratio& eps) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (eps <= 0 || eps > 1) throw PreconditionError("epsilon must lie in (0, 1]");
    const auto fl = centrality_floor(g, k);
    if (fl.floor < eps)
        throw PreconditionError("K is not eps-central: floor " + to_string(fl.floor) +
                                " below " + to_string(eps) + " at element " +
                                std::to_string(fl.witness));

    DeriveLnResult out;
    std::map<std::vector<bool>, long long> cache;  // per cyclic subgroup
    for (Elt x : k.elements()) {
        const auto cyc = subgroup_generated(g, {x});
        long long lx;
        if (auto it = cache.find(cyc.bits()); it != cache.end()) {
            lx = it->second;
        } else {
            const auto cert = prop11_witness(g, cyc, eps);
            lx = cert.index_kb;
            // a cyclic group has one subgroup per index, so B = <x^lx>
            if (!(cert.b == subgroup_generated(g, {g->power(x, lx)})))
                throw LemmaViolationError("cyclic witness subgroup is not <x^l_x>");
            cache.emplace(cyc.bits(), lx);
        }
        out.per_element.emplace_back(x, lx);
        out.l = std::lcm(out.l, lx);
    }
    out.n = 1;
    for (Elt x : k.elements())
        out.n = std::max(out.n, class_size_in_g(*g, g->power(x, out.l)));
    return out;
}

namespace {

void prop13_recurse(const GroupPtr& g, const Subgroup& k, long long l, long long n, int level,
                    long long prev_m, Prop13Certificate& cert) {
    // Hypothesis at this stage: [G:C_G(g^l)] <= n for all g in K. At the
    // top it is the caller's precondition; deeper levels are guaranteed.
    for (Elt x : k.elements()) {
        if (class_size_in_g(*g, g->power(x, l)) > n) {
            const std::string msg = "[G:C_G(g^l)] exceeds n at g = " + std::to_string(x) +
                                    ", l = " + std::to_string(l);
            if (level == 0) throw PreconditionError(msg);
            throw LemmaViolationError(msg);
        }
    }

    Prop13Stage stage;
    stage.level = level;
    stage.l = l;

    // X: union of the G-classes of the l-th powers of K.
    {
        const auto& data = g->conjugacy();
        std::vector<bool> in_x(g->order(), false);
        for (Elt x : k.elements())
            for (Elt y : data.classes[data.class_of[g->power(x, l)]]) in_x[y] = true;
        for (Elt y = 0; y < g->order(); ++y)
            if (in_x[y]) stage.x.push_back(y);
    }
    stage.h = subgroup_generated(g, stage.x);

    stage.m = 0;
    for (Elt x : stage.x)
        stage.m = std::max(stage.m, static_cast<long long>(class_size_under(*g, x, stage.h)));
    if (stage.m > n) throw LemmaViolationError("class bound within H exceeds n");
    if (prev_m >= 0 && stage.m > prev_m - 1)
        throw LemmaViolationError("descent did not shrink the class bound: m = " +
                                  std::to_string(stage.m) + " after " + std::to_string(prev_m));

    const long long l2 = reduce_power(l * l, g->exponent());

    if (stage.m == 1) {
        // H is abelian. J = <k^l : k in K^l> consists of l-th powers of
        // elements of K, so Pr(J,G) >= 1/n.
        stage.branch = "central";
        cert.trace.push_back(stage);

        const auto kl = power_subgroup(g, k, l);
        const auto j = power_subgroup(g, kl, l);
        std::vector<bool> lpowers(g->order(), false);
        for (Elt x : k.elements()) lpowers[g->power(x, l)] = true;
        for (Elt jx : j.elements())
            if (!lpowers[jx])
                throw LemmaViolationError("element of J is not an l-th power of K");
        if (pr(j, g).value < Ratio(1, n))
            throw LemmaViolationError("Pr(J,G) fell below 1/n in the abelian branch");

        cert.inner = prop11_witness(g, j, Ratio(1, n));
        cert.quotiented = false;
        cert.t = cert.inner.t;
        cert.v = cert.inner.b;
        return;
    }

    bool descend = true;
    Elt d_elt = -1;
    for (Elt x : k.elements()) {
        if (class_size_under(*g, g->power(x, l2), stage.h) == stage.m) {
            descend = false;
            d_elt = x;  // smallest such element: K iterates ascending
            break;
        }
    }

    if (descend) {
        stage.branch = "descent";
        cert.trace.push_back(stage);
        prop13_recurse(g, k, l2, n, level + 1, stage.m, cert);
        return;
    }

    stage.branch = "main";
    stage.d_elt = d_elt;
    stage.a = g->power(d_elt, l);
    const Elt a = stage.a;

    const auto c_h_a = intersect(centralizer(g, a), stage.h);
    if (!(intersect(centralizer(g, g->power(a, l)), stage.h) == c_h_a))
        throw LemmaViolationError("C_H(a) differs from C_H(a^l)");

    stage.reps = coset_reps_over(g, stage.x, c_h_a);
    if (static_cast<long long>(stage.reps.size()) != stage.m)
        throw LemmaViolationError("coset representative count differs from m");
    std::vector<Elt> rep_elems;
    std::set<Elt> conj_by_reps;
    for (const auto& rep : stage.reps) {
        if (rep.length > stage.m - 1)
            throw LemmaViolationError("coset representative longer than m-1");
        rep_elems.push_back(rep.rep);
        conj_by_reps.insert(g->conj(a, rep.rep));
    }
    {
        std::set<Elt> a_class;
        for (Elt t : stage.h.elements()) a_class.insert(g->conj(a, t));
        if (a_class != conj_by_reps)
            throw LemmaViolationError("representatives do not cover the H-class of a");
    }

    stage.u = centralizer_of_set(g, rep_elems);

    // [H,u] <= [H,a] whenever u in U and ua in X.
    const auto h_a = comm_with_element(g, stage.h, a);
    for (Elt u : stage.u.elements()) {
        if (!std::binary_search(stage.x.begin(), stage.x.end(), g->mul(u, a))) continue;
        for (Elt hx : stage.h.elements())
            if (!h_a.contains(g->comm(hx, u)))
                throw LemmaViolationError("[H,u] escapes [H,a] for u = " + std::to_string(u));
    }

    stage.r_sub = normal_closure(g, h_a);

    const Elt al = g->power(a, l);
    const Elt al_inv = g->inverse(al);
    const Elt a_inv = g->inverse(a);
    for (Elt x : stage.x) {
        const Elt y_l = g->mul(x, al_inv);
        if (stage.u.contains(y_l)) stage.y1.push_back(y_l);
        const Elt y_1 = g->mul(x, a_inv);
        if (stage.u.contains(y_1)) stage.y2.push_back(y_1);
    }
    std::sort(stage.y1.begin(), stage.y1.end());
    std::sort(stage.y2.begin(), stage.y2.end());
    for (const auto* yset : {&stage.y1, &stage.y2})
        for (Elt y : *yset)
            for (Elt hx : stage.h.elements())
                if (!stage.r_sub.contains(g->comm(hx, y)))
                    throw LemmaViolationError("[H,y] escapes R for y = " + std::to_string(y));

    stage.u0 = normal_core(g, stage.u);
    stage.k0 = intersect(k, stage.u0);

    cert.quot = quotient(g, stage.r_sub);
    cert.quotiented = true;
    const auto& q = cert.quot.target();
    const auto hbar = cert.quot.image(stage.h);
    const Elt abar = cert.quot.project(a);

    for (const auto* yset : {&stage.y1, &stage.y2})
        for (Elt y : *yset)
            if (!commutes_with_all(*q, cert.quot.project(y), hbar.elements()))
                throw LemmaViolationError("image of Y is not central in the image of H");
    for (Elt u : stage.u0.elements())
        if (!commutes_with_all(*q, q->comm(cert.quot.project(u), abar), hbar.elements()))
            throw LemmaViolationError("[U0, a] image does not centralize the image of H");
    for (Elt u : stage.k0.elements()) {
        const Elt w = q->power(cert.quot.project(u), l);
        if (!hbar.contains(w) || !commutes_with_all(*q, w, hbar.elements()))
            throw LemmaViolationError("image of K0 has exponent not dividing l mod Z(H image)");
    }

    const auto k0bar = cert.quot.image(stage.k0);
    const auto k0bar_l = power_subgroup(q, k0bar, l);
    for (Elt x1 : k0bar_l.elements())
        if (!commutes_with_all(*q, x1, k0bar_l.elements()))
            throw LemmaViolationError("l-th power image of K0 is not abelian");

    const auto jbar = power_subgroup(q, k0bar, l * l);
    {
        std::vector<bool> lpow(q->order(), false);
        for (Elt u : k0bar.elements()) lpow[q->power(u, l)] = true;
        for (Elt jx : jbar.elements())
            if (!lpow[jx])
                throw LemmaViolationError("element of the l^2-power image is not an l-th power");
    }
    if (pr(jbar, q).value < Ratio(1, n))
        throw LemmaViolationError("Pr of the l^2-power image fell below 1/n");

    cert.inner = prop11_witness(q, jbar, Ratio(1, n));
    cert.t = cert.quot.preimage(cert.inner.t);
    cert.v = cert.quot.preimage(cert.inner.b);
    if (!cert.t.is_normal()) throw LemmaViolationError("pulled-back T is not normal");

    cert.trace.push_back(std::move(stage));
}

}  // namespace

Prop13Certificate prop13_witness(GroupPtr g, const Subgroup& k, long long l, long long n) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (l < 1 || n < 1) throw PreconditionError("l and n must be positive");

    Prop13Certificate cert;
    cert.group = g;
    cert.k = k;
    cert.l = l;
    cert.n = n;
    prop13_recurse(g, k, reduce_power(l, g->exponent()), n, 0, -1, cert);

    for (long long d : divisors_ascending(g->exponent())) {
        if (cert.v.contains_all(power_subgroup(g, k, d))) {
            cert.e = d;
            break;
        }
    }
    cert.ket = commutator_subgroup(g, power_subgroup(g, k, cert.e), cert.t);
    return cert;
}

ConverseReport converse_epsilon(GroupPtr g, const Subgroup& k, const Subgroup& t, long long e) {
    if (k.parent() != g || t.parent() != g)
        throw PreconditionError("subgroup belongs to a different group");
    if (e < 1) throw PreconditionError("exponent must be positive");
    if (!t.is_normal()) throw PreconditionError("T must be normal");

    ConverseReport rep;
    rep.s = t.index();
    rep.m = commutator_subgroup(g, power_subgroup(g, k, e), t).size();
    rep.max_index = 1;
    for (Elt x : k.elements())
        rep.max_index = std::max(rep.max_index, class_size_in_g(*g, g->power(x, e)));
    if (rep.max_index > rep.m * rep.s)
        throw LemmaViolationError("[G:C_G(g^e)] = " + std::to_string(rep.max_index) +
                                  " exceeds m*s = " + std::to_string(rep.m * rep.s));
    rep.epsilon0 = Ratio(BigInt(1), BigInt(e) * rep.m * rep.s);
    const auto fl = centrality_floor(g, k);
    if (fl.floor < rep.epsilon0)
        throw LemmaViolationError("derived bound 1/(e*m*s) = " + to_string(rep.epsilon0) +
                                  " exceeds the exact floor " + to_string(fl.floor));
    return rep;
}

Thm12Certificate thm12_witness(GroupPtr g, const Subgroup& k, const Ratio& eps) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (eps <= 0 || eps > 1) throw PreconditionError("epsilon must lie in (0, 1]");
    const auto fl = centrality_floor(g, k);
    if (fl.floor < eps)
        throw PreconditionError("K is not eps-central: floor " + to_string(fl.floor) +
                                " below " + to_string(eps));

    Thm12Certificate cert;
    cert.epsilon = eps;
    cert.ln = derive_ln(g, k, eps);
    cert.inner = prop13_witness(g, k, cert.ln.l, cert.ln.n);
    // converse_epsilon asserts epsilon0 <= centrality floor internally
    cert.epsilon0 = converse_epsilon(g, k, cert.inner.t, cert.inner.e).epsilon0;
    return cert;
}

ClassBoundVerdict class_bound_centrality(GroupPtr g, const Subgroup& k, long long l, long long n) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (l < 1 || n < 1) throw PreconditionError("l and n must be positive");
    for (Elt x : k.elements())
        if (class_size_in_g(*g, g->power(x, l)) > n)
            throw PreconditionError("class of g^l larger than n at g = " + std::to_string(x));
    ClassBoundVerdict v;
    v.bound = Ratio(BigInt(1), BigInt(l) * n);
    v.floor = centrality_floor(g, k).floor;
    if (v.floor < v.bound)
        throw LemmaViolationError("floor " + to_string(v.floor) + " below 1/(l*n) = " +
                                  to_string(v.bound));
    return v;
}

// --- re-verification ------------------------------------------------------

ValidationReport validate_certificate(const Prop11Certificate& c) {
    ValidationReport rep;
    const auto& g = c.group;
    if (!g || c.k.parent() != g) {
        rep.fail("certificate carries no group");
        return rep;
    }
    const Ratio bound = 2 / c.epsilon;

    if (pr(c.k, g).value < c.epsilon) rep.fail("Pr(K,G) >= eps");
    if (c.x != bounded_class_set(g, c.k, Subgroup::whole(g), bound))
        rep.fail("X = {x in K : |x^G| <= 2/eps}");
    if (!(c.nu_x == Ratio(static_cast<long long>(c.x.size()), c.k.size()) &&
          c.nu_x >= c.epsilon / 2))
        rep.fail("nu(X) >= eps/2");
    if (!(c.b == subgroup_generated(g, c.x))) rep.fail("B = <X>");
    if (!c.k.contains_all(c.b)) rep.fail("B <= K");
    if (!(c.index_kb == c.k.size() / c.b.size() && Ratio(c.index_kb) <= bound))
        rep.fail("[K:B] <= 2/eps");
    if (c.r != minimal_r(c.nu_x)) rep.fail("r minimal with (r+1) nu(X) > 1");

    {
        const auto wm = word_metric(g, c.x);
        int max_len = 0;
        bool spanned = true;
        for (Elt bx : c.b.elements()) {
            if (!wm.reachable(bx)) spanned = false;
            else max_len = std::max(max_len, wm.length(bx));
        }
        if (!spanned || max_len != c.max_word_length || max_len > 3 * c.r)
            rep.fail("every b in B is a product of at most 3r elements of X");
    }
    {
        const Ratio class_bound = ratio_pow(bound, 3 * c.r);
        for (Elt bx : c.b.elements()) {
            if (!(Ratio(class_size_in_g(*g, bx)) <= class_bound)) {
                rep.fail("|b^G| <= (2/eps)^(3r)");
                break;
            }
        }
    }

    if (!(c.l == normal_closure(g, c.b))) rep.fail("L = <B^G>");
    if (!(c.d == commutator_subgroup(g, c.l, c.l))) rep.fail("D = [L,L]");
    if (!(c.quot.kernel() == c.d) || c.quot.source() != g) rep.fail("quotient is G/D");

    const auto& q = c.quot.target();
    if (c.y != bounded_class_set(q, Subgroup::whole(q), c.quot.image(c.k), bound))
        rep.fail("Y = {y in G/D : |y^(K image)| <= 2/eps}");
    if (!(c.mu_y == Ratio(static_cast<long long>(c.y.size()), q->order()) &&
          c.mu_y >= c.epsilon / 2))
        rep.fail("mu(Y) >= eps/2");
    if (!(c.ebar == subgroup_generated(q, c.y))) rep.fail("E = <Y>");
    if (!(Ratio(q->order() / c.ebar.size()) <= bound)) rep.fail("[G/D : E] <= 2/eps");
    if (!(c.tbar == normal_core(q, c.ebar))) rep.fail("T image is the normal core of E");
    if (!(c.t == c.quot.preimage(c.tbar))) rep.fail("T is the preimage of its image");
    if (c.t.parent() != g || !c.t.is_normal()) rep.fail("T normal in G");
    if (!(c.tb_bar == commutator_subgroup(q, c.tbar, c.quot.image(c.b))))
        rep.fail("[T,B] image recomputes");
    if (!(c.tb == commutator_subgroup(g, c.t, c.b))) rep.fail("[T,B] recomputes");
    if (!(static_cast<long long>(c.tb.size()) <=
          static_cast<long long>(c.tb_bar.size()) * c.d.size()))
        rep.fail("|[T,B]| <= |[T,B] image| * |[L,L]|");
    return rep;
}

ValidationReport validate_certificate(const Prop13Certificate& c) {
    ValidationReport rep;
    const auto& g = c.group;
    if (!g || c.k.parent() != g || c.trace.empty()) {
        rep.fail("certificate carries no group or no trace");
        return rep;
    }

    for (Elt x : c.k.elements()) {
        if (class_size_in_g(*g, g->power(x, c.l)) > c.n) {
            rep.fail("[G:C_G(g^l)] <= n");
            break;
        }
    }

    long long expected_l = reduce_power(c.l, g->exponent());
    long long prev_m = -1;
    const auto& data = g->conjugacy();
    for (size_t i = 0; i < c.trace.size(); ++i) {
        const auto& s = c.trace[i];
        const std::string at = "stage " + std::to_string(i) + ": ";
        if (s.l != expected_l) rep.fail(at + "l follows the l -> l^2 schedule");

        std::vector<bool> in_x(g->order(), false);
        for (Elt x : c.k.elements())
            for (Elt y : data.classes[data.class_of[g->power(x, s.l)]]) in_x[y] = true;
        std::vector<Elt> xs;
        for (Elt y = 0; y < g->order(); ++y)
            if (in_x[y]) xs.push_back(y);
        if (s.x != xs) rep.fail(at + "X is the union of classes of l-th powers of K");
        if (!(s.h == subgroup_generated(g, s.x))) rep.fail(at + "H = <X>");

        long long m = 0;
        for (Elt x : s.x) m = std::max(m, static_cast<long long>(class_size_under(*g, x, s.h)));
        if (m != s.m || m > c.n) rep.fail(at + "m = max [H:C_H(x)] <= n");
        if (prev_m >= 0 && !(s.m < prev_m)) rep.fail(at + "m strictly decreases");

        const bool last = (i + 1 == c.trace.size());
        const long long l2 = reduce_power(s.l * s.l, g->exponent());
        if (s.branch == "central") {
            if (s.m != 1 || !last) rep.fail(at + "abelian branch ends the trace with m = 1");
        } else if (s.branch == "descent") {
            if (last) rep.fail(at + "descent branch recurses");
            for (Elt x : c.k.elements())
                if (class_size_under(*g, g->power(x, l2), s.h) > s.m - 1) {
                    rep.fail(at + "descent hypothesis [H:C_H(g^(l^2))] <= m-1");
                    break;
                }
        } else if (s.branch == "main") {
            if (!last) rep.fail(at + "main branch ends the trace");
            if (!c.k.contains(s.d_elt) ||
                class_size_under(*g, g->power(s.d_elt, l2), s.h) != s.m)
                rep.fail(at + "d attains [H:C_H(d^(l^2))] = m");
            if (s.a != g->power(s.d_elt, s.l)) rep.fail(at + "a = d^l");
            const auto c_h_a = intersect(centralizer(g, s.a), s.h);
            if (static_cast<long long>(s.reps.size()) != s.m)
                rep.fail(at + "one representative per C_H(a)-coset");
            std::set<Elt> covered, a_class;
            std::vector<Elt> rep_elems;
            bool lengths_ok = true;
            for (const auto& r : s.reps) {
                if (r.length > s.m - 1) lengths_ok = false;
                covered.insert(g->conj(s.a, r.rep));
                rep_elems.push_back(r.rep);
            }
            if (!lengths_ok) rep.fail(at + "representative lengths <= m-1");
            for (Elt t : s.h.elements()) a_class.insert(g->conj(s.a, t));
            if (covered != a_class) rep.fail(at + "representatives cover a^H");
            if (!(s.u == centralizer_of_set(g, rep_elems))) rep.fail(at + "U = C_G({b_i})");
            if (!(s.u0 == normal_core(g, s.u))) rep.fail(at + "U0 is the normal core of U");
            if (!(s.k0 == intersect(c.k, s.u0))) rep.fail(at + "K0 = K n U0");
            if (!(s.r_sub == normal_closure(g, comm_with_element(g, s.h, s.a))))
                rep.fail(at + "R is the normal closure of [H,a]");
            if (!c.quotiented || !(c.quot.kernel() == s.r_sub) || c.quot.source() != g)
                rep.fail(at + "the final quotient is G/R");
            (void)c_h_a;
        } else {
            rep.fail(at + "unknown branch tag");
        }
        prev_m = s.m;
        expected_l = l2;
    }

    const auto inner_rep = validate_certificate(c.inner);
    for (const auto& f : inner_rep.failures) rep.fail("inner: " + f);

    const auto& terminal = c.trace.back();
    if (c.quotiented) {
        if (c.inner.group != c.quot.target()) rep.fail("inner witness lives in G/R");
        if (!(c.t == c.quot.preimage(c.inner.t))) rep.fail("T pulls back the inner T");
        if (!(c.v == c.quot.preimage(c.inner.b))) rep.fail("V pulls back the inner B");
        if (terminal.branch != "main") rep.fail("quotiented certificate ends in the main branch");
    } else {
        if (c.inner.group != g) rep.fail("inner witness lives in G");
        if (!(c.t == c.inner.t)) rep.fail("T is the inner T");
        if (!(c.v == c.inner.b)) rep.fail("V is the inner B");
        if (terminal.branch != "central") rep.fail("direct certificate ends in the abelian branch");
    }
    if (c.t.parent() != g || !c.t.is_normal()) rep.fail("T normal in G");
    if (c.e < 1 || g->exponent() % c.e != 0) rep.fail("e divides exponent(G)");
    else if (!c.v.contains_all(power_subgroup(g, c.k, c.e))) rep.fail("K^e <= V");
    else {
        for (long long d : divisors_ascending(g->exponent())) {
            if (d >= c.e) break;
            if (c.v.contains_all(power_subgroup(g, c.k, d))) {
                rep.fail("e is the minimal divisor with K^e <= V");
                break;
            }
        }
    }
    if (!(c.ket == commutator_subgroup(g, power_subgroup(g, c.k, c.e), c.t)))
        rep.fail("[K^e,T] recomputes");
    return rep;
}

ValidationReport validate_certificate(const Thm12Certificate& c) {
    ValidationReport rep;
    const auto inner_rep = validate_certificate(c.inner);
    for (const auto& f : inner_rep.failures) rep.fail("inner: " + f);
    const auto& g = c.inner.group;
    if (!g) return rep;
    const auto& k = c.inner.k;

    const auto fl = centrality_floor(g, k);
    if (fl.floor < c.epsilon) rep.fail("K is eps-central");

    long long lcm_check = 1;
    for (const auto& [x, lx] : c.ln.per_element) {
        if (!k.contains(x) || g->element_order(x) % lx != 0) {
            rep.fail("per-element l_g divides the element order");
            break;
        }
        lcm_check = std::lcm(lcm_check, lx);
    }
    if (c.ln.per_element.size() != static_cast<size_t>(k.size()) || lcm_check != c.ln.l)
        rep.fail("l is the lcm of the per-element indices");
    long long n_check = 1;
    for (Elt x : k.elements())
        n_check = std::max(n_check, class_size_in_g(*g, g->power(x, c.ln.l)));
    if (n_check != c.ln.n) rep.fail("n = max [G:C_G(g^l)]");
    if (c.inner.l != c.ln.l || c.inner.n != c.ln.n) rep.fail("(l,n) feeds the next stage");

    const long long s = c.inner.t.index();
    const long long m = static_cast<long long>(c.inner.ket.size());
    if (!(c.epsilon0 == Ratio(BigInt(1), BigInt(c.inner.e) * m * s)))
        rep.fail("epsilon0 = 1/(e*m*s)");
    else if (fl.floor < c.epsilon0)
        rep.fail("epsilon0 <= centrality floor");
    return rep;
}

std::vector<WitnessTriple> bruteforce_witness_oracle(GroupPtr g, const Subgroup& k) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (g->order() > 128)
        throw SizeLimitError("oracle is exhaustive; order " + std::to_string(g->order()) +
                             " exceeds 128");

    std::vector<Subgroup> bs;
    std::set<std::vector<bool>> seen;
    auto add_b = [&](Subgroup s) {
        if (seen.insert(s.bits()).second) bs.push_back(std::move(s));
    };
    add_b(subgroup_unchecked(g, std::vector<bool>{k.bits()})); // K itself
    for (Elt x : k.elements()) add_b(subgroup_generated(g, {x}));

    std::vector<WitnessTriple> all;
    for (const auto& t : all_normal_subgroups(g)) {
        for (const auto& b : bs) {
            WitnessTriple w;
            w.t = t;
            w.b = b;
            w.index_gt = t.index();
            w.index_kb = k.size() / b.size();
            w.comm_order = commutator_subgroup(g, t, b).size();
            all.push_back(std::move(w));
        }
    }
    std::sort(all.begin(), all.end(), [](const WitnessTriple& a, const WitnessTriple& b) {
        return std::tie(a.index_gt, a.index_kb, a.comm_order) <
               std::tie(b.index_gt, b.index_kb, b.comm_order);
    });

    auto dominates = [](const WitnessTriple& a, const WitnessTriple& b) {
        return a.index_gt <= b.index_gt && a.index_kb <= b.index_kb &&
               a.comm_order <= b.comm_order &&
               (a.index_gt < b.index_gt || a.index_kb < b.index_kb ||
                a.comm_order < b.comm_order);
    };
    std::vector<WitnessTriple> pareto;
    for (const auto& w : all) {
        bool keep = true;
        for (const auto& other : all) {
            if (dominates(other, w)) {
                keep = false;
                break;
            }
        }
        if (keep) {
            const bool duplicate =
                std::any_of(pareto.begin(), pareto.end(), [&](const WitnessTriple& p) {
                    return p.index_gt == w.index_gt && p.index_kb == w.index_kb &&
                           p.comm_order == w.comm_order;
                });
            if (!duplicate) pareto.push_back(w);
        }
    }
    return pareto;
}

}  // namespace commprob
