#include "commprob/serialize.hpp"

#include <sstream>

namespace commprob {

namespace {

Json elts_to_json(const std::vector<Elt>& xs) {
    return Json(xs);
}

std::vector<Elt> elts_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an index array");
    std::vector<Elt> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("index array holds a non-integer");
        out.push_back(v.get<Elt>());
    }
    return out;
}

Json subgroup_to_json(const Subgroup& s) {
    return elts_to_json(s.elements());
}

Subgroup subgroup_from_json(const Json& j, const GroupPtr& g) {
    return Subgroup::from_members(g, elts_from_json(j));
}

void check_inner_digest(const Json& j, const GroupPtr& g) {
    if (j.contains("group") && j["group"].contains("digest") &&
        j["group"]["digest"].get<std::string>() != g->digest_hex())
        throw ParseError("certificate group digest does not match the reconstructed group");
}

}  // namespace

Json ratio_to_json(const Ratio& r) {
    return Json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}

Ratio ratio_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational must be a {num, den} object");
    try {
        const BigInt num(j["num"].get<std::string>());
        const BigInt den(j["den"].get<std::string>());
        if (den <= 0) throw ParseError("rational denominator must be positive");
        return Ratio(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational in certificate");
    }
}

Json group_descriptor(const FiniteGroup& g, const std::string& spec_text) {
    return Json{{"spec", spec_text}, {"digest", g.digest_hex()}, {"order", g.order()}};
}

GroupPtr group_from_descriptor(const Json& j) {
    if (!j.is_object() || !j.contains("spec") || !j.contains("digest"))
        throw ParseError("group descriptor must carry spec and digest");
    const auto g = build_group(j["spec"].get<std::string>());
    if (g->digest_hex() != j["digest"].get<std::string>())
        throw ParseError("group digest mismatch: certificate was produced from different data");
    return g;
}

Json to_json(const Prop11Certificate& c, const std::string& spec_text) {
    Json j;
    j["type"] = "prop11";
    j["group"] = group_descriptor(*c.group, spec_text);
    j["k"] = subgroup_to_json(c.k);
    j["epsilon"] = ratio_to_json(c.epsilon);
    j["pr_kg"] = ratio_to_json(c.pr_kg);
    j["x"] = elts_to_json(c.x);
    j["nu_x"] = ratio_to_json(c.nu_x);
    j["b"] = subgroup_to_json(c.b);
    j["r"] = c.r;
    j["index_kb"] = c.index_kb;
    j["max_word_length"] = c.max_word_length;
    j["l"] = subgroup_to_json(c.l);
    j["d"] = subgroup_to_json(c.d);
    j["y"] = elts_to_json(c.y);
    j["mu_y"] = ratio_to_json(c.mu_y);
    j["ebar"] = subgroup_to_json(c.ebar);
    j["tbar"] = subgroup_to_json(c.tbar);
    j["t"] = subgroup_to_json(c.t);
    j["tb_bar"] = subgroup_to_json(c.tb_bar);
    j["tb"] = subgroup_to_json(c.tb);
    return j;
}

Prop11Certificate prop11_from_json(const Json& j, GroupPtr g) {
    check_inner_digest(j, g);
    Prop11Certificate c;
    c.group = g;
    c.k = subgroup_from_json(j.at("k"), g);
    c.epsilon = ratio_from_json(j.at("epsilon"));
    c.pr_kg = ratio_from_json(j.at("pr_kg"));
    c.x = elts_from_json(j.at("x"));
    c.nu_x = ratio_from_json(j.at("nu_x"));
    c.b = subgroup_from_json(j.at("b"), g);
    c.r = j.at("r").get<int>();
    c.index_kb = j.at("index_kb").get<long long>();
    c.max_word_length = j.at("max_word_length").get<int>();
    c.l = subgroup_from_json(j.at("l"), g);
    c.d = subgroup_from_json(j.at("d"), g);
    c.quot = quotient(g, c.d);
    const auto& q = c.quot.target();
    c.y = elts_from_json(j.at("y"));
    c.mu_y = ratio_from_json(j.at("mu_y"));
    c.ebar = subgroup_from_json(j.at("ebar"), q);
    c.tbar = subgroup_from_json(j.at("tbar"), q);
    c.t = subgroup_from_json(j.at("t"), g);
    c.tb_bar = subgroup_from_json(j.at("tb_bar"), q);
    c.tb = subgroup_from_json(j.at("tb"), g);
    return c;
}

Json to_json(const Prop13Certificate& c, const std::string& spec_text) {
    Json j;
    j["type"] = "prop13";
    j["group"] = group_descriptor(*c.group, spec_text);
    j["k"] = subgroup_to_json(c.k);
    j["l"] = c.l;
    j["n"] = c.n;
    Json trace = Json::array();
    for (const auto& s : c.trace) {
        Json js;
        js["level"] = s.level;
        js["l"] = s.l;
        js["x"] = elts_to_json(s.x);
        js["h"] = subgroup_to_json(s.h);
        js["m"] = s.m;
        js["branch"] = s.branch;
        if (s.branch == "main") {
            js["d_elt"] = s.d_elt;
            js["a"] = s.a;
            Json reps = Json::array();
            for (const auto& r : s.reps) reps.push_back(Json{{"rep", r.rep}, {"length", r.length}});
            js["reps"] = reps;
            js["u"] = subgroup_to_json(s.u);
            js["u0"] = subgroup_to_json(s.u0);
            js["k0"] = subgroup_to_json(s.k0);
            js["r_sub"] = subgroup_to_json(s.r_sub);
            js["y1"] = elts_to_json(s.y1);
            js["y2"] = elts_to_json(s.y2);
        }
        trace.push_back(std::move(js));
    }
    j["trace"] = std::move(trace);
    j["quotiented"] = c.quotiented;
    j["inner"] = to_json(c.inner, std::string());
    j["e"] = c.e;
    j["t"] = subgroup_to_json(c.t);
    j["v"] = subgroup_to_json(c.v);
    j["ket"] = subgroup_to_json(c.ket);
    return j;
}

Prop13Certificate prop13_from_json(const Json& j, GroupPtr g) {
    check_inner_digest(j, g);
    Prop13Certificate c;
    c.group = g;
    c.k = subgroup_from_json(j.at("k"), g);
    c.l = j.at("l").get<long long>();
    c.n = j.at("n").get<long long>();
    for (const auto& js : j.at("trace")) {
        Prop13Stage s;
        s.level = js.at("level").get<int>();
        s.l = js.at("l").get<long long>();
        s.x = elts_from_json(js.at("x"));
        s.h = subgroup_from_json(js.at("h"), g);
        s.m = js.at("m").get<long long>();
        s.branch = js.at("branch").get<std::string>();
        if (s.branch == "main") {
            s.d_elt = js.at("d_elt").get<Elt>();
            s.a = js.at("a").get<Elt>();
            for (const auto& jr : js.at("reps"))
                s.reps.push_back(CosetRep{jr.at("rep").get<Elt>(), jr.at("length").get<int>()});
            s.u = subgroup_from_json(js.at("u"), g);
            s.u0 = subgroup_from_json(js.at("u0"), g);
            s.k0 = subgroup_from_json(js.at("k0"), g);
            s.r_sub = subgroup_from_json(js.at("r_sub"), g);
            s.y1 = elts_from_json(js.at("y1"));
            s.y2 = elts_from_json(js.at("y2"));
        }
        c.trace.push_back(std::move(s));
    }
    if (c.trace.empty()) throw ParseError("certificate trace is empty");
    c.quotiented = j.at("quotiented").get<bool>();
    GroupPtr inner_group = g;
    if (c.quotiented) {
        const auto& terminal = c.trace.back();
        if (terminal.branch != "main") throw ParseError("quotiented trace must end in a main stage");
        c.quot = quotient(g, terminal.r_sub);
        inner_group = c.quot.target();
    }
    c.inner = prop11_from_json(j.at("inner"), inner_group);
    c.e = j.at("e").get<long long>();
    c.t = subgroup_from_json(j.at("t"), g);
    c.v = subgroup_from_json(j.at("v"), g);
    c.ket = subgroup_from_json(j.at("ket"), g);
    return c;
}

Json to_json(const Thm12Certificate& c, const std::string& spec_text) {
    Json j;
    j["type"] = "thm12";
    j["group"] = group_descriptor(*c.inner.group, spec_text);
    j["epsilon"] = ratio_to_json(c.epsilon);
    Json per = Json::array();
    for (const auto& [x, lx] : c.ln.per_element) per.push_back(Json::array({x, lx}));
    j["ln"] = Json{{"l", c.ln.l}, {"n", c.ln.n}, {"per_element", std::move(per)}};
    j["inner"] = to_json(c.inner, spec_text);
    j["epsilon0"] = ratio_to_json(c.epsilon0);
    return j;
}

Thm12Certificate thm12_from_json(const Json& j, GroupPtr g) {
    check_inner_digest(j, g);
    Thm12Certificate c;
    c.epsilon = ratio_from_json(j.at("epsilon"));
    c.ln.l = j.at("ln").at("l").get<long long>();
    c.ln.n = j.at("ln").at("n").get<long long>();
    for (const auto& pair : j.at("ln").at("per_element")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("malformed per-element entry");
        c.ln.per_element.emplace_back(pair[0].get<Elt>(), pair[1].get<long long>());
    }
    c.inner = prop13_from_json(j.at("inner"), std::move(g));
    c.epsilon0 = ratio_from_json(j.at("epsilon0"));
    return c;
}

ValidationReport validate_json_certificate(const Json& j, GroupPtr g) {
    if (!j.is_object() || !j.contains("type")) throw ParseError("certificate lacks a type tag");
    if (!g) g = group_from_descriptor(j.at("group"));
    const auto type = j["type"].get<std::string>();
    if (type == "prop11") return validate_certificate(prop11_from_json(j, std::move(g)));
    if (type == "prop13") return validate_certificate(prop13_from_json(j, std::move(g)));
    if (type == "thm12") return validate_certificate(thm12_from_json(j, std::move(g)));
    throw ParseError("unknown certificate type '" + type + "'");
}

std::string describe(const Prop11Certificate& c) {
    std::ostringstream out;
    out << "witness for Pr(K,G) >= " << to_string(c.epsilon) << " (actual " << to_string(c.pr_kg)
        << ") in a group of order " << c.group->order() << "\n";
    out << "  |K| = " << c.k.size() << ", |X| = " << c.x.size() << ", nu(X) = " << to_string(c.nu_x)
        << "\n";
    out << "  B = <X>: |B| = " << c.b.size() << ", [K:B] = " << c.index_kb
        << ", word length <= " << c.max_word_length << " (3r = " << 3 * c.r << ")\n";
    out << "  L = <B^G>: |L| = " << c.l.size() << ", |[L,L]| = " << c.d.size() << "\n";
    out << "  quotient order " << c.quot.target()->order() << ", |Y| = " << c.y.size()
        << ", [G/D : E] = " << c.quot.target()->order() / c.ebar.size() << "\n";
    out << "  T: [G:T] = " << c.t.index() << " (normal), |[T,B]| = " << c.tb.size()
        << " <= " << c.tb_bar.size() << " * " << c.d.size() << "\n";
    return out.str();
}

std::string describe(const Prop13Certificate& c) {
    std::ostringstream out;
    out << "witness for (l,n) = (" << c.l << "," << c.n << ") in a group of order "
        << c.group->order() << ", |K| = " << c.k.size() << "\n";
    for (const auto& s : c.trace) {
        out << "  stage " << s.level << ": l = " << s.l << ", |X| = " << s.x.size()
            << ", |H| = " << s.h.size() << ", m = " << s.m << ", branch = " << s.branch << "\n";
        if (s.branch == "main")
            out << "    d = " << s.d_elt << ", a = " << s.a << ", |U| = " << s.u.size()
                << ", |U0| = " << s.u0.size() << ", |K0| = " << s.k0.size()
                << ", |R| = " << s.r_sub.size() << "\n";
    }
    out << "  e = " << c.e << ", [G:T] = " << c.t.index() << " (normal), |[K^e,T]| = "
        << c.ket.size() << "\n";
    return out.str();
}

std::string describe(const Thm12Certificate& c) {
    std::ostringstream out;
    out << "witness for epsilon = " << to_string(c.epsilon) << ": derived (l,n) = (" << c.ln.l
        << "," << c.ln.n << ")\n";
    out << describe(c.inner);
    out << "  converse bound epsilon0 = " << to_string(c.epsilon0) << "\n";
    return out.str();
}

}  // namespace commprob
