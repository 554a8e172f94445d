#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "commprob/catalog.hpp"
#include "commprob/measure.hpp"
#include "commprob/montecarlo.hpp"
#include "commprob/serialize.hpp"
#include "commprob/witnesses.hpp"

namespace {

using namespace commprob;

struct Options {
    std::string group;
    std::string subgroup = "full";
    std::string format = "text";
    std::string out;
    std::string epsilon;
    std::string in_path;
    long long l = 1, n = 1;
    long long samples = 100000;
    long long element_samples = 1000;
    std::uint64_t seed = 1;
    double confidence = 0.95;
    int max_order = 48;
    int suite_seeds = 1000;
};

Subgroup resolve_subgroup(const GroupPtr& g, const std::string& spec) {
    if (spec.empty() || spec == "full") return Subgroup::whole(g);
    if (spec == "trivial") return Subgroup::trivial(g);
    if (spec == "center") return center_subgroup(g);
    if (spec == "derived") return derived_subgroup(g);
    if (spec.rfind("power:", 0) == 0) {
        const long long e = std::stoll(spec.substr(6));
        return power_subgroup(g, Subgroup::whole(g), e);
    }
    if (spec.rfind("cyclic:", 0) == 0) {
        const std::string arg = spec.substr(7);
        Elt x;
        if (!arg.empty() && arg[0] == '(') {
            if (!g->has_labels())
                throw PreconditionError("cycle notation needs a permutation-labelled group");
            // parse with headroom so a cycle on too many points reads as a
            // valid permutation that is simply not in this group
            const int degree = static_cast<int>(g->label(0).size());
            auto perm = parse_cycles(arg, degree + 64);
            for (size_t i = degree; i < perm.size(); ++i)
                if (perm[i] != static_cast<int>(i))
                    throw PreconditionError("element " + arg + " is not in the group");
            perm.resize(degree);
            const auto found = g->find_label(perm);
            if (!found) throw PreconditionError("element " + arg + " is not in the group");
            x = *found;
        } else {
            x = static_cast<Elt>(std::stoll(arg));
            if (x < 0 || x >= g->order())
                throw PreconditionError("element index " + arg + " out of range");
        }
        return subgroup_generated(g, {x});
    }
    if (spec.rfind("gens:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw IoError("cannot open subgroup generator file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        std::vector<Elt> seed;
        if (g->has_labels()) {
            for (const auto& perm : parse_permutations(buf.str())) {
                const auto found = g->find_label(perm);
                if (!found)
                    throw PreconditionError("generator " + perm_to_cycles(perm) +
                                            " is not in the group");
                seed.push_back(*found);
            }
        } else {
            long long v;
            while (buf >> v) {
                if (v < 0 || v >= g->order())
                    throw PreconditionError("element index " + std::to_string(v) + " out of range");
                seed.push_back(static_cast<Elt>(v));
            }
        }
        return subgroup_generated(g, seed);
    }
    throw PreconditionError("unknown subgroup spec '" + spec +
                            "' (use full|trivial|center|derived|power:e|cyclic:g|gens:file)");
}

void emit(const Options& opt, const std::string& text, const Json& json) {
    const std::string payload = opt.format == "json" ? json.dump(2) + "\n" : text;
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw IoError("cannot open '" + opt.out + "' for writing");
    out << payload;
    if (!out) throw IoError("write failed for '" + opt.out + "'");
}

void cmd_info(const Options& opt) {
    const auto g = build_group(opt.group);
    const auto& data = g->conjugacy();
    std::ostringstream text;
    text << "group " << opt.group << ": order " << g->order() << ", exponent " << g->exponent()
         << ", " << data.classes.size() << " conjugacy classes, center " << data.center.size()
         << ", derived " << derived_subgroup(g).size() << ", digest " << g->digest_hex() << "\n";
    Json j{{"group", group_descriptor(*g, opt.group)},
           {"exponent", g->exponent()},
           {"classes", data.classes.size()},
           {"center_size", data.center.size()},
           {"derived_size", derived_subgroup(g).size()}};
    emit(opt, text.str(), j);
}

void cmd_pr(const Options& opt) {
    const auto g = build_group(opt.group);
    const auto k = resolve_subgroup(g, opt.subgroup);
    const auto report = pr(k, g);
    Json j{{"value", ratio_to_json(report.value)},
           {"method", to_string(report.method)},
           {"k_size", report.k_size},
           {"g_size", report.g_size}};
    emit(opt, to_string(report.value) + "\n", j);
}

void cmd_central(const Options& opt) {
    const auto g = build_group(opt.group);
    const auto k = resolve_subgroup(g, opt.subgroup);
    const auto fl = centrality_floor(g, k);
    std::ostringstream text;
    text << to_string(fl.floor) << " (attained at element " << fl.witness << ")\n";
    Json j{{"floor", ratio_to_json(fl.floor)}, {"witness", fl.witness}};
    emit(opt, text.str(), j);
}

void cmd_witness(const Options& opt, const std::string& pipeline) {
    const auto g = build_group(opt.group);
    const auto k = resolve_subgroup(g, opt.subgroup);
    if (pipeline == "prop11") {
        const auto cert = prop11_witness(g, k, parse_ratio(opt.epsilon));
        emit(opt, describe(cert), to_json(cert, opt.group));
    } else if (pipeline == "prop13") {
        const auto cert = prop13_witness(g, k, opt.l, opt.n);
        emit(opt, describe(cert), to_json(cert, opt.group));
    } else if (pipeline == "thm12") {
        const auto cert = thm12_witness(g, k, parse_ratio(opt.epsilon));
        emit(opt, describe(cert), to_json(cert, opt.group));
    } else {
        throw PreconditionError("unknown pipeline '" + pipeline + "' (prop11|prop13|thm12)");
    }
}

std::vector<CorpusEntry> suite_corpus(const Options& opt) {
    if (!opt.group.empty()) {
        const auto g = build_group(opt.group);
        return {CorpusEntry{opt.group, g, distinguished_subgroups(g)}};
    }
    return test_corpus(opt.max_order);
}

void cmd_check(const Options& opt, const std::string& suite) {
    const auto corpus = suite_corpus(opt);
    long long checked = 0;
    if (suite == "monotonicity") {
        for (const auto& entry : corpus)
            for (const auto& hs : entry.subgroups)
                for (const auto& ks : entry.subgroups)
                    if (ks.subgroup.contains_all(hs.subgroup)) {
                        check_monotonicity(hs.subgroup, ks.subgroup, entry.group);
                        ++checked;
                    }
    } else if (suite == "quotient") {
        for (const auto& entry : corpus)
            for (const auto& n : all_normal_subgroups(entry.group))
                for (const auto& ks : entry.subgroups) {
                    check_quotient_inequality(entry.group, n, ks.subgroup);
                    ++checked;
                }
    } else if (suite == "eberhard") {
        SplitMix64 rng(opt.seed);
        for (int i = 0; i < opt.suite_seeds; ++i) {
            const auto& entry = corpus[i % corpus.size()];
            const auto& g = entry.group;
            std::vector<bool> in(g->order(), false);
            in[FiniteGroup::identity] = true;
            const int extra = static_cast<int>(rng.below(g->order()) + 1);
            for (int t = 0; t < extra; ++t) {
                const Elt x = static_cast<Elt>(rng.below(g->order()));
                in[x] = true;
                in[g->inverse(x)] = true;
            }
            std::vector<Elt> xs;
            for (Elt x = 0; x < g->order(); ++x)
                if (in[x]) xs.push_back(x);
            eberhard_generation(g, xs);
            ++checked;
        }
    } else if (suite == "lemma41") {
        for (const auto& entry : corpus) {
            std::set<Elt> sym{FiniteGroup::identity};
            for (Elt x : entry.group->generators()) {
                sym.insert(x);
                sym.insert(entry.group->inverse(x));
            }
            std::vector<Elt> gens(sym.begin(), sym.end());
            for (const auto& ks : entry.subgroups)
                if (ks.subgroup.index() <= 8) {
                    short_coset_reps(entry.group, gens, ks.subgroup);
                    ++checked;
                }
        }
    } else {
        throw PreconditionError("unknown suite '" + suite +
                                "' (monotonicity|quotient|eberhard|lemma41)");
    }
    std::ostringstream text;
    text << suite << ": " << checked << " checks, zero violations\n";
    emit(opt, text.str(), Json{{"suite", suite}, {"checked", checked}, {"violations", 0}});
}

void cmd_estimate(const Options& opt, const std::string& kind) {
    const auto g = build_group(opt.group);
    const auto k = resolve_subgroup(g, opt.subgroup);
    Estimate est;
    Json extra;
    if (kind == "pr") {
        est = estimate_pr(g, k, opt.samples, opt.seed, opt.confidence);
    } else if (kind == "floor") {
        const auto fe =
            estimate_centrality_floor(g, k, opt.element_samples, opt.samples, opt.seed,
                                      opt.confidence);
        est = fe.estimate;
        extra = Json{{"worst_element", fe.worst}, {"exhaustive", fe.exhaustive}};
    } else {
        throw PreconditionError("unknown estimate kind '" + kind + "' (pr|floor)");
    }
    std::ostringstream text;
    text << est.point_value << " in [" << est.lo << ", " << est.hi << "] at confidence "
         << est.confidence << " (" << est.samples << " samples, seed " << est.seed << ", "
         << est.method << ")\n";
    Json j{{"point_value", est.point_value}, {"lo", est.lo},           {"hi", est.hi},
           {"confidence", est.confidence},   {"samples", est.samples}, {"hits", est.hits},
           {"seed", est.seed},               {"method", est.method}};
    if (!extra.is_null()) j["floor"] = extra;
    emit(opt, text.str(), j);
}

int cmd_validate(const Options& opt) {
    std::ifstream in(opt.in_path, std::ios::binary);
    if (!in) throw IoError("cannot open certificate '" + opt.in_path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    GroupPtr g;
    if (!opt.group.empty()) g = build_group(opt.group);
    const auto report = validate_json_certificate(j, g);
    std::ostringstream text;
    if (report.ok) text << "valid\n";
    for (const auto& f : report.failures) text << "failed: " << f << "\n";
    emit(opt, text.str(), Json{{"ok", report.ok}, {"failures", report.failures}});
    return report.ok ? 0 : 1;
}

void cmd_corpus(const Options& opt) {
    const auto corpus = test_corpus(opt.max_order);
    std::ostringstream text;
    Json j = Json::array();
    for (const auto& entry : corpus) {
        text << entry.name << ": order " << entry.group->order() << ", "
             << entry.subgroups.size() << " distinguished subgroups\n";
        j.push_back(Json{{"name", entry.name},
                         {"order", entry.group->order()},
                         {"subgroups", entry.subgroups.size()},
                         {"digest", entry.group->digest_hex()}});
    }
    emit(opt, text.str(), j);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    std::string pipeline, suite, kind;

    CLI::App app{"exact commuting probabilities, centrality witnesses and certificates"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool group_required = true) {
        auto* go = cmd->add_option("--group", opt.group, "group spec (e.g. S4, D4, table:FILE)");
        if (group_required) go->required();
        cmd->add_option("--subgroup", opt.subgroup,
                        "full|trivial|center|derived|power:e|cyclic:g|gens:file");
        cmd->add_option("--format", opt.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opt.out, "write output to a file");
    };

    add_common(app.add_subcommand("info", "group summary"));
    add_common(app.add_subcommand("pr", "exact commuting probability Pr(K,G)"));
    add_common(app.add_subcommand("central", "exact centrality floor of K in G"));

    auto* witness = app.add_subcommand("witness", "run a proof pipeline");
    witness->add_option("pipeline", pipeline, "prop11|prop13|thm12")->required();
    add_common(witness);
    witness->add_option("--epsilon", opt.epsilon, "rational threshold p/q");
    witness->add_option("--l", opt.l, "class-power exponent");
    witness->add_option("--n", opt.n, "class-size bound");

    auto* check = app.add_subcommand("check", "run a property suite");
    check->add_option("suite", suite, "monotonicity|quotient|eberhard|lemma41")->required();
    add_common(check, false);
    check->add_option("--max-order", opt.max_order, "corpus order cap");
    check->add_option("--seeds", opt.suite_seeds, "random subsets for the eberhard suite");
    check->add_option("--seed", opt.seed, "base seed for random subsets");

    auto* estimate = app.add_subcommand("estimate", "sampled estimation");
    estimate->add_option("kind", kind, "pr|floor")->required();
    add_common(estimate);
    estimate->add_option("--samples", opt.samples, "pair samples");
    estimate->add_option("--element-samples", opt.element_samples, "elements drawn from K");
    estimate->add_option("--seed", opt.seed, "64-bit seed");
    estimate->add_option("--confidence", opt.confidence, "interval confidence");

    auto* validate = app.add_subcommand("validate", "re-verify a stored certificate");
    validate->add_option("--in", opt.in_path, "certificate JSON path")->required();
    add_common(validate, false);

    auto* corpus = app.add_subcommand("corpus", "list the built-in test corpus");
    corpus->add_option("--max-order", opt.max_order, "order cap");
    corpus->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    corpus->add_option("--out", opt.out, "write output to a file");

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 1;
        }
        if (app.got_subcommand("info")) cmd_info(opt);
        else if (app.got_subcommand("pr")) cmd_pr(opt);
        else if (app.got_subcommand("central")) cmd_central(opt);
        else if (app.got_subcommand("witness")) cmd_witness(opt, pipeline);
        else if (app.got_subcommand("check")) cmd_check(opt, suite);
        else if (app.got_subcommand("estimate")) cmd_estimate(opt, kind);
        else if (app.got_subcommand("validate")) return cmd_validate(opt);
        else if (app.got_subcommand("corpus")) cmd_corpus(opt);
        return 0;
    } catch (const commprob::Error& e) {
        int code = 1;
        std::string kind_name = "error";
        if (dynamic_cast<const LemmaViolationError*>(&e)) {
            code = 2;
            kind_name = "lemma-violation";
        } else if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IoError*>(&e)) {
            code = 3;
            kind_name = dynamic_cast<const ParseError*>(&e) ? "parse" : "io";
        } else if (dynamic_cast<const PreconditionError*>(&e)) {
            kind_name = "precondition";
        }
        if (opt.format == "json")
            std::cout << Json{{"error", {{"kind", kind_name}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
