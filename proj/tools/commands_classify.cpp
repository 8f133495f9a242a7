#include <map>

#include "commands.hpp"
#include "iwmod/classify.hpp"
#include "iwmod/errors.hpp"

namespace iwmod::cli {

namespace {

std::string feasibility_name(Feasibility f) {
    switch (f) {
        case Feasibility::Feasible: return "solvable";
        case Feasibility::Infeasible: return "not solvable";
        default: return "undetermined";
    }
}

int parse_ord(const Node& n) {
    if (n.raw().is_string()) {
        if (n.as_string() == "inf") return Lambda2Input::kInfinite;
        n.fail("expected an integer or 'inf'");
    }
    return n.as_small_int();
}

json ord_json(int v) { return v == Lambda2Input::kInfinite ? json("inf") : json(v); }

json profile_json(const Lambda2Input& in) {
    return json{{"k", in.k},         {"ord_alpha", in.ord_alpha},       {"ord_beta", in.ord_beta},
                {"ord_gap", ord_json(in.ord_gap)},   {"ord_mu21", ord_json(in.ord_mu21)},
                {"ord_mu22", ord_json(in.ord_mu22)}, {"n1", in.n1},     {"n2", in.n2},
                {"e", in.e}};
}

json verdict_json(const Verdict& v) { return json{{"verdict", to_string(v.kind)}, {"rule", v.reason}}; }

}  // namespace

Report cmd_classify_nonsplit(const Document& d, const Options& opt) {
    check_keys(d, {"g", "lambda", "m", "lk_in_ktilde", "ring", "precision", "F"});
    Node root = root_node(d);
    NonSplitInput in;
    in.g = root.at("g").as_small_int();
    in.lambda = root.at("lambda").as_small_int();
    in.m = root.at("m").as_small_int();
    if (root.has("lk_in_ktilde")) in.lk_in_ktilde = root.at("lk_in_ktilde").as_bool();
    DimensionReport r = dim_coinvariants_nonsplit(in);

    Report rep;
    rep.result = json{{"operation", "dim_coinvariants_nonsplit"},
                      {"input", {{"g", in.g}, {"lambda", in.lambda}, {"m", in.m}, {"lk_in_ktilde", in.lk_in_ktilde}}},
                      {"kind", to_string(r.kind)},
                      {"reason", r.reason}};
    if (r.exact()) {
        rep.result["dimension"] = r.lo;
        rep.text.push_back("dimension " + std::to_string(r.lo));
    } else if (r.kind == VerdictKind::Undetermined) {
        rep.result["bounds"] = {r.lo, r.hi};
        rep.text.push_back("dimension between " + std::to_string(r.lo) + " and " + std::to_string(r.hi) + " (" + r.reason + ")");
    } else {
        rep.text.push_back("out of scope: " + r.reason);
    }
    if (r.exact()) rep.text.push_back(r.lo == 1 ? "cyclic" : "not cyclic");

    if (root.has("F")) {
        RingChoice rc = parse_ring(root, opt);
        rep.ring = rc.name;
        rep.precision = rc.ring->precision();
        DistPoly F(*rc.ring, parse_elems(*rc.ring, root.at("F")));
        int dim = coinvariant_dimension_direct(F, in.m);
        rep.result["direct"] = {{"operation", "coinvariant_dimension_direct"}, {"F", F.to_string()}, {"dimension", dim}};
        rep.text.push_back("direct computation for F = " + F.to_string() + ": dimension " + std::to_string(dim));
    }
    return rep;
}

Report cmd_classify_lambda2(const Document& d, const Options& opt) {
    check_keys(d, {"k", "ord_alpha", "ord_beta", "ord_gap", "ord_mu21", "ord_mu22", "n1", "n2", "e", "ring",
                   "precision", "alpha", "beta", "lambda"});
    Node root = root_node(d);
    Report rep;
    if (!root.has("alpha")) {
        Lambda2Input in;
        in.k = root.at("k").as_small_int();
        in.ord_alpha = root.at("ord_alpha").as_small_int();
        in.ord_beta = root.at("ord_beta").as_small_int();
        in.ord_gap = parse_ord(root.at("ord_gap"));
        in.ord_mu21 = parse_ord(root.at("ord_mu21"));
        in.ord_mu22 = parse_ord(root.at("ord_mu22"));
        in.n1 = root.at("n1").as_small_int();
        in.n2 = root.at("n2").as_small_int();
        if (root.has("e")) in.e = root.at("e").as_small_int();
        Verdict v = is_cyclic_lambda2(in);
        rep.result = json{{"operation", "is_cyclic_lambda2"}, {"profile", profile_json(in)}};
        rep.result.update(verdict_json(v));
        rep.text.push_back(in.to_string());
        rep.text.push_back(to_string(v.kind) + " (" + v.reason + ")");
        return rep;
    }

    RingChoice rc = parse_ring(root, opt);
    const Dvr& R = *rc.ring;
    rep.ring = rc.name;
    rep.precision = R.precision();
    int k = root.at("k").as_small_int();
    Node ln = root.at("lambda");
    if (ln.size() != 2 || ln[0].size() != 2 || ln[1].size() != 2) ln.fail("expected a 2x2 matrix");
    auto build = [&](const Dvr& ring) {
        std::array<std::array<DvrElem, 2>, 2> lam{{{parse_elem(ring, ln[0][0]), parse_elem(ring, ln[0][1])},
                                                   {parse_elem(ring, ln[1][0]), parse_elem(ring, ln[1][1])}}};
        return KoikeEmbedding(parse_elem(ring, root.at("alpha")), parse_elem(ring, root.at("beta")), k, lam);
    };
    KoikeEmbedding emb = build(R);
    Lambda2Input prof = profile_of(emb);
    bool admissible = is_admissible(emb);
    AkStructure ak = ak_tensor_structure(emb);
    auto N = generator_orders(emb);

    rep.result = json{{"operation", "is_cyclic_lambda2"}, {"profile", profile_json(prof)}};
    rep.result["generator_orders"] = {N[0], N[1]};
    rep.result["admissible"] = admissible;
    rep.result["ak_tensor"] = {{"operation", "ak_tensor_structure"}, {"separated", ak.separated}, {"group", group_json(ak.group)}};
    rep.text.push_back(prof.to_string());
    rep.text.push_back("x1, x2 of orders pi^" + std::to_string(N[0]) + ", pi^" + std::to_string(N[1]) +
                       (admissible ? "" : " (not a rank-two direct sum)"));
    rep.text.push_back("A_K tensor structure: " + ak.group.to_string() + (ak.separated ? " (separated)" : ""));
    if (!admissible) {
        rep.result["verdict"] = to_string(VerdictKind::OutOfScope);
        rep.result["rule"] = "coinvariants are not the direct sum of two nontrivial cyclic summands";
        rep.text.push_back("OutOfScope (coinvariants are not the direct sum of two nontrivial cyclic summands)");
        return rep;
    }
    Verdict v = is_cyclic_lambda2(prof);
    OracleResult o = criterion_solvable(build, R);
    rep.result.update(verdict_json(v));
    bool predicted = v.kind == VerdictKind::Cyclic;
    bool agree = o.status != Feasibility::Undetermined && (o.status == Feasibility::Feasible) == predicted;
    rep.result["oracle"] = {{"operation", "criterion_solvable"},
                            {"status", feasibility_name(o.status)},
                            {"routes_agree", o.routes_agree},
                            {"precision", o.precision}};
    rep.result["agree"] = agree;
    rep.text.push_back(to_string(v.kind) + " (" + v.reason + ")");
    rep.text.push_back("linear oracle: " + feasibility_name(o.status) + (agree ? ", agrees" : ", DISAGREES"));
    return rep;
}

Report cmd_cross_validate(const Document& d, const Options& opt) {
    check_keys(d, {"primes", "min_ord", "max_ord", "max_k", "max_coord_ord", "threads"});
    Node root = root_node(d);
    ProfileRange range;
    if (root.has("primes")) range.primes = root.at("primes").as_int_list();
    if (root.has("min_ord")) range.min_ord = root.at("min_ord").as_small_int();
    if (root.has("max_ord")) range.max_ord = root.at("max_ord").as_small_int();
    if (root.has("max_k")) range.max_k = root.at("max_k").as_small_int();
    if (root.has("max_coord_ord")) range.max_coord_ord = root.at("max_coord_ord").as_small_int();
    if (root.has("threads")) range.threads = root.at("threads").as_small_int();
    range.seed = opt.seed;
    CrossValidationReport r = cross_validate(range);

    std::map<std::string, int> per_rule;
    json bad = json::array();
    for (const auto& e : r.entries) {
        ++per_rule[e.verdict.reason];
        if (!e.agree && bad.size() < 20) bad.push_back({{"profile", profile_json(e.profile)}, {"verdict", to_string(e.verdict.kind)},
                                                        {"oracle", feasibility_name(e.oracle.status)}});
    }
    Report rep;
    rep.ring = "zp";
    rep.result = json{{"operation", "cross_validate"},
                      {"range", {{"primes", range.primes}, {"min_ord", range.min_ord}, {"max_ord", range.max_ord},
                                 {"max_k", range.max_k}, {"max_coord_ord", range.max_coord_ord}}},
                      {"instances", r.entries.size()},
                      {"skipped", r.skipped},
                      {"disagreements", r.disagreements()},
                      {"rules", per_rule},
                      {"first_disagreements", bad}};
    rep.text.push_back(std::to_string(r.entries.size()) + " instances, " + std::to_string(r.skipped) + " skipped, " +
                       std::to_string(r.disagreements()) + " disagreements");
    for (const auto& [rule, n] : per_rule) rep.text.push_back("  " + std::to_string(n) + "  " + rule);
    return rep;
}

}  // namespace iwmod::cli
