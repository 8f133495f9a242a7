#include "commands.hpp"
#include "iwmod/errors.hpp"
#include "iwmod/module.hpp"
#include "iwmod/twovar.hpp"

namespace iwmod::cli {

namespace {

Report ring_report(const RingChoice& rc) {
    Report rep;
    rep.ring = rc.name;
    rep.precision = rc.ring->precision();
    return rep;
}

json leading_json(const LeadingCoefficient& lc) { return json{{"index", lc.index}, {"f_star", elem_json(lc.coeff)}}; }

TruncationBound parse_bound(const Node& root) {
    TruncationBound b;
    if (root.has("s_order")) b.s_order = root.at("s_order").as_small_int();
    if (b.s_order < 1) root.at("s_order").fail("must be positive");
    return b;
}

}  // namespace

Report cmd_coinv(const Document& d, const Options& opt) {
    check_keys(d, {"ring", "precision", "s_order"}, {{"factor", {"poly", "pi", "power"}}});
    Node root = root_node(d);
    RingChoice rc = parse_ring(root, opt);
    const Dvr& R = *rc.ring;
    std::vector<ElementaryFactor> factors;
    for (const auto& f : root.sections("factor")) {
        int power = f.has("power") ? f.at("power").as_small_int() : 1;
        bool is_pi = f.has("pi") && f.at("pi").as_bool();
        if (is_pi == f.has("poly")) f.fail("give exactly one of 'poly' or 'pi = true'");
        if (is_pi)
            factors.push_back(ElementaryFactor::pi(R, power));
        else
            factors.push_back(ElementaryFactor::poly(DistPoly(R, parse_elems(R, f.at("poly"))), power));
    }
    if (factors.empty()) root.fail("at least one [factor] block is required");
    ElementaryModule E(R, factors);
    TruncationBound bound = parse_bound(root);

    PPower formula = elementary_coinvariant_order(E);
    TruncSeries fchar = E.char_series();
    LeadingCoefficient lc = first_nonvanishing_coeff(fchar);
    PPower from_char = quotient_order(lc.coeff);
    FinAbPGroup direct = elementary_coinvariants_direct(E, bound);

    Report rep = ring_report(rc);
    json fj = json::array();
    for (const auto& f : factors) fj.push_back(f.to_string());
    rep.result = json{{"operation", "elementary_coinvariant_order"},
                      {"module", fj},
                      {"order", order_json(formula)},
                      {"char_series", fchar.to_string()},
                      {"leading", leading_json(lc)},
                      {"order_from_leading", order_json(from_char)},
                      {"direct", {{"operation", "elementary_coinvariants_direct"}, {"s_order", bound.s_order}, {"group", group_json(direct)}}},
                      {"consistent", formula == from_char && direct.order_exponent() == formula.exponent}};
    std::string mod;
    for (const auto& f : factors) mod += (mod.empty() ? "" : " + ") + std::string("L/") + f.to_string();
    rep.text.push_back("E = " + mod);
    rep.text.push_back("order " + order_string(formula) + ", f* = " + lc.coeff.to_string() + " at index " +
                       std::to_string(lc.index));
    rep.text.push_back("#O/f* = " + order_string(from_char));
    rep.text.push_back("direct truncated quotient: " + direct.to_string());
    return rep;
}

Report cmd_char(const Document& d, const Options& opt) {
    check_keys(d, {"ring", "precision", "relations"});
    Node root = root_node(d);
    RingChoice rc = parse_ring(root, opt);
    const Dvr& R = *rc.ring;
    Node rel = root.at("relations");
    Matrix<TruncSeries> m;
    for (const auto& row : rel.items()) {
        std::vector<TruncSeries> r;
        for (const auto& e : row.items()) r.push_back(parse_series(R, e));
        m.push_back(r);
    }
    for (const auto& row : m)
        if (row.size() != m.size()) rel.fail("presentation matrix must be square");
    if (m.empty()) rel.fail("presentation matrix is empty");
    LambdaPresentation P(R, m);
    WeierstrassForm w = char_series(P);
    LeadingCoefficient lc = first_nonvanishing_coeff(w);
    PPower q = quotient_order(lc.coeff);

    Report rep = ring_report(rc);
    rep.result = json{{"operation", "char_series"},
                      {"mu", w.mu},
                      {"distinguished", w.distinguished.to_string()},
                      {"lambda", w.distinguished.degree()},
                      {"leading", leading_json(lc)},
                      {"coinvariant_order", {{"operation", "coinvariant_order_from_char"}, {"order", order_json(q)}}}};
    rep.text.push_back("char = pi^" + std::to_string(w.mu) + " * (" + w.distinguished.to_string() + ")");
    rep.text.push_back("f* = " + lc.coeff.to_string() + " at index " + std::to_string(lc.index));
    rep.text.push_back("#O/f* = " + order_string(q));
    return rep;
}

Report cmd_twovar_char(const Document& d, const Options& opt) {
    check_keys(d, {"ring", "precision", "t_order", "action", "fstar"});
    Node root = root_node(d);
    RingChoice rc = parse_ring(root, opt);
    const Dvr& R = *rc.ring;
    int t_order = root.has("t_order") ? root.at("t_order").as_small_int() : TwoVarModule::kDefaultTOrder;
    if (t_order < 1) root.at("t_order").fail("must be positive");
    Node act = root.at("action");
    Matrix<TruncSeries> A;
    for (const auto& row : act.items()) {
        std::vector<TruncSeries> r;
        for (const auto& e : row.items()) r.push_back(parse_series(R, e));
        A.push_back(r);
    }
    for (const auto& row : A)
        if (row.size() != A.size()) act.fail("S-action matrix must be square");
    BiSeries f = char_det(TwoVarModule(R, A, t_order));
    TruncSeries f0 = specialize_t(f);

    Report rep = ring_report(rc);
    rep.result = json{{"operation", "char_det"}, {"t_order", t_order}, {"char_det", f.to_string()},
                      {"degree_s", f.degree_s()}, {"specialized", f0.to_string()}};
    rep.text.push_back("det(S*I - A) = " + f.to_string());
    rep.text.push_back("at T = 0: " + f0.to_string());
    if (root.has("fstar")) {
        TruncSeries g = parse_series(R, root.at("fstar"));
        bool ok = specialization_matches(f, g);
        rep.result["fstar"] = g.to_string();
        rep.result["specialization_matches"] = ok;
        rep.text.push_back(std::string("specialization ") + (ok ? "matches" : "does NOT match") + " F* = " + g.to_string());
    }
    try {
        PPower q = evaluate_00(f);
        rep.result["order_at_00"] = {{"operation", "evaluate_00"}, {"order", order_json(q)}};
        rep.text.push_back("#O/f(0,0) = " + order_string(q));
    } catch (const PrecisionError&) {
        rep.result["order_at_00"] = {{"operation", "evaluate_00"}, {"order", "not finite"}};
        rep.text.push_back("#O/f(0,0): not finite at precision");
    }
    return rep;
}

}  // namespace iwmod::cli
