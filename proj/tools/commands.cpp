#include "commands.hpp"

#include <cmath>
#include <map>

#include "iwmod/errors.hpp"

namespace iwmod::cli {

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"adapted-basis",     "kerim-check",      "coinv",
                                                "char",              "twovar-char",      "classify-nonsplit",
                                                "classify-lambda2",  "cross-validate"};
    return names;
}

Report run_command(const std::string& command, const Document& doc, const Options& opt) {
    static const std::map<std::string, Report (*)(const Document&, const Options&)> table{
        {"adapted-basis", cmd_adapted_basis},
        {"kerim-check", cmd_kerim_check},
        {"coinv", cmd_coinv},
        {"char", cmd_char},
        {"twovar-char", cmd_twovar_char},
        {"classify-nonsplit", cmd_classify_nonsplit},
        {"classify-lambda2", cmd_classify_lambda2},
        {"cross-validate", cmd_cross_validate},
    };
    auto it = table.find(command);
    if (it == table.end()) throw std::invalid_argument("unknown command '" + command + "'");
    return it->second(doc, opt);
}

RingChoice parse_ring(const Node& root, const Options& opt) {
    Node r = root.at("ring");
    std::string s = r.as_string();
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == ':') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    auto num = [&](const std::string& x) -> std::int64_t {
        try {
            std::size_t used = 0;
            std::int64_t v = std::stoll(x, &used);
            if (used != x.size()) throw std::invalid_argument(x);
            return v;
        } catch (const std::exception&) {
            r.fail("expected zp:P, ramified:P or unramified:P:D");
        }
    };
    DvrSpec spec;
    if (parts[0] == "zp" && parts.size() == 2)
        spec = DvrSpec::zp(num(parts[1]));
    else if (parts[0] == "ramified" && parts.size() == 2)
        spec = DvrSpec::ramified_sqrt_p(num(parts[1]));
    else if (parts[0] == "unramified" && parts.size() == 3)
        spec = DvrSpec::unramified_sqrt(num(parts[1]), num(parts[2]));
    else
        r.fail("expected zp:P, ramified:P or unramified:P:D");
    int precision = 0;
    if (opt.precision)
        precision = *opt.precision;
    else if (root.has("precision"))
        precision = root.at("precision").as_small_int();
    try {
        return {&Dvr::make(spec, precision), s};
    } catch (const PreconditionError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
}

DvrElem parse_elem(const Dvr& R, const Node& n) {
    if (n.raw().is_number_integer()) return R.from_int(n.as_int());
    if (n.is_array() && n.size() == 2) {
        if (R.degree() == 1 && n[1].as_int() != 0) n.fail("Z_p elements have a single coordinate");
        return R.from_coords(n[0].as_int(), n[1].as_int());
    }
    n.fail("expected an integer or a coordinate pair [a0, a1]");
}

std::vector<DvrElem> parse_elems(const Dvr& R, const Node& n) {
    std::vector<DvrElem> out;
    for (const auto& x : n.items()) out.push_back(parse_elem(R, x));
    return out;
}

TruncSeries parse_series(const Dvr& R, const Node& n) { return TruncSeries(R, parse_elems(R, n)); }

FinAbPGroup parse_group(const Node& root) {
    Node p = root.at("p");
    Node e = root.at("exponents");
    std::vector<int> exps;
    for (const auto& x : e.items()) exps.push_back(x.as_small_int());
    try {
        return FinAbPGroup(p.as_int(), exps);
    } catch (const std::invalid_argument& err) {
        e.fail(err.what());
    }
}

GroupElem parse_group_elem(const FinAbPGroup& G, const Node& n) {
    GroupElem x = n.as_int_list();
    if (static_cast<int>(x.size()) != G.rank())
        n.fail("expected " + std::to_string(G.rank()) + " coordinates");
    return G.reduce(x);
}

std::string order_string(const PPower& q) {
    std::string power = std::to_string(q.p) + "^" + std::to_string(q.exponent);
    if (q.at_least) return ">= " + power;
    if (q.exponent * std::log2(static_cast<double>(q.p)) < 62) {
        std::int64_t v = 1;
        for (int i = 0; i < q.exponent; ++i) v *= q.p;
        return std::to_string(v) + " (" + power + ")";
    }
    return power;
}

json order_json(const PPower& q) {
    return json{{"p", q.p}, {"exponent", q.exponent}, {"at_least", q.at_least}};
}

json elem_json(const DvrElem& x) {
    json j{{"value", x.to_string()}, {"valuation", x.valuation().value}};
    if (!x.valuation().determined()) j["valuation_is_lower_bound"] = true;
    return j;
}

json group_json(const FinAbPGroup& G) {
    return json{{"p", G.p()}, {"exponents", G.exponents()}, {"order_exponent", G.order_exponent()},
                {"structure", G.to_string()}};
}

// --- finite groups -----------------------------------------------------------------

Report cmd_adapted_basis(const Document& d, const Options&) {
    check_keys(d, {"p", "exponents", "subgroup"});
    Node root = root_node(d);
    FinAbPGroup G = parse_group(root);
    std::vector<GroupElem> gens;
    if (root.has("subgroup"))
        for (const auto& g : root.at("subgroup").items()) gens.push_back(parse_group_elem(G, g));
    Subgroup H(G, gens);
    AdaptedBasis b = adapted_generators(G, H);

    bool spans = Subgroup(G, b.generators) == Subgroup::whole(G);
    bool rest_in_h = true;
    for (std::size_t i = 1; i < b.generators.size(); ++i) rest_in_h = rest_in_h && H.contains(b.generators[i]);
    int image_exp = 0;
    if (!b.degenerate) {
        GroupElem y = b.generators[0];
        while (!H.contains(y)) {
            y = G.scale(G.p(), y);
            ++image_exp;
        }
    }
    Report rep;
    rep.ring = "Z/p-power groups, p = " + std::to_string(G.p());
    rep.precision = "exact";
    json gj = json::array();
    for (const auto& g : b.generators) gj.push_back(g);
    rep.result = json{{"operation", "adapted_generators"},
                      {"group", group_json(G)},
                      {"subgroup_order_exponent", H.order_exponent()},
                      {"quotient_exponent", b.quotient_exponent},
                      {"degenerate", b.degenerate},
                      {"generators", gj},
                      {"checks",
                       {{"generators_span_G", spans},
                        {"first_generates_quotient", b.degenerate || image_exp == b.quotient_exponent},
                        {"first_has_order", G.element_order(b.degenerate ? G.zero() : b.generators[0])},
                        {"others_in_H", rest_in_h}}}};
    rep.text.push_back("G = " + G.to_string() + ", #H = " + std::to_string(G.p()) + "^" +
                       std::to_string(H.order_exponent()) + ", G/H cyclic of order " + std::to_string(G.p()) + "^" +
                       std::to_string(b.quotient_exponent));
    if (b.degenerate) rep.text.push_back("H = G: standard basis returned");
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
        std::string s = "x" + std::to_string(i + 1) + " = " + json(b.generators[i]).dump();
        if (i == 0 && !b.degenerate) s += "  (generates G/H, order p^" + std::to_string(G.element_order(b.generators[0])) + ")";
        if (i > 0) s += H.contains(b.generators[i]) ? "  (in H)" : "  (NOT in H)";
        rep.text.push_back(s);
    }
    return rep;
}

Report cmd_kerim_check(const Document& d, const Options&) {
    check_keys(d, {"p", "exponents", "beta", "L", "variant", "n"});
    Node root = root_node(d);
    FinAbPGroup M = parse_group(root);
    Node bn = root.at("beta");
    std::vector<std::vector<std::int64_t>> mat;
    for (const auto& row : bn.items()) mat.push_back(row.as_int_list());
    if (static_cast<int>(mat.size()) != M.rank()) bn.fail("expected " + std::to_string(M.rank()) + " rows");
    for (const auto& row : mat)
        if (static_cast<int>(row.size()) != M.rank()) bn.fail("expected " + std::to_string(M.rank()) + " columns");
    Endo beta(M, mat);
    std::vector<GroupElem> lg;
    if (root.has("L"))
        for (const auto& g : root.at("L").items()) lg.push_back(parse_group_elem(M, g));
    Subgroup L(M, lg);
    std::string variant = root.has("variant") ? root.at("variant").as_string() : "identity";
    KerImResult r;
    if (variant == "identity") {
        r = check_kerim_identity(beta, L);
    } else if (variant == "nilpotent") {
        std::optional<int> n;
        if (root.has("n")) n = root.at("n").as_small_int();
        r = check_kerim_nilpotent(beta, L, n);
    } else if (variant == "free") {
        r = check_kerim_free_case(beta, L);
    } else {
        root.at("variant").fail("expected identity, nilpotent or free");
    }
    Report rep;
    rep.ring = "Z/p-power groups, p = " + std::to_string(M.p());
    rep.precision = "exact";
    rep.result = json{{"operation", "check_kerim_" + variant},
                      {"group", group_json(M)},
                      {"n", r.n},
                      {"lhs", order_json(r.lhs)},
                      {"rhs", order_json(r.rhs)},
                      {"equal", r.equal()}};
    rep.text.push_back("M = " + M.to_string() + ", variant " + variant + (variant == "nilpotent" ? ", n = " + std::to_string(r.n) : ""));
    rep.text.push_back("lhs = " + order_string(r.lhs));
    rep.text.push_back("rhs = " + order_string(r.rhs));
    rep.text.push_back(r.equal() ? "identity holds" : "identity FAILS");
    return rep;
}

}  // namespace iwmod::cli
