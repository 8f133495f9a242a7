#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "iwmod/errors.hpp"

namespace py = pybind11;
using iwmod::cli::json;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::handle& o) {
    return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::object call(const std::string& command, const json& input, std::optional<int> precision, std::uint64_t seed = 1) {
    iwmod::cli::Document doc;
    doc.root = input;
    doc.from_json = true;
    iwmod::cli::Options opt{precision, seed};
    iwmod::cli::Report rep;
    {
        py::gil_scoped_release release;
        rep = iwmod::cli::run_command(command, doc, opt);
    }
    return to_py(rep.result);
}

void put(json& j, const char* key, const py::object& v) {
    if (!v.is_none()) j[key] = from_py(v);
}

}  // namespace

PYBIND11_MODULE(iwmod, m) {
    m.doc() = "Finite-precision computations with Iwasawa modules.";
    m.attr("__version__") = "0.1.0";

    static py::exception<iwmod::ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
    static py::exception<iwmod::PreconditionError> pre_exc(m, "PreconditionError", PyExc_ValueError);
    static py::exception<iwmod::PrecisionError> prec_exc(m, "PrecisionError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const iwmod::ParseError& e) {
            PyErr_SetString(parse_exc.ptr(), e.what());
        } catch (const iwmod::PreconditionError& e) {
            PyErr_SetString(pre_exc.ptr(), e.what());
        } catch (const iwmod::PrecisionError& e) {
            PyErr_SetString(prec_exc.ptr(), e.what());
        }
    });

    m.def("commands", &iwmod::cli::command_names, "Names accepted by run().");

    m.def(
        "run",
        [](const std::string& command, const std::string& text, std::optional<int> precision, std::uint64_t seed) {
            iwmod::cli::Document doc = iwmod::cli::parse_document(text);
            iwmod::cli::Report rep;
            {
                py::gil_scoped_release release;
                rep = iwmod::cli::run_command(command, doc, {precision, seed});
            }
            py::dict out;
            out["result"] = to_py(rep.result);
            out["text"] = rep.text;
            out["ring"] = rep.ring;
            out["precision"] = to_py(rep.precision);
            out["seed"] = seed;
            return out;
        },
        py::arg("command"), py::arg("text"), py::arg("precision") = py::none(), py::arg("seed") = 1,
        "Run a CLI command on a description in the text or JSON grammar.");

    m.def(
        "adapted_generators",
        [](std::int64_t p, const std::vector<int>& exponents, const std::vector<std::vector<std::int64_t>>& subgroup) {
            return call("adapted-basis", json{{"p", p}, {"exponents", exponents}, {"subgroup", subgroup}}, std::nullopt);
        },
        py::arg("p"), py::arg("exponents"), py::arg("subgroup"));

    m.def(
        "check_kerim",
        [](std::int64_t p, const std::vector<int>& exponents, const std::vector<std::vector<std::int64_t>>& beta,
           const std::vector<std::vector<std::int64_t>>& L, const std::string& variant, std::optional<int> n) {
            json in{{"p", p}, {"exponents", exponents}, {"beta", beta}, {"L", L}, {"variant", variant}};
            if (n) in["n"] = *n;
            return call("kerim-check", in, std::nullopt);
        },
        py::arg("p"), py::arg("exponents"), py::arg("beta"), py::arg("L"), py::arg("variant") = "identity",
        py::arg("n") = py::none(), "beta[i][j] is coordinate i of the image of the j-th basis vector.");

    m.def(
        "coinvariant_order",
        [](const std::string& ring, const py::list& factors, std::optional<int> s_order, std::optional<int> precision) {
            json fs = json::array();
            for (const auto& f : factors) {
                auto t = f.cast<py::tuple>();
                json block;
                if (py::isinstance<py::str>(t[0]) && t[0].cast<std::string>() == "pi")
                    block["pi"] = true;
                else
                    block["poly"] = from_py(t[0]);
                if (t.size() > 1) block["power"] = t[1].cast<int>();
                fs.push_back(block);
            }
            json in{{"ring", ring}, {"factor", fs}};
            if (s_order) in["s_order"] = *s_order;
            return call("coinv", in, precision);
        },
        py::arg("ring"), py::arg("factors"), py::arg("s_order") = py::none(), py::arg("precision") = py::none(),
        "factors: tuples (coefficients lowest first, power) or ('pi', power).");

    m.def(
        "char_series",
        [](const std::string& ring, const py::object& relations, std::optional<int> precision) {
            return call("char", json{{"ring", ring}, {"relations", from_py(relations)}}, precision);
        },
        py::arg("ring"), py::arg("relations"), py::arg("precision") = py::none());

    m.def(
        "twovar_char",
        [](const std::string& ring, const py::object& action, int t_order, const py::object& fstar,
           std::optional<int> precision) {
            json in{{"ring", ring}, {"action", from_py(action)}, {"t_order", t_order}};
            put(in, "fstar", fstar);
            return call("twovar-char", in, precision);
        },
        py::arg("ring"), py::arg("action"), py::arg("t_order") = 12, py::arg("fstar") = py::none(),
        py::arg("precision") = py::none(), "action entries are series in T, lowest coefficient first.");

    m.def(
        "dim_coinvariants_nonsplit",
        [](int g, int lambda, int m_, bool lk_in_ktilde, const py::object& ring, const py::object& F) {
            json in{{"g", g}, {"lambda", lambda}, {"m", m_}, {"lk_in_ktilde", lk_in_ktilde}};
            put(in, "ring", ring);
            put(in, "F", F);
            return call("classify-nonsplit", in, std::nullopt);
        },
        py::arg("g"), py::arg("lam"), py::arg("m"), py::arg("lk_in_ktilde") = false, py::arg("ring") = py::none(),
        py::arg("F") = py::none());

    m.def(
        "is_cyclic_lambda2",
        [](int k, int ord_alpha, int ord_beta, const py::object& ord_gap, const py::object& ord_mu21,
           const py::object& ord_mu22, int n1, int n2, int e) {
            auto ord = [](const py::object& o) { return o.is_none() ? json("inf") : from_py(o); };
            json in{{"k", k},          {"ord_alpha", ord_alpha}, {"ord_beta", ord_beta}, {"ord_gap", ord(ord_gap)},
                    {"ord_mu21", ord(ord_mu21)}, {"ord_mu22", ord(ord_mu22)}, {"n1", n1}, {"n2", n2}, {"e", e}};
            return call("classify-lambda2", in, std::nullopt);
        },
        py::arg("k"), py::arg("ord_alpha"), py::arg("ord_beta"), py::arg("ord_gap"), py::arg("ord_mu21"),
        py::arg("ord_mu22"), py::arg("n1"), py::arg("n2"), py::arg("e") = 1, "None stands for an infinite valuation.");

    m.def(
        "classify_embedding",
        [](const std::string& ring, const py::object& alpha, const py::object& beta, int k, const py::object& lam,
           std::optional<int> precision) {
            json in{{"ring", ring}, {"alpha", from_py(alpha)}, {"beta", from_py(beta)}, {"k", k}, {"lambda", from_py(lam)}};
            return call("classify-lambda2", in, precision);
        },
        py::arg("ring"), py::arg("alpha"), py::arg("beta"), py::arg("k"), py::arg("lam"), py::arg("precision") = py::none());

    m.def(
        "cross_validate",
        [](const std::vector<std::int64_t>& primes, int min_ord, int max_ord, int max_k, int max_coord_ord, int threads,
           std::uint64_t seed) {
            json in{{"primes", primes}, {"min_ord", min_ord}, {"max_ord", max_ord}, {"max_k", max_k},
                    {"max_coord_ord", max_coord_ord}, {"threads", threads}};
            return call("cross-validate", in, std::nullopt, seed);
        },
        py::arg("primes") = std::vector<std::int64_t>{3, 5}, py::arg("min_ord") = 1, py::arg("max_ord") = 4,
        py::arg("max_k") = 2, py::arg("max_coord_ord") = 2, py::arg("threads") = 0, py::arg("seed") = 1);
}
