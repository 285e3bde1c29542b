#include <polystuffle/coding.hpp>
#include <polystuffle/expr.hpp>
#include <polystuffle/harmonic.hpp>
#include <polystuffle/negindex.hpp>
#include <polystuffle/polylog_num.hpp>
#include <polystuffle/products.hpp>
#include <polystuffle/verify.hpp>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polystuffle;

namespace
{

std::vector<std::string> strs(const std::vector<Rat> &v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto &r : v) {
        out.push_back(r.str());
    }
    return out;
}

std::map<unsigned long, std::string> star_terms(const X1StarPoly &s)
{
    std::map<unsigned long, std::string> out;
    for (const auto &[k, c] : s.terms()) {
        out[k] = c.str();
    }
    return out;
}

std::string product(const std::string &lhs, const std::string &rhs, std::optional<std::size_t> cap, bool stuffle_op)
{
    Value a = evaluate(lhs);
    Value b = evaluate(rhs);
    if (!stuffle_op && (std::holds_alternative<X1StarPoly>(a) || std::holds_alternative<X1StarPoly>(b))) {
        return shuffle(to_x1star(a), to_x1star(b)).str();
    }
    if (stuffle_op && std::holds_alternative<PlaneStar>(a) && std::holds_alternative<PlaneStar>(b)) {
        return plane_star_stuffle(std::get<PlaneStar>(a), std::get<PlaneStar>(b)).str();
    }
    DegreeCap c = cap ? DegreeCap(*cap) : std::nullopt;
    if (stuffle_op) {
        for (const Value *v : {&a, &b}) {
            auto *p = std::get_if<NCPoly>(v);
            if (!std::holds_alternative<Rat>(*v) && !(p && p->alphabet() == Alphabet::Y)) {
                throw Error(Errc::type, "stuffle needs Y polynomials or two plane stars");
            }
        }
        return stuffle(to_ncpoly(a, Alphabet::Y), to_ncpoly(b, Alphabet::Y), c).str();
    }
    Alphabet al = Alphabet::X;
    for (const Value *v : {&a, &b}) {
        if (auto *p = std::get_if<NCPoly>(v)) {
            al = p->alphabet();
            break;
        }
    }
    return shuffle(to_ncpoly(a, al), to_ncpoly(b, al), c).str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
            inst.attr("code") = errc_name(e.code());
            if (auto *ee = dynamic_cast<const ExprError *>(&e)) {
                inst.attr("position") = ee->position();
            }
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    m.def("evaluate", [](const std::string &expr) { return to_string(evaluate(expr)); },
          "Canonical text of an evaluated expression.");
    m.def("expr_type", [](const std::string &expr) {
        switch (parse(expr)->type) {
        case ExprType::scalar: return "scalar";
        case ExprType::x_poly: return "x_poly";
        case ExprType::y_poly: return "y_poly";
        case ExprType::x1_star: return "x1_star";
        case ExprType::plane_star: return "plane_star";
        }
        return "unknown";
    });
    m.def("shuffle", [](const std::string &a, const std::string &b, std::optional<std::size_t> cap) {
        return product(a, b, cap, false);
    }, py::arg("lhs"), py::arg("rhs"), py::arg("cap") = py::none());
    m.def("stuffle", [](const std::string &a, const std::string &b, std::optional<std::size_t> cap) {
        return product(a, b, cap, true);
    }, py::arg("lhs"), py::arg("rhs"), py::arg("cap") = py::none());
    m.def("pi_x", [](const std::string &e) { return pi_X(to_ncpoly(evaluate(e), Alphabet::Y)).str(); });
    m.def("pi_y", [](const std::string &e) { return pi_Y(to_ncpoly(evaluate(e), Alphabet::X)).str(); });

    m.def("neg_li", [](const std::vector<int> &s) {
        RatFuncAtOne f = li_nonpositive(s);
        py::dict out;
        out["numerator"] = strs(f.numerator());
        out["pole_order"] = f.pole_order();
        out["text"] = f.str();
        out["stars"] = star_terms(ratfunc_to_x1star(f));
        return out;
    }, py::arg("index"));
    m.def("h_eval", [](const std::vector<int> &s, std::size_t n) { return h_signed_eval(SignedIndex{s}, n).str(); },
          py::arg("index"), py::arg("n"));
    m.def("h_poly_eval", [](const std::string &e, std::size_t n) {
        Value v = evaluate(e);
        auto *p = std::get_if<NCPoly>(&v);
        if (p && p->alphabet() == Alphabet::X) {
            return h_poly_eval(pi_Y(*p), n).str();
        }
        return h_poly_eval(to_ncpoly(v, Alphabet::Y), n).str();
    }, py::arg("expr"), py::arg("n"));
    m.def("h_closed_form", [](const std::vector<int> &s) { return strs(h_negindex_closed_form(s).coeffs()); },
          py::arg("index"));
    m.def("h_star_closed_form", [](const std::string &e) {
        return strs(h_x1star_closed_form(to_x1star(evaluate(e))).coeffs());
    }, py::arg("expr"));
    m.def("li_coeffs", [](const std::vector<int> &s, std::size_t ncap) {
        return strs(li_taylor_coeffs(SignedIndex{s}, ncap).coeffs());
    }, py::arg("index"), py::arg("ncap") = default_ncap);
    m.def("li_coeffs_poly", [](const std::string &e, std::size_t ncap) {
        return strs(li_taylor_coeffs(to_ncpoly(evaluate(e), Alphabet::X), ncap).coeffs());
    }, py::arg("expr"), py::arg("ncap") = default_ncap);
    m.def("li_eval", [](const std::vector<int> &s, std::complex<double> z, double eps) {
        return li_eval(SignedIndex{s}, z, eps);
    }, py::arg("index"), py::arg("z"), py::arg("eps") = 1e-12);
    m.def("stirling2", [](unsigned n, unsigned k) { return stirling2(n, k).get_str(); });
    m.def("regularize", [](const std::string &e) {
        std::map<std::size_t, std::string> out;
        for (const auto &[k, part] : regularize_trailing_x0(to_ncpoly(evaluate(e), Alphabet::X))) {
            out[k] = part.str();
        }
        return out;
    });
    m.def("verify", [](const std::string &suite, std::optional<std::size_t> ncap, std::uint64_t seed) {
        Suite s;
        try {
            s = parse_suite(suite);
        } catch (const std::invalid_argument &e) {
            throw py::value_error(e.what());
        }
        std::vector<std::tuple<std::string, bool, std::optional<std::size_t>>> out;
        py::gil_scoped_release release;
        for (const auto &r : run_suite(s, ncap ? *ncap : ncap_from_env(), seed)) {
            out.emplace_back(r.identity, r.pass, r.first_failure_n);
        }
        return out;
    }, py::arg("suite") = "all", py::arg("ncap") = py::none(), py::arg("seed") = default_seed);
}
