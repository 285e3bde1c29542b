#ifndef POLYSTUFFLE_TOOLS_JSON_IO_HPP
#define POLYSTUFFLE_TOOLS_JSON_IO_HPP

#include <polystuffle/expr.hpp>
#include <polystuffle/harmonic.hpp>
#include <polystuffle/negindex.hpp>
#include <polystuffle/polylog_num.hpp>
#include <polystuffle/verify.hpp>

#include <json.hpp>

namespace polystuffle::json_io
{

using nlohmann::json;

inline json rats(const std::vector<Rat> &v)
{
    json a = json::array();
    for (const auto &r : v) {
        a.push_back(r.str());
    }
    return a;
}

inline json to_json(const NCPoly &p)
{
    json terms = json::array();
    for (const auto &[w, c] : p.terms()) {
        terms.push_back({{"word", w.str()}, {"coeff", c.str()}});
    }
    return {{"alphabet", alphabet_name(p.alphabet())}, {"terms", terms}, {"text", p.str()}};
}

inline json to_json(const X1StarPoly &s)
{
    json terms = json::object();
    for (const auto &[k, c] : s.terms()) {
        terms[std::to_string(k)] = c.str();
    }
    return {{"stars", terms}, {"text", s.str()}};
}

inline json to_json(const PlaneStar &p)
{
    return {{"plane_star", rats(p.base.alpha)}, {"s_max", p.s_max()}, {"text", p.str()}};
}

inline json to_json(const RatFuncAtOne &f)
{
    return {{"num", rats(f.numerator())}, {"pole_order", f.pole_order()}, {"text", f.str()}};
}

inline json to_json(const NPoly &p)
{
    return {{"coeffs", rats(p.coeffs())}, {"text", p.str()}};
}

inline json to_json(const ExactTaylor &t)
{
    return {{"mode", "exact"}, {"coeffs", rats(t.coeffs())}};
}

inline json to_json(const FloatTaylor &t)
{
    json a = json::array();
    for (const auto &c : t.coeffs()) {
        // Real coefficients for real indices; kept as pairs for a uniform schema.
        a.push_back(json::array({c.real(), c.imag()}));
    }
    return {{"mode", "float"}, {"coeffs", a}};
}

inline json to_json(const Value &v)
{
    if (auto *r = std::get_if<Rat>(&v)) {
        return {{"scalar", r->str()}, {"text", r->str()}};
    }
    return std::visit([](const auto &x) { return to_json(x); }, v);
}

inline json to_json(const std::vector<CheckResult> &report)
{
    json a = json::array();
    for (const auto &r : report) {
        a.push_back({{"identity", r.identity},
                     {"status", r.pass ? "pass" : "fail"},
                     {"first_failure_N", r.first_failure_n ? json(*r.first_failure_n) : json(nullptr)}});
    }
    return a;
}

} // namespace polystuffle::json_io

#endif
