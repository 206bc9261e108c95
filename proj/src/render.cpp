#include "opcal/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace opcal {

Format parse_format(const std::string& name)
{
    if (name == "text") return Format::Text;
    if (name == "latex") return Format::Latex;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string latex_coeff(const Rational& a)
{
    if (denominator(a) == 1) return numerator(a).str();
    return "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
}

std::string latex_poly(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (c < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || m.is_unit()) out << latex_coeff(a);
        for (unsigned v = 0; v < p.arity(); ++v) {
            if (m.exps[v] == 0) continue;
            out << "x_{" << v + 1 << "}";
            if (m.exps[v] > 1) out << "^{" << m.exps[v] << "}";
        }
    }
    return out.str();
}

std::string latex_nc(const NCPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (c < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || w.empty()) out << latex_coeff(a);
        for (auto l : w.letters) out << "x_{" << l << "}";
    }
    return out.str();
}

nlohmann::json json_terms(const Polynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        t["monomial"] = m.exps;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

nlohmann::json json_terms(const NCPolynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms()) {
        nlohmann::json t;
        t["word"] = w.letters;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace

std::string render(const Polynomial& p, Format f)
{
    switch (f) {
    case Format::Text: return p.str();
    case Format::Latex: return latex_poly(p);
    case Format::Json: {
        nlohmann::json j;
        j["arity"] = p.arity();
        j["kind"] = "polynomial";
        j["terms"] = json_terms(p);
        return j.dump();
    }
    }
    return {};
}

std::string render(const RationalFunction& r, Format f)
{
    RationalFunction n = r.normalize();
    switch (f) {
    case Format::Text: return n.str();
    case Format::Latex:
        if (n.den().is_constant() && n.den().constant_term() == 1)
            return latex_poly(n.num());
        return "\\frac{" + latex_poly(n.num()) + "}{" + latex_poly(n.den()) + "}";
    case Format::Json: {
        nlohmann::json j;
        j["arity"] = n.arity();
        j["kind"] = "ratfn";
        j["terms"] = json_terms(n.num());
        j["den"] = json_terms(n.den());
        return j.dump();
    }
    }
    return {};
}

std::string render(const NCPolynomial& p, Format f)
{
    switch (f) {
    case Format::Text: return p.str();
    case Format::Latex: return latex_nc(p);
    case Format::Json: {
        nlohmann::json j;
        j["arity"] = p.arity();
        j["kind"] = "ncpoly";
        j["terms"] = json_terms(p);
        return j.dump();
    }
    }
    return {};
}

std::string render(const NCSeries& s, Format f)
{
    switch (f) {
    case Format::Text: return s.poly().str();
    case Format::Latex: return latex_nc(s.poly());
    case Format::Json: {
        nlohmann::json j;
        j["arity"] = s.arity();
        j["kind"] = "ncseries";
        j["truncation_degree"] = s.truncation_degree();
        j["terms"] = json_terms(s.poly());
        return j.dump();
    }
    }
    return {};
}

} // namespace opcal
