// JSON schemas for every value the CLI reads or writes. Exact values are
// strings ("p/q" rationals, "k/N" angles); floating renderings appear only
// in the pretty printer and never feed back into computation.
#ifndef EQCLASS_SERIALIZE_HPP
#define EQCLASS_SERIALIZE_HPP

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "eqclass/localization.hpp"
#include "eqclass/motivic.hpp"
#include "eqclass/quotient.hpp"

namespace eqclass {

using Json = nlohmann::ordered_json;

namespace js {

inline Json angle_to_json(const Angle& a) { return a.str(); }

inline Angle angle_from_json(const Json& j) {
    if (!j.is_string()) throw parse_error("angle must be a string 'k/N'");
    return Angle::parse(j.get<std::string>());
}

inline Json cyclotomic_to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
    return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    if (j.is_string()) // bare rational shorthand
        return Cyclotomic(parse_rational(j.get<std::string>()));
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw parse_error("cyclotomic needs {conductor, coeffs}");
    std::vector<Rational> coeffs;
    for (const auto& e : j.at("coeffs"))
        coeffs.push_back(parse_rational(e.get<std::string>()));
    return Cyclotomic(j.at("conductor").get<long>(), std::move(coeffs));
}

inline Json ycoeff_to_json(const YCoeff& y) {
    Json terms = Json::array();
    for (const auto& [d, c] : y.terms())
        terms.push_back(Json::array({d, cyclotomic_to_json(c)}));
    return Json{{"terms", terms}, {"denom_power", y.denom_power()}};
}

inline YCoeff ycoeff_from_json(const Json& j) {
    if (j.is_string()) return YCoeff::from_rational(parse_rational(j));
    if (!j.is_object() || !j.contains("terms"))
        throw parse_error("ycoeff needs {terms, denom_power}");
    YCoeff::Terms t;
    for (const auto& e : j.at("terms")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("ycoeff term must be [degree, cyclotomic]");
        t.emplace(e[0].get<long>(), cyclotomic_from_json(e[1]));
    }
    long e = j.value("denom_power", 0L);
    return YCoeff::make(std::move(t), e);
}

inline Json ring_to_json(const RingModel& r) {
    Json integral = Json::array();
    for (const auto& [mono, val] : r.integral)
        integral.push_back(Json::array({Json(mono), to_string(val)}));
    return Json{{"vars", r.vars},
                {"caps", r.caps},
                {"total_cap", r.total_cap},
                {"integral", integral}};
}

inline RingPtr ring_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("ring must be an object");
    std::map<Exponents, Rational> integral;
    for (const auto& e : j.at("integral")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("integral entry must be [[exps], value]");
        integral.emplace(e[0].get<Exponents>(),
                         parse_rational(e[1].get<std::string>()));
    }
    try {
        return make_ring(j.at("vars").get<std::vector<std::string>>(),
                         j.at("caps").get<std::vector<int>>(),
                         j.at("total_cap").get<int>(), std::move(integral));
    } catch (const ring_mismatch& e) {
        throw parse_error(e.what());
    }
}

inline Json series_terms_to_json(const TruncSeries& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json::array({Json(e), ycoeff_to_json(c)}));
    return terms;
}

inline Json series_to_json(const TruncSeries& s) {
    return Json{{"ring", ring_to_json(*s.ring())},
                {"terms", series_terms_to_json(s)}};
}

inline TruncSeries series_terms_from_json(const Json& j, RingPtr ring) {
    TruncSeries s = TruncSeries::zero(ring);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("series term must be [[exps], ycoeff]");
        s += TruncSeries::monomial(ring, e[0].get<Exponents>(),
                                   ycoeff_from_json(e[1]));
    }
    return s;
}

inline TruncSeries series_from_json(const Json& j) {
    return series_terms_from_json(j.at("terms"), ring_from_json(j.at("ring")));
}

inline Json bundle_to_json(const SplitBundle& b) {
    Json terms = Json::array();
    for (const auto& t : b.terms())
        terms.push_back(Json{{"root", series_terms_to_json(t.root)},
                             {"angle", angle_to_json(t.angle)},
                             {"hodge", t.hodge},
                             {"mult", t.mult}});
    return Json{{"terms", terms}};
}

inline SplitBundle bundle_from_json(const Json& j, RingPtr ring) {
    SplitBundle b(ring);
    for (const auto& t : j.at("terms")) {
        TruncSeries root = series_terms_from_json(t.at("root"), ring);
        b.add_line(std::move(root), angle_from_json(t.at("angle")),
                   t.value("hodge", 0L), t.value("mult", 1L));
    }
    return b;
}

inline Json component_to_json(const FixedComponent& c) {
    return Json{{"label", c.label},
                {"ring", ring_to_json(*c.ring)},
                {"tangent", bundle_to_json(c.tangent)},
                {"normal", bundle_to_json(c.normal)}};
}

inline FixedComponent component_from_json(const Json& j) {
    RingPtr ring = ring_from_json(j.at("ring"));
    FixedComponent c(j.at("label").get<std::string>(), ring);
    c.tangent = bundle_from_json(j.at("tangent"), ring);
    c.normal = bundle_from_json(j.at("normal"), ring);
    return c;
}

inline Json datum_to_json(const LocalizationDatum& d) {
    Json group{{"elements", d.group.elements}, {"order", d.group.order}};
    if (d.group.mul) group["mul"] = *d.group.mul;
    Json fixed = Json::object();
    for (const auto& g : d.group.elements) {
        Json comps = Json::array();
        for (const auto& c : d.components(g))
            comps.push_back(component_to_json(c));
        fixed[g] = std::move(comps);
    }
    return Json{{"conductor", d.conductor},
                {"group", group},
                {"fixed_data", fixed}};
}

inline LocalizationDatum datum_from_json(const Json& j) {
    LocalizationDatum d;
    d.conductor = j.at("conductor").get<long>();
    const Json& g = j.at("group");
    d.group.elements = g.at("elements").get<std::vector<std::string>>();
    d.group.order = g.at("order").get<long>();
    if (g.contains("mul"))
        d.group.mul = g.at("mul").get<std::vector<std::vector<size_t>>>();
    for (const auto& [el, comps] : j.at("fixed_data").items()) {
        std::vector<FixedComponent> v;
        for (const auto& c : comps) v.push_back(component_from_json(c));
        d.fixed_data.emplace(el, std::move(v));
    }
    try {
        d.validate();
    } catch (const error& e) {
        throw parse_error(std::string("invalid datum: ") + e.what());
    }
    return d;
}

inline Json component_series_to_json(const ComponentSeries& cs) {
    Json out = Json::array();
    for (const auto& [label, s] : cs)
        out.push_back(Json{{"component", label}, {"series", series_to_json(s)}});
    return out;
}

inline Json delocalized_to_json(const DelocalizedClass& dc) {
    Json out = Json::object();
    for (const auto& [el, cs] : dc) out[el] = component_series_to_json(cs);
    return out;
}

inline Stratification stratification_from_json(const Json& j) {
    Stratification s;
    for (const auto& e : j.at("strata"))
        s.strata.push_back(
            Stratum{e.at("dim").get<long>(), e.value("count", 1L)});
    return s;
}

inline IsolatedDefectDatum defect_from_json(const Json& j) {
    IsolatedDefectDatum d;
    for (const auto& [el, pts] : j.at("points").items()) {
        std::vector<DefectPoint> v;
        for (const auto& p : pts) {
            DefectPoint dp;
            for (const auto& a : p.at("angles"))
                dp.angles.push_back(angle_from_json(a));
            dp.chi_g = ycoeff_from_json(p.at("chi_g"));
            dp.chi_plain = ycoeff_from_json(p.at("chi_plain"));
            v.push_back(std::move(dp));
        }
        d.points.emplace(el, std::move(v));
    }
    return d;
}

// ---- pretty rendering (exact value + floating approximation) ----

inline std::string pretty_complex(const Cyclotomic& c) {
    std::ostringstream os;
    auto z = c.embed();
    os << std::setprecision(6) << "~(" << z.real();
    if (z.imag() >= 0)
        os << "+" << z.imag() << "i)";
    else
        os << z.imag() << "i)";
    return os.str();
}

inline std::string pretty_cyclotomic(const Cyclotomic& c) {
    if (c.is_rational()) return to_string(c.rational_value());
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c.coeffs().size(); ++k) {
        const Rational& r = c.coeffs()[k];
        if (r == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(r);
        if (k > 0) os << "*z" << c.conductor() << "^" << k;
    }
    if (first) os << "0";
    os << " " << pretty_complex(c);
    return os.str();
}

inline std::string pretty_ycoeff(const YCoeff& y) {
    if (y.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : y.terms()) {
        if (!first) os << " + ";
        first = false;
        if (c.is_rational() && c.rational_value() == 1 && d != 0) {
            // coefficient 1 is implicit
        } else if (c.is_rational()) {
            os << to_string(c.rational_value());
            if (d != 0) os << "*";
        } else {
            os << "(" << pretty_cyclotomic(c) << ")";
            if (d != 0) os << "*";
        }
        if (d == 1)
            os << "y";
        else if (d != 0)
            os << "y^" << d;
    }
    if (y.denom_power() > 0) {
        os << "  /  (1+y)";
        if (y.denom_power() > 1) os << "^" << y.denom_power();
    }
    return os.str();
}

inline std::string pretty_series(const TruncSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        if (!first) os << "\n + ";
        first = false;
        os << "[";
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            any = true;
            os << s.ring()->vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        if (!any) os << "1";
        os << "] (" << pretty_ycoeff(c) << ")";
    }
    return os.str();
}

} // namespace js

} // namespace eqclass

#endif
