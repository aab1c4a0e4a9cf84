#include "hyperred/json_io.hpp"

namespace hyperred {

using nlohmann::json;

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(format_rational(c));
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of rationals");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError("polynomial coefficients must be strings");
        coeffs.push_back(parse_rational(item.get<std::string>()));
    }
    return Poly(std::move(coeffs));
}

json power_basis_to_json(const PowerBasisPoly& q) {
    return json{{"gamma", format_rational(q.gamma())}, {"coeffs", poly_to_json(Poly(q.coeffs()))}};
}

PowerBasisPoly power_basis_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gamma") || !j.contains("coeffs"))
        throw ParseError("power-basis polynomial needs \"gamma\" and \"coeffs\"");
    if (!j.at("gamma").is_string()) throw ParseError("\"gamma\" must be a rational string");
    return PowerBasisPoly(parse_rational(j.at("gamma").get<std::string>()),
                          poly_from_json(j.at("coeffs")).coeffs());
}

json space_info_to_json(const SpaceInfo& info) {
    json j{{"a", poly_to_json(info.a)},
           {"b", poly_to_json(info.b)},
           {"u", poly_to_json(info.u)},
           {"d", info.d},
           {"degenerate", info.degenerate}};
    j["m0"] = info.m0 ? json(format_rational(*info.m0)) : json(nullptr);
    return j;
}

json certificate_to_json(const ReductionCertificate& cert) {
    return json{{"h", poly_to_json(cert.h)},
                {"x", poly_to_json(cert.x)},
                {"scale", format_rational(cert.scale)}};
}

ReductionCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("x") || !j.contains("scale"))
        throw ParseError("certificate needs \"h\", \"x\" and \"scale\"");
    if (!j.at("scale").is_string()) throw ParseError("\"scale\" must be a rational string");
    ReductionCertificate cert;
    cert.h = poly_from_json(j.at("h"));
    cert.x = poly_from_json(j.at("x"));
    cert.scale = parse_rational(j.at("scale").get<std::string>());
    return cert;
}

json reduction_to_json(const TermSpec& spec, const IntegralReduction& red) {
    json a = json::object();
    json a_over_c = json::object();
    for (const auto& [i, v] : red.coeff_a) {
        a[std::to_string(i)] = v.get_str();
        a_over_c[std::to_string(i)] = format_rational(Rat(v) / Rat(red.scale));
    }
    json x = json::array();
    for (const auto& c : red.witness.coeffs()) x.push_back(c.get_num().get_str());
    return json{{"m", red.m},
                {"C", red.scale.get_str()},
                {"a", a},
                {"a_over_C", a_over_c},
                {"x", x},
                {"witness_scale", red.witness_scale.get_str()},
                {"certificate", certificate_to_json(to_certificate(spec, red))}};
}

json report_to_json(const CongruenceReport& report) {
    json j{{"theorem", report.theorem == CongruenceCase::Cubic ? "case3" : "case4"},
           {"m", report.m},
           {"p", report.p},
           {"modulus", report.modulus.get_str()},
           {"lhs_residue", report.lhs_residue.get_str()},
           {"rhs_residue", report.rhs_residue.get_str()},
           {"a_m", report.a_m.get_str()},
           {"mu", report.mu},
           {"pass", report.pass}};
    j["c_m"] = report.c_m ? json(report.c_m->get_str()) : json(nullptr);
    return j;
}

json integrality_to_json(const std::vector<IntegralityEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back(json{{"m", e.m},
                           {"a_m_over_factorial", format_rational(e.ratio)},
                           {"is_integer", e.integral}});
    return arr;
}

}  // namespace hyperred
