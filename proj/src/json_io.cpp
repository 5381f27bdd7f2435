#include "gevlab/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace gevlab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

json params_of(const json& node) { return node.contains("params") ? node.at("params") : json::object(); }

int dim_of(const json& p) { return p.value("dim", 1); }

ScalarField child(const json& node, std::size_t i) {
    const auto& ch = node.at("children");
    if (!ch.is_array() || ch.size() <= i) throw std::invalid_argument("field json: missing child " + std::to_string(i));
    return field_from_json(ch[i]);
}

}  // namespace

ScalarField field_from_json(const json& node) {
    if (!node.is_object() || !node.contains("kind")) throw std::invalid_argument("field json: need an object with \"kind\"");
    const std::string kind = node.at("kind").get<std::string>();
    const json p = params_of(node);

    if (kind == "trig") return trig_field(p.value("omega", 1.0), p.value("phase", 0.0), dim_of(p));
    if (kind == "gaussian") return gaussian_field(p.value("alpha", 1.0), dim_of(p));
    if (kind == "lorentzian") return lorentzian_field(dim_of(p));
    if (kind == "flat_bump") return flat_bump_field(dim_of(p));
    if (kind == "exp") return exp_field(p.value("lambda", 1.0), dim_of(p));
    if (kind == "polynomial") {
        if (!p.contains("coeffs")) throw std::invalid_argument("field json: polynomial needs params.coeffs");
        return polynomial_field(p.at("coeffs").get<std::vector<double>>(), dim_of(p));
    }
    if (kind == "sum") return sum_field(child(node, 0), child(node, 1));
    if (kind == "product") return product_field(child(node, 0), child(node, 1));
    if (kind == "scale") return scale_field(p.value("factor", 1.0), child(node, 0));
    throw std::invalid_argument("field json: unknown kind \"" + kind + "\"");
}

Kernel kernel_from_json(const json& node) {
    if (!node.is_object()) throw std::invalid_argument("kernel json: need an object");
    const std::string kind = node.value("kind", "fractional");
    const int n = node.value("n", 1);
    if (!node.contains("s")) throw std::invalid_argument("kernel json: missing \"s\"");
    const double s = node.at("s").get<double>();
    if (kind == "fractional") return fractional_kernel(n, s);
    if (kind == "perturbed") {
        const double eps = node.value("eps", 0.0);
        ScalarField phi = node.contains("phi") ? field_from_json(node.at("phi")) : gaussian_field(1.0);
        ScalarField psi = node.contains("psi") ? field_from_json(node.at("psi")) : trig_field(1.0, 1.0);
        return perturbed_kernel(n, s, eps, std::move(phi), std::move(psi));
    }
    throw std::invalid_argument("kernel json: unknown kind \"" + kind + "\"");
}

json to_json(const Stencil& st) {
    json coeffs = json::array();
    for (const Rational& c : st.coefficients) {
        coeffs.push_back({{"num", boost::multiprecision::numerator(c).str()},
                          {"den", boost::multiprecision::denominator(c).str()}});
    }
    return {{"k", st.k}, {"nodes", st.nodes}, {"coefficients", coeffs}};
}

json to_json(const OperatorValue& v) {
    return {{"value", v.value},
            {"inner", v.inner},
            {"middle", v.middle},
            {"tail", v.tail},
            {"inner_bound", v.inner_bound},
            {"middle_bound", v.middle_bound},
            {"tail_bound", v.tail_bound},
            {"error_bound", v.error_bound()}};
}

json to_json(const NormLadder& lad) {
    json nstar = json::object();
    for (int p = -2; p <= lad.p_max; ++p) nstar[std::to_string(p)] = lad.nstar_at(p);
    json out{{"R", lad.R},         {"s", lad.s},           {"p_max", lad.p_max},
             {"r_points", lad.r_points}, {"spatial_points", lad.spatial_points}, {"nstar", nstar}};
    if (lad.has_f()) {
        json msf = json::object();
        for (int p = 0; p <= lad.p_max; ++p) msf[std::to_string(p)] = lad.msf_at(p);
        out["msf"] = msf;
    }
    return out;
}

json to_json(const GevreyFit& fit) {
    return {{"sigma", fit.sigma},
            {"log_gamma", fit.log_gamma},
            {"log_v", fit.log_v},
            {"rms", fit.rms},
            {"max_dev", fit.max_dev},
            {"clamped", fit.clamped},
            {"finitely_supported", fit.finitely_supported},
            {"p_lo", fit.p_lo},
            {"p_hi", fit.p_hi}};
}

json to_json(const ProximityReport& rep) {
    return {{"a0", rep.a0}, {"eta", rep.eta}, {"r0", rep.r0}, {"pass", rep.pass}};
}

json to_json(const EnvelopeGrowth& g) {
    return {{"log_lambda", g.log_lambda}, {"lambda", g.lambda()}, {"nu", g.nu}, {"rms", g.rms}};
}

json to_json(const KernelReport& rep) {
    return {{"proximity", to_json(rep.proximity)},
            {"envelope", rep.envelope},
            {"growth", to_json(rep.growth)},
            {"growth_pass", rep.growth_pass},
            {"positivity_pass", rep.positivity_pass},
            {"sampled_not_certified", rep.sampled_not_certified}};
}

json to_json(const ClosureResult& res) {
    return {{"Gamma", res.Gamma}, {"V", res.V}, {"feasible", res.feasible}};
}

}  // namespace gevlab
