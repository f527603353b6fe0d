#include "rankone/render.hpp"

#include <sstream>

namespace rankone {

namespace {

std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_sym = m.a || m.b || m.c;
        auto frac = [&](const Rational& q) {
            if (denominator(q) == 1) return q.str();
            return "\\tfrac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
        };
        if (mag != 1 || !has_sym) os << frac(mag);
        auto put = [&](const char* sym, int e) {
            if (e == 0) return;
            os << sym;
            if (e > 1) os << "^{" << e << "}";
        };
        put("\\alpha", m.a);
        put("\\beta", m.b);
        put("d", m.c);
    }
    return os.str();
}

std::string latex_factor(const LinearFactor& f) {
    return latex_poly(f.to_poly());
}

}  // namespace

std::string latex_ratfun(const RatFun& f) {
    if (f.is_zero()) return "0";
    std::string num = latex_poly(f.scaled_num());
    if (f.den().empty()) return num;
    std::string den;
    for (const auto& g : f.den()) den += "\\left(" + latex_factor(g) + "\\right)";
    return "\\frac{" + num + "}{" + den + "}";
}

std::string latex_bidiff(const BidiffOp& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : op.coeffs()) {
        if (!first) os << " + ";
        first = false;
        os << latex_ratfun(c);
        auto put = [&](const std::string& sym, int e) {
            if (e == 0) return;
            os << "\\," << sym;
            if (e > 1) os << "^{" << e << "}";
        };
        put("\\mathcal{L}_x", m.pa);
        put("\\mathcal{L}_y", m.pb);
        put("(\\nabla_x\\cdot\\nabla_y)", m.pc);
    }
    return os.str();
}

Json json_ratfun(const RatFun& f) {
    Json j;
    j["num"] = f.scaled_num().to_string();
    Json den = Json::array();
    for (const auto& g : f.den()) den.push_back(g.to_string());
    j["den"] = den;
    return j;
}

Json json_bidiff(const BidiffOp& op) {
    Json arr = Json::array();
    for (const auto& [m, c] : op.coeffs()) {
        Json e;
        e["powA"] = m.pa;
        e["powB"] = m.pb;
        e["powC"] = m.pc;
        e["coeff"] = json_ratfun(c);
        arr.push_back(std::move(e));
    }
    return arr;
}

Json json_verify(const VerifyReport& rep) {
    Json j;
    j["name"] = rep.name;
    j["pass"] = rep.pass;
    j["first_failure"] = rep.first_failure;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["index"] = c.index;
        e["pass"] = c.pass;
        if (!c.pass) e["residual"] = c.residual;
        checks.push_back(std::move(e));
    }
    j["checks"] = checks;
    return j;
}

Json json_pole_report(const PoleReport& rep) {
    auto factors = [](const std::vector<LinearFactor>& v) {
        Json arr = Json::array();
        for (const auto& f : v) arr.push_back(f.to_string());
        return arr;
    };
    Json j;
    j["j"] = rep.j;
    j["computed"] = factors(rep.computed);
    j["literal"] = factors(rep.literal);
    j["contained_in_family"] = rep.contained_in_family;
    j["outside_family"] = factors(rep.outside_family);
    j["computed_not_literal"] = factors(rep.computed_not_literal);
    j["literal_not_computed"] = factors(rep.literal_not_computed);
    return j;
}

Json json_components(const ComponentList& list) {
    Json j;
    j["field"] = field_to_string(list.group.field);
    j["n"] = list.group.n;
    j["rho"] = list.group.rho;
    j["comp_range"] = Json::array({list.group.comp_lo, list.group.comp_hi});
    j["alpha"] = list.alpha;
    j["beta"] = list.beta;
    Json comps = Json::array();
    for (const auto& c : list.components) {
        Json e;
        e["param"] = c.param;
        e["j"] = c.j;
        e["theorem"] = c.theorem;
        comps.push_back(std::move(e));
    }
    j["components"] = comps;
    return j;
}

Json json_bound(const BoundReport& rep) {
    Json j;
    Json params;
    params["d"] = rep.d;
    params["alpha"] = rep.alpha;
    params["beta"] = rep.beta;
    params["m"] = rep.m;
    j["params"] = params;
    Json grid;
    grid["N"] = rep.n;
    grid["L"] = rep.box;
    j["grid"] = grid;
    j["ratios"] = rep.ratios;
    j["ratios_refined"] = rep.ratios_refined;
    j["max_ratio"] = rep.max_ratio;
    j["max_ratio_refined"] = rep.max_ratio_refined;
    j["refinement_drift"] = rep.refinement_drift;
    j["all_finite"] = rep.all_finite;
    j["seed"] = rep.seed;
    return j;
}

Json json_norm_suite(const NormSuiteReport& rep) {
    Json j;
    j["N"] = rep.n;
    j["L"] = rep.box;
    j["pass"] = rep.pass;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["got"] = c.got;
        e["expected"] = c.expected;
        e["rel_err"] = c.rel_err;
        e["tol"] = c.tol;
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    j["checks"] = checks;
    return j;
}

Json json_equivariance(const EquivarianceReport& rep) {
    Json j;
    Json params;
    params["d"] = rep.d;
    params["m"] = rep.m;
    params["alpha"] = rep.alpha;
    params["beta"] = rep.beta;
    j["params"] = params;
    Json grid;
    grid["N"] = rep.n;
    grid["L"] = rep.box;
    j["grid"] = grid;
    j["tol"] = rep.tol;
    j["seed"] = rep.seed;
    j["pass"] = rep.pass;
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
        Json e;
        e["element"] = c.element;
        e["rel_err"] = c.rel_err;
        e["pass"] = c.pass;
        cases.push_back(std::move(e));
    }
    j["cases"] = cases;
    return j;
}

Json json_mc_estimate(const McEstimate& est) {
    Json e;
    e["mean"] = est.mean;
    e["std_error"] = est.std_error;
    e["samples"] = est.samples;
    e["diverged"] = est.diverged;
    e["max_weight_fraction"] = est.max_weight_fraction;
    e["near_zero_mass"] = est.near_zero_mass;
    e["near_u_mass"] = est.near_u_mass;
    e["warnings"] = est.warnings;
    return e;
}

Json json_mc_suite(const McSuiteReport& rep) {
    Json j;
    Json params;
    params["d"] = rep.d;
    params["m"] = rep.m;
    params["alpha"] = rep.alpha;
    params["beta"] = rep.beta;
    params["samples"] = rep.samples;
    j["params"] = params;
    j["seed"] = rep.seed;
    j["pass"] = rep.pass;
    j["any_diverged"] = rep.any_diverged;
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
        Json e;
        e["name"] = c.name;
        e["value"] = c.value;
        e["reference"] = c.reference;
        e["sigma"] = c.sigma;
        e["zscore"] = c.zscore;
        e["pass"] = c.pass;
        cases.push_back(std::move(e));
    }
    j["cases"] = cases;
    Json ests = Json::array();
    for (const auto& e : rep.estimates) ests.push_back(json_mc_estimate(e));
    j["estimates"] = ests;
    return j;
}

std::string csv_bound(const BoundReport& rep) {
    std::ostringstream os;
    os << "trial,ratio,ratio_refined\n";
    for (size_t i = 0; i < rep.ratios.size(); ++i)
        os << i << "," << rep.ratios[i] << "," << rep.ratios_refined[i] << "\n";
    return os.str();
}

std::string csv_mc_suite(const McSuiteReport& rep) {
    std::ostringstream os;
    os << "case,value,reference,sigma,zscore,pass\n";
    for (const auto& c : rep.cases)
        os << c.name << "," << c.value << "," << c.reference << "," << c.sigma << "," << c.zscore
           << "," << (c.pass ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace rankone
