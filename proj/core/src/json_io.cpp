#include "genps/json_io.hpp"

namespace genps::io {

json to_json(const Rat& q) { return rat_str(q); }

json to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rat_str(x));
    return arr;
}

namespace {

json root_json(const roots::Root& r) {
    json j;
    j["coords"] = to_json(r.coords);
    j["length"] = r.length_class == roots::LengthClass::Long ? "long" : "short";
    j["simple_coeffs"] = r.simple_coeffs;
    return j;
}

}  // namespace

json root_system_json(const roots::RootSystem& rs) {
    json j;
    j["series"] = roots::series_name(rs.series());
    j["rank"] = rs.rank();
    j["ambient_dim"] = rs.ambient_dim();
    j["small_k_supported"] = rs.series() != roots::Series::C;
    json simple = json::array();
    for (const auto& r : rs.simple_roots()) simple.push_back(root_json(r));
    j["simple_roots"] = simple;
    json pos = json::array();
    for (const auto& r : rs.positive_roots()) pos.push_back(root_json(r));
    j["positive_roots"] = pos;
    j["cartan_matrix"] = rs.cartan_matrix();
    j["rho"] = to_json(rs.rho());
    return j;
}

json small_k_json(const std::vector<smallk::SmallKType>& types) {
    json arr = json::array();
    for (const auto& t : types) {
        json j;
        j["type"] = t.lie_type.name();
        j["label"] = smallk::label_str(t.label);
        j["k_group"] = t.k_group;
        j["dim"] = t.dim;
        j["t_long"] = rat_str(t.t_long);
        if (t.t_short) j["t_short"] = rat_str(*t.t_short);
        if (t.note) j["note"] = *t.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

json branch_json(const std::vector<long>& js) {
    json j;
    j["j"] = js;
    j["m_xi"] = js.size();
    long dim = 0;
    for (long x : js) dim += x + 1;
    j["dim"] = dim;
    return j;
}

json factored_polynomial_json(const pxi::FactoredPolynomial& p) {
    json j;
    j["scalar"] = rat_str(p.scalar());
    json factors = json::array();
    for (const auto& f : p.factors()) {
        json fj;
        fj["root"] = f.root.simple_coeffs;
        fj["shift"] = rat_str(f.shift);
        fj["mult"] = f.mult;
        factors.push_back(std::move(fj));
    }
    j["factors"] = factors;
    j["degree"] = p.total_degree();
    return j;
}

json cyclicity_json(const analysis::CyclicityVerdict& v) {
    json j;
    j["cyclic"] = v.cyclic;
    json viol = json::array();
    for (const auto& [root, reason] : v.violated_roots) {
        json rj;
        rj["root"] = root_json(root);
        rj["condition"] = reason;
        viol.push_back(std::move(rj));
    }
    j["violated_roots"] = viol;
    return j;
}

json irreducibility_json(const analysis::IrreducibilityVerdict& v) {
    json j;
    j["irreducible"] = v.irreducible;
    json w = json::array();
    for (const auto& root : v.witnesses) w.push_back(root_json(root));
    j["witnesses"] = w;
    return j;
}

json langlands_json(const analysis::LanglandsDescriptor& d) {
    json j;
    j["tempered"] = d.tempered;
    j["F"] = d.f_set;
    j["varsigma_re"] = to_json(d.varsigma.re);
    j["varsigma_im"] = to_json(d.varsigma.im);
    j["mu_re"] = to_json(d.mu.re);
    j["mu_im"] = to_json(d.mu.im);
    j["discrete_series_possible"] = d.discrete_series_possible;
    return j;
}

json gamma_product_json(const analysis::GammaRatioProduct& g) {
    json j;
    j["n"] = g.n;
    j["exponent"] = rat_str(g.exponent);
    json factors = json::array();
    for (const auto& q : g.factors) {
        json fj;
        fj["root"] = g.roots.at(q.root_index).simple_coeffs;
        fj["num"] = {{"slope", q.num.slope}, {"constant", rat_str(q.num.constant)}};
        fj["den"] = {{"slope", q.den.slope}, {"constant", rat_str(q.den.constant)}};
        factors.push_back(std::move(fj));
    }
    j["gamma_factors"] = factors;
    return j;
}

json reduced_ratio_json(const analysis::ReducedRatio& r,
                        const std::vector<roots::Root>& roots) {
    auto side = [&](const std::map<analysis::LinearForm, long>& m) {
        json arr = json::array();
        for (const auto& [f, mult] : m) {
            json fj;
            fj["root"] = roots.at(f.root_index).simple_coeffs;
            fj["constant"] = rat_str(f.constant);
            fj["mult"] = mult;
            arr.push_back(std::move(fj));
        }
        return arr;
    };
    json j;
    j["sign"] = r.sign;
    j["numerator"] = side(r.numerator);
    j["denominator"] = side(r.denominator);
    return j;
}

json oracle_reports_json(const oracle::ComparisonReport& wc,
                         const oracle::MultiplicityReport& mi) {
    json j;
    j["pass"] = wc.pass && mi.pass;
    json wj = json::array();
    for (const auto& e : wc.entries) {
        json ej;
        ej["p"] = e.p;
        ej["matched"] = e.matched;
        json xw = json::array(), gw = json::array();
        for (const auto& x : e.xi_weights) xw.push_back(rat_str(x));
        for (const auto& x : e.gamma_weights) gw.push_back(rat_str(x));
        ej["xi_weights"] = xw;
        ej["gamma_weights"] = gw;
        ej["signs"] = e.signs;
        if (!e.detail.empty()) ej["detail"] = e.detail;
        wj.push_back(std::move(ej));
    }
    j["weight_comparison"] = {{"pass", wc.pass}, {"entries", wj}};
    json mj = json::array();
    for (const auto& e : mi.entries) {
        json ej;
        ej["p"] = e.p;
        ej["n_xi"] = e.n_xi;
        ej["sum_l"] = e.sum_l;
        ej["matched"] = e.matched;
        ej["gamma_degrees"] = e.gamma_degrees;
        mj.push_back(std::move(ej));
    }
    j["multiplicity_identity"] = {{"pass", mi.pass}, {"entries", mj}};
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace genps::io
