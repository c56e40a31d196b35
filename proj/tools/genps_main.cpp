// genps: exact-arithmetic engine for genuine principal series of split
// simple covers. Subcommands expose root systems, small K type tables,
// spinor branching, factored P^xi determinants, cyclicity/irreducibility
// decisions, intertwining determinants, the rank-one verification suite,
// and grid sweeps over nu.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "genps/analysis.hpp"
#include "genps/json_io.hpp"
#include "genps/oracle.hpp"
#include "genps/pxi.hpp"
#include "genps/rank_one.hpp"
#include "genps/rep_theory.hpp"
#include "genps/root_system.hpp"
#include "genps/small_k.hpp"

using namespace genps;
using io::json;

namespace {

long dim_cap() {
    if (const char* env = std::getenv("PXI_DIM_CAP")) {
        long cap = std::atol(env);
        if (cap > 0) return cap;
    }
    return rep::kDefaultDimCap;
}

struct Output {
    std::string path;  // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file " + path);
        f << text;
    }
};

Vec parse_nu(const std::string& s, int expected_dim, const char* what) {
    if (s.empty()) return Vec(expected_dim, Rat(0));
    Vec v = parse_vec(s);
    if (static_cast<int>(v.size()) != expected_dim)
        throw std::invalid_argument(std::string(what) + " must have " +
                                    std::to_string(expected_dim) + " coordinates");
    return v;
}

analysis::NuParameter make_nu(const roots::RootSystem& rs, const std::string& re,
                              const std::string& im, const std::string& basis) {
    int dim = basis == "fundamental" ? rs.rank() : rs.ambient_dim();
    Vec vre = parse_nu(re, dim, "--nu-re");
    Vec vim = parse_nu(im, dim, "--nu-im");
    if (basis == "fundamental") {
        vre = rs.to_epsilon({vre, roots::WeightBasis::Fundamental}).coords;
        vim = rs.to_epsilon({vim, roots::WeightBasis::Fundamental}).coords;
    }
    return {vre, vim};
}

std::string roots_text(const roots::RootSystem& rs) {
    std::ostringstream os;
    os << rs.type().name() << ": " << rs.positive_roots().size() << " positive roots, rho = ("
       << vec_str(rs.rho()) << ")\n";
    os << "simple roots:\n";
    for (const auto& r : rs.simple_roots()) os << "  (" << vec_str(r.coords) << ")\n";
    os << "positive roots (coords | simple coeffs | length):\n";
    for (const auto& r : rs.positive_roots()) {
        os << "  (" << vec_str(r.coords) << ") | [";
        for (size_t i = 0; i < r.simple_coeffs.size(); ++i)
            os << (i ? " " : "") << r.simple_coeffs[i];
        os << "] | " << (r.length_class == roots::LengthClass::Long ? "long" : "short") << "\n";
    }
    os << "cartan matrix:\n";
    for (const auto& row : rs.cartan_matrix()) {
        os << " ";
        for (long c : row) os << " " << c;
        os << "\n";
    }
    return os.str();
}

std::string small_k_text(const std::vector<smallk::SmallKType>& types) {
    std::ostringstream os;
    for (const auto& t : types) {
        os << t.lie_type.name() << "  " << smallk::label_str(t.label) << "  K=" << t.k_group
           << "  dim=" << t.dim << "  t_long=" << rat_str(t.t_long);
        if (t.t_short) os << "  t_short=" << rat_str(*t.t_short);
        if (t.note) os << "  (" << *t.note << ")";
        os << "\n";
    }
    return os.str();
}

int run_app(int argc, char** argv) {
    CLI::App app{"exact engine for genuine principal series of split simple covers"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    std::string result;
    int exit_code = 0;

    // ---- roots ----
    auto* roots_cmd = app.add_subcommand("roots", "dump root system data");
    std::string r_type;
    int r_rank = 0;
    bool r_json = false;
    roots_cmd->add_option("--type", r_type, "series: A,B,C,D,E6,E7,E8,F4,G2")->required();
    roots_cmd->add_option("--rank", r_rank, "rank (implied for E6/E7/E8/F4/G2)");
    roots_cmd->add_flag("--json", r_json, "JSON output");
    roots_cmd->callback([&] {
        auto rs = roots::RootSystem::build(roots::parse_lie_type(r_type, r_rank));
        result = r_json ? io::dump(io::root_system_json(rs)) : roots_text(rs);
    });

    // ---- small-k ----
    auto* smallk_cmd = app.add_subcommand("small-k", "classify genuine small K types");
    std::string k_type;
    int k_rank = 0;
    bool k_json = false;
    smallk_cmd->add_option("--type", k_type, "series")->required();
    smallk_cmd->add_option("--rank", k_rank, "rank");
    smallk_cmd->add_flag("--json", k_json, "JSON output");
    smallk_cmd->callback([&] {
        auto types = smallk::classify(roots::parse_lie_type(k_type, k_rank));
        result = k_json ? io::dump(io::small_k_json(types)) : small_k_text(types);
    });

    // ---- branch ----
    auto* branch_cmd = app.add_subcommand("branch", "branch a genuine Spin(n) weight to Spin(3)");
    std::string b_group = "spin", b_weight;
    int b_n = 0;
    branch_cmd->add_option("--group", b_group, "group family (spin)");
    branch_cmd->add_option("--n", b_n, "n of Spin(n)")->required();
    branch_cmd->add_option("--weight", b_weight, "comma-separated rational coordinates")
        ->required();
    branch_cmd->callback([&] {
        if (b_group != "spin") throw std::invalid_argument("only --group spin is supported");
        auto xi = rep::Irrep::spin(b_n, parse_vec(b_weight));
        if (rep::weyl_dim(xi) > dim_cap())
            throw DomainError("dim(xi) exceeds the cap " + std::to_string(dim_cap()) +
                              " (override with PXI_DIM_CAP)");
        result = io::dump(io::branch_json(rep::branch_to_spin3(xi)));
    });

    // ---- pxi ----
    auto* pxi_cmd = app.add_subcommand("pxi", "factored determinant p_xi for SL(n,R)~");
    std::string p_type = "A", p_xi, p_rho_mode = "shifted";
    int p_rank = 0;
    bool p_json = false, p_expand = false;
    pxi_cmd->add_option("--type", p_type, "series (A only)");
    pxi_cmd->add_option("--rank", p_rank, "rank n-1 of A_(n-1)")->required();
    pxi_cmd->add_option("--xi", p_xi, "genuine Spin(n) weight, comma rationals")->required();
    pxi_cmd->add_flag("--expand", p_expand, "also print per-root expansions");
    pxi_cmd->add_flag("--json", p_json, "JSON output");
    pxi_cmd->add_option("--rho-mode", p_rho_mode, "shifted (default) or unshifted convention");
    pxi_cmd->callback([&] {
        if (p_type != "A" && p_type != "a")
            throw DomainError("the closed-form pipeline covers type A only; supply per-root "
                              "factor lists for other types");
        if (p_rho_mode != "shifted" && p_rho_mode != "unshifted")
            throw std::invalid_argument("--rho-mode must be shifted or unshifted");
        int n = p_rank + 1;
        auto xi_irrep = rep::Irrep::spin(n, parse_vec(p_xi));
        if (rep::weyl_dim(xi_irrep) > dim_cap())
            throw DomainError("dim(xi) exceeds the cap " + std::to_string(dim_cap()) +
                              " (override with PXI_DIM_CAP)");
        auto poly = pxi::pxi_type_a(n, xi_irrep.highest_weight);
        auto rs = roots::RootSystem::build(roots::LieType(roots::Series::A, n - 1));
        if (p_rho_mode == "unshifted") {
            pxi::FactoredPolynomial translated;
            for (const auto& [coords, shifts] : poly.per_root_shifts()) {
                const auto& phi = rs.positive_roots()[*rs.find_positive_root(coords)];
                rankone::LinearFactors lf;
                lf.shifts = shifts;
                auto moved = rankone::translate_factor(lf, phi, rs,
                                                       rankone::RhoShiftMode::Unshifted);
                for (const auto& s : moved.shifts) translated.add_factor(phi, s);
            }
            poly = translated;
        }
        json j = io::factored_polynomial_json(poly);
        j["rho_mode"] = p_rho_mode;
        auto spec = pxi::make_xi_spec(roots::LieType(roots::Series::A, n - 1),
                                      smallk::find_type(roots::LieType(roots::Series::A, n - 1),
                                                        smallk::Label::S),
                                      xi_irrep);
        j["n_xi"] = spec.n_xi;
        j["dim_xi"] = rep::weyl_dim(xi_irrep);
        if (p_expand) {
            json ex = json::array();
            for (const auto& [coords, shifts] : poly.per_root_shifts()) {
                rankone::LinearFactors lf;
                lf.shifts = shifts;
                json coeffs = json::object();
                for (const auto& [deg, c] : lf.expand()) coeffs[std::to_string(deg)] = rat_str(c);
                const auto& phi = rs.positive_roots()[*rs.find_positive_root(coords)];
                ex.push_back(json{{"root", phi.simple_coeffs}, {"coefficients", coeffs}});
            }
            j["expanded_per_root"] = ex;
        }
        if (p_json) {
            result = io::dump(j);
        } else {
            std::ostringstream os;
            os << "p_xi (" << p_rho_mode << " convention), degree " << poly.total_degree()
               << ", scalar " << rat_str(poly.scalar()) << "\n";
            for (const auto& f : poly.factors()) {
                os << "  root [";
                for (size_t i = 0; i < f.root.simple_coeffs.size(); ++i)
                    os << (i ? " " : "") << f.root.simple_coeffs[i];
                os << "]  (x + " << rat_str(f.shift) << ")^" << f.mult << "\n";
            }
            result = os.str();
        }
    });

    // ---- shared flags for the decision subcommands ----
    struct DecisionArgs {
        std::string type, tau, nu_re, nu_im, basis = "epsilon";
        int rank = 0;
        bool json = false;
    };
    auto add_decision_flags = [](CLI::App* cmd, DecisionArgs& a, bool need_tau) {
        cmd->add_option("--type", a.type, "series")->required();
        cmd->add_option("--rank", a.rank, "rank");
        if (need_tau)
            cmd->add_option("--tau", a.tau, "small K type label (e.g. s*p1, C2*p2)")->required();
        cmd->add_option("--nu-re", a.nu_re, "real part, comma rationals");
        cmd->add_option("--nu-im", a.nu_im, "imaginary part, comma rationals");
        cmd->add_option("--basis", a.basis, "epsilon (default) or fundamental coordinates");
        cmd->add_flag("--json", a.json, "JSON output");
    };

    DecisionArgs cyc;
    auto* cyc_cmd = app.add_subcommand("cyclicity",
                                       "cyclicity of the small K type in the closed chamber");
    add_decision_flags(cyc_cmd, cyc, true);
    cyc_cmd->callback([&] {
        auto type = roots::parse_lie_type(cyc.type, cyc.rank);
        auto rs = roots::RootSystem::build(type);
        auto tau = smallk::find_type(type, smallk::parse_label(cyc.tau));
        auto verdict = analysis::cyclicity(rs, tau, make_nu(rs, cyc.nu_re, cyc.nu_im, cyc.basis));
        if (cyc.json) {
            result = io::dump(io::cyclicity_json(verdict));
        } else {
            std::ostringstream os;
            os << (verdict.cyclic ? "cyclic" : "not cyclic") << "\n";
            for (const auto& [root, why] : verdict.violated_roots)
                os << "  violated on (" << vec_str(root.coords) << "): " << why << "\n";
            result = os.str();
        }
    });

    DecisionArgs irr;
    auto* irr_cmd =
        app.add_subcommand("irreducible", "irreducibility of the unitary principal series");
    add_decision_flags(irr_cmd, irr, true);
    irr_cmd->callback([&] {
        auto type = roots::parse_lie_type(irr.type, irr.rank);
        auto rs = roots::RootSystem::build(type);
        auto tau = smallk::find_type(type, smallk::parse_label(irr.tau));
        auto verdict =
            analysis::unitary_irreducible(rs, tau, make_nu(rs, irr.nu_re, irr.nu_im, irr.basis));
        if (irr.json) {
            result = io::dump(io::irreducibility_json(verdict));
        } else {
            std::ostringstream os;
            os << (verdict.irreducible ? "irreducible" : "reducible") << "\n";
            for (const auto& root : verdict.witnesses)
                os << "  vanishing short root (" << vec_str(root.coords) << ")\n";
            result = os.str();
        }
    });

    DecisionArgs lan;
    auto* lan_cmd = app.add_subcommand("langlands", "Langlands parameters of the quotient");
    add_decision_flags(lan_cmd, lan, true);
    lan_cmd->callback([&] {
        auto type = roots::parse_lie_type(lan.type, lan.rank);
        auto rs = roots::RootSystem::build(type);
        auto tau = smallk::find_type(type, smallk::parse_label(lan.tau));
        auto d =
            analysis::langlands_parameters(rs, tau, make_nu(rs, lan.nu_re, lan.nu_im, lan.basis));
        if (lan.json) {
            result = io::dump(io::langlands_json(d));
        } else {
            std::ostringstream os;
            if (d.tempered) {
                os << "tempered\n";
            } else {
                os << "parameters (P_F, sigma_F, mu) with F = {";
                for (size_t i = 0; i < d.f_set.size(); ++i)
                    os << (i ? "," : "") << "alpha" << (d.f_set[i] + 1);
                os << "}\n  varsigma re (" << vec_str(d.varsigma.re) << ") im ("
                   << vec_str(d.varsigma.im) << ")\n  mu re (" << vec_str(d.mu.re) << ") im ("
                   << vec_str(d.mu.im) << ")\n";
            }
            os << "discrete series possible: no\n";
            result = os.str();
        }
    });

    // ---- intertwine ----
    auto* itw_cmd =
        app.add_subcommand("intertwine", "intertwining determinant det A(nu) for SL(n,R)~");
    std::string i_type = "A", i_xi, i_nu, i_nu_im;
    int i_rank = 0;
    bool i_symbolic = false, i_json = false;
    itw_cmd->add_option("--type", i_type, "series (A only)");
    itw_cmd->add_option("--rank", i_rank, "rank n-1 of A_(n-1)")->required();
    itw_cmd->add_option("--xi", i_xi, "genuine Spin(n) weight, comma rationals")->required();
    itw_cmd->add_option("--nu", i_nu, "real part of nu, comma floats (epsilon coords)");
    itw_cmd->add_option("--nu-im", i_nu_im, "imaginary part of nu, comma floats");
    itw_cmd->add_flag("--symbolic", i_symbolic, "emit the exact reduced rational function");
    itw_cmd->add_flag("--json", i_json, "JSON output");
    itw_cmd->callback([&] {
        if (i_type != "A" && i_type != "a")
            throw DomainError("intertwining determinants cover type A only");
        int n = i_rank + 1;
        auto xi_irrep = rep::Irrep::spin(n, parse_vec(i_xi));
        if (rep::weyl_dim(xi_irrep) > dim_cap())
            throw DomainError("dim(xi) exceeds the cap " + std::to_string(dim_cap()) +
                              " (override with PXI_DIM_CAP)");
        auto g = analysis::intertwining_det(n, xi_irrep.highest_weight);
        if (i_symbolic) {
            auto reduced = analysis::reduce(g);
            json j;
            j["exponent"] = rat_str(g.exponent);
            j["reduced"] = io::reduced_ratio_json(reduced, g.roots);
            if (i_json) j["gamma_product"] = io::gamma_product_json(g);
            result = io::dump(j);
            return;
        }
        if (i_nu.empty()) throw std::invalid_argument("numeric mode requires --nu");
        auto parse_floats = [&](const std::string& s) {
            std::vector<double> v;
            std::istringstream is(s);
            std::string tok;
            while (std::getline(is, tok, ',')) v.push_back(std::stod(tok));
            if (static_cast<int>(v.size()) != n)
                throw std::invalid_argument("--nu needs " + std::to_string(n) + " coordinates");
            return v;
        };
        auto re = parse_floats(i_nu);
        std::vector<double> im(n, 0.0);
        if (!i_nu_im.empty()) im = parse_floats(i_nu_im);
        std::vector<std::complex<double>> nu(n);
        for (int i = 0; i < n; ++i) nu[i] = {re[i], im[i]};
        auto value = analysis::numeric_gamma_eval(g, nu);
        if (i_json) {
            json j;
            j["det_re"] = value.real();
            j["det_im"] = value.imag();
            j["exponent"] = rat_str(g.exponent);
            result = io::dump(j);
        } else {
            std::ostringstream os;
            os.precision(15);
            os << "det A(nu) = " << value.real();
            if (value.imag() != 0) os << (value.imag() > 0 ? " + " : " - ")
                                      << std::abs(value.imag()) << "i";
            os << "\n";
            result = os.str();
        }
    });

    // ---- verify ----
    auto* ver_cmd = app.add_subcommand("verify", "rank-one oracle verification suite");
    std::string v_suite = "sl3";
    int v_pmax = 21;
    bool v_json = false;
    ver_cmd->add_option("--suite", v_suite, "suite name (sl3)");
    ver_cmd->add_option("--p-max", v_pmax, "largest odd symmetric power (default 21)");
    ver_cmd->add_flag("--json", v_json, "JSON output");
    ver_cmd->callback([&] {
        if (v_suite != "sl3") throw std::invalid_argument("unknown suite '" + v_suite + "'");
        if (v_pmax < 3 || v_pmax % 2 == 0)
            throw std::invalid_argument("--p-max must be odd and >= 3");
        bool group_ok = oracle::zero_m_is_quaternion_group();
        bool ad_ok = true;
        try {
            oracle::zero_m_ad_signs_on_t();
        } catch (const std::exception&) {
            ad_ok = false;
        }
        auto wc = oracle::verify_weight_comparison(v_pmax);
        auto mi = oracle::verify_multiplicity_identity(v_pmax);
        bool all = group_ok && ad_ok && wc.pass && mi.pass;
        if (v_json) {
            json j = io::oracle_reports_json(wc, mi);
            j["group_structure"] = {{"pass", group_ok}};
            j["ad_signs"] = {{"pass", ad_ok}};
            j["pass"] = all;
            result = io::dump(j);
        } else {
            std::ostringstream os;
            os << (group_ok ? "PASS" : "FAIL") << " group structure: order 8, quaternion law\n";
            os << (ad_ok ? "PASS" : "FAIL") << " conjugation acts on t by +-1\n";
            os << (wc.pass ? "PASS" : "FAIL") << " weight comparison, odd p <= " << v_pmax << "\n";
            os << (mi.pass ? "PASS" : "FAIL") << " multiplicity identity, odd p <= " << v_pmax
               << "\n";
            result = os.str();
        }
        if (!all) exit_code = 1;
    });

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "map reducibility loci over a nu grid");
    std::string s_type, s_tau, s_start, s_stop, s_step, s_mode = "cyclicity";
    int s_rank = 0;
    bool s_json = false;
    sweep_cmd->add_option("--type", s_type, "series")->required();
    sweep_cmd->add_option("--rank", s_rank, "rank");
    sweep_cmd->add_option("--tau", s_tau, "small K type label")->required();
    sweep_cmd->add_option("--mode", s_mode, "cyclicity (real grid) or irreducible (imaginary)");
    sweep_cmd->add_option("--start", s_start, "grid start, comma rationals")->required();
    sweep_cmd->add_option("--stop", s_stop, "grid stop, comma rationals")->required();
    sweep_cmd->add_option("--step", s_step, "grid step, positive comma rationals")->required();
    sweep_cmd->add_flag("--json", s_json, "JSON output");
    sweep_cmd->callback([&] {
        if (s_mode != "cyclicity" && s_mode != "irreducible")
            throw std::invalid_argument("--mode must be cyclicity or irreducible");
        auto type = roots::parse_lie_type(s_type, s_rank);
        auto rs = roots::RootSystem::build(type);
        auto tau = smallk::find_type(type, smallk::parse_label(s_tau));
        int dim = rs.ambient_dim();
        Vec start = parse_nu(s_start, dim, "--start");
        Vec stop = parse_nu(s_stop, dim, "--stop");
        Vec step = parse_nu(s_step, dim, "--step");
        for (const auto& s : step)
            if (s <= 0) throw std::invalid_argument("--step entries must be positive");

        // the exact vanishing shift of the offending rank-one factor
        const bool g2_c2p2 =
            rs.series() == roots::Series::G && tau.label == smallk::Label::C2P2;
        Rat locus_shift = g2_c2p2 ? Rat(-1, 2) : Rat(0);

        json points = json::array();
        std::ostringstream os;
        Vec cursor = start;
        bool done = false;
        while (!done) {
            analysis::NuParameter nu = (s_mode == "cyclicity")
                                           ? analysis::NuParameter::real(cursor)
                                           : analysis::NuParameter::imaginary(cursor);
            bool in_chamber =
                s_mode == "irreducible" || rs.in_closed_langlands_chamber(nu.re);
            json hits = json::array();
            std::string verdict;
            if (!in_chamber) {
                verdict = "outside-chamber";
            } else if (s_mode == "cyclicity") {
                auto v = analysis::cyclicity(rs, tau, nu);
                verdict = v.cyclic ? "cyclic" : "not-cyclic";
                for (const auto& [root, why] : v.violated_roots)
                    hits.push_back(json{{"root", root.simple_coeffs},
                                        {"shift", rat_str(locus_shift)}});
            } else {
                auto v = analysis::unitary_irreducible(rs, tau, nu);
                verdict = v.irreducible ? "irreducible" : "reducible";
                for (const auto& root : v.witnesses)
                    hits.push_back(json{{"root", root.simple_coeffs},
                                        {"shift", rat_str(locus_shift)}});
            }
            if (s_json) {
                points.push_back(
                    json{{"nu", io::to_json(cursor)}, {"verdict", verdict}, {"hits", hits}});
            } else {
                os << "(" << vec_str(cursor) << ") " << verdict;
                if (!hits.empty()) os << " hits=" << hits.dump();
                os << "\n";
            }
            // advance the grid cursor, last coordinate fastest
            done = true;
            for (int i = dim - 1; i >= 0; --i) {
                cursor[i] += step[i];
                if (cursor[i] <= stop[i]) {
                    done = false;
                    break;
                }
                cursor[i] = start[i];
            }
        }
        result = s_json ? io::dump(json{{"mode", s_mode}, {"points", points}}) : os.str();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }
    out.emit(result);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
