// Command-line front end: evaluate library quantities on given inputs and
// run the identity suites, emitting machine-readable reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "siegeltheta/siegeltheta.hpp"

namespace st = siegeltheta;

namespace {

struct eval_args {
    std::string quantity;
    std::string tau_text;
    std::string z_text;
    std::string u_text;
    std::string char_text;
    std::string s_text = "0";
    int g = 0;
    int m = 1;
    int order = 1;
    int grid = 400;
    double tol = 1e-12;
    int cap = 200;
    bool strict = false;
};

st::quad4 parse_quad(const std::string& text) {
    const auto v = st::io::parse_complex_list(text);
    if (v.size() != 4) throw st::parse_error("expected 4 components", 0);
    return {v[0], v[1], v[2], v[3]};
}

std::string describe_inputs(const eval_args& a) {
    std::ostringstream os;
    os << "tau=" << a.tau_text;
    if (!a.z_text.empty()) os << " z=" << a.z_text;
    if (!a.u_text.empty()) os << " u=" << a.u_text;
    if (!a.char_text.empty()) os << " char=" << a.char_text;
    return os.str();
}

void push_value(std::vector<st::io::eval_record>& out, const std::string& q,
                const std::string& inputs, const st::certified_complex& v) {
    out.push_back({q, inputs, v.value.real(), v.value.imag(), v.err});
}

std::vector<st::io::eval_record> run_eval(const eval_args& a) {
    st::truncation_spec spec;
    spec.target_abs_tol = a.tol;
    spec.max_radius = a.cap;
    spec.strict = a.strict;

    std::vector<st::io::eval_record> records;
    const std::string inputs = describe_inputs(a);

    if (a.quantity == "theta") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        const int g = tau.genus();
        const st::characteristic ch = a.char_text.empty()
                                          ? st::characteristic::zero(g)
                                          : st::io::parse_characteristic(a.char_text);
        st::cvector z = st::cvector::Zero(g);
        if (!a.z_text.empty()) {
            const auto zv = st::io::parse_complex_list(a.z_text);
            if (static_cast<int>(zv.size()) != g) throw st::parse_error("z has wrong length", 0);
            for (int i = 0; i < g; ++i) z(i) = zv[i];
        }
        push_value(records, "theta", inputs, st::theta(ch, z, tau, spec));
        return records;
    }
    if (a.quantity == "chi_g") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        const int g = a.g ? a.g : tau.genus();
        push_value(records, "chi_g", inputs, st::chi_g(g, tau, spec));
        return records;
    }
    if (a.quantity == "delta") {
        const st::cmatrix taum = st::io::parse_complex_matrix(a.tau_text);
        const int g = a.g ? a.g : static_cast<int>(taum.rows());
        if (g == 1) {
            push_value(records, "delta", inputs, st::g1::delta_product(taum(0, 0)));
        } else {
            const auto d = st::delta_g_normalized(g, st::siegel_point(taum), spec);
            push_value(records, "delta", inputs, d.value);
        }
        return records;
    }
    if (a.quantity == "g2g3") {
        const st::cmatrix taum = st::io::parse_complex_matrix(a.tau_text);
        const auto [g2v, g3v] = st::g1::eisenstein_g2_g3(taum(0, 0));
        push_value(records, "g2", inputs, g2v);
        push_value(records, "g3", inputs, g3v);
        return records;
    }
    if (a.quantity == "epstein") {
        const st::cmatrix taum = st::io::parse_complex_matrix(a.tau_text);
        const auto s = st::io::parse_complex(a.s_text);
        push_value(records, "epstein", inputs + " s=" + a.s_text,
                   st::epstein_zeta(taum(0, 0), s));
        return records;
    }
    if (a.quantity == "kummer_coeffs") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        const auto co = st::kummer_coeffs(tau, spec);
        const char* names[5] = {"kummer_A", "kummer_B", "kummer_C", "kummer_D", "kummer_E"};
        for (int i = 0; i < 5; ++i) push_value(records, names[i], inputs, co[i]);
        return records;
    }
    if (a.quantity == "G") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        push_value(records, "G", inputs, st::dual_form_product(parse_quad(a.u_text), tau, spec));
        return records;
    }
    if (a.quantity == "Delta_2_2") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        const auto d = st::discriminant_2_2(parse_quad(a.u_text), tau, spec);
        push_value(records, "Delta_2_2", inputs, d.value);
        return records;
    }
    if (a.quantity == "torsion_elliptic") {
        const st::cmatrix taum = st::io::parse_complex_matrix(a.tau_text);
        const double v = st::g1::torsion_elliptic(taum(0, 0));
        records.push_back({"torsion_elliptic", inputs, v, 0.0, 0.0});
        return records;
    }
    if (a.quantity == "torsion_abelian") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        const int g = a.g ? a.g : tau.genus();
        const double v = st::torsion_abelian(st::polarized_torus(g, tau, a.m));
        records.push_back({"torsion_abelian", inputs, v, 0.0, 0.0});
        return records;
    }
    if (a.quantity == "torsion_theta_divisor") {
        const st::siegel_point tau(st::io::parse_complex_matrix(a.tau_text));
        const int g = a.g ? a.g : tau.genus();
        const auto v = st::torsion_theta_divisor(g, tau, spec);
        records.push_back({"torsion_theta_divisor", inputs, v.value, 0.0, 0.0});
        return records;
    }
    if (a.quantity == "l2_gram") {
        const st::cmatrix taum = st::io::parse_complex_matrix(a.tau_text);
        const auto gram = st::l2_gram_quadrature(a.m, taum(0, 0), a.grid);
        for (int i = 0; i < gram.rows(); ++i)
            for (int j = 0; j < gram.cols(); ++j)
                records.push_back({"l2_gram[" + std::to_string(i) + "," + std::to_string(j) + "]",
                                   inputs, gram(i, j).real(), gram(i, j).imag(), 0.0});
        return records;
    }
    throw st::parse_error("unknown quantity '" + a.quantity + "'", 0);
}

int write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 3;
    }
    f << payload;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified theta-function and modular-form evaluator"};
    app.set_version_flag("--version", SIEGELTHETA_VERSION);
    app.require_subcommand(1);

    eval_args ea;
    std::string format = "json", out_path, suite = "all";
    std::uint64_t seed = 7;

    auto* eval = app.add_subcommand("eval", "evaluate one quantity");
    eval->add_option("--quantity", ea.quantity, "one of theta, chi_g, delta, g2g3, epstein, "
                     "kummer_coeffs, G, Delta_2_2, torsion_elliptic, torsion_abelian, "
                     "torsion_theta_divisor, l2_gram")->required();
    eval->add_option("--tau", ea.tau_text, "tau as a complex scalar or [[...],[...]] matrix")
        ->required();
    eval->add_option("--z", ea.z_text, "complex vector, comma separated");
    eval->add_option("--u", ea.u_text, "dual 4-tuple, comma separated");
    eval->add_option("--char", ea.char_text, "characteristic 'a1,..;b1,..' with rational entries");
    eval->add_option("--s", ea.s_text, "argument of the zeta continuation");
    eval->add_option("--g", ea.g, "genus override");
    eval->add_option("--m", ea.m, "polarization power / section level");
    eval->add_option("--order", ea.order, "derivative order");
    eval->add_option("--grid", ea.grid, "quadrature grid size");
    eval->add_option("--tol", ea.tol, "target absolute truncation tolerance");
    eval->add_option("--cap", ea.cap, "summation radius cap");
    eval->add_flag("--strict", ea.strict, "fail (exit 4) if the cap precludes the tolerance");
    eval->add_option("--format", format, "json or csv");
    eval->add_option("--out", out_path, "output path (default stdout)");
    eval->add_option("--seed", seed, "seed echoed into the report");

    auto* check = app.add_subcommand("check", "run an identity suite");
    check->add_option("--suite", suite, "g1-identities, theta, siegel-covariance, kummer, "
                      "degeneration, torsion or all");
    std::string deg_tau = "2i";
    check->add_option("--tau", deg_tau, "base point for the degeneration suite");
    check->add_option("--seed", seed, "sampler seed");
    check->add_option("--format", format, "json or csv");
    check->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            const auto records = run_eval(ea);
            st::io::report_config cfg;
            cfg.command = "eval --quantity " + ea.quantity;
            cfg.seed = seed;
            cfg.tol = ea.tol;
            cfg.format = format;
            std::ostringstream os;
            st::io::write_eval_report(os, cfg, records, SIEGELTHETA_VERSION);
            return write_out(out_path, os.str());
        }
        st::check_options opt;
        opt.seed = seed;
        opt.degeneration_tau = st::io::parse_complex(deg_tau);
        const auto records = st::run_suite(suite, opt);
        st::io::report_config cfg;
        cfg.command = "check";
        cfg.suite = suite;
        cfg.seed = seed;
        cfg.format = format;
        std::ostringstream os;
        st::io::write_check_report(os, cfg, records, SIEGELTHETA_VERSION);
        const int rc = write_out(out_path, os.str());
        if (rc) return rc;
        for (const auto& r : records)
            if (!r.pass) return 1;
        return 0;
    } catch (const st::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const st::tolerance_unreachable& e) {
        std::cerr << "tolerance failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
