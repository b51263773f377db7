// hyperg: batch front-end for the spectral transform library.
// Subcommands: spectrum, transform, verify, kernel. Output JSON or CSV,
// deterministic byte-for-byte for a fixed configuration and seed.

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperg/branching.hpp"
#include "hyperg/sl_operator.hpp"
#include "hyperg/spectrum.hpp"
#include "hyperg/suites.hpp"
#include "hyperg/transform.hpp"

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;
using namespace hyperg;

namespace {

struct Options {
    std::string sigma_str;
    std::string tau_str;
    int mu = 0; // 0 = unset
    int n = 2, m = 1, k = 0;
    std::string fn;
    std::string suite = "all";
    double tol = 0.0;    // 0 = library default
    int panels = 0;      // 0 = library default
    double nu_max = 0.0; // 0 = library default
    std::string out_path;
    std::string format = "json";
    unsigned seed = 42;
    std::string profile = "full";
    std::vector<double> xi, eta;
};

// grammar: decimal literal optionally suffixed "i"; mixed complex rejected
bool parse_scalar(const std::string& s, cplx& out) {
    if (s.empty()) return false;
    std::string body = s;
    bool imag = false;
    if (body.back() == 'i') {
        imag = true;
        body.pop_back();
    }
    if (body.empty() || body == "-" || body == "+") return false;
    char* end = nullptr;
    double v = std::strtod(body.c_str(), &end);
    if (end != body.c_str() + body.size()) return false;
    out = imag ? cplx(0.0, v) : cplx(v, 0.0);
    return true;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    q += "\"";
    return q;
}

int write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
    }
    os << payload;
    return 0;
}

std::function<cplx(double)> lookup_fn(const std::string& name) {
    if (name == "exp") return [](double t) { return cplx(std::exp(-t)); };
    if (name == "texp2") return [](double t) { return cplx(t * std::exp(-2.0 * t)); };
    if (name == "rational") return [](double t) { return cplx(std::pow(1.0 + t, -3.0)); };
    if (name == "expcos") return [](double t) { return cplx(std::exp(-t) * std::cos(t)); };
    if (name == "one") return [](double) { return cplx(1.0); };
    if (name == "zero") return [](double) { return cplx(0.0); };
    return nullptr;
}

bool load_config(const std::string& path, Options& o) {
    std::ifstream is(path);
    if (!is) {
        std::cerr << "error: cannot read config file " << path << "\n";
        return false;
    }
    json doc;
    try {
        is >> doc;
    } catch (const std::exception& e) {
        std::cerr << "error: bad config file: " << e.what() << "\n";
        return false;
    }
    if (!doc.is_object()) {
        std::cerr << "error: config file must hold a flat JSON object\n";
        return false;
    }
    try {
        if (doc.contains("sigma")) {
            o.sigma_str = doc["sigma"].is_string() ? doc["sigma"].get<std::string>()
                                                   : num(doc["sigma"].get<double>());
        }
        if (doc.contains("tau")) {
            o.tau_str = doc["tau"].is_string() ? doc["tau"].get<std::string>()
                                               : num(doc["tau"].get<double>());
        }
        if (doc.contains("mu")) o.mu = doc["mu"].get<int>();
        if (doc.contains("n")) o.n = doc["n"].get<int>();
        if (doc.contains("m")) o.m = doc["m"].get<int>();
        if (doc.contains("k")) o.k = doc["k"].get<int>();
        if (doc.contains("fn")) o.fn = doc["fn"].get<std::string>();
        if (doc.contains("suite")) o.suite = doc["suite"].get<std::string>();
        if (doc.contains("tol")) o.tol = doc["tol"].get<double>();
        if (doc.contains("panels")) o.panels = doc["panels"].get<int>();
        if (doc.contains("nu-max")) o.nu_max = doc["nu-max"].get<double>();
        if (doc.contains("out")) o.out_path = doc["out"].get<std::string>();
        if (doc.contains("format")) o.format = doc["format"].get<std::string>();
        if (doc.contains("seed")) o.seed = doc["seed"].get<unsigned>();
        if (doc.contains("profile")) o.profile = doc["profile"].get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "error: bad config value: " << e.what() << "\n";
        return false;
    }
    return true;
}

int cmd_spectrum(const Options& o) {
    cplx sig;
    if (!parse_scalar(o.sigma_str, sig)) {
        std::cerr << "error: --sigma must be a decimal literal optionally suffixed 'i'\n";
        return 2;
    }
    try {
        sl::SpectralParams p(sig, o.mu);
        auto meas = spectrum::plancherel_measure(p);
        double numax = o.nu_max > 0 ? o.nu_max : 40.0;
        const int nsamp = 81;

        if (o.format == "csv") {
            std::string s = "branch,index,location,value\n";
            for (const auto& a : meas.atoms)
                s += "atom," + std::to_string(a.j) + "," + num(a.tau) + "," + num(a.weight) +
                     "\n";
            for (int i = 0; i < nsamp; ++i) {
                double nu = numax * i / (nsamp - 1);
                s += "density," + std::to_string(i) + "," + num(nu) + "," +
                     num(spectrum::continuous_density(p, nu)) + "\n";
            }
            return write_output(o.out_path, s);
        }

        json doc;
        doc["sigma"] = o.sigma_str;
        doc["mu"] = o.mu;
        json atoms = json::array();
        for (const auto& a : meas.atoms)
            atoms.push_back({{"j", a.j}, {"tau", a.tau}, {"weight", a.weight}});
        doc["atoms"] = atoms;
        json dens = json::array();
        for (int i = 0; i < nsamp; ++i) {
            double nu = numax * i / (nsamp - 1);
            dens.push_back(json::array({nu, spectrum::continuous_density(p, nu)}));
        }
        doc["density_samples"] = dens;
        return write_output(o.out_path, doc.dump(2) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "error: invalid parameters: " << e.what() << "\n";
        return 2;
    }
}

int cmd_transform(const Options& o) {
    cplx sig;
    if (!parse_scalar(o.sigma_str, sig)) {
        std::cerr << "error: --sigma must be a decimal literal optionally suffixed 'i'\n";
        return 2;
    }
    auto f = lookup_fn(o.fn);
    if (!f) {
        std::cerr << "error: --fn must be one of exp, texp2, rational, expcos, one, zero\n";
        return 2;
    }
    try {
        sl::SpectralParams p(sig, o.mu);
        transform::GridConfig cfg;
        if (o.panels > 0) cfg.t_panels = o.panels;
        if (o.nu_max > 0) cfg.nu_max = o.nu_max;
        auto grid = transform::build_grid(cfg);
        auto g = transform::forward(p, f, grid);
        const std::vector<double> probes = {0.3, 1.7, 6.0};
        auto back = transform::inverse(g, probes);

        if (o.format == "csv") {
            std::string s = "branch,index,location,weight,re,im\n";
            for (size_t i = 0; i < g.measure.atoms.size(); ++i) {
                const auto& a = g.measure.atoms[i];
                s += "atom," + std::to_string(a.j) + "," + num(a.tau) + "," + num(a.weight) +
                     "," + num(g.atom_values[i].real()) + "," + num(g.atom_values[i].imag()) +
                     "\n";
            }
            for (size_t i = 0; i < g.nu.nu.size(); ++i)
                s += "continuous," + std::to_string(i) + "," + num(g.nu.nu[i]) + "," +
                     num(g.nu.w[i]) + "," + num(g.cont_values[i].real()) + "," +
                     num(g.cont_values[i].imag()) + "\n";
            for (size_t i = 0; i < probes.size(); ++i)
                s += "roundtrip," + std::to_string(i) + "," + num(probes[i]) + ",0," +
                     num(back[i].real()) + "," + num(back[i].imag()) + "\n";
            return write_output(o.out_path, s);
        }

        json doc;
        doc["sigma"] = o.sigma_str;
        doc["mu"] = o.mu;
        doc["fn"] = o.fn;
        doc["tail_warning"] = g.tail_warning;
        json atoms = json::array();
        for (size_t i = 0; i < g.measure.atoms.size(); ++i) {
            const auto& a = g.measure.atoms[i];
            atoms.push_back({{"j", a.j},
                             {"tau", a.tau},
                             {"weight", a.weight},
                             {"re", g.atom_values[i].real()},
                             {"im", g.atom_values[i].imag()}});
        }
        doc["atoms"] = atoms;
        json cont = json::array();
        for (size_t i = 0; i < g.nu.nu.size(); ++i)
            cont.push_back(json::array(
                {g.nu.nu[i], g.cont_values[i].real(), g.cont_values[i].imag()}));
        doc["continuous"] = cont;
        json rt = json::array();
        for (size_t i = 0; i < probes.size(); ++i)
            rt.push_back(json::array({probes[i], back[i].real(), back[i].imag()}));
        doc["roundtrip"] = rt;
        return write_output(o.out_path, doc.dump(2) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "error: invalid parameters: " << e.what() << "\n";
        return 2;
    }
}

// targeted unitarity run for --sigma/--mu/--tol overrides
int verify_unitarity_single(const Options& o, suites::SuiteResult& out) {
    cplx sig(6.0, 0.0);
    if (!o.sigma_str.empty() && !parse_scalar(o.sigma_str, sig)) {
        std::cerr << "error: --sigma must be a decimal literal optionally suffixed 'i'\n";
        return 2;
    }
    int mu = o.mu > 0 ? o.mu : 1;
    double tol = o.tol > 0 ? o.tol : 1e-3;
    out.name = "unitarity";
    auto t0 = std::chrono::steady_clock::now();
    try {
        sl::SpectralParams p(sig, mu);
        transform::GridConfig cfg;
        if (o.panels > 0) cfg.t_panels = o.panels;
        if (o.nu_max > 0) cfg.nu_max = o.nu_max;
        std::string tag = " sigma=" + (o.sigma_str.empty() ? "6" : o.sigma_str) +
                          " mu=" + std::to_string(mu);
        for (const char* name : {"exp", "texp2", "rational", "expcos"}) {
            auto rep = transform::verify_unitarity(p, lookup_fn(name), cfg, tol);
            out.bound("norm defect" + tag + " fn=" + name, rep.defect, tol);
        }
        auto atoms = spectrum::discrete_points(p);
        out.flag("atom count" + tag, true, double(atoms.size()));
    } catch (const std::exception& e) {
        std::cerr << "error: invalid parameters: " << e.what() << "\n";
        return 2;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return -1; // caller decides from out.pass
}

int cmd_verify(const Options& o) {
    if (o.profile != "quick" && o.profile != "full") {
        std::cerr << "error: --profile must be quick or full\n";
        return 2;
    }
    if (o.suite != "all" && !suites::is_suite_name(o.suite)) {
        std::cerr << "error: unknown suite '" << o.suite << "'\n";
        return 2;
    }
    if (o.tol < 0) {
        std::cerr << "error: --tol must be positive\n";
        return 2;
    }

    suites::SuiteOptions sopt;
    sopt.profile = o.profile;
    sopt.seed = o.seed;

    std::vector<suites::SuiteResult> results;
    if (o.suite == "unitarity" && (!o.sigma_str.empty() || o.tol > 0 || o.mu > 0)) {
        suites::SuiteResult r;
        int rc = verify_unitarity_single(o, r);
        if (rc == 2) return 2;
        results.push_back(std::move(r));
    } else if (o.suite == "all") {
        results = suites::run_all(sopt);
    } else {
        results.push_back(suites::run_suite(o.suite, sopt));
    }

    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::fprintf(stderr, "[%s] %s (%zu checks, %.1f s)\n", r.pass ? "PASS" : "FAIL",
                     r.name.c_str(), r.rows.size(), r.seconds);
    }

    std::string payload;
    if (o.format == "csv") {
        payload = "suite,id,computed,reference,rel_err,pass\n";
        for (const auto& r : results)
            for (const auto& row : r.rows)
                payload += r.name + "," + csv_quote(row.id) + "," + num(row.computed) + "," +
                           num(row.reference) + "," + num(row.rel_err) + "," +
                           (row.pass ? "true" : "false") + "\n";
    } else {
        json doc;
        doc["profile"] = o.profile;
        doc["seed"] = o.seed;
        json jsuites = json::array();
        for (const auto& r : results) {
            json jr;
            jr["name"] = r.name;
            jr["pass"] = r.pass;
            json jrows = json::array();
            for (const auto& row : r.rows)
                jrows.push_back({{"id", row.id},
                                 {"computed", row.computed},
                                 {"reference", row.reference},
                                 {"rel_err", row.rel_err},
                                 {"pass", row.pass}});
            jr["rows"] = jrows;
            jsuites.push_back(jr);
        }
        doc["suites"] = jsuites;
        doc["pass"] = all_pass;
        payload = doc.dump(2) + "\n";
    }
    int wrc = write_output(o.out_path, payload);
    if (wrc != 0) return wrc;
    return all_pass ? 0 : 1;
}

int cmd_kernel(const Options& o) {
    cplx sig, tau;
    if (!parse_scalar(o.sigma_str, sig)) {
        std::cerr << "error: --sigma must be a decimal literal optionally suffixed 'i'\n";
        return 2;
    }
    if (!parse_scalar(o.tau_str, tau)) {
        std::cerr << "error: --tau must be a decimal literal optionally suffixed 'i'\n";
        return 2;
    }
    if (o.n <= o.m || o.m < 1 || o.k < 0) {
        std::cerr << "error: need n > m >= 1 and k >= 0\n";
        return 2;
    }
    std::vector<double> xi = o.xi.empty() ? std::vector<double>{0.5, 1.0, 2.0} : o.xi;
    std::vector<double> eta = o.eta.empty() ? std::vector<double>{0.5, 1.0, 2.0} : o.eta;
    if (xi.size() != eta.size()) {
        std::cerr << "error: --xi and --eta need the same number of values\n";
        return 2;
    }
    for (size_t i = 0; i < xi.size(); ++i)
        if (xi[i] <= 0 || eta[i] <= 0) {
            std::cerr << "error: probe points must be positive\n";
            return 2;
        }
    try {
        if (o.format == "csv") {
            std::string s = "xi,eta,re,im\n";
            for (size_t i = 0; i < xi.size(); ++i) {
                cplx v = branching::kernel_closed_form(sig, tau, o.k, o.n, o.m, xi[i], eta[i]);
                s += num(xi[i]) + "," + num(eta[i]) + "," + num(v.real()) + "," +
                     num(v.imag()) + "\n";
            }
            return write_output(o.out_path, s);
        }
        json doc;
        doc["sigma"] = o.sigma_str;
        doc["tau"] = o.tau_str;
        doc["k"] = o.k;
        doc["n"] = o.n;
        doc["m"] = o.m;
        json probes = json::array();
        for (size_t i = 0; i < xi.size(); ++i) {
            cplx v = branching::kernel_closed_form(sig, tau, o.k, o.n, o.m, xi[i], eta[i]);
            probes.push_back(
                {{"xi", xi[i]}, {"eta", eta[i]}, {"re", v.real()}, {"im", v.imag()}});
        }
        doc["probes"] = probes;
        return write_output(o.out_path, doc.dump(2) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "error: invalid parameters: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    Options o;

    // config file first, flags override
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) config_path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0) config_path = a.substr(9);
    }
    if (!config_path.empty() && !load_config(config_path, o)) return 2;

    CLI::App app{"hyperg: hypergeometric spectral transform toolkit"};
    app.require_subcommand(1);
    std::string config_sink;
    app.add_option("--config", config_sink, "flat JSON config file; flags override");

    auto add_common = [&](CLI::App* c) {
        c->add_option("--config", config_sink, "flat JSON config file; flags override");
        c->add_option("--out", o.out_path, "output file (default stdout)");
        c->add_option("--format", o.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        c->add_option("--seed", o.seed, "seed for randomized draws");
    };

    auto* sp = app.add_subcommand("spectrum", "atoms, masses, and continuous density");
    sp->add_option("--sigma", o.sigma_str, "spectral parameter, e.g. 5 or 3i");
    sp->add_option("--mu", o.mu, "integer parameter >= 1");
    sp->add_option("--nu-max", o.nu_max, "density sample range");
    add_common(sp);

    auto* tr = app.add_subcommand("transform", "forward transform of a named test function");
    tr->add_option("--sigma", o.sigma_str, "spectral parameter, e.g. 5 or 3i");
    tr->add_option("--mu", o.mu, "integer parameter >= 1");
    tr->add_option("--fn", o.fn, "exp | texp2 | rational | expcos | one | zero");
    tr->add_option("--panels", o.panels, "radial panel count override");
    tr->add_option("--nu-max", o.nu_max, "continuous branch cutoff");
    add_common(tr);

    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("SUITE", o.suite, "suite name or 'all' (positional)");
    vf->add_option("--suite", o.suite, "suite name or 'all'");
    vf->add_option("--profile", o.profile, "quick or full");
    vf->add_option("--sigma", o.sigma_str, "target a single configuration (unitarity)");
    vf->add_option("--mu", o.mu, "target a single configuration (unitarity)");
    vf->add_option("--tol", o.tol, "override the pass tolerance (unitarity)");
    vf->add_option("--panels", o.panels, "radial panel count override");
    vf->add_option("--nu-max", o.nu_max, "continuous branch cutoff");
    add_common(vf);

    auto* kn = app.add_subcommand("kernel", "closed-form composed kernel at probe points");
    kn->add_option("--sigma", o.sigma_str, "spectral parameter");
    kn->add_option("--tau", o.tau_str, "second spectral parameter");
    kn->add_option("--k", o.k, "isotypic degree");
    kn->add_option("--n", o.n, "ambient dimension");
    kn->add_option("--m", o.m, "base dimension");
    kn->add_option("--xi", o.xi, "base radii (paired with --eta)");
    kn->add_option("--eta", o.eta, "fiber radii (paired with --xi)");
    add_common(kn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sp->parsed()) return cmd_spectrum(o);
    if (tr->parsed()) return cmd_transform(o);
    if (vf->parsed()) return cmd_verify(o);
    if (kn->parsed()) return cmd_kernel(o);
    return 2;
}
