#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "braidcheck/suite.hpp"

using namespace braidcheck;

namespace {

struct CommonArgs {
    std::string format = "text";
    std::string out;
};

int finish(const CheckReport& rep, const CommonArgs& common) {
    std::string body = emit_report(rep, common.format);
    if (common.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(common.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << common.out << "'\n";
            return 3;
        }
        f << body;
    }
    return rep.exit_code();
}

std::optional<Rational> opt_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_rational(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidcheck: exact verification of braided R-matrix structures, "
                 "generalized Yangians, and braided KZ systems"};
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("--format", common.format, "Report format: json|text")->capture_default_str();
    app.add_option("--out", common.out, "Write the report to a file instead of stdout");

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "Catalog of built-in braidings");
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");

    // ---- run (config file) ----
    auto* runcmd = app.add_subcommand("run", "Run a suite described by a JSON config file");
    std::string config_path;
    runcmd->add_option("config", config_path, "Path to the JSON config")->required();

    // ---- check ----
    auto* check = app.add_subcommand("check", "Run a verification suite");
    check->require_subcommand(1);

    std::string R_spec = "flip:2", F_spec = "flip:2", kind_s = "rational", q_s, g_spec = "id";
    std::string kappa_s = "1", p_s = "1", bound_s = "2,2";
    std::uint64_t seed = 42;
    int points = 10, n = 3, kk = 1, pp = 1, K = 2;
    int level_bound = -1;
    bool t0_identity = false, no_certs = false, replay = false;

    auto add_rf = [&](CLI::App* cmd, bool with_f) {
        cmd->add_option("--R", R_spec, "R braiding (catalog name or file:PATH)")->capture_default_str();
        if (with_f)
            cmd->add_option("--F", F_spec, "F braiding (catalog name, file:PATH, or 'same')")
                ->capture_default_str();
    };
    auto add_sampling = [&](CLI::App* cmd) {
        cmd->add_option("--points", points, "Sample points")->capture_default_str();
        cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    };

    auto* c_braiding = check->add_subcommand("braiding", "Braid relation, symmetry class, skew inverse");
    add_rf(c_braiding, false);
    c_braiding->add_option("--q", q_s, "Numeric q for classifying file-loaded matrices");

    auto* c_compat = check->add_subcommand("compat", "Compatibility and braided Yang-Baxter identities");
    add_rf(c_compat, true);

    auto* c_baxter = check->add_subcommand("baxter", "Parameterized Yang-Baxter for the Baxterized matrix");
    add_rf(c_baxter, false);
    c_baxter->add_option("--kind", kind_s, "rational|trig")->capture_default_str();
    c_baxter->add_option("--q", q_s, "Evaluate q at this rational (default: symbolic)");
    add_sampling(c_baxter);

    auto* c_rstructs = check->add_subcommand("rstructs", "Braided r-matrices, Schouten, Sklyanin brackets");
    add_rf(c_rstructs, true);
    add_sampling(c_rstructs);

    auto* c_kz = check->add_subcommand("kz", "Classical braided KZ flatness");
    add_rf(c_kz, true);
    c_kz->add_option("--kind", kind_s, "rational|trig")->capture_default_str();
    c_kz->add_option("--n", n, "Number of sites")->capture_default_str();
    c_kz->add_option("--g", g_spec, "g matrix: id | diag:a,b | file:PATH")->capture_default_str();
    c_kz->add_option("--kappa", kappa_s, "Coupling (exact rational)")->capture_default_str();
    add_sampling(c_kz);

    auto* c_qkz = check->add_subcommand("qkz", "Quantum KZ holonomy condition");
    add_rf(c_qkz, true);
    c_qkz->add_option("--kind", kind_s, "rational|trig")->capture_default_str();
    c_qkz->add_option("--n", n, "Number of sites")->capture_default_str();
    c_qkz->add_option("--g", g_spec, "g matrix: id | diag:a,b | file:PATH")->capture_default_str();
    c_qkz->add_option("--p", p_s, "Shift step (exact rational)")->capture_default_str();
    c_qkz->add_option("--kappa", kappa_s, "System scale (exact rational)")->capture_default_str();
    c_qkz->add_option("--q", q_s, "Numeric q for the trigonometric kind");
    add_sampling(c_qkz);

    auto* c_bethe = check->add_subcommand("bethe", "Bethe commutativity certificates");
    add_rf(c_bethe, true);
    c_bethe->add_option("--kind", kind_s, "rational|trig")->capture_default_str();
    c_bethe->add_option("--k", kk, "First index")->capture_default_str();
    c_bethe->add_option("--p", pp, "Second index")->capture_default_str();
    c_bethe->add_option("--K", K, "Truncation order")->capture_default_str();
    c_bethe->add_option("--bound", bound_s, "Bi-degree bound a,b")->capture_default_str();
    c_bethe->add_option("--q", q_s, "Numeric q for the trigonometric kind");
    c_bethe->add_option("--level-bound", level_bound, "Membership level bound (default a+b+1)");
    c_bethe->add_flag("--t0-identity", t0_identity, "Impose the T[0] = I normalization");
    c_bethe->add_flag("--no-certs", no_certs, "Do not embed certificates in the report");
    c_bethe->add_flag("--replay", replay, "Re-verify embedded certificates before emission");
    c_bethe->add_option("--seed", seed, "PRNG seed")->capture_default_str();

    auto* c_newton = check->add_subcommand("newton", "Newton identity defects as ideal members");
    add_rf(c_newton, true);
    c_newton->add_option("--kind", kind_s, "rational|trig")->capture_default_str();
    c_newton->add_option("--k", kk, "Identity order")->capture_default_str();
    c_newton->add_option("--K", K, "Truncation order")->capture_default_str();
    c_newton->add_option("--q", q_s, "Numeric q for the trigonometric kind");
    c_newton->add_option("--level-bound", level_bound, "Membership level bound (default m+1)");
    c_newton->add_flag("--t0-identity", t0_identity, "Impose the T[0] = I normalization");

    auto* c_all = check->add_subcommand("all", "Full deterministic suite over the catalog");
    add_sampling(c_all);

    // let --format/--out appear after subcommands as well
    app.fallthrough();
    cat->fallthrough();
    check->fallthrough();
    runcmd->fallthrough();
    for (auto* sub : check->get_subcommands({})) sub->fallthrough();
    cat_list->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*runcmd) {
            std::ifstream in(config_path);
            if (!in) throw ValidationError("cannot open config '" + config_path + "'");
            json config;
            try {
                in >> config;
            } catch (const std::exception& e) {
                throw ValidationError("bad JSON in '" + config_path + "': " + e.what());
            }
            return finish(run_from_config(config), common);
        }
        if (*cat_list) {
            json j;
            j["catalog"] = catalog_names();
            if (common.format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& name : catalog_names()) std::cout << name << "\n";
            }
            return 0;
        }

        SuiteOptions opt;
        opt.seed = seed;
        opt.points = points;
        opt.q = opt_rat(q_s);
        opt.kappa = parse_rational(kappa_s);
        opt.shift_p = parse_rational(p_s);
        opt.n = n;
        opt.k = kk;
        opt.p = pp;
        opt.K = K;
        opt.t0_identity = t0_identity;
        opt.keep_certificates = !no_certs;
        opt.replay = replay;
        opt.g_spec = g_spec;
        if (level_bound >= 0) opt.level_bound = level_bound;
        {
            auto comma = bound_s.find(',');
            if (comma == std::string::npos) throw ValidationError("--bound expects a,b");
            opt.bound_a = std::stoi(bound_s.substr(0, comma));
            opt.bound_b = std::stoi(bound_s.substr(comma + 1));
        }

        auto braidings = [&] {
            Braiding R = resolve_braiding(R_spec, opt.q);
            Braiding F = (F_spec == "same") ? R : resolve_braiding(F_spec, opt.q);
            return std::make_pair(R, F);
        };

        if (*c_braiding) return finish(run_braiding_suite(resolve_braiding(R_spec, opt.q)), common);
        if (*c_compat) {
            auto [R, F] = braidings();
            return finish(run_compat_suite(R, F), common);
        }
        if (*c_baxter)
            return finish(run_baxter_suite(resolve_braiding(R_spec, opt.q), parse_kind(kind_s), opt), common);
        if (*c_rstructs) {
            auto [R, F] = braidings();
            return finish(run_rstructs_suite(R, F, opt), common);
        }
        if (*c_kz) {
            auto [R, F] = braidings();
            std::optional<Braiding> r_source;
            if (parse_kind(kind_s) == RKind::Trigonometric) r_source = R;
            return finish(run_kz_suite(parse_kind(kind_s), F, opt, r_source), common);
        }
        if (*c_qkz) {
            auto [R, F] = braidings();
            return finish(run_qkz_suite(R, F, parse_kind(kind_s), opt), common);
        }
        if (*c_bethe) {
            auto [R, F] = braidings();
            return finish(run_bethe_suite(R, F, parse_kind(kind_s), opt), common);
        }
        if (*c_newton) {
            auto [R, F] = braidings();
            return finish(run_newton_suite(R, F, parse_kind(kind_s), opt), common);
        }
        if (*c_all) return finish(run_full_suite(opt), common);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    std::cerr << "no command selected\n";
    return 3;
}
