#include "pconf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using namespace pconf::cli;
    CLI::App app{"Rational PIII(D6) solutions, their D8 limit and the Bessel-kernel determinant"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "json";
    std::vector<std::string> tols;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.outPath, "output file (default: stdout)");
    };

    auto* um = app.add_subcommand("umemura", "Umemura polynomials and origin values");
    um->add_option("--m", cfg.m, "rational m, p/q");
    um->add_option("--n-max", cfg.nMax, "largest index")->check(CLI::NonNegativeNumber);
    common(um);

    auto* co = app.add_subcommand("confluence", "gaps between scaled rational solutions and the D8 limit");
    co->add_option("--m", cfg.m, "rational m, p/q");
    co->add_option("--z", cfg.zGrid, "z value or start:stop:count");
    co->add_option("--j", cfg.js, "indices j")->delimiter(',');
    co->add_option("--series-order", cfg.seriesOrder, "Maclaurin truncation order");
    common(co);

    auto* fr = app.add_subcommand("fredholm", "Bessel-kernel determinant, sigma and the sigma-form residual");
    fr->add_option("--m", cfg.m, "m (lambda = 1/(1 + e^{2 pi i m}))");
    fr->add_option("--lambda", cfg.lambda, "lambda, overrides --m");
    fr->add_option("--r", cfg.rGrid, "r grid start:stop:count");
    fr->add_option("--quad-order", cfg.quadOrder, "Gauss-Legendre nodes")->check(CLI::Range(4, 512));
    fr->add_option("--series-order", cfg.seriesOrder, "series degree in r")->check(CLI::Range(4, 200));
    common(fr);

    auto* mo = app.add_subcommand("monodromy", "monodromy algebra on seeded random draws");
    mo->add_option("--draws", cfg.draws, "number of generic draws")->check(CLI::NonNegativeNumber);
    mo->add_option("--seed", cfg.seed, "random seed");
    mo->add_option("--m", cfg.m, "m of the rational-family block");
    common(mo);

    auto* ve = app.add_subcommand("verify", "run the acceptance criteria");
    ve->add_option("--only", cfg.only, "criterion ids or module names")->delimiter(',');
    ve->add_option("--tol", tols, "tolerance override key=value (key 'all' for every tolerance)");
    common(ve);

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.format = format == "csv" ? Format::Csv : Format::Json;
        for (const auto& t : tols) cfg.tolerances.insert(parse_tolerance(t));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    const RunResult r = run(cfg);
    std::cerr << r.report;
    if (!r.output.empty()) {
        if (cfg.outPath.empty()) {
            std::cout << r.output;
        } else {
            std::ofstream f(cfg.outPath, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open " << cfg.outPath << '\n';
                return kExitUsage;
            }
            f << r.output;
        }
    }
    return r.exitCode;
}
