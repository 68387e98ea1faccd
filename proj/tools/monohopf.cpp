#include <iostream>

#include "CLI11.hpp"
#include "mh/cli.hpp"

#ifndef MH_FIXTURES_DIR
#define MH_FIXTURES_DIR "fixtures"
#endif

int main(int argc, char** argv) {
    CLI::App app{"group data, Galois objects and biGalois groups of monomial Hopf algebras"};
    app.require_subcommand(1);
    std::string config, samples, fixtures = MH_FIXTURES_DIR;
    mh::i64 modulus = 0;
    int cap = 0;
    bool json = false;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* o = sub->add_option("--config", config, "datum config (JSON)");
        if (needs_config) o->required()->check(CLI::ExistingFile);
        sub->add_option("--modulus", modulus, "coefficient modulus M (mu_M stands in for k*)")->check(CLI::Range(2, 1 << 20));
        sub->add_option("--samples", samples, "comma-separated scalar samples, e.g. 0,1,-1,z (z = zeta_M)");
        sub->add_option("--cap", cap, "dimension cap for the kappa rank tests")->check(CLI::PositiveNumber);
        sub->add_flag("--json", json, "emit the JSON report instead of text");
    };
    const std::pair<const char*, const char*> commands[] = {
        {"classify", "type, dimension and invariants of the datum"},
        {"cohomology", "H^2 groups used by the Galois classification"},
        {"gal", "enumerate Galois objects up to isomorphism"},
        {"bigal", "compute Gamma and the biGalois group"},
        {"verify", "run the full check suite on the datum"},
        {"predict", "closed-form predictions next to computed values"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), true);
    auto* ex = app.add_subcommand("examples", "check every shipped fixture against its expectations");
    add_common(ex, false);
    ex->add_option("--fixtures", fixtures, "fixture directory")->check(CLI::ExistingDirectory);

    CLI11_PARSE(app, argc, argv);

    mh::RunOptions opt;
    if (modulus) opt.modulus = modulus;
    if (!samples.empty()) opt.samples = mh::split_samples(samples);
    if (cap) opt.cap = cap;

    try {
        auto* sub = app.get_subcommands().front();
        mh::CommandResult r = sub->get_name() == "examples"
                                  ? mh::run_examples(fixtures, opt)
                                  : mh::run_command(sub->get_name(), mh::load_config(config), opt);
        if (json)
            std::cout << r.report.dump(2) << "\n";
        else
            std::cout << mh::render_text(r.report);
        return r.ok ? 0 : 1;
    } catch (const mh::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
    } catch (const mh::CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
    } catch (const mh::DatumError& e) {
        std::cerr << "invalid datum: " << e.what() << "\n";
    }
    return 2;
}
