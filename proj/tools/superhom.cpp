#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "task.hpp"

using namespace shom::cli;

namespace {

const std::map<std::string, std::string> kVerbHelp = {
    {"cartier", "Cartier map Ω_n(V^(1)) -> H(Ω_pn(V)) and its kernel restriction"},
    {"homotopy", "dκ + κd = n·id and Koszul acyclicity on Ω_n(V)"},
    {"koszul-kernel", "Koszul kernel subcomplex, its cohomology and the map to de Rham cohomology"},
    {"naturality", "Cartier naturality for divided-power morphisms"},
    {"lie-cohom", "cohomology of V(g) through the X(g) resolution"},
    {"bar-ext", "cohomology of a small augmented algebra from the reduced bar complex"},
    {"e1", "exactness of the four-term sequence through S^p and Γ^p"},
    {"c1", "chain map from the periodic resolution of Λ(z) into the Koszul kernel"},
    {"e1-chainmap", "chain map from X(gl(m|n)) into the e1 sequence"},
    {"schur", "centralizer algebra of the signed S_d action on (k^{m|n})^⊗d"},
    {"bases", "list a functor basis"},
    {"report-suite", "run the full battery of checks"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-field computations for polynomial superfunctors and their extension witnesses."};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path;
    Params global;
    app.add_option("--config", config_path, "key=value file; command-line flags override it");
    app.add_option("--p", global["p"], "odd prime (default 3)");
    app.add_option("--output", global["output"], "write the JSON report here instead of stdout");
    app.add_option("--dump", global["dump"], "write the computed matrices here");
    app.add_option("--budget", global["budget"], "dimension cap (overrides SUPERHOMOLOGY_BUDGET)");
    app.add_option("--jobs", global["jobs"], "parallel tasks for report-suite");

    std::map<std::string, Params> local;
    std::map<std::string, CLI::App*> subs;
    for (const auto& verb : verbs()) {
        CLI::App* sub = app.add_subcommand(verb, kVerbHelp.at(verb));
        for (const auto& s : verb_params(verb)) {
            std::string& slot = local[verb][s.key];
            const std::string help = s.help + (s.fallback.empty() ? "" : " [" + s.fallback + "]");
            if (s.kind == Kind::flag)
                sub->add_flag("--" + s.key + "{true}", slot, help);
            else
                sub->add_option("--" + s.key, slot, help);
        }
        subs[verb] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<Params> layers;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot read config file '" + config_path + "'");
            layers.push_back(parse_key_values(in));
        }
        Params flags;
        for (const auto& [k, v] : global)
            if (app.get_option("--" + k)->count() > 0) flags[k] = v;
        for (const auto& [verb, sub] : subs) {
            if (!sub->parsed()) continue;
            flags["task"] = verb;
            for (const auto& [k, v] : local[verb])
                if (sub->get_option("--" + k)->count() > 0) flags[k] = v;
        }
        layers.push_back(flags);
        const TaskConfig config = make_config(layers);

        Dumps dumps;
        const Report report = run_task(config, config.dump.empty() ? nullptr : &dumps);
        if (!config.dump.empty()) {
            std::ofstream out(config.dump);
            if (!out) throw UsageError("cannot write dump file '" + config.dump + "'");
            const shom::Field F(config.p);
            for (const auto& [name, m] : dumps) {
                out << "# " << name << "\n";
                shom::dump(out, F, m);
                out << "\n";
            }
        }
        if (config.output.empty()) {
            std::cout << emit(report);
        } else {
            std::ofstream out(config.output);
            if (!out) throw UsageError("cannot write report '" + config.output + "'");
            out << emit(report);
        }
        if (report.error) std::cerr << report.error->kind << " error: " << report.error->message << "\n";
        return exit_code(report);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
