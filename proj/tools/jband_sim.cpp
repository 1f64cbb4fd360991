// jband-sim: reproduce the exciton entanglement figure families as CSV/SVG
// files and evaluate single measures from the command line.
//
// Exit codes: 0 success, 1 configuration error, 2 domain error, 3 I/O error.

#include "jband/bessel.hpp"
#include "jband/experiment.hpp"
#include "jband/measures.hpp"
#include "jband/multipartite.hpp"
#include "jband/params.hpp"
#include "jband/propagator.hpp"
#include "jband/table.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kDomain = 2, kIo = 3 };

using Args = std::map<std::string, double>;

struct Measure {
    std::string name;
    std::vector<std::string> required;
    Args optional;  // key -> default
    std::string help;
    std::function<double(const Args&)> eval;
};

int as_int(const Args& a, const std::string& key) {
    const double v = a.at(key);
    if (v != std::round(v)) {
        throw jband::ConfigError(key + " must be an integer");
    }
    return static_cast<int>(v);
}

jband::ModelParams model(const Args& a) {
    return jband::ModelParams{a.at("a"), a.at("b"), a.at("c"), a.at("t_k"), as_int(a, "N")};
}

jband::OccupationProfile profile(const Args& a) { return jband::occupation_profile(a.at("t"), model(a)); }

const std::vector<Measure>& measures() {
    using namespace jband;
    const Args model_defaults = {{"a", 0.0}, {"b", 0.0}, {"t_k", 1.0}};
    auto with = [](Args base, Args extra) {
        base.insert(extra.begin(), extra.end());
        return base;
    };
    static const std::vector<Measure> all = {
        {"bessel", {"n", "x"}, {}, "J_n(x)", [](const Args& a) { return bessel_j(as_int(a, "n"), a.at("x")); }},
        {"transfer", {"n", "t", "c"}, with(model_defaults, {{"N", 2}}), "P_n0(t)",
         [](const Args& a) { return transfer_probability(as_int(a, "n"), a.at("t"), model(a)); }},
        {"survival", {"t", "c", "N"}, model_defaults, "in-window probability",
         [](const Args& a) { return window_survival(a.at("t"), model(a)); }},
        {"entropy", {"t", "c", "N"}, model_defaults, "total entropy sum_n S_n",
         [](const Args& a) { return entropy_report(profile(a)).total; }},
        {"entropy_avg", {"t", "c", "N"}, model_defaults, "average entropy (1/N) sum_n S_n",
         [](const Args& a) { return entropy_report(profile(a)).average; }},
        {"site_entropy", {"u"}, {}, "binary entropy of one site",
         [](const Args& a) { return site_entropy(a.at("u")); }},
        {"extended", {"N"}, {}, "per-site entropy of the fully extended state",
         [](const Args& a) { return extended_state_entropy(as_int(a, "N")); }},
        {"ipr", {"t", "c", "N"}, model_defaults, "inverse participation ratio of the profile",
         [](const Args& a) { return ipr(profile(a)); }},
        {"concurrence", {"zeta", "N"}, {}, "average pairwise concurrence",
         [](const Args& a) { return average_concurrence(a.at("zeta"), as_int(a, "N")).avg_concurrence; }},
        {"spano", {"c", "b", "t_k"}, {{"N", 0}}, "empirical coherence size (capped at N when N is given)",
         [](const Args& a) {
             const int n = as_int(a, "N");
             if (n == 0) return spano_coherence_size(a.at("c"), a.at("b"), a.at("t_k"));
             return spano_coherence_size(ModelParams{0.0, a.at("b"), a.at("c"), a.at("t_k"), n});
         }},
        {"resonance", {"c"}, {}, "coherence size 4 pi c at resonance",
         [](const Args& a) { return resonance_coherence_size(a.at("c")); }},
        {"lambda", {"N", "M"}, {}, "maximal product-state overlap of S(N,M)",
         [](const Args& a) { return lambda_max({as_int(a, "N"), as_int(a, "M")}); }},
        {"geometric", {"N", "M"}, {}, "geometric entanglement -ln Lambda^2 of S(N,M)",
         [](const Args& a) { return geometric_entropy({as_int(a, "N"), as_int(a, "M")}); }},
        {"zeta1", {"N"}, {}, "E(N,1)/E(N,N/2)", [](const Args& a) { return zeta_ratios(as_int(a, "N")).zeta1; }},
        {"zeta2", {"N"}, {}, "E(N,2)/E(N,N/2)", [](const Args& a) { return zeta_ratios(as_int(a, "N")).zeta2; }},
        {"chi3", {"N"}, {{"mu", 1.0}, {"gamma", 0.5}, {"delta_e", 3.0}, {"omega", 1.0}}, "|chi3(-3w;w,w,w)|",
         [](const Args& a) {
             return chi3_magnitude(as_int(a, "N"),
                                   SusceptibilityParams{a.at("mu"), a.at("gamma"), a.at("delta_e"), a.at("omega")});
         }},
        {"chi3_reduced", {"N"}, {}, "E(N,1) E(N,2)", [](const Args& a) { return chi3_reduced(as_int(a, "N")); }},
        {"energy", {"k", "v"}, {{"delta_e", 1.0}, {"d_shift", 0.0}}, "exciton band energy",
         [](const Args& a) {
             return exciton_energy(a.at("k"), DispersionParams{a.at("delta_e"), a.at("d_shift"), a.at("v")});
         }},
        {"dipole", {"mu_i", "mu_j", "d"}, {}, "nearest-neighbour dipole coupling",
         [](const Args& a) { return dipole_coupling(DipolePair{a.at("mu_i"), a.at("mu_j"), a.at("d")}); }},
        {"coupling", {"v", "k"}, {}, "nearest-neighbour T_k = 2 v cos k",
         [](const Args& a) { return coupling_sum_nn(a.at("v"), a.at("k")); }},
        {"e_a", {"e1", "e2", "T"}, {}, "lower two-exciton branch energy",
         [](const Args& a) { return two_exciton_diagonalize({a.at("e1"), a.at("e2"), a.at("T")}).e_a; }},
        {"e_b", {"e1", "e2", "T"}, {}, "upper two-exciton branch energy",
         [](const Args& a) { return two_exciton_diagonalize({a.at("e1"), a.at("e2"), a.at("T")}).e_b; }},
        {"beta", {"e1", "e2", "T"}, {}, "two-exciton mixing angle",
         [](const Args& a) { return two_exciton_diagonalize({a.at("e1"), a.at("e2"), a.at("T")}).beta; }},
    };
    return all;
}

double evaluate(const std::string& name, const std::vector<std::string>& assignments) {
    const auto& all = measures();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Measure& m) { return m.name == name; });
    if (it == all.end()) {
        throw jband::ConfigError("unknown measure '" + name + "'");
    }
    Args args = it->optional;
    std::map<std::string, bool> seen;
    for (const std::string& kv : assignments) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw jband::ConfigError("expected key=value, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        const bool known = std::find(it->required.begin(), it->required.end(), key) != it->required.end() ||
                           it->optional.contains(key);
        if (!known) {
            throw jband::ConfigError("measure '" + name + "' does not take '" + key + "'");
        }
        const std::string text = kv.substr(eq + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size()) {
            throw jband::ConfigError("'" + key + "' needs a number, got '" + text + "'");
        }
        args[key] = v;
        seen[key] = true;
    }
    for (const std::string& key : it->required) {
        if (!seen.contains(key)) {
            throw jband::ConfigError("measure '" + name + "' needs '" + key + "'");
        }
    }
    return it->eval(args);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw jband::IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& config_path, const std::string& out_dir, bool svg) {
    const jband::ExperimentSpec spec = jband::parse_config(read_file(config_path));
    const jband::CsvTable table = jband::run_experiment(spec);

    std::filesystem::path csv_path = jband::output_file_name(spec);
    if (csv_path.is_relative() && !out_dir.empty()) {
        csv_path = std::filesystem::path(out_dir) / csv_path;
    }
    jband::write_csv(table, csv_path);
    std::cout << csv_path.string() << '\n';
    if (svg) {
        std::filesystem::path svg_path = csv_path;
        svg_path.replace_extension(".svg");
        jband::emit_svg(table, svg_path);
        std::cout << svg_path.string() << '\n';
    }
    return kOk;
}

int list() {
    for (const std::string& name : jband::experiment_names()) {
        std::cout << jband::describe(jband::named_experiment(name)) << '\n';
    }
    std::cout << "\nmeasures for 'eval':\n";
    for (const Measure& m : measures()) {
        std::cout << "  " << m.name << " (";
        for (std::size_t i = 0; i < m.required.size(); ++i) std::cout << (i ? " " : "") << m.required[i];
        for (const auto& [k, v] : m.optional) std::cout << " [" << k << '=' << jband::format_number(v) << ']';
        std::cout << ")  " << m.help << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exciton propagation and entanglement measures for J-aggregates"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    bool svg = false;
    auto* run_cmd = app.add_subcommand("run", "Run an experiment from a configuration file");
    run_cmd->add_option("--config", config_path, "Configuration file")->required();
    run_cmd->add_option("--out", out_dir, "Output directory for relative output paths");
    run_cmd->add_flag("--svg", svg, "Also write an SVG line chart next to the CSV");

    auto* list_cmd = app.add_subcommand("list", "List named experiments and eval measures");

    std::string measure;
    std::vector<std::string> assignments;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one measure and print the number");
    eval_cmd->add_option("measure", measure, "Measure name (see 'list')")->required();
    eval_cmd->add_option("params", assignments, "key=value parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfig;
    }

    try {
        if (*run_cmd) return run(config_path, out_dir, svg);
        if (*list_cmd) return list();
        if (*eval_cmd) {
            std::cout << jband::format_number(evaluate(measure, assignments)) << '\n';
            return kOk;
        }
    } catch (const jband::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const jband::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const jband::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    }
    return kOk;
}
