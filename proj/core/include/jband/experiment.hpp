// experiment.hpp: named figure reproductions and custom parameter sweeps.
//
// A run configuration is a line-oriented `key = value` document:
//
//     # entropy versus time for three aggregate sizes
//     experiment = fig1a
//     c = 40
//
// Named experiments pre-fill their figure's parameter values; any explicit
// key overrides them. Parameter keys accept comma-separated lists, and one
// output curve is produced for every combination of list entries.

#pragma once

#include "jband/table.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jband {

enum class SweepVariable { t, n_sites, a, b, c, t_k, m };

// "t", "N", "a", "b", "c", "t_k", "M"
std::string_view sweep_variable_name(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

struct Sweep {
    SweepVariable variable{SweepVariable::t};
    double start{0.0};
    double stop{10.0};
    double step{0.05};

    // start + i * step for every i with value <= stop (within 1e-9 steps).
    std::vector<double> values() const;
    bool operator==(const Sweep&) const = default;
};

struct ParameterSets {
    std::vector<int> n_sites{100};
    std::vector<double> a{0.0};
    std::vector<double> b{0.0};
    std::vector<double> c{30.0};
    std::vector<double> t_k{2.0};
    std::vector<double> t{1.0};

    bool operator==(const ParameterSets&) const = default;
};

struct ExperimentSpec {
    std::string name{"custom"};
    ParameterSets params;
    Sweep sweep;
    std::string output_path;  // empty: <name>.csv

    bool operator==(const ExperimentSpec&) const = default;
};

// fig1a .. fig5, then custom.
const std::vector<std::string>& experiment_names();

// Figure defaults; throws ConfigError for an unknown name.
ExperimentSpec named_experiment(std::string_view name);

// One-line human summary of a spec's parameters and sweep.
std::string describe(const ExperimentSpec& spec);

// Throws ConfigError if the sweep or parameter lists are inconsistent.
void validate_spec(const ExperimentSpec& spec);

// Throws ConfigError (with line number where one applies).
ExperimentSpec parse_config(std::string_view text);

// Column 0 is the sweep variable; remaining columns are named
// <quantity>_<curve label>, e.g. S_N200. Throws DomainError from the physics.
CsvTable run_experiment(const ExperimentSpec& spec);

// spec.output_path, or <name>.csv when unset.
std::string output_file_name(const ExperimentSpec& spec);

}  // namespace jband
