#include "jband/experiment.hpp"
#include "jband/params.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace jband {
namespace {

int config_error_line(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.line();
    }
    return -1;
}

std::size_t column(const CsvTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.header().size(); ++i) {
        if (t.header()[i] == name) return i;
    }
    ADD_FAILURE() << "no column " << name;
    return 0;
}

// Parameter values printed in each figure caption.
struct Caption {
    std::string name;
    SweepVariable sweep;
    std::vector<int> n_sites;
    std::vector<double> t, a, b, c, t_k;
};

TEST(NamedExperiments, MatchFigureCaptions) {
    const std::vector<Caption> captions = {
        {"fig1a", SweepVariable::t, {200, 100, 50}, {}, {0}, {0}, {30}, {}},
        {"fig1b", SweepVariable::n_sites, {}, {2, 5, 9}, {0}, {0}, {30}, {}},
        {"fig1c", SweepVariable::n_sites, {}, {2}, {0}, {0}, {10, 20, 40}, {}},
        {"fig1d", SweepVariable::n_sites, {}, {6}, {0}, {0, 0.3, 0.5}, {30}, {}},
        {"fig2a", SweepVariable::t, {150}, {}, {0, 0.3, 0.7, 1.5}, {0}, {10}, {}},
        {"fig2b", SweepVariable::t, {100}, {}, {0}, {0, 0.5, 1}, {20}, {}},
        {"fig2c", SweepVariable::t, {200}, {}, {0.5}, {0.3}, {40, 20, 5}, {}},
        {"fig3", SweepVariable::n_sites, {}, {}, {}, {0.5, 0.1}, {15, 5}, {2}},
    };
    for (const Caption& cap : captions) {
        SCOPED_TRACE(cap.name);
        const ExperimentSpec spec = named_experiment(cap.name);
        EXPECT_EQ(spec.name, cap.name);
        EXPECT_EQ(spec.sweep.variable, cap.sweep);
        if (!cap.n_sites.empty()) EXPECT_EQ(spec.params.n_sites, cap.n_sites);
        if (!cap.t.empty()) EXPECT_EQ(spec.params.t, cap.t);
        if (!cap.a.empty()) EXPECT_EQ(spec.params.a, cap.a);
        if (!cap.b.empty()) EXPECT_EQ(spec.params.b, cap.b);
        if (!cap.c.empty()) EXPECT_EQ(spec.params.c, cap.c);
        if (!cap.t_k.empty()) EXPECT_EQ(spec.params.t_k, cap.t_k);
    }
    EXPECT_EQ(named_experiment("fig4").sweep.variable, SweepVariable::n_sites);
    EXPECT_EQ(named_experiment("fig5").sweep.variable, SweepVariable::n_sites);
}

TEST(NamedExperiments, Grids) {
    const Sweep time = named_experiment("fig2b").sweep;
    EXPECT_EQ(time.values().size(), 201u);
    EXPECT_EQ(time.values().back(), 10.0);
    EXPECT_EQ(named_experiment("fig1c").sweep.values().size(), 30u);
    EXPECT_EQ(named_experiment("fig3").sweep.values().size(), 39u);
    EXPECT_EQ(named_experiment("fig4").sweep.values().front(), 4.0);
    EXPECT_EQ(named_experiment("fig5").sweep.values().back(), 400.0);
    EXPECT_THROW(named_experiment("fig6"), ConfigError);
}

TEST(ParseConfig, NamedExperiment) {
    EXPECT_EQ(parse_config("experiment = fig1a"), named_experiment("fig1a"));
    const ExperimentSpec fig3 = parse_config("# concurrence\nexperiment = fig3   # caption defaults\n");
    EXPECT_EQ(fig3.params.t_k, std::vector<double>{2.0});
    EXPECT_EQ(fig3.params.c, (std::vector<double>{15.0, 5.0}));
    EXPECT_EQ(fig3.params.b, (std::vector<double>{0.5, 0.1}));
    EXPECT_EQ(fig3.sweep.variable, SweepVariable::n_sites);
}

TEST(ParseConfig, OverridesDefaults) {
    const ExperimentSpec spec = parse_config("experiment = fig1a\nc = 40\n");
    ExperimentSpec expected = named_experiment("fig1a");
    expected.params.c = {40.0};
    EXPECT_EQ(spec, expected);

    const ExperimentSpec lists = parse_config("c = 5, 10\nexperiment = fig1a\nN = 64\nsweep_stop = 2\nout = x.csv");
    EXPECT_EQ(lists.params.c, (std::vector<double>{5.0, 10.0}));
    EXPECT_EQ(lists.params.n_sites, std::vector<int>{64});
    EXPECT_EQ(lists.sweep.stop, 2.0);
    EXPECT_EQ(output_file_name(lists), "x.csv");
    EXPECT_EQ(output_file_name(named_experiment("fig4")), "fig4.csv");
}

TEST(ParseConfig, Custom) {
    const ExperimentSpec spec =
        parse_config("experiment = custom\nsweep = b\nsweep_start = 0\nsweep_stop = 1\nsweep_step = 0.25\nN = 40\nt = 2");
    EXPECT_EQ(spec.sweep.variable, SweepVariable::b);
    EXPECT_EQ(spec.sweep.values(), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    EXPECT_EQ(spec.params.t, std::vector<double>{2.0});
}

TEST(ParseConfig, ErrorsCarryLineNumbers) {
    EXPECT_EQ(config_error_line("experiment = fig1a\nthis line has no equals"), 2);
    EXPECT_EQ(config_error_line("# comment\n\nexperiment = fig1a\nfoo = 3"), 4);
    EXPECT_EQ(config_error_line("experiment = fig1a\nc = fast"), 2);
    EXPECT_EQ(config_error_line("experiment = fig1a\nN = 2.5"), 2);
    EXPECT_EQ(config_error_line("experiment = fig1a\nc = 1\nc = 2"), 3);
    EXPECT_EQ(config_error_line("experiment = fig9"), 1);
    EXPECT_EQ(config_error_line("experiment = fig1b\nN = 100"), 2);  // N is swept
    EXPECT_EQ(config_error_line("experiment = fig1a\nsweep = N"), 2);
    EXPECT_EQ(config_error_line("experiment = custom\nsweep = q\n"), 2);
}

TEST(ParseConfig, InvariantViolations) {
    EXPECT_THROW(parse_config("c = 3"), ConfigError);
    EXPECT_THROW(parse_config("experiment = fig1a\nsweep_step = 0"), ConfigError);
    EXPECT_THROW(parse_config("experiment = fig1a\nsweep_start = 10\nsweep_stop = 1"), ConfigError);
    EXPECT_THROW(parse_config("experiment = fig4\nsweep_step = 2.5"), ConfigError);
    EXPECT_THROW(parse_config("experiment = custom\nsweep = t"), ConfigError);
    EXPECT_THROW(parse_config("experiment = custom\nsweep = M\nsweep_start=0\nsweep_stop=4\nsweep_step=1\nN=4,6"),
                 ConfigError);
}

TEST(RunExperiment, Fig1aStartsFromZeroEntropy) {
    ExperimentSpec spec = named_experiment("fig1a");
    spec.sweep.stop = 1.0;
    const CsvTable t = run_experiment(spec);
    EXPECT_EQ(t.header(), (std::vector<std::string>{"t", "S_N200", "S_N100", "S_N50", "Savg_N200", "Savg_N100",
                                                    "Savg_N50"}));
    for (double v : t.rows().front()) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(t.rows().size(), 21u);
}

TEST(RunExperiment, DeterministicCsv) {
    const ExperimentSpec spec = named_experiment("fig2c");
    EXPECT_EQ(run_experiment(spec).to_csv(), run_experiment(spec).to_csv());
}

TEST(RunExperiment, Fig1dCarriesExtendedReference) {
    const CsvTable t = run_experiment(named_experiment("fig1d"));
    const std::size_t ext = column(t, "Savg_ext");
    const std::size_t ext_total = column(t, "S_ext");
    for (const auto& row : t.rows()) {
        const double n = row[0];
        const double ref = std::log(n) / n - (1 - 1 / n) * std::log(1 - 1 / n);
        EXPECT_NEAR(row[ext], ref, 1e-14);
        EXPECT_NEAR(row[ext_total], n * ref, 1e-11);
        EXPECT_GT(row[ext], row[column(t, "Savg_b0")]);
        EXPECT_GT(row[column(t, "S_b0")], row[column(t, "S_b0.3")]);
        EXPECT_GT(row[column(t, "S_b0.3")], row[column(t, "S_b0.5")]);
    }
}

TEST(RunExperiment, Fig3ColumnsAndOrdering) {
    const CsvTable t = run_experiment(named_experiment("fig3"));
    EXPECT_EQ(t.header(), (std::vector<std::string>{"N", "C_c15_b0.5", "C_c15_b0.1", "C_c5_b0.5", "C_c5_b0.1"}));
    for (const auto& row : t.rows()) {
        // stronger resonance coupling and slower transfer both lower concurrence
        EXPECT_GE(row[2], row[1]);
        EXPECT_GE(row[4], row[3]);
        EXPECT_GE(row[1], row[3]);
    }
}

TEST(RunExperiment, Fig4TwoExcitonRatioDominates) {
    const CsvTable t = run_experiment(named_experiment("fig4"));
    EXPECT_EQ(t.header(), (std::vector<std::string>{"N", "zeta1", "zeta2"}));
    for (const auto& row : t.rows()) EXPECT_GT(row[2], row[1]) << row[0];
}

TEST(RunExperiment, Fig5ApproachesPlateau) {
    const CsvTable t = run_experiment(named_experiment("fig5"));
    const double limit = 2.0 - std::numbers::ln2;
    for (std::size_t i = 1; i < t.rows().size(); ++i) {
        EXPECT_GT(t.rows()[i][1], t.rows()[i - 1][1]);
        if (t.rows()[i][0] >= 200) EXPECT_LT(std::abs(t.rows()[i][1] - limit) / limit, 0.02);
    }
}

TEST(RunExperiment, CustomSweeps) {
    const CsvTable over_b = run_experiment(
        parse_config("experiment = custom\nsweep = b\nsweep_start = 0\nsweep_stop = 1\nsweep_step = 0.5\nN = 40\nt = 2\nc = 5"));
    EXPECT_EQ(over_b.header(), (std::vector<std::string>{"b", "S", "Savg", "survival", "ipr", "C_ipr"}));
    EXPECT_GT(over_b.rows()[0][1], over_b.rows()[2][1]);

    const CsvTable over_m = run_experiment(
        parse_config("experiment = custom\nsweep = M\nsweep_start = 0\nsweep_stop = 10\nsweep_step = 1\nN = 10"));
    EXPECT_EQ(over_m.header(), (std::vector<std::string>{"M", "E_geo", "lambda"}));
    EXPECT_NEAR(over_m.rows()[5][1], -std::log(252.0 / 1024.0), 1e-12);

    const CsvTable over_tk = run_experiment(parse_config(
        "experiment = custom\nsweep = t_k\nsweep_start = 1\nsweep_stop = 3\nsweep_step = 1\nb = 0.5\nc = 15, 5\nN = 500"));
    EXPECT_EQ(over_tk.header(),
              (std::vector<std::string>{"t_k", "Nc_spano_c15", "Nc_spano_c5", "C_spano_c15", "C_spano_c5"}));
    EXPECT_NEAR(over_tk.rows()[1][1], 16.552, 1e-3);
}

TEST(RunExperiment, DomainErrorsPropagate) {
    ExperimentSpec spec = named_experiment("fig1a");
    spec.params.c = {0.0};
    EXPECT_THROW(run_experiment(spec), DomainError);
    ExperimentSpec fig3 = named_experiment("fig3");
    fig3.params.b = {0.0};
    EXPECT_THROW(run_experiment(fig3), DomainError);
}

TEST(SweepVariables, RoundTripNames) {
    for (const char* name : {"t", "N", "a", "b", "c", "t_k", "M"}) {
        const auto v = parse_sweep_variable(name);
        ASSERT_TRUE(v.has_value());
        EXPECT_EQ(sweep_variable_name(*v), name);
    }
    EXPECT_FALSE(parse_sweep_variable("x").has_value());
}

}  // namespace
}  // namespace jband
