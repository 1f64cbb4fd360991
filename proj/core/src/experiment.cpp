#include "jband/experiment.hpp"

#include "jband/measures.hpp"
#include "jband/multipartite.hpp"
#include "jband/params.hpp"
#include "jband/propagator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace jband {

namespace {

constexpr std::size_t kMaxSweepPoints = 1'000'000;

// Which set of columns an experiment produces.
enum class Layout { entropy, entropy_with_extended, concurrence, zeta, chi3, custom };

Layout layout_of(std::string_view name) {
    if (name == "fig1d") return Layout::entropy_with_extended;
    if (name.starts_with("fig1") || name.starts_with("fig2")) return Layout::entropy;
    if (name == "fig3") return Layout::concurrence;
    if (name == "fig4") return Layout::zeta;
    if (name == "fig5") return Layout::chi3;
    return Layout::custom;
}

// One fully specified parameter point.
struct Point {
    int n_sites{0};
    double t{0.0};
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double t_k{0.0};
    int m{0};

    ModelParams model() const { return ModelParams{a, b, c, t_k, n_sites}; }
};

struct Curve {
    Point base;
    std::string label;  // empty for a single curve
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view text, int line) {
    const std::string s = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ConfigError("expected a number, got '" + s + "'", line);
    }
    return v;
}

int parse_int(std::string_view text, int line) {
    const std::string s = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("expected an integer, got '" + s + "'", line);
    }
    return v;
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view text, int line, Parse parse) {
    std::vector<T> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos), line));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<double> doubles(std::string_view text, int line) { return parse_list<double>(text, line, parse_double); }
std::vector<int> ints(std::string_view text, int line) { return parse_list<int>(text, line, parse_int); }

std::string label_value(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Curves are the product of all multi-valued lists, ordered N, t, c, a, b, t_k
// with the last key varying fastest.
std::vector<Curve> expand_curves(const ExperimentSpec& spec) {
    const ParameterSets& p = spec.params;
    const SweepVariable sv = spec.sweep.variable;

    struct Axis {
        SweepVariable var;
        std::vector<double> values;
    };
    std::vector<Axis> axes = {
        {SweepVariable::n_sites, {p.n_sites.begin(), p.n_sites.end()}},
        {SweepVariable::t, p.t},
        {SweepVariable::c, p.c},
        {SweepVariable::a, p.a},
        {SweepVariable::b, p.b},
        {SweepVariable::t_k, p.t_k},
    };
    std::erase_if(axes, [sv](const Axis& ax) { return ax.var == sv; });

    std::vector<Curve> curves{Curve{}};
    for (const Axis& ax : axes) {
        std::vector<Curve> next;
        for (const Curve& cur : curves) {
            for (double v : ax.values) {
                Curve c = cur;
                switch (ax.var) {
                    case SweepVariable::n_sites: c.base.n_sites = static_cast<int>(v); break;
                    case SweepVariable::t: c.base.t = v; break;
                    case SweepVariable::c: c.base.c = v; break;
                    case SweepVariable::a: c.base.a = v; break;
                    case SweepVariable::b: c.base.b = v; break;
                    case SweepVariable::t_k: c.base.t_k = v; break;
                    case SweepVariable::m: break;
                }
                if (ax.values.size() > 1) {
                    if (!c.label.empty()) c.label += '_';
                    c.label += std::string(sweep_variable_name(ax.var)) + label_value(v);
                }
                next.push_back(std::move(c));
            }
        }
        curves = std::move(next);
    }
    return curves;
}

Point at_sweep(Point p, SweepVariable var, double v) {
    switch (var) {
        case SweepVariable::t: p.t = v; break;
        case SweepVariable::n_sites: p.n_sites = static_cast<int>(std::lround(v)); break;
        case SweepVariable::a: p.a = v; break;
        case SweepVariable::b: p.b = v; break;
        case SweepVariable::c: p.c = v; break;
        case SweepVariable::t_k: p.t_k = v; break;
        case SweepVariable::m: p.m = static_cast<int>(std::lround(v)); break;
    }
    return p;
}

// A quantity evaluated at one point, possibly producing several columns at once.
using Evaluator = std::function<std::vector<double>(const Point&)>;

struct ColumnPlan {
    std::vector<std::string> quantities;  // column prefixes, in block order
    Evaluator evaluate;                   // returns one value per quantity
};

std::vector<double> entropy_pair(const Point& p) {
    const EntropyReport r = entropy_report(occupation_profile(p.t, p.model()));
    return {r.total, r.average};
}

ColumnPlan plan_for(const ExperimentSpec& spec) {
    switch (layout_of(spec.name)) {
        case Layout::entropy:
        case Layout::entropy_with_extended:
            return {{"S", "Savg"}, entropy_pair};
        case Layout::concurrence:
            return {{"C"}, [](const Point& p) {
                        const int n = p.n_sites;
                        return std::vector<double>{concurrence_vs_size_curve(p.model(), std::span(&n, 1)).front().concurrence};
                    }};
        case Layout::zeta:
            return {{"zeta1", "zeta2"}, [](const Point& p) {
                        const ZetaRatios z = zeta_ratios(p.n_sites);
                        return std::vector<double>{z.zeta1, z.zeta2};
                    }};
        case Layout::chi3:
            return {{"chi3_reduced"}, [](const Point& p) { return std::vector<double>{chi3_reduced(p.n_sites)}; }};
        case Layout::custom:
            break;
    }
    switch (spec.sweep.variable) {
        case SweepVariable::t_k:
            return {{"Nc_spano", "C_spano"}, [](const Point& p) {
                        const double nc = std::max(1.0, spano_coherence_size(p.model()));
                        return std::vector<double>{nc, average_concurrence(nc, p.n_sites).avg_concurrence};
                    }};
        case SweepVariable::m:
            return {{"E_geo", "lambda"}, [](const Point& p) {
                        const SymmetricState s{p.n_sites, p.m};
                        return std::vector<double>{geometric_entropy(s), lambda_max(s)};
                    }};
        default:
            return {{"S", "Savg", "survival", "ipr", "C_ipr"}, [](const Point& p) {
                        const OccupationProfile prof = occupation_profile(p.t, p.model());
                        const EntropyReport r = entropy_report(prof);
                        const double zeta = ipr(prof);
                        return std::vector<double>{r.total, r.average, prof.total(), zeta,
                                                   average_concurrence(zeta, p.n_sites).avg_concurrence};
                    }};
    }
}

ExperimentSpec make(std::string name, ParameterSets params, Sweep sweep) {
    ExperimentSpec s;
    s.name = std::move(name);
    s.params = std::move(params);
    s.sweep = sweep;
    return s;
}

constexpr Sweep kTimeGrid{SweepVariable::t, 0.0, 10.0, 0.05};
constexpr Sweep kEntropySizeGrid{SweepVariable::n_sites, 10.0, 300.0, 10.0};
constexpr Sweep kConcurrenceSizeGrid{SweepVariable::n_sites, 10.0, 200.0, 5.0};
constexpr Sweep kEvenSizeGrid{SweepVariable::n_sites, 4.0, 400.0, 4.0};

}  // namespace

std::string_view sweep_variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::t: return "t";
        case SweepVariable::n_sites: return "N";
        case SweepVariable::a: return "a";
        case SweepVariable::b: return "b";
        case SweepVariable::c: return "c";
        case SweepVariable::t_k: return "t_k";
        case SweepVariable::m: return "M";
    }
    return "?";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
    for (SweepVariable v : {SweepVariable::t, SweepVariable::n_sites, SweepVariable::a, SweepVariable::b,
                            SweepVariable::c, SweepVariable::t_k, SweepVariable::m}) {
        if (sweep_variable_name(v) == name) return v;
    }
    return std::nullopt;
}

std::vector<double> Sweep::values() const {
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {"fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b",
                                                   "fig2c", "fig3",  "fig4",  "fig5",  "custom"};
    return names;
}

ExperimentSpec named_experiment(std::string_view name) {
    ParameterSets p;
    p.t_k = {1.0};
    if (name == "fig1a") {
        p.n_sites = {200, 100, 50};
        p.a = {0.0};
        p.b = {0.0};
        p.c = {30.0};
        return make("fig1a", p, kTimeGrid);
    }
    if (name == "fig1b") {
        p.t = {2.0, 5.0, 9.0};
        p.a = {0.0};
        p.b = {0.0};
        p.c = {30.0};
        return make("fig1b", p, kEntropySizeGrid);
    }
    if (name == "fig1c") {
        p.c = {10.0, 20.0, 40.0};
        p.a = {0.0};
        p.b = {0.0};
        p.t = {2.0};
        return make("fig1c", p, kEntropySizeGrid);
    }
    if (name == "fig1d") {
        p.b = {0.0, 0.3, 0.5};
        p.a = {0.0};
        p.c = {30.0};
        p.t = {6.0};
        return make("fig1d", p, kEntropySizeGrid);
    }
    if (name == "fig2a") {
        p.n_sites = {150};
        p.b = {0.0};
        p.c = {10.0};
        p.a = {0.0, 0.3, 0.7, 1.5};
        return make("fig2a", p, kTimeGrid);
    }
    if (name == "fig2b") {
        p.n_sites = {100};
        p.a = {0.0};
        p.c = {20.0};
        p.b = {0.0, 0.5, 1.0};
        return make("fig2b", p, kTimeGrid);
    }
    if (name == "fig2c") {
        p.n_sites = {200};
        p.a = {0.5};
        p.b = {0.3};
        p.c = {40.0, 20.0, 5.0};
        return make("fig2c", p, kTimeGrid);
    }
    if (name == "fig3") {
        p.t_k = {2.0};
        p.c = {15.0, 5.0};
        p.b = {0.5, 0.1};
        p.a = {0.0};
        return make("fig3", p, kConcurrenceSizeGrid);
    }
    if (name == "fig4") {
        return make("fig4", p, kEvenSizeGrid);
    }
    if (name == "fig5") {
        return make("fig5", p, kEvenSizeGrid);
    }
    if (name == "custom") {
        return make("custom", ParameterSets{}, Sweep{});
    }
    throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::string describe(const ExperimentSpec& spec) {
    auto list = [](const auto& values) {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            s += (i ? "," : "") + label_value(static_cast<double>(values[i]));
        }
        return s;
    };
    const ParameterSets& p = spec.params;
    const SweepVariable sv = spec.sweep.variable;
    std::string out = spec.name + ":";
    auto field = [&](SweepVariable var, const std::string& values) {
        if (var != sv) out += " " + std::string(sweep_variable_name(var)) + "=" + values;
    };
    switch (layout_of(spec.name)) {
        case Layout::zeta:
        case Layout::chi3:
            break;
        case Layout::concurrence:
            field(SweepVariable::c, list(p.c));
            field(SweepVariable::b, list(p.b));
            field(SweepVariable::t_k, list(p.t_k));
            break;
        default:
            field(SweepVariable::n_sites, list(p.n_sites));
            field(SweepVariable::t, list(p.t));
            field(SweepVariable::a, list(p.a));
            field(SweepVariable::b, list(p.b));
            field(SweepVariable::c, list(p.c));
            if (layout_of(spec.name) == Layout::custom) field(SweepVariable::t_k, list(p.t_k));
    }
    out += "  sweep " + std::string(sweep_variable_name(sv)) + " in [" + label_value(spec.sweep.start) + ", " +
           label_value(spec.sweep.stop) + "] step " + label_value(spec.sweep.step);
    return out;
}

void validate_spec(const ExperimentSpec& spec) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), spec.name) == names.end()) {
        throw ConfigError("unknown experiment '" + spec.name + "'");
    }
    const Sweep& sw = spec.sweep;
    if (!(sw.step > 0.0) || !std::isfinite(sw.step)) {
        throw ConfigError("sweep_step must be positive");
    }
    if (!(sw.start < sw.stop) || !std::isfinite(sw.start) || !std::isfinite(sw.stop)) {
        throw ConfigError("sweep_start must be below sweep_stop");
    }
    if ((sw.stop - sw.start) / sw.step >= static_cast<double>(kMaxSweepPoints)) {
        throw ConfigError("sweep has too many points");
    }
    if (layout_of(spec.name) != Layout::custom) {
        const SweepVariable expected = named_experiment(spec.name).sweep.variable;
        if (sw.variable != expected) {
            throw ConfigError(spec.name + " sweeps " + std::string(sweep_variable_name(expected)));
        }
    }
    const bool integral = sw.variable == SweepVariable::n_sites || sw.variable == SweepVariable::m;
    if (integral) {
        for (double v : sw.values()) {
            if (std::abs(v - std::round(v)) > 1e-9) {
                throw ConfigError(std::string(sweep_variable_name(sw.variable)) + " sweep must hit integers only");
            }
        }
    }
    const ParameterSets& p = spec.params;
    if (p.n_sites.empty() || p.a.empty() || p.b.empty() || p.c.empty() || p.t_k.empty() || p.t.empty()) {
        throw ConfigError("parameter lists must not be empty");
    }
    if (sw.variable == SweepVariable::m && p.n_sites.size() != 1) {
        throw ConfigError("an M sweep needs exactly one N");
    }
}

ExperimentSpec parse_config(std::string_view text) {
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, Entry> entries;
    static const std::vector<std::string> known = {"experiment", "sweep",       "N",          "a",
                                                   "b",          "c",           "t_k",        "t",
                                                   "sweep_start", "sweep_stop", "sweep_step", "out"};
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key", line_no);
        if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
        if (!entries.emplace(key, Entry{value, line_no}).second) {
            throw ConfigError("duplicate key '" + key + "'", line_no);
        }
    }

    const auto exp = entries.find("experiment");
    if (exp == entries.end()) {
        throw ConfigError("missing 'experiment' key");
    }
    ExperimentSpec spec;
    try {
        spec = named_experiment(exp->second.value);
    } catch (const ConfigError& e) {
        throw ConfigError(e.what(), exp->second.line);
    }
    const bool custom = spec.name == "custom";

    for (const auto& [key, entry] : entries) {
        const std::string& v = entry.value;
        const int ln = entry.line;
        if (key == "experiment") continue;
        if (key == "sweep") {
            if (!custom) throw ConfigError("'sweep' applies to custom experiments only", ln);
            const auto var = parse_sweep_variable(v);
            if (!var) throw ConfigError("sweep must be one of t, N, a, b, c, t_k, M", ln);
            spec.sweep.variable = *var;
        } else if (key == "sweep_start") {
            spec.sweep.start = parse_double(v, ln);
        } else if (key == "sweep_stop") {
            spec.sweep.stop = parse_double(v, ln);
        } else if (key == "sweep_step") {
            spec.sweep.step = parse_double(v, ln);
        } else if (key == "out") {
            spec.output_path = v;
        } else if (key == "N") {
            spec.params.n_sites = ints(v, ln);
        } else if (key == "a") {
            spec.params.a = doubles(v, ln);
        } else if (key == "b") {
            spec.params.b = doubles(v, ln);
        } else if (key == "c") {
            spec.params.c = doubles(v, ln);
        } else if (key == "t_k") {
            spec.params.t_k = doubles(v, ln);
        } else if (key == "t") {
            spec.params.t = doubles(v, ln);
        }
    }
    if (custom) {
        for (const char* required : {"sweep", "sweep_start", "sweep_stop", "sweep_step"}) {
            if (!entries.contains(required)) {
                throw ConfigError(std::string("custom experiments need '") + required + "'");
            }
        }
    }
    const SweepVariable sv = spec.sweep.variable;
    for (const auto& [key, entry] : entries) {
        if (parse_sweep_variable(key) == sv) {
            throw ConfigError("'" + key + "' is the sweep variable; set sweep_start/sweep_stop/sweep_step instead",
                              entry.line);
        }
    }
    validate_spec(spec);
    return spec;
}

CsvTable run_experiment(const ExperimentSpec& spec) {
    validate_spec(spec);
    const std::vector<Curve> curves = expand_curves(spec);
    const ColumnPlan plan = plan_for(spec);
    const Layout layout = layout_of(spec.name);
    const bool per_curve = layout != Layout::zeta && layout != Layout::chi3;
    const bool extended = layout == Layout::entropy_with_extended;

    std::vector<std::string> header{std::string(sweep_variable_name(spec.sweep.variable))};
    for (const std::string& q : plan.quantities) {
        if (!per_curve) {
            header.push_back(q);
            continue;
        }
        for (const Curve& c : curves) {
            header.push_back(c.label.empty() ? q : q + "_" + c.label);
        }
        if (extended) header.push_back(q + "_ext");
    }

    const std::size_t n_curves = per_curve ? curves.size() : 1;
    const std::size_t n_q = plan.quantities.size();
    CsvTable table(header);
    for (double x : spec.sweep.values()) {
        const bool integral = spec.sweep.variable == SweepVariable::n_sites || spec.sweep.variable == SweepVariable::m;
        std::vector<double> row(header.size(), 0.0);
        row[0] = integral ? std::round(x) : x;
        const std::size_t block = n_curves + (extended ? 1 : 0);
        for (std::size_t ci = 0; ci < n_curves; ++ci) {
            const std::vector<double> vals = plan.evaluate(at_sweep(curves[ci].base, spec.sweep.variable, x));
            for (std::size_t qi = 0; qi < n_q; ++qi) {
                row[1 + qi * block + ci] = vals[qi];
            }
        }
        if (extended) {
            const int n = static_cast<int>(std::lround(x));
            const double ref = extended_state_entropy(n);
            row[1 + n_curves] = n * ref;           // S
            row[1 + block + n_curves] = ref;       // Savg
        }
        table.add_row(std::move(row));
    }
    return table;
}

std::string output_file_name(const ExperimentSpec& spec) {
    return spec.output_path.empty() ? spec.name + ".csv" : spec.output_path;
}

}  // namespace jband
