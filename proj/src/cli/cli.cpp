#include "collatz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "collatz/closed_form.hpp"
#include "collatz/constructors.hpp"
#include "collatz/errors.hpp"
#include "collatz/orbit.hpp"
#include "collatz/probes.hpp"
#include "collatz/rhythm.hpp"

namespace collatz::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { human, csv, json };

// Usage errors detected after CLI11 has finished parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Nat parse_nat(const std::string& text, const char* what) {
    auto n = Nat::try_parse(text);
    if (!n) throw UsageError(std::string(what) + " must be a plain decimal integer, got '" + text + "'");
    return *std::move(n);
}

Nat parse_positive(const std::string& text, const char* what) {
    Nat n = parse_nat(text, what);
    if (n.is_zero()) {
        throw DomainError(std::string(what) + " must be a positive integer (x >= 1), got 0");
    }
    return n;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto n = Nat::try_parse(item);
        if (!n || !n->fits_u64()) throw UsageError(std::string(what) + ": bad entry '" + item + "'");
        out.push_back(n->to_u64());
    }
    if (out.empty()) throw UsageError(std::string(what) + " must not be empty");
    return out;
}

std::vector<Nat> parse_nat_list(const std::string& text, const char* what) {
    std::vector<Nat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_positive(item, what));
    if (out.empty()) throw UsageError(std::string(what) + " must not be empty");
    return out;
}

template <typename Range>
std::string joined(const Range& r, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : r) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

Json nat_array(const std::vector<Nat>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(v.to_string());
    return a;
}

Json u64_array(std::span<const std::uint64_t> values) {
    Json a = Json::array();
    for (auto v : values) a.push_back(v);
    return a;
}

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_text(bool b) { return b ? "true" : "false"; }

// ---- orbit ---------------------------------------------------------------

struct OrbitArgs {
    std::string x1;
    std::uint64_t steps = 1'000'000;
};

int cmd_orbit(const OrbitArgs& a, Format fmt, std::ostream& os) {
    const OrbitRecord rec = orbit(parse_positive(a.x1, "x1"), a.steps);
    const auto sizes = rec.step_sizes();
    switch (fmt) {
        case Format::csv:
            os << "index,value,step_size\n";
            for (std::size_t i = 0; i < rec.steps.size(); ++i) {
                os << i + 1 << ',' << rec.steps[i].value << ',' << rec.steps[i].step_size << '\n';
            }
            break;
        case Format::json: {
            Json steps = Json::array();
            for (const auto& s : rec.steps) steps.push_back({{"value", s.value.to_string()}, {"m", s.step_size}});
            emit_json(os, {{"start", rec.start.to_string()},
                           {"steps", steps},
                           {"rhythm", u64_array(sizes)},
                           {"terminated", rec.terminated}});
            break;
        }
        case Format::human:
            os << "start: " << rec.start << '\n'
               << "steps: " << rec.steps.size() << '\n'
               << "terminated: " << yes_no(rec.terminated) << '\n'
               << "rhythm: " << joined(sizes) << '\n';
            for (std::size_t i = 0; i < rec.steps.size(); ++i) {
                os << "  x_" << i + 2 << " = " << rec.steps[i].value << "  (m = " << rec.steps[i].step_size
                   << ")\n";
            }
            break;
    }
    return kSuccess;
}

// ---- construct -----------------------------------------------------------

struct ConstructArgs {
    std::string direction;
    std::uint64_t n = 0;
    std::string k = "1";
    std::uint64_t m = 0;  // 0: not given
    std::uint64_t family = 0;
};

int cmd_construct(const ConstructArgs& a, Format fmt, std::ostream& os) {
    MonotoneSpec spec;
    if (a.direction == "inc" || a.direction == "increasing") {
        if (a.m != 0 && a.m != 1) throw DomainError("--direction inc uses step size 1; drop --m or pass --m 1");
        spec = construct_increasing(a.n, parse_positive(a.k, "--k"));
    } else if (a.direction == "dec" || a.direction == "decreasing") {
        if (a.m < 2) throw DomainError("--direction dec requires --m >= 2");
        spec = construct_decreasing(a.n, a.m, a.family);
    } else {
        throw UsageError("--direction must be inc or dec");
    }

    const bool inc = spec.direction == Direction::increasing;
    const Nat& actual = spec.sequence.back();
    switch (fmt) {
        case Format::csv:
            os << "index,value,step_size\n";
            for (std::size_t i = 0; i < spec.sequence.size(); ++i) {
                os << i + 1 << ',' << spec.sequence[i] << ',';
                if (i < spec.step_sizes.size()) os << spec.step_sizes[i];
                os << '\n';
            }
            break;
        case Format::json:
            emit_json(os, {{"direction", inc ? "increasing" : "decreasing"},
                           {"n", spec.n},
                           {"m", spec.m},
                           {"K", spec.multiplier.to_string()},
                           {"start", spec.start.to_string()},
                           {"sequence", nat_array(spec.sequence)},
                           {"rhythm", u64_array(spec.step_sizes)},
                           {"predicted_final", spec.predicted_final.to_string()},
                           {"actual_final", actual.to_string()},
                           {"verified", true}});
            break;
        case Format::human:
            os << (inc ? "increasing" : "decreasing") << " run, n = " << spec.n << ", m = " << spec.m
               << ", K = " << spec.multiplier << '\n'
               << "start: " << spec.start << '\n'
               << "sequence: " << joined(spec.sequence) << '\n'
               << "step sizes: " << joined(spec.step_sizes) << '\n'
               << "predicted final: " << spec.predicted_final << '\n'
               << "actual final:    " << actual << '\n'
               << "verified: yes\n";
            break;
    }
    return kSuccess;
}

// ---- figure1 -------------------------------------------------------------

struct FigureArgs {
    std::uint64_t n = 7;
    std::string k_list = "1,2,3";
};

int cmd_figure1(const FigureArgs& a, Format fmt, std::ostream& os) {
    const auto ks = parse_nat_list(a.k_list, "--k-list");
    std::vector<MonotoneSpec> series;
    series.reserve(ks.size());
    for (const auto& k : ks) series.push_back(construct_increasing(a.n, k));

    if (fmt == Format::json) {
        Json s = Json::array();
        for (const auto& spec : series) {
            s.push_back({{"K", spec.multiplier.to_string()}, {"values", nat_array(spec.sequence)}});
        }
        emit_json(os, {{"n", a.n}, {"series", s}});
        return kSuccess;
    }

    // Wide CSV: one shared index column, one value column per K.
    os << "index";
    for (const auto& spec : series) os << ",K=" << spec.multiplier;
    os << '\n';
    for (std::uint64_t i = 0; i <= a.n; ++i) {
        os << i + 1;
        for (const auto& spec : series) os << ',' << spec.sequence[i];
        os << '\n';
    }
    return kSuccess;
}

// ---- rhythm --------------------------------------------------------------

struct RhythmArgs {
    std::string x1;
    std::uint64_t n = 1;
    std::uint64_t count = 1;
};

int cmd_rhythm(const RhythmArgs& a, Format fmt, std::ostream& os) {
    const RhythmClass cls = class_of(parse_positive(a.x1, "x1"), a.n);
    const ClassEnumeration e = enumerate_class(cls, a.count);
    switch (fmt) {
        case Format::csv:
            os << "R,start,verified,rhythm\n";
            for (const auto& m : e.members) {
                os << m.offset << ',' << m.start << ',' << bool_text(m.verified) << ',' << joined(m.observed)
                   << '\n';
            }
            break;
        case Format::json: {
            Json members = Json::array();
            for (const auto& m : e.members) {
                members.push_back({{"R", m.offset},
                                   {"start", m.start.to_string()},
                                   {"verified", m.verified},
                                   {"rhythm", u64_array(m.observed)},
                                   {"diagnostic", m.diagnostic}});
            }
            emit_json(os, {{"start", cls.base.to_string()},
                           {"n", cls.n},
                           {"rhythm", u64_array(cls.rhythm.sizes())},
                           {"D", cls.modulus.to_string()},
                           {"members", members},
                           {"all_verified", e.all_verified()}});
            break;
        }
        case Format::human:
            os << "start: " << cls.base << '\n'
               << "n: " << cls.n << '\n'
               << "rhythm: " << joined(cls.rhythm.sizes()) << '\n'
               << "D: " << cls.modulus << '\n'
               << "members:\n";
            for (const auto& m : e.members) {
                os << "  R=" << m.offset << "  " << m.start << "  "
                   << (m.verified ? std::string("verified") : "FAILED: " + m.diagnostic) << '\n';
            }
            break;
    }
    return kSuccess;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string lo;
    std::string hi;
    std::uint64_t budget = 1'000'000;
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::string kernel = "auto";
};

int cmd_verify(const VerifyArgs& a, Format fmt, std::ostream& os) {
    kernels::KernelKind kind{};
    if (!kernels::parse_kernel(a.kernel, kind)) throw UsageError("--kernel must be auto, scalar, avx2 or neon");
    const Nat lo = parse_nat(a.lo, "--lo");
    const Nat hi = parse_nat(a.hi, "--hi");
    const RangeSummary s = verify_range(lo, hi, a.budget, a.workers, kind);
    const std::string first = s.first_unconverged ? s.first_unconverged->to_string() : "";
    switch (fmt) {
        case Format::csv:
            os << "lo,hi,all_converged,max_excursion,worst_start,total_steps,unconverged,first_unconverged\n"
               << s.lo << ',' << s.hi << ',' << bool_text(s.all_converged) << ',' << s.max_excursion << ','
               << s.worst_start << ',' << s.total_steps << ',' << s.unconverged << ',' << first << '\n';
            break;
        case Format::json:
            emit_json(os, {{"lo", s.lo.to_string()},
                           {"hi", s.hi.to_string()},
                           {"all_converged", s.all_converged},
                           {"max_excursion", s.max_excursion.to_string()},
                           {"worst_start", s.worst_start.to_string()},
                           {"total_steps", s.total_steps},
                           {"unconverged", s.unconverged},
                           {"first_unconverged", s.first_unconverged ? Json(first) : Json(nullptr)}});
            break;
        case Format::human:
            os << "range: [" << s.lo << ", " << s.hi << "]\n"
               << "kernel: " << kernels::kernel_name(kind == kernels::KernelKind::automatic ? kernels::best_kernel() : kind)
               << ", workers: " << a.workers << '\n'
               << "all converged: " << yes_no(s.all_converged) << '\n'
               << "max excursion: " << s.max_excursion << " (start " << s.worst_start << ")\n"
               << "total steps: " << s.total_steps << '\n';
            if (s.first_unconverged) {
                os << "unconverged: " << s.unconverged << ", first at " << first << '\n';
            }
            break;
    }
    return s.all_converged ? kSuccess : kComputationError;
}

// ---- cycle ---------------------------------------------------------------

struct CycleArgs {
    std::string x1;
    std::uint64_t steps = 1'000'000;
};

int cmd_cycle(const CycleArgs& a, Format fmt, std::ostream& os) {
    const CycleReport r = cycle_probe(parse_positive(a.x1, "x1"), a.steps);
    switch (fmt) {
        case Format::csv:
            os << "start,cycle_found,is_trivial,cycle_members,steps\n"
               << r.start << ',' << bool_text(r.cycle_found()) << ',' << bool_text(r.is_trivial) << ','
               << joined(r.cycle_members) << ',' << r.steps << '\n';
            break;
        case Format::json:
            emit_json(os, {{"start", r.start.to_string()},
                           {"cycle_found", r.cycle_found()},
                           {"cycle_members", nat_array(r.cycle_members)},
                           {"is_trivial", r.is_trivial},
                           {"steps", r.steps}});
            break;
        case Format::human:
            os << "start: " << r.start << '\n';
            if (r.cycle_found()) {
                os << "cycle: " << joined(r.cycle_members) << (r.is_trivial ? " (trivial)" : " (NON-TRIVIAL)")
                   << '\n';
            } else {
                os << "inconclusive: no repetition within " << r.steps << " steps\n";
            }
            break;
    }
    return r.cycle_found() ? kSuccess : kComputationError;
}

// ---- census --------------------------------------------------------------

struct CensusArgs {
    std::string x1;
    std::uint64_t horizon = 1000;
};

int cmd_census(const CensusArgs& a, Format fmt, std::ostream& os) {
    const GrowthCensus c = growth_census(parse_positive(a.x1, "x1"), a.horizon);
    switch (fmt) {
        case Format::csv:
            os << "index,value,y\n";
            for (std::size_t i = 0; i < c.growth_indices.size(); ++i) {
                const Nat x = (c.y_values[i] << 2) + Nat{3};
                os << c.growth_indices[i] << ',' << x << ',' << c.y_values[i] << '\n';
            }
            break;
        case Format::json:
            emit_json(os, {{"start", c.start.to_string()},
                           {"horizon", c.horizon},
                           {"growth_indices", u64_array(c.growth_indices)},
                           {"y_values", nat_array(c.y_values)},
                           {"distinct_y", c.distinct_y},
                           {"examined", c.examined},
                           {"terminated", c.terminated}});
            break;
        case Format::human:
            os << "start: " << c.start << '\n'
               << "examined: " << c.examined << " of " << c.horizon
               << (c.terminated ? " (orbit reached 1)" : "") << '\n'
               << "growth points: " << c.growth_indices.size() << " (" << c.distinct_y << " distinct y)\n";
            for (std::size_t i = 0; i < c.growth_indices.size(); ++i) {
                os << "  i=" << c.growth_indices[i] << "  y=" << c.y_values[i] << '\n';
            }
            break;
    }
    return kSuccess;
}

// ---- formula -------------------------------------------------------------

struct FormulaArgs {
    std::string x1;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::string rhythm;
};

int cmd_formula(const FormulaArgs& a, Format fmt, std::ostream& os) {
    const Nat x1 = parse_positive(a.x1, "x1");
    RhythmPrefix prefix;
    std::string source;
    if (!a.rhythm.empty()) {
        prefix = RhythmPrefix(parse_u64_list(a.rhythm, "--rhythm"));
        source = "given";
    } else {
        if (a.n == 0) throw UsageError("formula needs --n N or --rhythm m1,m2,...");
        if (a.m != 0) {
            prefix = RhythmPrefix::uniform(a.n - 1, a.m);
            source = "uniform";
        } else {
            source = "orbit";
            if (a.n > 1) {
                const OrbitRecord rec = orbit(x1, a.n - 1);
                if (rec.steps.size() < a.n - 1) {
                    throw OrbitTooShort("orbit of " + x1.to_string() + " reaches 1 after " +
                                        std::to_string(rec.steps.size()) + " step(s)");
                }
                prefix = RhythmPrefix(rec.step_sizes());
            }
        }
    }

    const ExactRational xn = xn_closed_form(x1, prefix);
    const ExactRational X = X_value(x1, prefix);
    std::optional<ExactRational> eq;
    if (source == "uniform") eq = equal_step_X(x1, prefix.n(), a.m);
    const std::vector<std::uint64_t> sizes(prefix.sizes().begin(), prefix.sizes().end());

    switch (fmt) {
        case Format::csv:
            os << "start,n,prefix,xn,X,X_integral\n"
               << x1 << ',' << prefix.n() << ',' << joined(sizes) << ',' << xn << ',' << X << ','
               << bool_text(X.is_integer()) << '\n';
            break;
        case Format::json: {
            Json j{{"start", x1.to_string()},
                   {"n", prefix.n()},
                   {"prefix", u64_array(sizes)},
                   {"prefix_source", source},
                   {"xn", xn.to_string()},
                   {"X", X.to_string()},
                   {"xn_integral", xn.is_integer()},
                   {"X_integral", X.is_integer()}};
            if (eq) j["equal_step_X"] = eq->to_string();
            emit_json(os, j);
            break;
        }
        case Format::human:
            os << "x1: " << x1 << '\n'
               << "n: " << prefix.n() << '\n'
               << "prefix (" << source << "): " << joined(sizes) << '\n'
               << "x_n: " << xn << '\n'
               << "X = y_n + 1: " << X << '\n';
            if (eq) os << "equal-step X: " << *eq << '\n';
            if (xn.is_integer()) {
                os << "x_n is " << (X.is_integer() ? "" : "not ") << "a growth point\n";
            } else {
                os << "x_n is not an integer: the prefix is not a real orbit rhythm for x1\n";
            }
            break;
    }
    return kSuccess;
}

// ---- driver --------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Accelerated Collatz map: orbits, closed forms, monotone runs, rhythm classes, probes",
                 "collatz"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format_name = "human";
    std::string out_path;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to PATH instead of stdout");

    auto* orbit_cmd = app.add_subcommand("orbit", "Iterate the accelerated map from x1");
    OrbitArgs orbit_args;
    orbit_cmd->add_option("x1", orbit_args.x1, "Start value")->required();
    orbit_cmd->add_option("--steps", orbit_args.steps, "Step budget")->capture_default_str();

    auto* construct_cmd = app.add_subcommand("construct", "Build a monotone run with a constant step size");
    ConstructArgs construct_args;
    construct_cmd->add_option("--direction", construct_args.direction, "inc or dec")->required();
    construct_cmd->add_option("--n", construct_args.n, "Number of steps")->required();
    construct_cmd->add_option("--k", construct_args.k, "Multiplier K (inc)")->capture_default_str();
    construct_cmd->add_option("--m", construct_args.m, "Step size m >= 2 (dec)");
    construct_cmd->add_option("--family", construct_args.family, "Family index t (dec)")->capture_default_str();

    auto* figure_cmd = app.add_subcommand("figure1", "Increasing runs for several K as a wide CSV");
    FigureArgs figure_args;
    figure_cmd->add_option("--n", figure_args.n, "Number of steps")->capture_default_str();
    figure_cmd->add_option("--k-list", figure_args.k_list, "Comma-separated multipliers")->capture_default_str();

    auto* rhythm_cmd = app.add_subcommand("rhythm", "Rhythm of x1 and its arithmetic class");
    RhythmArgs rhythm_args;
    rhythm_cmd->add_option("x1", rhythm_args.x1, "Start value")->required();
    rhythm_cmd->add_option("--n", rhythm_args.n, "Rhythm length")->capture_default_str();
    rhythm_cmd->add_option("--enumerate", rhythm_args.count, "Members to list and verify")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Check that every start in [lo, hi] reaches 1");
    VerifyArgs verify_args;
    verify_cmd->add_option("--lo", verify_args.lo, "First start")->required();
    verify_cmd->add_option("--hi", verify_args.hi, "Last start")->required();
    verify_cmd->add_option("--budget", verify_args.budget, "Step budget per start")->capture_default_str();
    verify_cmd->add_option("--workers", verify_args.workers, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--kernel", verify_args.kernel, "auto, scalar, avx2 or neon")->capture_default_str();

    auto* cycle_cmd = app.add_subcommand("cycle", "Look for a cycle on the orbit of x1");
    CycleArgs cycle_args;
    cycle_cmd->add_option("x1", cycle_args.x1, "Start value")->required();
    cycle_cmd->add_option("--steps", cycle_args.steps, "Step budget")->capture_default_str();

    auto* census_cmd = app.add_subcommand("census", "Growth points on the orbit of x1");
    CensusArgs census_args;
    census_cmd->add_option("x1", census_args.x1, "Start value")->required();
    census_cmd->add_option("--horizon", census_args.horizon, "Orbit positions to inspect")->capture_default_str();

    auto* formula_cmd = app.add_subcommand("formula", "Closed-form x_n and X for a step-size prefix");
    FormulaArgs formula_args;
    formula_cmd->add_option("x1", formula_args.x1, "Start value")->required();
    formula_cmd->add_option("--n", formula_args.n, "Index n of x_n");
    formula_cmd->add_option("--m", formula_args.m, "Use the uniform prefix m,...,m");
    formula_cmd->add_option("--rhythm", formula_args.rhythm, "Explicit prefix m1,m2,...");

    std::vector<const char*> argv{"collatz"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    const Format fmt = format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::human;

    std::ostringstream buffer;
    int code = kSuccess;
    if (*orbit_cmd) code = cmd_orbit(orbit_args, fmt, buffer);
    else if (*construct_cmd) code = cmd_construct(construct_args, fmt, buffer);
    else if (*figure_cmd) code = cmd_figure1(figure_args, fmt, buffer);
    else if (*rhythm_cmd) code = cmd_rhythm(rhythm_args, fmt, buffer);
    else if (*verify_cmd) code = cmd_verify(verify_args, fmt, buffer);
    else if (*cycle_cmd) code = cmd_cycle(cycle_args, fmt, buffer);
    else if (*census_cmd) code = cmd_census(census_args, fmt, buffer);
    else if (*formula_cmd) code = cmd_formula(formula_args, fmt, buffer);

    if (out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open --out path '" + out_path + "'");
        file << buffer.str();
        if (!file.flush()) throw UsageError("failed writing '" + out_path + "'");
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsageError;
    } catch (const OrbitTooShort& e) {
        err << "OrbitTooShort: " << e.what() << '\n';
        return kComputationError;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << '\n';
        return kComputationError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputationError;
    }
}

}  // namespace collatz::cli
