#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "subspace/bounds.hpp"
#include "subspace/io.hpp"
#include "subspace/numrange.hpp"
#include "subspace/scenarios.hpp"
#include "subspace/verify.hpp"

namespace {

using namespace subspace;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCondition = 2;
constexpr int kExitVerify = 3;

void apply_tol_env() {
    struct Entry {
        const char* name;
        double Tolerances::* field;
    };
    const Entry entries[] = {
        {"SUBSPACE_TOL_HERMITIAN", &Tolerances::hermitian},
        {"SUBSPACE_TOL_EIG", &Tolerances::eig},
        {"SUBSPACE_TOL_BOUNDARY", &Tolerances::boundary},
        {"SUBSPACE_TOL_CLASSIFY", &Tolerances::classify},
        {"SUBSPACE_TOL_KERNEL", &Tolerances::kernel},
        {"SUBSPACE_TOL_RANK", &Tolerances::rank},
        {"SUBSPACE_TOL_COMM", &Tolerances::comm},
        {"SUBSPACE_TOL_ACUTE", &Tolerances::acute},
        {"SUBSPACE_TOL_UNITARY", &Tolerances::unitary},
        {"SUBSPACE_TOL_PROJECTION", &Tolerances::projection},
        {"SUBSPACE_TOL_PD", &Tolerances::pd},
        {"SUBSPACE_TOL_HULL", &Tolerances::hull},
    };
    for (const Entry& e : entries) {
        const char* raw = std::getenv(e.name);
        if (!raw) continue;
        char* end = nullptr;
        const double value = std::strtod(raw, &end);
        if (end == raw || *end != '\0' || !(value > 0.0) || !(value < 1.0))
            throw ParseError(std::string(e.name) + " must be a number in (0, 1)");
        tols().*e.field = value;
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

struct CommonInputs {
    std::string matrix_a, matrix_v, split_path, out_path;
};

struct Loaded {
    Matrix A, V;
    SpectralSplit split;
};

Loaded load_inputs(const CommonInputs& in) {
    Loaded l{io::read_matrix_json(in.matrix_a), io::read_matrix_json(in.matrix_v),
             io::read_split_json(in.split_path)};
    if (l.A.rows() != l.V.rows())
        throw DimensionMismatch("A and V have different dimensions");
    return l;
}

/// Exit 2 applies when a theorem precondition for the requested disposition
/// fails; the subordinated bounds are unconditional, the annular ones need
/// their norm conditions.
bool conditions_met(const BoundReport& report) {
    if (report.disposition == Disposition::Subordinated) return true;
    return report.conditions.at("apriori_tan") && report.conditions.at("trio");
}

int cmd_bounds(const CommonInputs& in) {
    const Loaded l = load_inputs(in);
    const BoundReport report = analyze(l.A, l.V, l.split);
    emit(io::report_to_json(report), in.out_path);
    return conditions_met(report) ? kExitOk : kExitCondition;
}

int cmd_rotation(const CommonInputs& in) {
    const Loaded l = load_inputs(in);
    const Involution J = involution_from_split(l.A, l.split);
    const Matrix L = l.A + l.V;
    const EigenSystem ls = eigh(L);

    // Same classification route as the bounds analysis, via the report.
    const BoundReport report = analyze(l.A, l.V, l.split);
    Matrix Jp_mat = Matrix::Zero(L.rows(), L.cols());
    const double mid = l.split.disposition == Disposition::Subordinated
                           ? 0.5 * (l.split.sup_minus + l.split.inf_plus)
                           : 0.0;
    Involution Jp = J;
    if (l.split.disposition == Disposition::Subordinated) {
        Jp = sign_involution(L, mid);
    } else {
        for (Eigen::Index i = 0; i < ls.eigenvalues.size(); ++i) {
            const double lam = ls.eigenvalues(i);
            const double sign =
                (lam <= l.split.alpha || lam >= l.split.beta) ? 1.0 : -1.0;
            Jp_mat += sign * ls.eigenvectors.col(i) * ls.eigenvectors.col(i).adjoint();
        }
        Jp = Involution::from_matrix(hermitian_part(Jp_mat));
    }

    const AcuteReport acute = acute_case(J, Jp);
    std::ostringstream out;
    out << "{\n";
    out << "  \"acute\": " << (acute.acute ? "true" : "false") << ",\n";
    out << "  \"smin_IplusJJ\": " << io::format_double(acute.smin_IplusJJ) << ",\n";
    out << "  \"norm_Jdiff\": " << io::format_double(acute.max_diff_action) << ",\n";
    out << "  \"minus_one_margin\": " << io::format_double(acute.minus_one_margin);
    if (acute.acute) {
        const DirectRotation rot = direct_rotation(J, Jp);
        out << ",\n  \"theta\": " << io::format_double(rot.theta) << ",\n";
        out << "  \"projection_gap\": "
            << io::format_double(projection_gap(J.P_minus, Jp.P_minus)) << ",\n";
        out << "  \"sin_theta\": " << io::format_double(std::sin(rot.theta)) << ",\n";
        out << "  \"U\": " << io::matrix_to_json(rot.U) << "\n";
    } else {
        out << "\n";
    }
    out << "}";
    emit(out.str(), in.out_path);
    (void)report;
    return acute.acute ? kExitOk : kExitCondition;
}

int cmd_numrange(const std::string& matrix_path, int steps,
                 const std::string& out_path) {
    const Matrix T = io::read_matrix_json(matrix_path);
    const NumRangeBoundary boundary = numrange_boundary(T, steps);
    emit(io::boundary_to_csv(boundary), out_path);
    return kExitOk;
}

struct SweepConfig {
    std::string scenario;
    std::string out_path;
    int steps = 100;
    int trials = 50;
    std::uint64_t seed = 42;
    double a = 0.0, b = 1.0, coupling = 4.0, d = 1.0, gap = 3.0;
    int n = 8;
};

std::string sweep_tsharp(const SweepConfig& c) {
    std::ostringstream out;
    out << "v,actual_gap,bound_apriori,bound_trio,ratio\n";
    const double cap = std::sqrt(c.b * c.b - c.a * c.a);
    for (int i = 0; i < c.steps; ++i) {
        const double v = 0.99 * cap * i / (c.steps - 1);
        const TsharpInstance inst = gen_tsharp({c.a, c.b, 0.5 * v, 0.5 * v});
        const BoundReport r = analyze(inst.A, inst.V, inst.split);
        out << io::format_double(v) << ',' << io::format_double(*r.actual_gap) << ','
            << io::format_double(r.bound_apriori ? *r.bound_apriori : kInf) << ','
            << io::format_double(r.bound_trio ? *r.bound_trio : kInf) << ','
            << io::format_double(r.sharpness_ratio ? *r.sharpness_ratio : kInf)
            << '\n';
    }
    return out.str();
}

std::string sweep_ksharp(const SweepConfig& c) {
    std::ostringstream out;
    out << "coupling,actual_gap,bound_estin,ratio\n";
    for (int i = 0; i < c.steps; ++i) {
        const double coupling = 0.1 + (c.coupling - 0.1) * i / (c.steps - 1);
        KsharpGrid g;
        g.a = c.a;
        g.coupling = coupling;
        g.N = c.n;
        g.t_max = std::max(c.b, c.a + 1.0);
        const KsharpInstance inst = gen_ksharp(g);
        const Involution Jp = sign_involution(Matrix(inst.A + inst.V), 0.0);
        const DirectRotation rot = direct_rotation(inst.J, Jp);
        const double gap = projection_gap(inst.J.P_minus, Jp.P_minus);
        const double bound = std::sin(0.5 * std::atan(coupling));
        out << io::format_double(coupling) << ',' << io::format_double(gap) << ','
            << io::format_double(bound) << ',' << io::format_double(gap / bound)
            << '\n';
        (void)rot;
    }
    return out.str();
}

std::string sweep_random(const SweepConfig& c, Disposition disposition) {
    std::ostringstream out;
    const bool annular = disposition == Disposition::Annular;
    out << (annular
                ? "trial,norm_V,d,actual_gap,bound_apriori,bound_trio,ratio\n"
                : "trial,norm_V,d,actual_gap,bound_estin,bound_dk,ratio\n");
    for (int t = 0; t < c.trials; ++t) {
        RandomSpec spec;
        spec.n_minus = std::max(1, c.n / 2);
        spec.n_plus = std::max(annular ? 2 : 1, c.n - c.n / 2);
        spec.disposition = disposition;
        spec.d = c.d;
        spec.gap_len = annular ? c.gap : 0.0;
        spec.seed = c.seed + static_cast<std::uint64_t>(t);
        // Stay inside every bound's validity window so ratios are defined.
        const double cap =
            annular ? 0.98 * std::min(c.d, std::sqrt(c.d * (c.gap - c.d))) : c.d;
        spec.v_norm = cap * (t + 1) / c.trials;
        const RandomInstance inst = gen_random(spec);
        const BoundReport r = analyze(inst.A, inst.V, inst.split);
        const auto opt = [](const std::optional<double>& v) {
            return io::format_double(v ? *v : kInf);
        };
        out << t << ',' << io::format_double(r.norm_V) << ','
            << io::format_double(c.d) << ',' << opt(r.actual_gap) << ','
            << (annular ? opt(r.bound_apriori) : opt(r.bound_estin)) << ','
            << (annular ? opt(r.bound_trio) : opt(r.bound_dk)) << ','
            << opt(r.sharpness_ratio) << '\n';
    }
    return out.str();
}

int cmd_sweep(const SweepConfig& c) {
    if (c.steps < 2) throw ParseError("--steps must be >= 2");
    if (c.trials < 1) throw ParseError("--trials must be >= 1");
    std::string csv;
    if (c.scenario == "tsharp")
        csv = sweep_tsharp(c);
    else if (c.scenario == "ksharp")
        csv = sweep_ksharp(c);
    else if (c.scenario == "random-subordinated")
        csv = sweep_random(c, Disposition::Subordinated);
    else if (c.scenario == "random-annular")
        csv = sweep_random(c, Disposition::Annular);
    else
        throw ParseError("unknown scenario: " + c.scenario);
    emit(csv, c.out_path);
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
               bool inject_failure, const std::string& out_path) {
    if (trials < 1) throw ParseError("--trials must be >= 1");
    verify::Options opt;
    opt.trials = trials;
    opt.seed = seed;
    opt.inject_failure = inject_failure;
    const auto results = verify::run_suites(suite, opt);

    std::ostringstream out;
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.passed();
        out << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " ("
            << r.checks - r.failures << '/' << r.checks
            << " checks, worst margin " << io::format_double(r.worst_margin)
            << ")\n";
        for (const std::string& note : r.notes) out << "  failed: " << note << '\n';
    }
    emit(out.str(), out_path);
    return all_pass ? kExitOk : kExitVerify;
}

int cmd_scenario(const SweepConfig& c, double v1, double v2, double v_norm) {
    Matrix A, V;
    std::string split_json = "null";
    if (c.scenario == "tsharp") {
        const TsharpInstance inst = gen_tsharp({c.a, c.b, v1, v2});
        A = inst.A;
        V = inst.V;
        split_json = io::split_to_json(inst.split);
    } else if (c.scenario == "ksharp") {
        KsharpGrid g;
        g.a = c.a;
        g.coupling = c.coupling;
        g.N = c.n;
        g.t_max = std::max(c.b, c.a + 1.0);
        const KsharpInstance inst = gen_ksharp(g);
        A = inst.A;
        V = inst.V;
    } else if (c.scenario == "random-subordinated" ||
               c.scenario == "random-annular") {
        RandomSpec spec;
        const bool annular = c.scenario == "random-annular";
        spec.n_minus = std::max(1, c.n / 2);
        spec.n_plus = std::max(annular ? 2 : 1, c.n - c.n / 2);
        spec.disposition = annular ? Disposition::Annular : Disposition::Subordinated;
        spec.d = c.d;
        spec.gap_len = annular ? c.gap : 0.0;
        spec.v_norm = v_norm;
        spec.seed = c.seed;
        const RandomInstance inst = gen_random(spec);
        A = inst.A;
        V = inst.V;
        split_json = io::split_to_json(inst.split);
    } else {
        throw ParseError("unknown scenario: " + c.scenario);
    }
    std::ostringstream out;
    out << "{\n\"A\": " << io::matrix_to_json(A) << ",\n\"V\": "
        << io::matrix_to_json(V) << ",\n\"split\": " << split_json << "\n}";
    emit(out.str(), c.out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral subspace perturbation analysis"};
    app.require_subcommand(1);

    CommonInputs in;
    SweepConfig sweep;
    std::string verify_suite = "all";
    int numrange_steps = 360;
    int verify_trials = 50;
    std::uint64_t verify_seed = 42;
    bool inject_failure = false;
    double sc_v1 = 0.0, sc_v2 = 0.0, sc_vnorm = 0.1;

    auto* bounds = app.add_subcommand("bounds", "Projection-gap bounds for a perturbed pair");
    bounds->add_option("--matrix-a", in.matrix_a, "Unperturbed matrix JSON")->required();
    bounds->add_option("--matrix-v", in.matrix_v, "Perturbation matrix JSON")->required();
    bounds->add_option("--split", in.split_path, "Split descriptor JSON")->required();
    bounds->add_option("--out", in.out_path, "Output path (default stdout)");

    auto* rotation = app.add_subcommand("rotation", "Direct rotation between the spectral subspaces");
    rotation->add_option("--matrix-a", in.matrix_a)->required();
    rotation->add_option("--matrix-v", in.matrix_v)->required();
    rotation->add_option("--split", in.split_path)->required();
    rotation->add_option("--out", in.out_path);

    auto* numrange = app.add_subcommand("numrange", "Numerical range boundary as CSV");
    numrange->add_option("--matrix-a", in.matrix_a, "Matrix JSON")->required();
    numrange->add_option("--steps", numrange_steps, "Boundary samples");
    numrange->add_option("--out", in.out_path);

    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep over a scenario family");
    sweep_cmd->add_option("--scenario", sweep.scenario)->required();
    sweep_cmd->add_option("--steps", sweep.steps);
    sweep_cmd->add_option("--trials", sweep.trials);
    sweep_cmd->add_option("--seed", sweep.seed);
    sweep_cmd->add_option("--a", sweep.a);
    sweep_cmd->add_option("--b", sweep.b);
    sweep_cmd->add_option("--coupling", sweep.coupling);
    sweep_cmd->add_option("--d", sweep.d);
    sweep_cmd->add_option("--gap", sweep.gap);
    sweep_cmd->add_option("--n", sweep.n);
    sweep_cmd->add_option("--out", sweep.out_path);

    auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
    verify_cmd->add_option("--suite", verify_suite);
    verify_cmd->add_option("--trials", verify_trials);
    verify_cmd->add_option("--seed", verify_seed);
    verify_cmd->add_flag("--inject-failure", inject_failure,
                         "Negative control: corrupt one instance");
    verify_cmd->add_option("--out", in.out_path);

    auto* scenario_cmd = app.add_subcommand("scenario", "Dump a generated instance as JSON");
    scenario_cmd->add_option("--scenario", sweep.scenario)->required();
    scenario_cmd->add_option("--seed", sweep.seed);
    scenario_cmd->add_option("--a", sweep.a);
    scenario_cmd->add_option("--b", sweep.b);
    scenario_cmd->add_option("--v1", sc_v1);
    scenario_cmd->add_option("--v2", sc_v2);
    scenario_cmd->add_option("--v", sc_vnorm);
    scenario_cmd->add_option("--coupling", sweep.coupling);
    scenario_cmd->add_option("--d", sweep.d);
    scenario_cmd->add_option("--gap", sweep.gap);
    scenario_cmd->add_option("--n", sweep.n);
    scenario_cmd->add_option("--out", sweep.out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        apply_tol_env();
        if (bounds->parsed()) return cmd_bounds(in);
        if (rotation->parsed()) return cmd_rotation(in);
        if (numrange->parsed())
            return cmd_numrange(in.matrix_a, numrange_steps, in.out_path);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (verify_cmd->parsed())
            return cmd_verify(verify_suite, verify_trials, verify_seed,
                              inject_failure, in.out_path);
        if (scenario_cmd->parsed())
            return cmd_scenario(sweep, sc_v1, sc_v2, sc_vnorm);
    } catch (const NotAcute& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCondition;
    } catch (const ConditionViolated& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCondition;
    } catch (const SubspaceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
