#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "partialcramer/determinant.hpp"
#include "partialcramer/io.hpp"
#include "partialcramer/partial.hpp"

namespace {

using namespace cramer;

// Exit codes, stable and documented in the README:
//   0 ok, 1 usage, 2 parse, 3 dimension, 4 singular matrix,
//   5 zero leading minor, 6 identity-check failure.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_dimension = 3,
    exit_singular = 4,
    exit_zero_minor = 5,
    exit_check_failed = 6,
};

struct CommonFlags {
    bool exact = false;
    bool use_float = false;

    void attach(CLI::App* cmd) {
        auto* e = cmd->add_flag("--exact", exact, "Compute with exact rationals");
        auto* f = cmd->add_flag("--float", use_float, "Compute with IEEE doubles");
        e->excludes(f);
        f->excludes(e);
    }

    SystemSpec apply(SystemSpec sys) const {
        if (exact) {
            return sys.to_kind(ScalarKind::rational);
        }
        if (use_float) {
            return sys.to_kind(ScalarKind::float64);
        }
        return sys;
    }
};

struct SolveFlags {
    CommonFlags common;
    std::size_t partial = 0;
    bool reorder = false;
    bool trace = false;
    bool json = false;

    void attach(CLI::App* cmd) {
        common.attach(cmd);
        cmd->add_option("--partial", partial,
                        "Solve only x_1..x_j as affine maps over x'_1..x'_j and the tail");
        cmd->add_flag("--reorder", reorder,
                      "Permute rows first so every leading minor is nonzero");
        cmd->add_flag("--trace", trace, "Print the staged elimination, one cut per step");
        cmd->add_flag("--json", json, "Machine-readable output");
    }
};

void print_full(const FullSolution& sol, bool json) {
    if (json) {
        std::cout << io::full_solution_to_json(sol).dump(2) << "\n";
        return;
    }
    std::cout << "det = " << io::format_scalar(sol.det_r) << "\n";
    for (index_t i = 1; i <= sol.x.dim(); ++i) {
        std::cout << "x" << i << " = " << io::format_scalar(sol.x.at(i)) << "\n";
    }
}

void print_affine(const AffineSolution& sol, bool json) {
    if (json) {
        std::cout << io::affine_to_json(sol).dump(2) << "\n";
        return;
    }
    std::cout << "D_" << sol.j << " = " << io::format_scalar(sol.d_j) << "\n";
    for (const std::string& line : io::format_affine(sol)) {
        std::cout << line << "\n";
    }
}

void print_trace(const EliminationTrace& trace, bool json) {
    if (json) {
        std::cout << io::trace_to_json(trace).dump(2) << "\n";
        return;
    }
    for (const auto& step : trace.steps) {
        std::cout << "step " << step.j << ": D_" << step.j << " = "
                  << io::format_scalar(step.minor) << "\n";
        for (const std::string& line : io::format_affine(step.solution)) {
            std::cout << "  " << line << "\n";
        }
    }
}

int run_solve_like(SystemSpec sys, const SolveFlags& flags,
                   const ChainSpec* chain_for_check) {
    sys = flags.common.apply(std::move(sys));

    if (flags.reorder) {
        ReorderedSystem reordered = reorder_for_nonzero_minors(sys);
        std::cout << "row order:";
        for (index_t r : reordered.row_permutation) {
            std::cout << " " << r;
        }
        std::cout << "\n";
        sys = std::move(reordered.system);
    }

    if (flags.trace) {
        print_trace(eliminate_stepwise(sys), flags.json);
        return exit_ok;
    }
    if (flags.partial > 0) {
        print_affine(solve_partial(sys, flags.partial), flags.json);
        return exit_ok;
    }

    FullSolution sol = solve_full(sys);
    print_full(sol, flags.json);

    if (chain_for_check != nullptr) {
        ColumnVector expected = chain_closed_form(*chain_for_check).to_kind(sys.kind());
        bool ok = true;
        for (index_t i = 1; i <= expected.dim() && ok; ++i) {
            if (sys.kind() == ScalarKind::rational) {
                ok = sol.x.at(i) == expected.at(i);
            } else {
                ok = approx_equal(sol.x.at(i).as_float(), expected.at(i).as_float());
            }
        }
        std::cout << "closed-form check: " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) {
            return exit_check_failed;
        }
    }
    return exit_ok;
}

int run_check(const SystemSpec& sys, std::size_t only_p, std::uint64_t seed) {
    const index_t n = sys.n();
    if (only_p > 0 && (only_p < 2 || only_p > n)) {
        throw DimensionError("--identity index must satisfy 2 <= p <= n");
    }
    if (n < 2) {
        std::cout << "n = 1: nothing to check\n";
        return exit_ok;
    }

    std::mt19937_64 rng(seed);
    constexpr int points_per_step = 10;
    bool all_ok = true;
    const index_t first = only_p > 0 ? only_p : 2;
    const index_t last = only_p > 0 ? only_p : n;
    for (index_t p = first; p <= last; ++p) {
        bool ok = true;
        for (int t = 0; t < points_per_step && ok; ++t) {
            ConsistentPoint point = random_consistent_point(sys.r(), p, rng);
            auto [lhs, rhs] = check_induction_identity(sys.r(), p, point.x, point.x_prime);
            if (sys.kind() == ScalarKind::rational) {
                ok = lhs == rhs;
            } else {
                ok = approx_equal(lhs.as_float(), rhs.as_float());
            }
        }
        std::cout << "p = " << p << ": " << (ok ? "PASS" : "FAIL") << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear systems by Cramer's rule, including the partial-variable form"};
    app.require_subcommand(1);

    std::string input_path;

    auto* det_cmd = app.add_subcommand("det", "Determinant of the system matrix");
    CommonFlags det_common;
    std::string det_method = "fast";
    det_cmd->add_option("file", input_path, "System file")->required();
    det_common.attach(det_cmd);
    det_cmd->add_option("--method", det_method, "Determinant algorithm")
        ->check(CLI::IsMember({"leibniz", "fast"}));

    auto* solve_cmd = app.add_subcommand("solve", "Solve the system, fully or for a leading cut");
    SolveFlags solve_flags;
    solve_cmd->add_option("file", input_path, "System file")->required();
    solve_flags.attach(solve_cmd);

    auto* model_cmd = app.add_subcommand("model", "Build a model system and solve it");
    SolveFlags model_flags;
    model_cmd->add_option("file", input_path, "Model file (JSON)")->required();
    model_flags.attach(model_cmd);

    auto* check_cmd = app.add_subcommand("check", "Verify the induction identity numerically");
    std::size_t check_p = 0;
    bool check_all = false;
    std::uint64_t check_seed = 20200828;
    check_cmd->add_option("file", input_path, "System file")->required();
    auto* ident_opt = check_cmd->add_option("--identity", check_p, "Check a single step p");
    check_cmd->add_flag("--all", check_all, "Check every step p = 2..n (default)")
        ->excludes(ident_opt);
    check_cmd->add_option("--seed", check_seed, "Seed for the random evaluation points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (det_cmd->parsed()) {
            SystemSpec sys = det_common.apply(io::load_system_file(input_path));
            Scalar det = det_method == "leibniz" ? det_leibniz(sys.r()) : det_fast(sys.r());
            std::cout << "det = " << io::format_scalar(det) << "\n";
            return exit_ok;
        }
        if (solve_cmd->parsed()) {
            return run_solve_like(io::load_system_file(input_path), solve_flags, nullptr);
        }
        if (model_cmd->parsed()) {
            ChainSpec chain = io::load_model_file(input_path);
            return run_solve_like(build_chain_system(chain), model_flags, &chain);
        }
        if (check_cmd->parsed()) {
            SystemSpec sys = io::load_system_file(input_path);
            return run_check(sys, check_p, check_seed);
        }
    } catch (const ParseError& e) {
        if (e.line > 0) {
            std::cerr << "error: " << input_path << ":" << e.line << ":" << e.column
                      << ": " << e.what() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return exit_parse;
    } catch (const ZeroLeadingMinorError& e) {
        std::cerr << "error: " << e.what() << " (try --reorder)\n";
        return exit_zero_minor;
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_singular;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_dimension;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
