#include "immvar/bposet.hpp"
#include "immvar/bposet_io.hpp"
#include "immvar/chimatroid.hpp"
#include "immvar/complexes.hpp"
#include "immvar/errors.hpp"
#include "immvar/immanant.hpp"
#include "immvar/instance.hpp"
#include "immvar/strata.hpp"
#include "immvar/symtensor.hpp"
#include "immvar/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define IMMVAR_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define IMMVAR_ISATTY isatty(fileno(stdout))
#endif

namespace {

using namespace immvar;

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && IMMVAR_ISATTY;
}

std::string verdict_tag(bool pass) {
    if (!use_color())
        return pass ? "[PASS]" : "[FAIL]";
    return pass ? "\033[32m[PASS]\033[0m" : "\033[31m[FAIL]\033[0m";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write \"" + path + "\"");
    out << content;
}

struct Loaded {
    InstanceSpec spec;
    GroupPtr group;
    Character chi;
};

Loaded load(const std::string& path) {
    InstanceSpec spec = load_instance_file(path);
    GroupPtr g = spec.build_group();
    Character chi = spec.build_character(g);
    return {std::move(spec), std::move(g), std::move(chi)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void cmd_poset(const std::string& instance_path, const std::string& dot_path,
               const std::string& json_path) {
    Loaded in = load(instance_path);
    BPoset p = BPoset::build(in.chi, in.spec.n, in.spec.bounds);

    std::cout << "elements: " << p.size() << "\n";
    std::cout << "covers: " << p.cover_pairs().size() << "\n";
    std::cout << "character: " << in.chi.describe() << "\n";
    std::cout << "graded: " << yes_no(p.graded()) << "\n";
    if (p.graded()) {
        std::cout << "rank polynomial: " << p.rank_generating().to_string() << "\n";
        std::cout << "rank-symmetric: " << yes_no(p.rank_symmetric()) << "\n";
    }
    LatticeReport lattice = p.lattice_report();
    std::cout << "lattice: " << yes_no(lattice.is_lattice) << "\n";
    if (lattice.is_lattice) {
        auto distributive = p.is_distributive();
        std::cout << "distributive: " << yes_no(distributive.value()) << "\n";
    } else {
        std::cout << "  failing: " << lattice.failing << " of "
                  << lattice.witness_a.to_string() << ", " << lattice.witness_b.to_string()
                  << "\n";
        std::cout << "  maximal lower bounds:";
        for (const MultiIndex& x : lattice.maximal_lower_bounds)
            std::cout << " " << x.to_string();
        std::cout << "\n  minimal upper bounds:";
        for (const MultiIndex& x : lattice.minimal_upper_bounds)
            std::cout << " " << x.to_string();
        std::cout << "\n";
    }
    if (!dot_path.empty())
        write_file(dot_path, to_dot(p));
    if (!json_path.empty())
        write_file(json_path, to_json_string(p));
}

void cmd_polya(const std::string& instance_path) {
    Loaded in = load(instance_path);
    QPoly poly = polya_rank_generating(*in.group, in.spec.n);
    std::cout << "rank polynomial: " << poly.to_string() << "\n";
    std::cout << "orbit count: " << to_string(poly.value_at_one()) << "\n";
}

void cmd_witt(int k, int n) {
    if (k < 1 || n < 1)
        throw ParseError("witt: k and n must be positive");
    std::cout << to_string(witt_count(k, n)) << "\n";
}

void cmd_dim(const std::string& instance_path) {
    Loaded in = load(instance_path);
    Int formula = dim_formula(in.chi, in.spec.n);
    Int rank = rank_of_image(in.chi, in.spec.n, in.spec.bounds);
    std::cout << "formula: " << to_string(formula) << "\n";
    std::cout << "rank: " << to_string(rank) << "\n";
    std::cout << "agree: " << (formula == rank ? "true" : "false") << "\n";
}

void cmd_immanant(const std::string& instance_path, const std::string& matrix_path,
                  const std::string& x_text, const std::string& y_text) {
    Loaded in = load(instance_path);
    MatrixInput input = load_matrix_file(matrix_path);
    MultiIndex x = MultiIndex::parse(x_text);
    MultiIndex y = MultiIndex::parse(y_text);
    if (input.generic) {
        Matrix<MVPoly> m = generic_matrix(input.rows, input.cols);
        std::cout << immanant(in.chi, x, y, m).to_string() << "\n";
    } else {
        Matrix<Rat> m = Matrix<Rat>::from_rows(input.entries);
        std::cout << immanant(in.chi, x, y, m).to_string() << "\n";
    }
}

void cmd_equations(const std::string& instance_path, const std::string& stratum_text) {
    Loaded in = load(instance_path);
    if (stratum_text.empty()) {
        auto eqs = parametric_equations(in.chi, in.spec.n, in.spec.bounds);
        for (const auto& [z, eq] : eqs)
            std::cout << "x" << z.to_string() << " = " << eq.to_string() << "\n";
    } else {
        BPoset p = BPoset::build(in.chi, in.spec.n, in.spec.bounds);
        MultiIndex top = MultiIndex::parse(stratum_text);
        auto eqs = stratum_equations(p, top);
        for (const auto& [y, eq] : eqs)
            std::cout << "z" << y.to_string() << " = " << eq.to_string() << "\n";
    }
}

void print_verdict(const MatroidVerdict& verdict) {
    std::cout << "chi-matroid: " << (verdict.is_chi_matroid ? "true" : "false") << "\n";
    if (!verdict.is_chi_matroid) {
        std::cout << "witness: " << verdict.witness.to_string() << "\n";
        std::cout << "maxima:";
        for (const MultiIndex& x : verdict.maxima)
            std::cout << " " << x.to_string();
        std::cout << "\n";
    }
}

void cmd_matroid_check(const std::string& instance_path, const std::string& subset_path,
                       const std::string& factors_path) {
    Loaded in = load(instance_path);
    if (subset_path.empty() == factors_path.empty())
        throw ParseError("matroid-check: exactly one of --subset, --factors is required");
    if (!subset_path.empty()) {
        auto members = load_subset_file(subset_path);
        PosetPtr p = std::make_shared<const BPoset>(
            BPoset::build(in.chi, in.spec.n, in.spec.bounds));
        print_verdict(is_chi_matroid(SubsetB::from_members(p, members), in.spec.bounds));
    } else {
        auto factors = load_factors_file(factors_path);
        print_verdict(support_is_matroid(in.chi, factors, in.spec.bounds));
    }
}

void cmd_support(const std::string& instance_path, const std::string& factors_path) {
    Loaded in = load(instance_path);
    auto factors = load_factors_file(factors_path);
    SymTensor v = apply_idempotent(in.chi, SymTensor::decomposable(factors));
    std::vector<MultiIndex> supp = support(in.chi, v);
    std::cout << "support: " << supp.size() << " elements\n";
    for (const MultiIndex& x : supp)
        std::cout << x.to_string() << "\n";
}

void cmd_mobius(const std::string& instance_path, const std::string& x_text,
                const std::string& y_text) {
    Loaded in = load(instance_path);
    BPoset p = BPoset::build(in.chi, in.spec.n, in.spec.bounds);
    std::size_t i = p.index_of(MultiIndex::parse(x_text));
    std::size_t j = p.index_of(MultiIndex::parse(y_text));
    std::cout << to_string(p.mobius(i, j)) << "\n";
}

void cmd_shell(const std::string& instance_path, const std::vector<std::string>& interval,
               std::size_t cap) {
    Loaded in = load(instance_path);
    Bounds bounds = in.spec.bounds;
    if (cap != 0)
        bounds.shell_facet_cap = cap;
    BPoset p = BPoset::build(in.chi, in.spec.n, bounds);
    SimplicialComplex complex =
        interval.empty()
            ? order_complex(p, bounds)
            : order_complex(p,
                            p.open_interval(p.index_of(MultiIndex::parse(interval[0])),
                                            p.index_of(MultiIndex::parse(interval[1]))),
                            bounds);
    ShellResult result = shellable(complex, bounds);
    std::cout << "facets: " << complex.facets().size() << "\n";
    std::cout << "verdict: " << to_string(result.verdict) << "\n";
    if (result.verdict == ShellVerdict::Yes) {
        std::cout << "order:";
        for (std::size_t i : result.order)
            std::cout << " " << i;
        std::cout << "\n";
    }
    std::cout << "steps: " << result.steps << "\n";
}

void cmd_chow(const std::string& instance_path) {
    Loaded in = load(instance_path);
    BPoset p = BPoset::build(in.chi, in.spec.n, in.spec.bounds);
    auto generators = chow_generators(p);
    std::cout << "generators (possibly redundant): " << generators.size() << "\n";
    for (const auto& [x, dim] : generators)
        std::cout << x.to_string() << " dim " << dim << "\n";
    std::cout << "hp bound: " << hp_upper_bound(in.chi.group(), in.spec.n).to_string()
              << "\n";
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<SuiteReport> reports;
    if (suite.empty())
        reports = run_all_suites(seed);
    else
        reports.push_back(run_suite(suite, seed));
    bool all_pass = true;
    std::cout << "seed: " << seed << "\n";
    for (const SuiteReport& report : reports) {
        for (const CheckResult& check : report.checks) {
            std::cout << verdict_tag(check.pass) << " " << report.suite << ": "
                      << check.name;
            if (!check.pass && !check.detail.empty())
                std::cout << " (" << check.detail << ")";
            std::cout << "\n";
        }
        all_pass = all_pass && report.pass();
    }
    std::cout << (all_pass ? "all suites passed" : "suite failures detected") << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry classes of tensors: posets, immanants, and strata"};
    app.require_subcommand(1);
    bool parallel = false;
    app.add_flag("--parallel", parallel,
                 "accepted for compatibility; all computations run single-threaded");

    std::string instance_path, dot_path, json_path, matrix_path, subset_path, factors_path;
    std::string x_text, y_text, stratum_text, suite;
    std::vector<std::string> interval;
    int witt_k = 0, witt_n = 0;
    std::size_t cap = 0;
    std::uint64_t seed = 1;

    CLI::App* poset = app.add_subcommand("poset", "Build B_chi(k,n) and report its shape");
    poset->add_option("instance", instance_path, "instance file")->required();
    poset->add_option("--dot", dot_path, "write the Hasse diagram in DOT format");
    poset->add_option("--json", json_path, "write the poset as JSON");

    CLI::App* polya = app.add_subcommand("polya", "Rank-generating polynomial by cycle index");
    polya->add_option("instance", instance_path, "instance file")->required();

    CLI::App* witt = app.add_subcommand("witt", "Necklace count (1/k) sum mu(d) n^{k/d}");
    witt->add_option("k", witt_k, "tensor length")->required();
    witt->add_option("n", witt_n, "alphabet size")->required();

    CLI::App* dim = app.add_subcommand("dim", "Symmetry class dimension, formula vs rank");
    dim->add_option("instance", instance_path, "instance file")->required();

    CLI::App* imm = app.add_subcommand("immanant", "chi_{x,y}-immanant of a matrix");
    imm->add_option("instance", instance_path, "instance file")->required();
    imm->add_option("--matrix", matrix_path, "matrix file (entries or generic shape)")
        ->required();
    imm->add_option("--x", x_text, "row multi-index, e.g. 1,2,2")->required();
    imm->add_option("--y", y_text, "column multi-index")->required();

    CLI::App* eqs = app.add_subcommand("equations", "Parametric or stratum equations");
    eqs->add_option("instance", instance_path, "instance file")->required();
    eqs->add_option("--stratum", stratum_text, "top element x of the stratum");

    CLI::App* matroid = app.add_subcommand("matroid-check", "chi-matroid sweep over S_n");
    matroid->add_option("instance", instance_path, "instance file")->required();
    CLI::Option* subset_opt =
        matroid->add_option("--subset", subset_path, "subset file ({\"members\": ...})");
    matroid->add_option("--factors", factors_path, "factors file ({\"factors\": ...})")
        ->excludes(subset_opt);

    CLI::App* supp = app.add_subcommand("support", "Support of a projected decomposable point");
    supp->add_option("instance", instance_path, "instance file")->required();
    supp->add_option("--factors", factors_path, "factors file")->required();

    CLI::App* mobius = app.add_subcommand("mobius", "Mobius function of an interval");
    mobius->add_option("instance", instance_path, "instance file")->required();
    mobius->add_option("--x", x_text, "lower element")->required();
    mobius->add_option("--y", y_text, "upper element")->required();

    CLI::App* shell = app.add_subcommand("shell", "Shellability of an order complex");
    shell->add_option("instance", instance_path, "instance file")->required();
    shell->add_option("--interval", interval, "open interval endpoints x y")
        ->expected(2);
    shell->add_option("--cap", cap, "exhaustive-search facet cap override");

    CLI::App* chow = app.add_subcommand("chow", "Strata generators and the HP bound");
    chow->add_option("instance", instance_path, "instance file")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", suite, "single suite to run (default: all)");
    verify->add_option("--seed", seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (poset->parsed())
            cmd_poset(instance_path, dot_path, json_path);
        else if (polya->parsed())
            cmd_polya(instance_path);
        else if (witt->parsed())
            cmd_witt(witt_k, witt_n);
        else if (dim->parsed())
            cmd_dim(instance_path);
        else if (imm->parsed())
            cmd_immanant(instance_path, matrix_path, x_text, y_text);
        else if (eqs->parsed())
            cmd_equations(instance_path, stratum_text);
        else if (matroid->parsed())
            cmd_matroid_check(instance_path, subset_path, factors_path);
        else if (supp->parsed())
            cmd_support(instance_path, factors_path);
        else if (mobius->parsed())
            cmd_mobius(instance_path, x_text, y_text);
        else if (shell->parsed())
            cmd_shell(instance_path, interval, cap);
        else if (chow->parsed())
            cmd_chow(instance_path);
        else if (verify->parsed())
            return cmd_verify(suite, seed);
    } catch (const BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
