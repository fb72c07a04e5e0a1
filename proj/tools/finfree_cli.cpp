// Command-line front end: exact finite free convolutions, Weingarten /
// character / zonal table dumps, Haar sampling, and the verification suites.
//
// Exit codes: 0 success, 2 parse error, 3 degree mismatch, 4 failed check,
// 5 resource bound exceeded.

#include "finfree/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <thread>

namespace {

using namespace finfree;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDegreeMismatch = 3;
constexpr int kExitFailedCheck = 4;
constexpr int kExitResource = 5;

struct failed_check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << j.dump() << "\n";
}

SpectrumSpec random_integer_spectrum(int d, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    SpectrumSpec s;
    for (int i = 0; i < d; ++i) s.emplace_back(Rat(pick(rng)));
    return s;
}

int run_conv(const std::string& kind_text, const std::string& p_text, const std::string& q_text,
             const std::string& out_path) {
    const ConvolutionKind kind = kind_from_string(kind_text);
    const PolynomialFF p = parse_polynomial_arg(p_text);
    const PolynomialFF q = parse_polynomial_arg(q_text);
    PolynomialFF result;
    switch (kind) {
        case ConvolutionKind::add: result = box_plus(p, q); break;
        case ConvolutionKind::mult: result = box_times(p, q); break;
        case ConvolutionKind::rect: result = rect_plus(p, q); break;
    }
    emit(polynomial_to_json(result), out_path);
    return kExitOk;
}

int run_verify_quadrature(const GroupSpec& group, int k_max, long long budget, int threads,
                          const std::string& out_path) {
    const QuadratureReport report = verify_quadrature(group, k_max, budget, threads);
    emit(quadrature_report_to_json(report), out_path);
    if (!report.all_pass) throw failed_check_error("quadrature verification failed");
    return kExitOk;
}

int run_verify_convolution(const std::string& kind_text, const std::string& method_text,
                           const GroupSpec& group, int trials, long long n_samples,
                           std::uint64_t seed, long long budget, const std::string& out_path) {
    const ConvolutionKind kind = kind_from_string(kind_text);
    const ExpectationMethod method = method_from_string(method_text);
    const int d = group.d;
    std::mt19937_64 rng(seed);

    ordered_json cases = ordered_json::array();
    bool all_pass = true;
    for (int trial = 0; trial < trials; ++trial) {
        const bool nonneg = (kind == ConvolutionKind::rect);
        const SpectrumSpec spec_a = random_integer_spectrum(d, rng, nonneg ? 0 : -4, 4);
        const SpectrumSpec spec_b = random_integer_spectrum(d, rng, nonneg ? 0 : -4, 4);

        SpectrumSpec in_a = spec_a, in_b = spec_b;
        if (kind == ConvolutionKind::rect) {
            for (auto& v : in_a) v = ComplexRat(v.norm2());
            for (auto& v : in_b) v = ComplexRat(v.norm2());
        }
        const PolynomialFF pa = char_poly_from_spectrum(in_a);
        const PolynomialFF pb = char_poly_from_spectrum(in_b);
        PolynomialFF expected;
        switch (kind) {
            case ConvolutionKind::add: expected = box_plus(pa, pb); break;
            case ConvolutionKind::mult: expected = box_times(pa, pb); break;
            case ConvolutionKind::rect: expected = rect_plus(pa, pb); break;
        }

        if (method == ExpectationMethod::mc) {
            const MatrixGroup mg = (group.kind == GroupSpec::Kind::orthogonal)
                                       ? MatrixGroup::orthogonal
                                       : MatrixGroup::unitary;
            if (group.kind == GroupSpec::Kind::signed_permutation)
                throw std::invalid_argument("mc method needs --group unitary or orthogonal");
            const std::uint64_t trial_seed = seed + 1000003ULL * static_cast<std::uint64_t>(trial);
            const auto reports = expected_charpoly_mc(kind, spec_a, spec_b, mg, n_samples, trial_seed);
            for (int kk = 0; kk <= d; ++kk) {
                ordered_json jc = estimate_report_to_json(kind_text, method_text, d, kk,
                                                          reports[static_cast<size_t>(kk)]);
                jc["trial"] = trial;
                all_pass = all_pass && reports[static_cast<size_t>(kk)].pass;
                cases.push_back(std::move(jc));
            }
        } else {
            const PolynomialFF got = expected_charpoly(kind, spec_a, spec_b, group, method, budget);
            for (int kk = 0; kk <= d; ++kk) {
                ordered_json jc =
                    exact_value_to_json(kind_text, method_text, d, kk, got.a[static_cast<size_t>(kk)],
                                        expected.a[static_cast<size_t>(kk)]);
                jc["trial"] = trial;
                all_pass = all_pass && (got.a[static_cast<size_t>(kk)] == expected.a[static_cast<size_t>(kk)]);
                cases.push_back(std::move(jc));
            }
        }
    }

    ordered_json j;
    j["target"] = "convolution";
    j["kind"] = kind_text;
    j["method"] = method_text;
    j["group"] = group.to_string();
    j["d"] = d;
    j["trials"] = trials;
    j["seed"] = seed;
    j["cases"] = std::move(cases);
    j["pass"] = all_pass;
    emit(j, out_path);
    if (!all_pass) throw failed_check_error("convolution verification failed");
    return kExitOk;
}

int run_table(const std::string& kind, int k, int d, const std::string& out_path) {
    if (k < 0) throw std::invalid_argument("table: k must be nonnegative");
    if (kind == "wg-unitary" || kind == "wg-orthogonal") {
        if (d < 1) throw std::invalid_argument("table: wg tables need --d");
        if (k > d) throw resource_error("table: k > d is outside the supported regime");
        const MatrixGroup group =
            (kind == "wg-unitary") ? MatrixGroup::unitary : MatrixGroup::orthogonal;
        emit(weingarten_table_to_json(*weingarten_table(group, k, d)), out_path);
        return kExitOk;
    }
    if (kind == "char") {
        if (k > 12) throw resource_error("table: character tables supported up to k = 12");
        emit(character_table_to_json(CharacterTable(k)), out_path);
        return kExitOk;
    }
    // zonal; the table constructor enforces its own weight bound
    emit(zonal_table_to_json(*zonal_table(k)), out_path);
    return kExitOk;
}

int run_sample(const std::string& group_text, int d, std::uint64_t seed, int count,
               const std::string& out_path) {
    MatrixGroup group;
    if (group_text == "unitary") {
        group = MatrixGroup::unitary;
    } else if (group_text == "orthogonal") {
        group = MatrixGroup::orthogonal;
    } else {
        throw std::invalid_argument("sample: --group must be unitary or orthogonal");
    }
    if (count == 1) {
        emit(matrix_sample_to_json(sample_haar(group, d, seed)), out_path);
        return kExitOk;
    }
    ordered_json arr = ordered_json::array();
    for (int t = 0; t < count; ++t)
        arr.push_back(matrix_sample_to_json(sample_haar(group, d, seed + static_cast<std::uint64_t>(t))));
    emit(arr, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite free convolutions and their random-matrix verification"};
    app.require_subcommand(1);

    std::string p_text, q_text, out_path;
    std::string conv_kind, verify_target, table_kind;
    std::string group_text;
    std::string method_text = "exact-signed";
    int d = 3;
    int k = 0;
    int k_max = -1;
    int trials = 5;
    int sample_count = 1;
    long long n_samples = 20000;
    long long budget = kDefaultEnumerationBudget;
    std::uint64_t seed = 0;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    CLI::App* conv = app.add_subcommand("conv", "compute a finite free convolution");
    conv->add_option("kind", conv_kind, "add | mult | rectadd")
        ->required()
        ->check(CLI::IsMember({"add", "mult", "rectadd"}));
    conv->add_option("--p", p_text, "polynomial JSON or roots:...")->required();
    conv->add_option("--q", q_text, "polynomial JSON or roots:...")->required();
    conv->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("target", verify_target, "quadrature | convolution")
        ->required()
        ->check(CLI::IsMember({"quadrature", "convolution"}));
    verify->add_option("--group", group_text, "unitary | orthogonal | signed:<s> | signed:inf");
    verify->add_option("--d", d, "matrix dimension")->check(CLI::PositiveNumber);
    verify->add_option("--kmax", k_max, "largest moment order (default d)");
    verify->add_option("--kind", conv_kind, "add | mult | rectadd (convolution target)")
        ->check(CLI::IsMember({"add", "mult", "rectadd"}));
    verify->add_option("--method", method_text, "exact-signed | weingarten | mc")
        ->check(CLI::IsMember({"exact-signed", "weingarten", "mc"}));
    verify->add_option("--trials", trials, "random spectra pairs (convolution target)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--n", n_samples, "Monte Carlo samples per estimate");
    verify->add_option("--seed", seed, "seed for all randomness");
    verify->add_option("--budget", budget, "cap on exact enumeration size");
    verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* table = app.add_subcommand("table", "dump an exact table as JSON");
    table->add_option("kind", table_kind, "wg-unitary | wg-orthogonal | char | zonal")
        ->required()
        ->check(CLI::IsMember({"wg-unitary", "wg-orthogonal", "char", "zonal"}));
    table->add_option("--k", k, "weight / moment order")->required();
    table->add_option("--d", d, "matrix dimension (wg tables)");
    table->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* sample = app.add_subcommand("sample", "draw Haar-distributed matrices");
    sample->add_option("--group", group_text, "unitary | orthogonal");
    sample->add_option("--d", d, "matrix dimension")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "sampler seed");
    sample->add_option("--n", sample_count, "number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--out", out_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (conv->parsed()) return run_conv(conv_kind, p_text, q_text, out_path);
        if (verify->parsed()) {
            if (verify_target == "quadrature") {
                if (group_text.empty()) group_text = "signed:2";
                const GroupSpec group = GroupSpec::parse(group_text, d);
                return run_verify_quadrature(group, k_max < 0 ? d : k_max, budget, threads, out_path);
            }
            if (conv_kind.empty()) conv_kind = "add";
            if (group_text.empty())
                group_text = (method_text == "exact-signed") ? "signed:2" : "unitary";
            const GroupSpec group = GroupSpec::parse(group_text, d);
            return run_verify_convolution(conv_kind, method_text, group, trials, n_samples, seed,
                                          budget, out_path);
        }
        if (table->parsed()) {
            const bool needs_d = (table_kind == "wg-unitary" || table_kind == "wg-orthogonal");
            return run_table(table_kind, k, needs_d ? d : -1, out_path);
        }
        if (sample->parsed()) {
            if (group_text.empty()) group_text = "unitary";
            return run_sample(group_text, d, seed, sample_count, out_path);
        }
        return kExitParse;
    } catch (const degree_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegreeMismatch;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const failed_check_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
