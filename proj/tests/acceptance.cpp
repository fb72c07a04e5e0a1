// Acceptance suite: every criterion below runs at its stated tolerance and
// prints one PASS/FAIL line. The process exits nonzero if any criterion fails.

#include "finfree/json_io.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

using namespace finfree;

namespace {

int worker_threads() {
    return std::max(1, std::min(8, static_cast<int>(std::thread::hardware_concurrency())));
}

PolynomialFF random_monic(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Rat> a(static_cast<size_t>(d) + 1);
    a[0] = 1;
    for (int k = 1; k <= d; ++k) a[static_cast<size_t>(k)] = coeff(rng);
    return PolynomialFF(d, std::move(a));
}

SpectrumSpec random_integer_spectrum(int d, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    SpectrumSpec s;
    for (int i = 0; i < d; ++i) s.emplace_back(Rat(pick(rng)));
    return s;
}

GroupSpec signed_group(int d, int s) { return GroupSpec{GroupSpec::Kind::signed_permutation, d, s}; }

Rat injective_value(int d, int k) { return Rat(factorial(d - k), factorial(d)); }

// ---------------------------------------------------------------------------

bool criterion_identity_laws(std::string& detail) {
    std::mt19937_64 rng(101);
    for (int d = 1; d <= 8; ++d) {
        const PolynomialFF x_power = PolynomialFF::monomial(d);
        const PolynomialFF ones_power = PolynomialFF::shifted_power(d, Rat(1));
        for (int trial = 0; trial < 50; ++trial) {
            const PolynomialFF p = random_monic(d, rng);
            if (box_plus(p, x_power) != p || box_times(p, ones_power) != p ||
                rect_plus(p, x_power) != p) {
                detail = "identity law failed at d=" + std::to_string(d);
                return false;
            }
        }
    }
    return true;
}

bool criterion_quadrature_signed(std::string& detail) {
    const int threads = worker_threads();
    std::vector<QuadratureReport> s2_reports;
    for (int d = 1; d <= 5; ++d) {
        QuadratureReport report = verify_quadrature(signed_group(d, 2), d, kDefaultEnumerationBudget, threads);
        long long expected_cases = 0, power = 1;
        for (int k = 0; k <= d; ++k) {
            expected_cases += power;
            power *= d;
        }
        if (!report.all_pass || static_cast<long long>(report.cases.size()) != expected_cases) {
            detail = "signed:2 verification failed at d=" + std::to_string(d);
            return false;
        }
        s2_reports.push_back(std::move(report));
    }
    for (int d = 1; d <= 3; ++d) {
        for (int s : {3, 4, kInfinitePhaseOrder}) {
            const QuadratureReport report =
                verify_quadrature(signed_group(d, s), d, kDefaultEnumerationBudget, threads);
            const QuadratureReport& base = s2_reports[static_cast<size_t>(d) - 1];
            if (!report.all_pass || report.cases.size() != base.cases.size()) {
                detail = "phase order " + std::to_string(s) + " failed at d=" + std::to_string(d);
                return false;
            }
            for (size_t t = 0; t < report.cases.size(); ++t) {
                if (report.cases[t].p != base.cases[t].p ||
                    report.cases[t].value != base.cases[t].value) {
                    detail = "phase order " + std::to_string(s) + " differs from s=2 at d=" +
                             std::to_string(d);
                    return false;
                }
            }
        }
    }
    return true;
}

// One multi-index per kernel pattern: label the blocks 1..|pattern|.
std::vector<MultiIndex> kernel_pattern_representatives(int k) {
    std::vector<MultiIndex> out;
    for (const SetPartition& pattern : all_set_partitions(k)) {
        std::vector<int> p(static_cast<size_t>(k));
        for (int i = 1; i <= k; ++i) p[static_cast<size_t>(i) - 1] = pattern.block_index_of(i) + 1;
        out.push_back(MultiIndex(std::move(p)));
    }
    return out;
}

bool criterion_quadrature_weingarten(GroupSpec::Kind kind, int d_max, int k_cap,
                                     std::string& detail) {
    for (int d = 1; d <= d_max; ++d) {
        for (int k = 0; k <= std::min(k_cap, d); ++k) {
            for (const MultiIndex& p : kernel_pattern_representatives(k)) {
                const Rat expected = p.is_injective() ? injective_value(d, k) : Rat(0);
                const GroupSpec g{kind, d};
                if (quadrature_sum(g, p) != expected) {
                    std::ostringstream os;
                    os << "mismatch at d=" << d << " k=" << k << " p=[";
                    for (int v : p.values()) os << v << ",";
                    os << "]";
                    detail = os.str();
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_quadrature_unitary(std::string& detail) {
    return criterion_quadrature_weingarten(GroupSpec::Kind::unitary, 8, 5, detail);
}

bool criterion_quadrature_orthogonal(std::string& detail) {
    return criterion_quadrature_weingarten(GroupSpec::Kind::orthogonal, 6, 4, detail);
}

bool criterion_convolution_exact(std::string& detail) {
    std::mt19937_64 rng(2027);
    for (ConvolutionKind kind : {ConvolutionKind::add, ConvolutionKind::mult, ConvolutionKind::rect}) {
        const int d_max = (kind == ConvolutionKind::rect) ? 3 : 4;
        for (int d = 1; d <= d_max; ++d) {
            const GroupSpec g = signed_group(d, 2);
            for (int trial = 0; trial < 20; ++trial) {
                const bool nonneg = (kind == ConvolutionKind::rect);
                const SpectrumSpec a = random_integer_spectrum(d, rng, nonneg ? 0 : -4, 4);
                const SpectrumSpec b = random_integer_spectrum(d, rng, nonneg ? 0 : -4, 4);
                SpectrumSpec pa_in = a, pb_in = b;
                if (kind == ConvolutionKind::rect) {
                    for (auto& v : pa_in) v = ComplexRat(v.norm2());
                    for (auto& v : pb_in) v = ComplexRat(v.norm2());
                }
                const PolynomialFF pa = char_poly_from_spectrum(pa_in);
                const PolynomialFF pb = char_poly_from_spectrum(pb_in);
                PolynomialFF expected;
                switch (kind) {
                    case ConvolutionKind::add: expected = box_plus(pa, pb); break;
                    case ConvolutionKind::mult: expected = box_times(pa, pb); break;
                    case ConvolutionKind::rect: expected = rect_plus(pa, pb); break;
                }
                const PolynomialFF got = expected_charpoly(kind, a, b, g, ExpectationMethod::exact);
                if (got != expected) {
                    detail = kind_to_string(kind) + " exact route mismatch at d=" + std::to_string(d);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_orthogonality(std::string& detail) {
    for (int k = 1; k <= 6; ++k) {
        const auto table = character_table(k);
        for (const Partition& lambda : table->labels()) {
            for (const Partition& mu : table->labels()) {
                Rat sum = 0;
                for (const Partition& rho : table->labels())
                    sum += Rat(table->value(lambda, rho) * table->value(mu, rho), z_of(rho));
                if (sum != Rat(lambda == mu ? 1 : 0)) {
                    detail = "character orthogonality failed at k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    for (int k = 1; k <= 5; ++k) {
        const auto table = zonal_table(k);
        const Int hk2 = hyperoctahedral_order(k) * hyperoctahedral_order(k);
        for (const Partition& lambda : table->labels()) {
            for (const Partition& mu : table->labels()) {
                Rat sum = 0;
                for (const Partition& rho : table->labels())
                    sum += table->value(lambda, rho) * table->value(mu, rho) / Rat(z_of(rho.doubled()));
                const Rat expected = (lambda == mu) ? Rat(hook_product(lambda.doubled()), hk2) : Rat(0);
                if (sum != expected) {
                    detail = "zonal orthogonality failed at k=" + std::to_string(k);
                    return false;
                }
            }
        }
    }
    for (int k = 1; k <= 8; ++k) {
        Int sum = 0;
        for (const Partition& lambda : partitions_of(k)) {
            const Int dim = dimension(lambda);
            sum += dim * dim;
        }
        if (sum != factorial(k)) {
            detail = "dimension sum failed at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool criterion_signed_sums(std::string& detail) {
    for (int k = 1; k <= 5; ++k) {
        const Partition column(std::vector<int>(static_cast<size_t>(k), 1));
        for (const Partition& lambda : partitions_of(k)) {
            const Int expected_chi = (lambda == column) ? factorial(k) : Int(0);
            const Rat expected_omega = (lambda == column) ? Rat(factorial(k + 1), Int(1) << k) : Rat(0);
            if (signed_character_sum(lambda) != expected_chi ||
                signed_zonal_sum(lambda) != expected_omega) {
                detail = "signed sum closed form failed at k=" + std::to_string(k);
                return false;
            }
            Int brute_chi = 0;
            Rat brute_omega = 0;
            for_each_permutation(k, [&](const Permutation& s) {
                const Partition type = s.cycle_type();
                brute_chi += s.sign() * character_value(lambda, type);
                brute_omega += Rat(s.sign()) * zonal_value(lambda, type);
            });
            if (brute_chi != expected_chi || brute_omega != expected_omega) {
                detail = "signed sum brute force failed at k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool criterion_stirling(std::string& detail) {
    for (int k = 0; k <= 7; ++k)
        for (int i = 0; i <= k; ++i)
            if (stirling_first_unsigned(k, i) != Int(oracle::stirling_by_enumeration(k, i))) {
                detail = "Stirling count failed at k=" + std::to_string(k);
                return false;
            }
    for (int k = 0; k <= 10; ++k) {
        std::vector<Rat> rising{Rat(1)};
        for (int t = 0; t < k; ++t) {
            std::vector<Rat> next(rising.size() + 1, Rat(0));
            for (size_t i = 0; i < rising.size(); ++i) {
                next[i] += rising[i] * t;
                next[i + 1] += rising[i];
            }
            rising = std::move(next);
        }
        for (int i = 0; i <= k; ++i)
            if (rising[static_cast<size_t>(i)] != Rat(stirling_first_unsigned(k, i))) {
                detail = "rising factorial expansion failed at k=" + std::to_string(k);
                return false;
            }
    }
    return true;
}

bool criterion_monte_carlo(std::string& detail) {
    constexpr std::uint64_t kBatterySeed = 0x00c0ffee2024ULL;
    std::mt19937_64 spectra_rng(kBatterySeed);
    int case_index = 0;
    for (ConvolutionKind kind : {ConvolutionKind::add, ConvolutionKind::mult, ConvolutionKind::rect}) {
        for (MatrixGroup group : {MatrixGroup::unitary, MatrixGroup::orthogonal}) {
            for (int d : {3, 4}) {
                for (int k = 2; k <= d; ++k) {
                    const bool nonneg = (kind == ConvolutionKind::rect);
                    const SpectrumSpec a = random_integer_spectrum(d, spectra_rng, nonneg ? 0 : -4, 4);
                    const SpectrumSpec b = random_integer_spectrum(d, spectra_rng, nonneg ? 0 : -4, 4);
                    const std::uint64_t case_seed =
                        kBatterySeed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(++case_index);
                    const EstimateReport report =
                        expected_ek_montecarlo(kind, a, b, group, k, 20000, case_seed);
                    if (!report.pass) {
                        std::ostringstream os;
                        os << kind_to_string(kind) << " case " << case_index << " d=" << d
                           << " k=" << k << " z=" << report.z_score;
                        detail = os.str();
                        return false;
                    }
                }
            }
        }
    }
    if (case_index != 30) {
        detail = "battery has " + std::to_string(case_index) + " cases, expected 30";
        return false;
    }

    // sampler moment checks at N = 1e5
    for (int d : {3, 4}) {
        const long long n = 100000;
        std::mt19937_64 rng(kBatterySeed + static_cast<std::uint64_t>(d));
        double s1 = 0, s1sq = 0, s2 = 0, s2sq = 0;
        for (long long t = 0; t < n; ++t) {
            const Eigen::MatrixXcd u = sample_haar_matrix(MatrixGroup::unitary, d, rng);
            const double m = std::norm(u(0, 0));
            s1 += m;
            s1sq += m * m;
            const Eigen::MatrixXcd o = sample_haar_matrix(MatrixGroup::orthogonal, d, rng);
            const double w = std::pow(o(0, 0).real(), 4);
            s2 += w;
            s2sq += w * w;
        }
        auto within = [n](double sum, double sumsq, double target) {
            const double mean = sum / static_cast<double>(n);
            const double var = (sumsq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
            const double se = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
            return std::abs(mean - target) <= 4.0 * se;
        };
        if (!within(s1, s1sq, 1.0 / d)) {
            detail = "E|u_11|^2 check failed at d=" + std::to_string(d);
            return false;
        }
        if (!within(s2, s2sq, 3.0 / (d * (d + 2.0)))) {
            detail = "E u_11^4 check failed at d=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

bool criterion_weingarten_closed_forms(std::string& detail) {
    for (int d = 2; d <= 8; ++d) {
        const Int dd = Int(d);
        if (wg_unitary(2, d, Partition({1, 1})) != Rat(1, dd * dd - 1) ||
            wg_unitary(2, d, Partition({2})) != Rat(-1, dd * (dd * dd - 1))) {
            detail = "wg closed form failed at d=" + std::to_string(d);
            return false;
        }
        const MultiIndex ones({1, 1});
        if (haar_moment_unitary(d, ones, ones, ones, ones) != Rat(2, dd * (dd + 1))) {
            detail = "E|u_11|^4 closed form failed at d=" + std::to_string(d);
            return false;
        }
    }
    // tie the moment to simulation as well
    const int d = 3;
    const long long n = 100000;
    std::mt19937_64 rng(0xabcd1234ULL);
    double sum = 0, sumsq = 0;
    for (long long t = 0; t < n; ++t) {
        const Eigen::MatrixXcd u = sample_haar_matrix(MatrixGroup::unitary, d, rng);
        const double m = std::norm(u(0, 0)) * std::norm(u(0, 0));
        sum += m;
        sumsq += m * m;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = (sumsq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
    const double se = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    if (std::abs(mean - 2.0 / (d * (d + 1.0))) > 4.0 * se) {
        detail = "Monte Carlo disagreement for E|u_11|^4";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double time_limit_seconds;  // 0 = no stated limit
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "identity laws for the three convolutions", 1.0, criterion_identity_laws},
        {2, "quadrature property, signed groups by enumeration", 60.0, criterion_quadrature_signed},
        {3, "quadrature property, unitary group via Weingarten", 30.0, criterion_quadrature_unitary},
        {4, "quadrature property, orthogonal group via Weingarten", 120.0, criterion_quadrature_orthogonal},
        {5, "expected characteristic polynomials equal the convolutions", 120.0, criterion_convolution_exact},
        {6, "character and zonal orthogonality suites", 60.0, criterion_orthogonality},
        {7, "alternating character and zonal sums", 0.0, criterion_signed_sums},
        {8, "Stirling numbers and the rising factorial", 0.0, criterion_stirling},
        {9, "Monte Carlo battery and sampler moments", 120.0, criterion_monte_carlo},
        {10, "Weingarten closed forms at k = 2", 0.0, criterion_weingarten_closed_forms},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_seconds > 0 && elapsed > c.time_limit_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ");
            detail += "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && ok;
    }
    return all_pass ? 0 : 1;
}
