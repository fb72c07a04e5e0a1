#include "finfree/matrix_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace finfree {

std::string kind_to_string(ConvolutionKind kind) {
    switch (kind) {
        case ConvolutionKind::add: return "add";
        case ConvolutionKind::mult: return "mult";
        case ConvolutionKind::rect: return "rectadd";
    }
    return "?";
}

ConvolutionKind kind_from_string(const std::string& text) {
    if (text == "add") return ConvolutionKind::add;
    if (text == "mult") return ConvolutionKind::mult;
    if (text == "rectadd" || text == "rect") return ConvolutionKind::rect;
    throw std::invalid_argument("unknown convolution kind '" + text + "'");
}

std::string method_to_string(ExpectationMethod method) {
    switch (method) {
        case ExpectationMethod::exact: return "exact-signed";
        case ExpectationMethod::weingarten: return "weingarten";
        case ExpectationMethod::mc: return "mc";
    }
    return "?";
}

ExpectationMethod method_from_string(const std::string& text) {
    if (text == "exact-signed" || text == "exact") return ExpectationMethod::exact;
    if (text == "weingarten") return ExpectationMethod::weingarten;
    if (text == "mc") return ExpectationMethod::mc;
    throw std::invalid_argument("unknown method '" + text + "'");
}

namespace {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

CycMatrix cyc_zeros(int d, int order) {
    return CycMatrix(static_cast<size_t>(d),
                     std::vector<Cyclotomic>(static_cast<size_t>(d), Cyclotomic(Rat(0), order)));
}

CycMatrix cyc_diag(const SpectrumSpec& spec, int order) {
    const int d = static_cast<int>(spec.size());
    CycMatrix m = cyc_zeros(d, order);
    const bool has_i = order % 4 == 0;
    for (int r = 0; r < d; ++r) {
        Cyclotomic v(spec[static_cast<size_t>(r)].re, order);
        if (spec[static_cast<size_t>(r)].im != 0) {
            if (!has_i) throw std::logic_error("cyc_diag: order cannot represent i");
            Cyclotomic unit = Cyclotomic::zeta_power(order, order / 4);
            unit *= spec[static_cast<size_t>(r)].im;
            v += unit;
        }
        m[static_cast<size_t>(r)][static_cast<size_t>(r)] = v;
    }
    return m;
}

CycMatrix cyc_signed_matrix(const SignedElement& e, int order, int phase_scale) {
    const int d = e.tau.size();
    CycMatrix m = cyc_zeros(d, order);
    for (int r = 1; r <= d; ++r)
        m[static_cast<size_t>(r) - 1][static_cast<size_t>(e.tau(r)) - 1] =
            Cyclotomic::zeta_power(order, static_cast<long long>(e.phases[static_cast<size_t>(r) - 1]) * phase_scale);
    return m;
}

CycMatrix cyc_matmul(const CycMatrix& a, const CycMatrix& b, int order) {
    const int d = static_cast<int>(a.size());
    CycMatrix c = cyc_zeros(d, order);
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t) {
            const Cyclotomic& a_it = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
            if (a_it.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                const Cyclotomic& b_tj = b[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (b_tj.is_zero()) continue;
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] += a_it * b_tj;
            }
        }
    return c;
}

CycMatrix cyc_adjoint(const CycMatrix& a) {
    const int d = static_cast<int>(a.size());
    CycMatrix c = a;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(j)][static_cast<size_t>(i)].conj();
    return c;
}

CycMatrix cyc_add(CycMatrix a, const CycMatrix& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
    return a;
}

// e_0..e_d of the eigenvalues, by the trace recursion for characteristic
// polynomial coefficients (exact over Q(zeta)).
std::vector<Cyclotomic> cyc_char_poly_es(const CycMatrix& w, int order) {
    const int d = static_cast<int>(w.size());
    const Cyclotomic one(Rat(1), order);
    std::vector<Cyclotomic> es(static_cast<size_t>(d) + 1, Cyclotomic(Rat(0), order));
    es[0] = one;
    if (d == 0) return es;
    auto trace = [&](const CycMatrix& m) {
        Cyclotomic t(Rat(0), order);
        for (int i = 0; i < d; ++i) t += m[static_cast<size_t>(i)][static_cast<size_t>(i)];
        return t;
    };
    CycMatrix m = w;
    Cyclotomic prev_a = -trace(m);  // a_{d-1}
    es[1] = -prev_a;
    for (int k = 2; k <= d; ++k) {
        CycMatrix next = cyc_matmul(w, m, order);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Cyclotomic shift = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
                shift *= prev_a;
                next[static_cast<size_t>(i)][static_cast<size_t>(j)] += shift;
            }
        m = std::move(next);
        Cyclotomic a = -trace(m);
        a /= Rat(k);
        es[static_cast<size_t>(k)] = (k % 2 == 0) ? a : -a;
        prev_a = a;
    }
    return es;
}

int cyclotomic_order_for(const SpectrumSpec& a, const SpectrumSpec& b, int s) {
    const bool complex_entries =
        std::any_of(a.begin(), a.end(), [](const ComplexRat& v) { return v.im != 0; }) ||
        std::any_of(b.begin(), b.end(), [](const ComplexRat& v) { return v.im != 0; });
    return complex_entries ? std::lcm(s, 4) : s;
}

void check_exact_inputs(const SpectrumSpec& spec_a, const SpectrumSpec& spec_b, const GroupSpec& g) {
    g.validate();
    if (g.kind != GroupSpec::Kind::signed_permutation || g.s == kInfinitePhaseOrder)
        throw std::invalid_argument("exact expectation requires a finite signed-permutation group");
    if (static_cast<int>(spec_a.size()) != g.d || static_cast<int>(spec_b.size()) != g.d)
        throw std::invalid_argument("exact expectation: spectra must have length d");
}

}  // namespace

std::vector<Cyclotomic> expected_es_exact(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                          const SpectrumSpec& spec_b, const GroupSpec& g,
                                          long long budget) {
    check_exact_inputs(spec_a, spec_b, g);
    const int d = g.d;
    const long long order_count = signed_group_order(d, g.s);
    const bool two_sided = (kind == ConvolutionKind::rect);
    const long long evals = two_sided ? order_count * order_count : order_count;
    if (evals > budget)
        throw resource_error("exact expectation: " + std::to_string(evals) +
                             " element evaluations exceed budget " + std::to_string(budget));

    const int n = cyclotomic_order_for(spec_a, spec_b, g.s);
    const int phase_scale = n / g.s;
    const CycMatrix diag_a = cyc_diag(spec_a, n);
    const CycMatrix diag_b = cyc_diag(spec_b, n);
    const std::vector<SignedElement> elements = signed_group_enumerate(d, g.s, budget);

    std::vector<Cyclotomic> total(static_cast<size_t>(d) + 1, Cyclotomic(Rat(0), n));
    auto accumulate = [&](const CycMatrix& w) {
        const std::vector<Cyclotomic> es = cyc_char_poly_es(w, n);
        for (size_t k = 0; k < total.size(); ++k) total[k] += es[k];
    };

    if (kind == ConvolutionKind::add || kind == ConvolutionKind::mult) {
        for (const SignedElement& e : elements) {
            const CycMatrix u = cyc_signed_matrix(e, n, phase_scale);
            const CycMatrix rotated = cyc_matmul(cyc_matmul(u, diag_b, n), cyc_adjoint(u), n);
            accumulate(kind == ConvolutionKind::add ? cyc_add(rotated, diag_a)
                                                    : cyc_matmul(diag_a, rotated, n));
        }
    } else {
        for (const SignedElement& eu : elements) {
            const CycMatrix ub = cyc_matmul(cyc_signed_matrix(eu, n, phase_scale), diag_b, n);
            for (const SignedElement& ev : elements) {
                const CycMatrix m =
                    cyc_add(cyc_matmul(ub, cyc_signed_matrix(ev, n, phase_scale), n), diag_a);
                accumulate(cyc_matmul(m, cyc_adjoint(m), n));
            }
        }
    }
    for (auto& t : total) t /= Rat(evals);
    return total;
}

Cyclotomic expected_ek_exact(ConvolutionKind kind, const SpectrumSpec& spec_a,
                             const SpectrumSpec& spec_b, const GroupSpec& g, int k,
                             long long budget) {
    if (k < 0 || k > g.d) throw std::invalid_argument("expected_ek_exact: k out of range");
    return expected_es_exact(kind, spec_a, spec_b, g, budget)[static_cast<size_t>(k)];
}

ComplexRat expected_ek_formula(ConvolutionKind kind, const SpectrumSpec& spec_a,
                               const SpectrumSpec& spec_b, int k, int d) {
    if (static_cast<int>(spec_a.size()) != d || static_cast<int>(spec_b.size()) != d)
        throw std::invalid_argument("expected_ek_formula: spectra must have length d");
    if (k < 0 || k > d) throw std::invalid_argument("expected_ek_formula: k out of range");
    auto weight = [&](int i, int j) {
        return Rat(factorial(d - i) * factorial(d - j), factorial(d) * factorial(d - i - j));
    };
    if (kind == ConvolutionKind::mult) {
        const ComplexRat ea = elementary_symmetric(k, spec_a);
        const ComplexRat eb = elementary_symmetric(k, spec_b);
        return ea * eb * Rat(factorial(k) * factorial(d - k), factorial(d));
    }
    SpectrumSpec va = spec_a, vb = spec_b;
    if (kind == ConvolutionKind::rect) {
        for (auto& v : va) v = ComplexRat(v.norm2());
        for (auto& v : vb) v = ComplexRat(v.norm2());
    }
    const std::vector<ComplexRat> ea = elementary_symmetric_all(va, ComplexRat(Rat(1)));
    const std::vector<ComplexRat> eb = elementary_symmetric_all(vb, ComplexRat(Rat(1)));
    ComplexRat total(Rat(0));
    for (int i = 0; i <= k; ++i) {
        Rat w = weight(i, k - i);
        if (kind == ConvolutionKind::rect) w *= w;
        total += ea[static_cast<size_t>(i)] * eb[static_cast<size_t>(k - i)] * w;
    }
    return total;
}

namespace {

// sum over sigma in Sym(rows) of sgn(sigma) E[ prod_t u_{rows(t) cols(t)}
// (conj) u_{sigma(rows(t)) cols(t)} ] for the given Haar group.
Rat alternating_moment_sum(MatrixGroup group, int d, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    const int m = static_cast<int>(rows.size());
    Rat total = 0;
    for_each_permutation(m, [&](const Permutation& sigma) {
        std::vector<int> permuted(static_cast<size_t>(m));
        for (int t = 1; t <= m; ++t) permuted[static_cast<size_t>(t) - 1] = rows[static_cast<size_t>(sigma(t)) - 1];
        Rat moment;
        if (group == MatrixGroup::unitary) {
            moment = haar_moment_unitary(d, MultiIndex(rows), MultiIndex(cols),
                                         MultiIndex(permuted), MultiIndex(cols));
        } else {
            std::vector<int> irows(static_cast<size_t>(2 * m)), icols(static_cast<size_t>(2 * m));
            for (int t = 0; t < m; ++t) {
                irows[static_cast<size_t>(2 * t)] = rows[static_cast<size_t>(t)];
                irows[static_cast<size_t>(2 * t) + 1] = permuted[static_cast<size_t>(t)];
                icols[static_cast<size_t>(2 * t)] = icols[static_cast<size_t>(2 * t) + 1] = cols[static_cast<size_t>(t)];
            }
            moment = haar_moment_orthogonal(d, MultiIndex(irows), MultiIndex(icols));
        }
        total += Rat(sigma.sign()) * moment;
    });
    return total;
}

void for_each_subset(int d, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset(static_cast<size_t>(size));
    std::function<void(int, int)> rec = [&](int next, int picked) {
        if (picked == size) {
            fn(subset);
            return;
        }
        for (int v = next; v <= d - (size - picked) + 1; ++v) {
            subset[static_cast<size_t>(picked)] = v;
            rec(v + 1, picked + 1);
        }
    };
    rec(1, 0);
}

void for_each_grid(int d, int len, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(static_cast<size_t>(len), 1);
    if (len == 0) {
        fn(v);
        return;
    }
    while (true) {
        fn(v);
        int pos = len - 1;
        while (pos >= 0 && ++v[static_cast<size_t>(pos)] > d) {
            v[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
    }
}

}  // namespace

ComplexRat expected_ek_weingarten(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                  const SpectrumSpec& spec_b, MatrixGroup group, int k, int d) {
    if (static_cast<int>(spec_a.size()) != d || static_cast<int>(spec_b.size()) != d)
        throw std::invalid_argument("expected_ek_weingarten: spectra must have length d");
    if (k < 0 || k > d) throw std::invalid_argument("expected_ek_weingarten: k out of range");
    if (kind == ConvolutionKind::rect)
        throw std::invalid_argument(
            "expected_ek_weingarten: asymmetric case is validated by the exact and mc routes");

    ComplexRat total(Rat(0));
    for_each_subset(d, k, [&](const std::vector<int>& s_rows) {
        if (kind == ConvolutionKind::mult) {
            ComplexRat prod_a(Rat(1));
            for (int r : s_rows) prod_a *= spec_a[static_cast<size_t>(r) - 1];
            for_each_grid(d, k, [&](const std::vector<int>& cols) {
                ComplexRat prod_b(Rat(1));
                for (int c : cols) prod_b *= spec_b[static_cast<size_t>(c) - 1];
                const Rat inner = alternating_moment_sum(group, d, s_rows, cols);
                if (inner != 0) total += prod_a * prod_b * inner;
            });
            return;
        }
        // add: split S into fixed rows (diagonal of A) and rotated rows
        const int sz = static_cast<int>(s_rows.size());
        for (unsigned mask = 0; mask < (1u << sz); ++mask) {
            ComplexRat prod_a(Rat(1));
            std::vector<int> rot_rows;
            for (int t = 0; t < sz; ++t) {
                if ((mask >> t) & 1u)
                    prod_a *= spec_a[static_cast<size_t>(s_rows[static_cast<size_t>(t)]) - 1];
                else
                    rot_rows.push_back(s_rows[static_cast<size_t>(t)]);
            }
            for_each_grid(d, static_cast<int>(rot_rows.size()), [&](const std::vector<int>& cols) {
                ComplexRat prod_b(Rat(1));
                for (int c : cols) prod_b *= spec_b[static_cast<size_t>(c) - 1];
                const Rat inner = alternating_moment_sum(group, d, rot_rows, cols);
                if (inner != 0) total += prod_a * prod_b * inner;
            });
        }
    });
    return total;
}

Eigen::MatrixXcd sample_haar_matrix(MatrixGroup group, int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (group == MatrixGroup::unitary) {
        Eigen::MatrixXcd g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q = qr.householderQ();
        const Eigen::MatrixXcd r = qr.matrixQR();
        // fix the phase gauge so the factorization has positive diagonal
        for (int i = 0; i < d; ++i) {
            const std::complex<double> rii = r(i, i);
            const double mag = std::abs(rii);
            q.col(i) *= (mag > 0) ? rii / mag : 1.0;
        }
        return q;
    }
    Eigen::MatrixXd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR();
    for (int i = 0; i < d; ++i)
        if (r(i, i) < 0) q.col(i) *= -1.0;
    return q.cast<std::complex<double>>();
}

MatrixSample sample_haar(MatrixGroup group, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("sample_haar: d must be positive");
    std::mt19937_64 rng(seed);
    return MatrixSample{sample_haar_matrix(group, d, rng), group, seed};
}

double unitarity_residual(const Eigen::MatrixXcd& m) {
    const Eigen::MatrixXcd delta =
        m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return delta.cwiseAbs().maxCoeff();
}

namespace {

std::complex<double> ek_of_matrix(const Eigen::MatrixXcd& w, int k) {
    const int d = static_cast<int>(w.rows());
    if (k == 0) return 1.0;
    std::complex<double> total = 0.0;
    std::vector<int> subset(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int next, int picked) {
        if (picked == k) {
            Eigen::MatrixXcd block(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) block(r, c) = w(subset[static_cast<size_t>(r)], subset[static_cast<size_t>(c)]);
            total += block.determinant();
            return;
        }
        for (int v = next; v <= d - (k - picked); ++v) {
            subset[static_cast<size_t>(picked)] = v;
            rec(v + 1, picked + 1);
        }
    };
    rec(0, 0);
    return total;
}

double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

Eigen::MatrixXcd diag_matrix(const SpectrumSpec& spec) {
    const int d = static_cast<int>(spec.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i)
        m(i, i) = std::complex<double>(spec[static_cast<size_t>(i)].re.convert_to<double>(),
                                       spec[static_cast<size_t>(i)].im.convert_to<double>());
    return m;
}

}  // namespace

EstimateReport expected_ek_montecarlo(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                      const SpectrumSpec& spec_b, MatrixGroup group, int k,
                                      long long n_samples, std::uint64_t seed) {
    const int d = static_cast<int>(spec_a.size());
    if (static_cast<int>(spec_b.size()) != d)
        throw std::invalid_argument("expected_ek_montecarlo: spectra must have equal length");
    if (k < 0 || k > d) throw std::invalid_argument("expected_ek_montecarlo: k out of range");
    if (n_samples < 100) throw std::invalid_argument("expected_ek_montecarlo: need at least 100 samples");

    const ComplexRat closed = expected_ek_formula(kind, spec_a, spec_b, k, d);
    if (!closed.is_real())
        throw std::invalid_argument("expected_ek_montecarlo: closed form is not real");

    const Eigen::MatrixXcd a = diag_matrix(spec_a);
    const Eigen::MatrixXcd b = diag_matrix(spec_b);
    std::mt19937_64 rng(seed);
    std::vector<double> values;
    values.reserve(static_cast<size_t>(n_samples));
    for (long long t = 0; t < n_samples; ++t) {
        const Eigen::MatrixXcd u = sample_haar_matrix(group, d, rng);
        Eigen::MatrixXcd w;
        switch (kind) {
            case ConvolutionKind::add: w = a + u * b * u.adjoint(); break;
            case ConvolutionKind::mult: w = a * u * b * u.adjoint(); break;
            case ConvolutionKind::rect: {
                const Eigen::MatrixXcd v = sample_haar_matrix(group, d, rng);
                const Eigen::MatrixXcd m = a + u * b * v;
                w = m * m.adjoint();
                break;
            }
        }
        values.push_back(ek_of_matrix(w, k).real());
    }

    EstimateReport report;
    report.n_samples = n_samples;
    report.seed = seed;
    report.closed_form = closed.re;
    report.estimate = kahan_sum(values) / static_cast<double>(n_samples);
    std::vector<double> sq;
    sq.reserve(values.size());
    for (double v : values) sq.push_back((v - report.estimate) * (v - report.estimate));
    const double variance =
        (n_samples > 1) ? kahan_sum(sq) / static_cast<double>(n_samples - 1) : 0.0;
    report.standard_error = std::sqrt(variance / static_cast<double>(n_samples));
    const double closed_d = report.closed_form.convert_to<double>();
    const double diff = report.estimate - closed_d;
    report.z_score = (report.standard_error > 0) ? diff / report.standard_error : 0.0;
    report.pass =
        std::abs(diff) <= 4.0 * report.standard_error + 1e-8 * std::max(1.0, std::abs(closed_d));
    return report;
}

PolynomialFF expected_charpoly(ConvolutionKind kind, const SpectrumSpec& spec_a,
                               const SpectrumSpec& spec_b, const GroupSpec& g,
                               ExpectationMethod method, long long budget) {
    const int d = g.d;
    std::vector<Rat> a(static_cast<size_t>(d) + 1);
    if (method == ExpectationMethod::exact) {
        const std::vector<Cyclotomic> es = expected_es_exact(kind, spec_a, spec_b, g, budget);
        for (int k = 0; k <= d; ++k) a[static_cast<size_t>(k)] = es[static_cast<size_t>(k)].rational();
        return PolynomialFF(d, std::move(a));
    }
    if (method == ExpectationMethod::weingarten) {
        MatrixGroup group;
        if (g.kind == GroupSpec::Kind::unitary) {
            group = MatrixGroup::unitary;
        } else if (g.kind == GroupSpec::Kind::orthogonal) {
            group = MatrixGroup::orthogonal;
        } else {
            throw std::invalid_argument("expected_charpoly: weingarten method needs unitary or orthogonal");
        }
        for (int k = 0; k <= d; ++k) {
            const ComplexRat v = expected_ek_weingarten(kind, spec_a, spec_b, group, k, d);
            if (!v.is_real())
                throw std::invalid_argument("expected_charpoly: coefficient is not real");
            a[static_cast<size_t>(k)] = v.re;
        }
        return PolynomialFF(d, std::move(a));
    }
    throw std::invalid_argument("expected_charpoly: use expected_charpoly_mc for the mc method");
}

std::vector<EstimateReport> expected_charpoly_mc(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                                 const SpectrumSpec& spec_b, MatrixGroup group,
                                                 long long n_samples, std::uint64_t seed) {
    const int d = static_cast<int>(spec_a.size());
    std::vector<EstimateReport> reports;
    reports.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        // decorrelate the per-coefficient streams
        const std::uint64_t case_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k + 1);
        reports.push_back(expected_ek_montecarlo(kind, spec_a, spec_b, group, k, n_samples, case_seed));
    }
    return reports;
}

}  // namespace finfree
