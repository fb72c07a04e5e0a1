#pragma once

#include "finfree/cyclotomic.hpp"
#include "finfree/finite_free.hpp"
#include "finfree/quadrature.hpp"
#include "finfree/weingarten.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace finfree {

enum class ConvolutionKind { add, mult, rect };

std::string kind_to_string(ConvolutionKind kind);
ConvolutionKind kind_from_string(const std::string& text);

enum class ExpectationMethod { exact, weingarten, mc };

std::string method_to_string(ExpectationMethod method);
ExpectationMethod method_from_string(const std::string& text);

// Exact average of e_k(A+UBU*), e_k(AUBU*) or e_k((A+UBV)(A+UBV)*) over the
// full finite signed-permutation group (a pair of groups for rect), with
// A = diag(spec_a), B = diag(spec_b). Entries live in Q(zeta); the value is
// rational for real spectra.
Cyclotomic expected_ek_exact(ConvolutionKind kind, const SpectrumSpec& spec_a,
                             const SpectrumSpec& spec_b, const GroupSpec& g, int k,
                             long long budget = kDefaultEnumerationBudget);

// All of e_0..e_d in a single pass over the group.
std::vector<Cyclotomic> expected_es_exact(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                          const SpectrumSpec& spec_b, const GroupSpec& g,
                                          long long budget = kDefaultEnumerationBudget);

// The closed forms: weighted sums of e_i(A) e_j(B) (e_i(AA*) e_j(BB*) for rect).
ComplexRat expected_ek_formula(ConvolutionKind kind, const SpectrumSpec& spec_a,
                               const SpectrumSpec& spec_b, int k, int d);

// Term-by-term expansion of E e_k over minors and entry moments of the given
// Haar group. Supports add and mult; the asymmetric case is validated by the
// exact and Monte Carlo routes instead.
ComplexRat expected_ek_weingarten(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                  const SpectrumSpec& spec_b, MatrixGroup group, int k, int d);

struct MatrixSample {
    Eigen::MatrixXcd matrix;
    MatrixGroup group = MatrixGroup::unitary;
    std::uint64_t seed = 0;
};

Eigen::MatrixXcd sample_haar_matrix(MatrixGroup group, int d, std::mt19937_64& rng);
MatrixSample sample_haar(MatrixGroup group, int d, std::uint64_t seed);

// max |(U U* - I)_{ij}|
double unitarity_residual(const Eigen::MatrixXcd& m);

struct EstimateReport {
    double estimate = 0.0;
    double standard_error = 0.0;
    long long n_samples = 0;
    Rat closed_form;
    double z_score = 0.0;  // (estimate - closed_form) / standard_error when SE > 0
    std::uint64_t seed = 0;
    bool pass = false;  // |estimate - closed| <= 4 SE + 1e-8 * max(1, |closed|)
};

EstimateReport expected_ek_montecarlo(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                      const SpectrumSpec& spec_b, MatrixGroup group, int k,
                                      long long n_samples, std::uint64_t seed);

// Assembles sum_k x^{d-k} (-1)^k E[e_k] for method exact or weingarten; every
// coefficient must come out rational.
PolynomialFF expected_charpoly(ConvolutionKind kind, const SpectrumSpec& spec_a,
                               const SpectrumSpec& spec_b, const GroupSpec& g,
                               ExpectationMethod method,
                               long long budget = kDefaultEnumerationBudget);

// Monte Carlo report for every coefficient k = 0..d.
std::vector<EstimateReport> expected_charpoly_mc(ConvolutionKind kind, const SpectrumSpec& spec_a,
                                                 const SpectrumSpec& spec_b, MatrixGroup group,
                                                 long long n_samples, std::uint64_t seed);

}  // namespace finfree
