#pragma once

#include "finfree/combinatorics.hpp"
#include "finfree/rational.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace finfree {

// Phase order marking the full-circle case of the signed-permutation series.
inline constexpr int kInfinitePhaseOrder = 0;

// Default cap on exact group enumerations, counted in group elements
// (element pairs for the two-sided averages).
inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

struct GroupSpec {
    enum class Kind { unitary, orthogonal, signed_permutation };

    Kind kind = Kind::unitary;
    int d = 1;
    // Root-of-unity order for signed_permutation: s >= 2, or
    // kInfinitePhaseOrder for the full circle. Ignored otherwise.
    int s = 2;

    void validate() const;
    std::string to_string() const;  // "unitary" | "orthogonal" | "signed:<s>" | "signed:inf"
    static GroupSpec parse(const std::string& text, int d);
};

// Generalized signed permutation matrix: row i has the single nonzero entry
// zeta_s^{phases[i-1]} in column tau(i).
struct SignedElement {
    Permutation tau;
    std::vector<int> phases;
};

long long signed_group_order(int d, int s);  // s^d * d!, finite s only

void for_each_signed_element(int d, int s, long long budget,
                             const std::function<void(const SignedElement&)>& fn);

std::vector<SignedElement> signed_group_enumerate(int d, int s,
                                                  long long budget = kDefaultEnumerationBudget);

// sum over sigma in S_k of sgn(sigma) * E[ prod_i u_{i p(i)} conj(u_{sigma(i) p(i)}) ]
// for the group described by g. Equals (d-k)!/d! for injective p and 0
// otherwise when g has the quadrature property.
Rat quadrature_sum(const GroupSpec& g, const MultiIndex& p,
                   long long budget = kDefaultEnumerationBudget);

struct QuadratureCase {
    int k = 0;
    std::vector<int> p;
    Rat value;
    Rat expected;
    bool pass = false;
};

struct QuadratureReport {
    GroupSpec group;
    int k_max = 0;
    std::vector<QuadratureCase> cases;
    bool all_pass = false;
};

// Evaluates quadrature_sum for every k <= k_max and every p in [d]^k, and
// compares against (d-k)!/d! (injective p) or 0.
QuadratureReport verify_quadrature(const GroupSpec& g, int k_max,
                                   long long budget = kDefaultEnumerationBudget, int threads = 1);

}  // namespace finfree
