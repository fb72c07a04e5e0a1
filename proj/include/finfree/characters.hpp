#pragma once

#include "finfree/combinatorics.hpp"
#include "finfree/rational.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace finfree {

// Largest k for which zonal spherical functions are computed by the defining
// average over H_k (character evaluations on S_{2k}).
inline constexpr int kMaxZonalWeight = 6;

// Irreducible character of S_k labeled by lambda, evaluated on the conjugacy
// class of cycle type rho. Computed by the Murnaghan-Nakayama rule, memoized.
Int character_value(const Partition& lambda, const Partition& rho);

// Product of hook lengths over the cells of lambda.
Int hook_product(const Partition& lambda);

// k! / hook_product(lambda) = chi^lambda(1).
Int dimension(const Partition& lambda);

// Schur function at d ones: (chi^lambda(1)/k!) * prod over cells (d + j - i).
Rat schur_principal_value(const Partition& lambda, int d);

// Zonal polynomial at d ones: prod over cells (d + 2j - i - 1).
Int zonal_principal_value(const Partition& lambda, int d);

// Zonal spherical function of (S_{2k}, H_k) labeled by lambda, on the double
// coset of coset type rho: the average of chi^{2 lambda} over H_k translates
// of a canonical representative.
Rat zonal_value(const Partition& lambda, const Partition& rho);

// Canonical permutation in S_{2k} of coset type rho.
Permutation coset_representative(const Partition& rho);

Int hyperoctahedral_order(int k);  // 2^k k!

// sum over all sigma in S_k of sgn(sigma) chi^lambda(sigma):
// k! when lambda = (1^k), 0 otherwise.
Int signed_character_sum(const Partition& lambda);

// sum over all sigma in S_k of sgn(sigma) omega^lambda at coset type
// mu_sigma: (k+1)!/2^k when lambda = (1^k), 0 otherwise.
Rat signed_zonal_sum(const Partition& lambda);

// Full table of chi^lambda_rho for lambda, rho |- k.
class CharacterTable {
  public:
    explicit CharacterTable(int k);
    int weight() const { return k_; }
    const std::vector<Partition>& labels() const { return labels_; }
    const Int& value(const Partition& lambda, const Partition& rho) const;

  private:
    int k_;
    std::vector<Partition> labels_;
    std::map<std::pair<Partition, Partition>, Int> values_;
};

// Full table of omega^lambda_rho for lambda, rho |- k.
class ZonalTable {
  public:
    explicit ZonalTable(int k);
    int weight() const { return k_; }
    const std::vector<Partition>& labels() const { return labels_; }
    const Rat& value(const Partition& lambda, const Partition& rho) const;

  private:
    int k_;
    std::vector<Partition> labels_;
    std::map<std::pair<Partition, Partition>, Rat> values_;
};

std::shared_ptr<const CharacterTable> character_table(int k);
std::shared_ptr<const ZonalTable> zonal_table(int k);

}  // namespace finfree
