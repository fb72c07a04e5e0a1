#pragma once

#include "finfree/characters.hpp"
#include "finfree/combinatorics.hpp"
#include "finfree/rational.hpp"

#include <map>
#include <memory>

namespace finfree {

// Largest moment order supported by the pairwise enumeration over S_k x S_k
// (unitary) or P_2(2k) x P_2(2k) (orthogonal).
inline constexpr int kMaxMomentOrder = 6;

enum class MatrixGroup { unitary, orthogonal };

// Exact Weingarten values for fixed (group, k, d), keyed by cycle type
// (unitary) or coset type (orthogonal) of the relative permutation.
class WeingartenTable {
  public:
    WeingartenTable(MatrixGroup group, int k, int d);

    MatrixGroup group() const { return group_; }
    int order() const { return k_; }
    int dim() const { return d_; }
    const Rat& value(const Partition& rho) const;
    const std::map<Partition, Rat>& values() const { return values_; }

  private:
    MatrixGroup group_;
    int k_;
    int d_;
    std::map<Partition, Rat> values_;
};

std::shared_ptr<const WeingartenTable> weingarten_table(MatrixGroup group, int k, int d);

Rat wg_unitary(int k, int d, const Partition& rho);
Rat wg_orthogonal(int k, int d, const Partition& rho);

// Exact Haar moment over U_d of
//   u_{i(1)j(1)} ... u_{i(k)j(k)} * conj(u_{ip(1)jp(1)}) ... conj(u_{ip(k')jp(k')}).
// Zero when k != k'.
Rat haar_moment_unitary(int d, const MultiIndex& i, const MultiIndex& j, const MultiIndex& ip,
                        const MultiIndex& jp);

// Exact Haar moment over O_d of u_{i(1)j(1)} ... u_{i(2k)j(2k)}.
Rat haar_moment_orthogonal(int d, const MultiIndex& i, const MultiIndex& j);

}  // namespace finfree
