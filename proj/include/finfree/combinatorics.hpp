#pragma once

#include "finfree/rational.hpp"

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace finfree {

// Integer partition, stored as a weakly decreasing list of positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int multiplicity(int part) const;
    bool empty() const { return parts_.empty(); }

    // (2*p_1, 2*p_2, ...)
    Partition doubled() const;

    std::string to_string() const;  // "2,1"; the empty partition prints as ""
    static Partition from_string(const std::string& s);

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Every partition of k, first part descending ((k) first, (1^k) last).
std::vector<Partition> partitions_of(int k);

// prod_i i^{m_i} * m_i!  — the order of the centralizer of a permutation
// of cycle type rho.
Int z_of(const Partition& rho);

// Number of permutations of S_k with exactly i cycles.
Int stirling_first_unsigned(int k, int i);

// Permutation of {1..k}; all interfaces are 1-indexed.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // images[i-1] = sigma(i)

    static Permutation identity(int k);
    static Permutation transposition(int k, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (s.then_apply(t))(i) = t(s(i)) is not provided; use compose(s, t) = s∘t.
    friend Permutation compose(const Permutation& s, const Permutation& t);  // i -> s(t(i))

    Partition cycle_type() const;
    int num_cycles() const;
    int sign() const;  // (-1)^(k - number of cycles)

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int k);
void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn);

// Partition of the set {1..k} into disjoint nonempty blocks.
class SetPartition {
  public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::vector<int>> blocks, int ground_size);

    int ground_size() const { return ground_size_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_index_of(int element) const { return block_of_[static_cast<size_t>(element) - 1]; }

    bool same_block(int a, int b) const { return block_index_of(a) == block_index_of(b); }
    // Refinement order: *this <= other iff every block of *this lies inside a
    // block of other.
    bool refines(const SetPartition& other) const;

    bool operator==(const SetPartition&) const = default;

  private:
    std::vector<std::vector<int>> blocks_;  // blocks sorted by minimum, elements ascending
    std::vector<int> block_of_;
    int ground_size_ = 0;
};

std::vector<SetPartition> all_set_partitions(int k);

// Multi-index [k] -> [d]; entries are 1-based column/row labels.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> values) : values_(std::move(values)) {}

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& values() const { return values_; }

    bool is_injective() const;
    bool in_range(int d) const;

    bool operator==(const MultiIndex&) const = default;

  private:
    std::vector<int> values_;
};

SetPartition kernel_of(const MultiIndex& m);

// Perfect matching of {1..2k}. Canonical form: each pair has its smaller
// element first, pairs sorted by smaller element.
class PairPartition {
  public:
    PairPartition() = default;
    explicit PairPartition(std::vector<std::pair<int, int>> pairs);

    int num_pairs() const { return static_cast<int>(pairs_.size()); }
    int ground_size() const { return 2 * num_pairs(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    SetPartition as_set_partition() const;
    bool operator==(const PairPartition&) const = default;

  private:
    std::vector<std::pair<int, int>> pairs_;
};

std::vector<PairPartition> all_pair_partitions(int ground_size);

// Canonical embedding of a perfect matching into S_{2k}: j -> pi(j) where
// pi(1),...,pi(2k) is the canonical listing of the pairs.
Permutation pair_partition_to_permutation(const PairPartition& p);

// Coset type of a permutation of {1..2k}: half the cycle lengths of the graph
// whose edges are {2i-1,2i} and {s(2i-1),s(2i)}.
Partition coset_type(const Permutation& s);

// Hyperoctahedral group H_k inside S_{2k}: the centralizer of
// (1 2)(3 4)...(2k-1 2k), built directly as the 2^k k! pair-block symmetries.
std::vector<Permutation> hyperoctahedral_group(int k);

}  // namespace finfree
