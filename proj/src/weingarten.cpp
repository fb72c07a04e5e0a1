#include "finfree/weingarten.hpp"

#include <mutex>
#include <tuple>

namespace finfree {

WeingartenTable::WeingartenTable(MatrixGroup group, int k, int d) : group_(group), k_(k), d_(d) {
    if (k < 0 || d < 1) throw std::invalid_argument("WeingartenTable: require k >= 0, d >= 1");
    if (k > d)
        throw std::invalid_argument("WeingartenTable: k > d is outside the supported regime");
    const std::vector<Partition> lambdas = partitions_of(k);
    if (group == MatrixGroup::unitary) {
        const auto chi = character_table(k);
        const Rat norm(1, factorial(k) * factorial(k));
        for (const Partition& rho : lambdas) {
            Rat sum = 0;
            for (const Partition& lambda : lambdas) {
                const Int dim = dimension(lambda);
                sum += Rat(dim * dim) / schur_principal_value(lambda, d) * Rat(chi->value(lambda, rho));
            }
            values_.emplace(rho, norm * sum);
        }
    } else {
        const auto omega = zonal_table(k);
        const Rat norm((Int(1) << k) * factorial(k), factorial(2 * k));
        for (const Partition& rho : lambdas) {
            Rat sum = 0;
            for (const Partition& lambda : lambdas)
                sum += Rat(dimension(lambda.doubled()), zonal_principal_value(lambda, d)) *
                       omega->value(lambda, rho);
            values_.emplace(rho, norm * sum);
        }
    }
}

const Rat& WeingartenTable::value(const Partition& rho) const {
    auto it = values_.find(rho);
    if (it == values_.end()) throw std::invalid_argument("WeingartenTable: type is not a partition of k");
    return it->second;
}

std::shared_ptr<const WeingartenTable> weingarten_table(MatrixGroup group, int k, int d) {
    static std::mutex mu;
    static std::map<std::tuple<MatrixGroup, int, int>, std::shared_ptr<const WeingartenTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_tuple(group, k, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<const WeingartenTable>(group, k, d);
    cache.emplace(key, table);
    return table;
}

Rat wg_unitary(int k, int d, const Partition& rho) {
    return weingarten_table(MatrixGroup::unitary, k, d)->value(rho);
}

Rat wg_orthogonal(int k, int d, const Partition& rho) {
    return weingarten_table(MatrixGroup::orthogonal, k, d)->value(rho);
}

namespace {

void check_entries(int d, const MultiIndex& m, const char* name) {
    if (!m.in_range(d))
        throw std::invalid_argument(std::string("haar moment: index ") + name +
                                    " has entries outside {1..d}");
}

// Permutations pi with source = target o pi.
std::vector<Permutation> matching_permutations(const MultiIndex& source, const MultiIndex& target) {
    std::vector<Permutation> out;
    const int k = source.size();
    for_each_permutation(k, [&](const Permutation& pi) {
        for (int t = 1; t <= k; ++t)
            if (source(t) != target(pi(t))) return;
        out.push_back(pi);
    });
    return out;
}

struct EmbeddedPairing {
    PairPartition pairing;
    Permutation perm;
    Permutation inv;
};

const std::vector<EmbeddedPairing>& embedded_pairings(int ground_size) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::vector<EmbeddedPairing>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ground_size);
    if (it == cache.end()) {
        auto vec = std::make_shared<std::vector<EmbeddedPairing>>();
        for (const PairPartition& p : all_pair_partitions(ground_size)) {
            const Permutation perm = pair_partition_to_permutation(p);
            vec->push_back({p, perm, perm.inverse()});
        }
        it = cache.emplace(ground_size, std::move(vec)).first;
    }
    return *it->second;
}

bool pairing_refines_kernel(const PairPartition& p, const MultiIndex& m) {
    for (const auto& [a, b] : p.pairs())
        if (m(a) != m(b)) return false;
    return true;
}

}  // namespace

Rat haar_moment_unitary(int d, const MultiIndex& i, const MultiIndex& j, const MultiIndex& ip,
                        const MultiIndex& jp) {
    if (d < 1) throw std::invalid_argument("haar_moment_unitary: d must be positive");
    if (i.size() != j.size() || ip.size() != jp.size())
        throw std::invalid_argument("haar_moment_unitary: row/column index length mismatch");
    check_entries(d, i, "i");
    check_entries(d, j, "j");
    check_entries(d, ip, "i'");
    check_entries(d, jp, "j'");
    const int k = i.size();
    if (k != ip.size()) return 0;  // unmatched conjugates integrate to zero
    if (k == 0) return 1;
    if (k > d)
        throw std::invalid_argument("haar_moment_unitary: k > d is outside the supported regime");
    if (k > kMaxMomentOrder)
        throw resource_error("haar_moment_unitary: order exceeds supported bound " +
                             std::to_string(kMaxMomentOrder));

    const std::vector<Permutation> row_matches = matching_permutations(i, ip);
    if (row_matches.empty()) return 0;
    const std::vector<Permutation> col_matches = matching_permutations(j, jp);
    if (col_matches.empty()) return 0;

    std::map<Partition, long long> counts;
    for (const Permutation& pi : row_matches) {
        const Permutation pi_inv = pi.inverse();
        for (const Permutation& sigma : col_matches) ++counts[compose(pi_inv, sigma).cycle_type()];
    }
    const auto table = weingarten_table(MatrixGroup::unitary, k, d);
    Rat total = 0;
    for (const auto& [type, count] : counts) total += Rat(count) * table->value(type);
    return total;
}

Rat haar_moment_orthogonal(int d, const MultiIndex& i, const MultiIndex& j) {
    if (d < 1) throw std::invalid_argument("haar_moment_orthogonal: d must be positive");
    if (i.size() != j.size())
        throw std::invalid_argument("haar_moment_orthogonal: index length mismatch");
    if (i.size() % 2 != 0)
        throw std::invalid_argument("haar_moment_orthogonal: index length must be even");
    check_entries(d, i, "i");
    check_entries(d, j, "j");
    const int k = i.size() / 2;
    if (k == 0) return 1;
    if (k > d)
        throw std::invalid_argument("haar_moment_orthogonal: k > d is outside the supported regime");
    if (k > kMaxMomentOrder)
        throw resource_error("haar_moment_orthogonal: order exceeds supported bound " +
                             std::to_string(kMaxMomentOrder));

    const std::vector<EmbeddedPairing>& pairings = embedded_pairings(2 * k);
    std::vector<const EmbeddedPairing*> row_matches, col_matches;
    for (const EmbeddedPairing& e : pairings) {
        if (pairing_refines_kernel(e.pairing, i)) row_matches.push_back(&e);
        if (pairing_refines_kernel(e.pairing, j)) col_matches.push_back(&e);
    }
    if (row_matches.empty() || col_matches.empty()) return 0;

    std::map<Partition, long long> counts;
    for (const EmbeddedPairing* pi : row_matches)
        for (const EmbeddedPairing* tau : col_matches)
            ++counts[coset_type(compose(pi->inv, tau->perm))];
    const auto table = weingarten_table(MatrixGroup::orthogonal, k, d);
    Rat total = 0;
    for (const auto& [type, count] : counts) total += Rat(count) * table->value(type);
    return total;
}

}  // namespace finfree
