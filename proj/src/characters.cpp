#include "finfree/characters.hpp"

#include <algorithm>
#include <mutex>

namespace finfree {

namespace {

// Murnaghan-Nakayama on beta-numbers: removing a border strip of length r
// corresponds to lowering one beta-number by r; the strip height is the
// number of beta-numbers jumped over.
Int mn_recurse(std::vector<int> lam, std::vector<int> rho,
               std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (rho.empty()) return 1;  // lam is empty too when weights match
    const auto key = std::make_pair(lam, rho);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = rho.front();
    const std::vector<int> rest(rho.begin() + 1, rho.end());
    const int rows = static_cast<int>(lam.size());
    std::vector<int> beta(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) beta[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (rows - 1 - i);

    Int total = 0;
    for (int i = 0; i < rows; ++i) {
        const int b = beta[static_cast<size_t>(i)];
        const int target = b - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int bp : beta)
            if (target < bp && bp < b) ++height;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = target;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nlam;
        for (int t = 0; t < rows; ++t) {
            const int part = nbeta[static_cast<size_t>(t)] - (rows - 1 - t);
            if (part > 0) nlam.push_back(part);
        }
        const Int sub = mn_recurse(std::move(nlam), rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

Int mn_character(const Partition& lambda, const Partition& rho) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    std::lock_guard<std::mutex> lock(mu);
    return mn_recurse(lambda.parts(), rho.parts(), memo);
}

std::vector<int> conjugate_parts(const Partition& lambda) {
    std::vector<int> conj;
    if (lambda.empty()) return conj;
    conj.resize(static_cast<size_t>(lambda.parts().front()), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return conj;
}

}  // namespace

Int character_value(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw std::invalid_argument("character_value: weight mismatch");
    return mn_character(lambda, rho);
}

Int hook_product(const Partition& lambda) {
    const std::vector<int> conj = conjugate_parts(lambda);
    Int h = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        const int row = lambda.parts()[static_cast<size_t>(i) - 1];
        for (int j = 1; j <= row; ++j) {
            const int arm = row - j;
            const int leg = conj[static_cast<size_t>(j) - 1] - i;
            h *= (arm + leg + 1);
        }
    }
    return h;
}

Int dimension(const Partition& lambda) { return factorial(lambda.weight()) / hook_product(lambda); }

Rat schur_principal_value(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("schur_principal_value: d must be positive");
    if (lambda.length() > d)
        throw std::invalid_argument("schur_principal_value: partition has more than d rows");
    Int content_prod = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.parts()[static_cast<size_t>(i) - 1]; ++j)
            content_prod *= (d + j - i);
    return Rat(dimension(lambda) * content_prod, factorial(lambda.weight()));
}

Int zonal_principal_value(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("zonal_principal_value: d must be positive");
    if (lambda.length() > d)
        throw std::invalid_argument("zonal_principal_value: partition has more than d rows");
    Int z = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.parts()[static_cast<size_t>(i) - 1]; ++j)
            z *= (d + 2 * j - i - 1);
    return z;
}

Permutation coset_representative(const Partition& rho) {
    const int k = rho.weight();
    std::vector<int> im(static_cast<size_t>(2 * k));
    for (size_t i = 0; i < im.size(); ++i) im[i] = static_cast<int>(i) + 1;
    int pair_offset = 0;
    for (int m : rho.parts()) {
        // chain the m pairs of this block into one component of size 2m
        const int o = 2 * pair_offset;
        for (int j = 1; j < m; ++j) std::swap(im[static_cast<size_t>(o + 2 * j) - 1], im[static_cast<size_t>(o + 2 * j)]);
        pair_offset += m;
    }
    return Permutation(std::move(im));
}

Int hyperoctahedral_order(int k) { return (Int(1) << k) * factorial(k); }

Int signed_character_sum(const Partition& lambda) {
    const int k = lambda.weight();
    Int total = 0;
    for (const Partition& rho : partitions_of(k)) {
        const Int class_size = factorial(k) / z_of(rho);
        const Int chi = character_value(lambda, rho);
        const int sgn = ((k - rho.length()) % 2 == 0) ? 1 : -1;
        total += sgn * class_size * chi;
    }
    return total;
}

Rat signed_zonal_sum(const Partition& lambda) {
    const int k = lambda.weight();
    Rat total = 0;
    for (const Partition& rho : partitions_of(k)) {
        const Rat class_size(factorial(k), z_of(rho));
        const int sgn = ((k - rho.length()) % 2 == 0) ? 1 : -1;
        total += sgn * class_size * zonal_value(lambda, rho);
    }
    return total;
}

CharacterTable::CharacterTable(int k) : k_(k), labels_(partitions_of(k)) {
    for (const Partition& lambda : labels_)
        for (const Partition& rho : labels_)
            values_.emplace(std::make_pair(lambda, rho), character_value(lambda, rho));
}

const Int& CharacterTable::value(const Partition& lambda, const Partition& rho) const {
    auto it = values_.find(std::make_pair(lambda, rho));
    if (it == values_.end()) throw std::invalid_argument("CharacterTable: labels not of weight k");
    return it->second;
}

ZonalTable::ZonalTable(int k) : k_(k), labels_(partitions_of(k)) {
    if (k > kMaxZonalWeight)
        throw resource_error("ZonalTable: weight " + std::to_string(k) + " exceeds supported bound " +
                             std::to_string(kMaxZonalWeight));
    const std::vector<Permutation> hk = hyperoctahedral_group(k);
    const Rat order(static_cast<long long>(hk.size()));
    for (const Partition& rho : labels_) {
        const Permutation rep = coset_representative(rho);
        // class multiset of {rep * zeta : zeta in H_k}, shared across lambdas
        std::map<Partition, long long> counts;
        for (const Permutation& zeta : hk) ++counts[compose(rep, zeta).cycle_type()];
        for (const Partition& lambda : labels_) {
            const Partition two_lambda = lambda.doubled();
            Rat sum = 0;
            for (const auto& [type, count] : counts)
                sum += Rat(character_value(two_lambda, type) * count);
            values_.emplace(std::make_pair(lambda, rho), sum / order);
        }
    }
}

const Rat& ZonalTable::value(const Partition& lambda, const Partition& rho) const {
    auto it = values_.find(std::make_pair(lambda, rho));
    if (it == values_.end()) throw std::invalid_argument("ZonalTable: labels not of weight k");
    return it->second;
}

namespace {

template <typename Table>
std::shared_ptr<const Table> cached_table(int k) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Table>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<const Table>(k);
    cache.emplace(k, table);
    return table;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(int k) { return cached_table<CharacterTable>(k); }

std::shared_ptr<const ZonalTable> zonal_table(int k) { return cached_table<ZonalTable>(k); }

Rat zonal_value(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight()) throw std::invalid_argument("zonal_value: weight mismatch");
    return zonal_table(lambda.weight())->value(lambda, rho);
}

}  // namespace finfree
