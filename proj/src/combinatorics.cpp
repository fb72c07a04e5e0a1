#include "finfree/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace finfree {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::doubled() const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= 2;
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::from_string(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(k, k, acc, out);
    return out;
}

Int z_of(const Partition& rho) {
    Int z = 1;
    int run_part = 0, run_len = 0;
    auto flush = [&] {
        for (int i = 1; i <= run_len; ++i) z *= Int(run_part) * i;
    };
    for (int p : rho.parts()) {
        if (p == run_part) {
            ++run_len;
        } else {
            flush();
            run_part = p;
            run_len = 1;
        }
    }
    flush();
    return z;
}

Int stirling_first_unsigned(int k, int i) {
    if (k < 0 || i < 0) throw std::invalid_argument("stirling_first_unsigned: negative argument");
    if (i > k) throw std::invalid_argument("stirling_first_unsigned: i exceeds k");
    // c(n, j) = c(n-1, j-1) + (n-1) c(n-1, j)
    std::vector<Int> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (int n = 1; n <= k; ++n) {
        for (int j = n; j >= 1; --j) row[j] = row[j - 1] + Int(n - 1) * row[j];
        row[0] = 0;
    }
    return row[static_cast<size_t>(i)];
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int k = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<size_t>(k), false);
    for (int v : images_) {
        if (v < 1 || v > k || seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("Permutation: images must be a bijection of {1..k}");
        seen[static_cast<size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> im(static_cast<size_t>(k));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int k, int a, int b) {
    Permutation p = identity(k);
    std::swap(p.images_[static_cast<size_t>(a) - 1], p.images_[static_cast<size_t>(b) - 1]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(t.images_.size());
    for (size_t i = 0; i < im.size(); ++i)
        im[i] = s.images_[static_cast<size_t>(t.images_[i]) - 1];
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Partition Permutation::cycle_type() const {
    const int k = size();
    std::vector<bool> seen(static_cast<size_t>(k), false);
    std::vector<int> lens;
    for (int i = 1; i <= k; ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        int len = 0, j = i;
        do {
            seen[static_cast<size_t>(j) - 1] = true;
            j = (*this)(j);
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

int Permutation::num_cycles() const { return cycle_type().length(); }

int Permutation::sign() const { return ((size() - num_cycles()) % 2 == 0) ? 1 : -1; }

std::vector<Permutation> all_permutations(int k) {
    std::vector<Permutation> out;
    for_each_permutation(k, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> im(static_cast<size_t>(k));
    std::iota(im.begin(), im.end(), 1);
    do {
        fn(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks, int ground_size)
    : blocks_(std::move(blocks)), ground_size_(ground_size) {
    block_of_.assign(static_cast<size_t>(ground_size), 0);
    std::vector<bool> seen(static_cast<size_t>(ground_size), false);
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > ground_size || seen[static_cast<size_t>(x) - 1])
                throw std::invalid_argument("SetPartition: blocks must partition {1..k}");
            seen[static_cast<size_t>(x) - 1] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("SetPartition: blocks must cover {1..k}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (size_t bi = 0; bi < blocks_.size(); ++bi)
        for (int x : blocks_[bi]) block_of_[static_cast<size_t>(x) - 1] = static_cast<int>(bi);
}

bool SetPartition::refines(const SetPartition& other) const {
    if (ground_size_ != other.ground_size_) return false;
    for (const auto& b : blocks_)
        for (size_t i = 1; i < b.size(); ++i)
            if (!other.same_block(b[0], b[i])) return false;
    return true;
}

namespace {

void set_partitions_rec(int next, int k, std::vector<std::vector<int>>& blocks,
                        std::vector<SetPartition>& out) {
    if (next > k) {
        out.push_back(SetPartition(blocks, k));
        return;
    }
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        blocks[bi].push_back(next);
        set_partitions_rec(next + 1, k, blocks, out);
        blocks[bi].pop_back();
    }
    blocks.push_back({next});
    set_partitions_rec(next + 1, k, blocks, out);
    blocks.pop_back();
}

}  // namespace

std::vector<SetPartition> all_set_partitions(int k) {
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    if (k == 0) {
        out.push_back(SetPartition({}, 0));
        return out;
    }
    set_partitions_rec(1, k, blocks, out);
    return out;
}

bool MultiIndex::is_injective() const {
    std::vector<int> v = values_;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool MultiIndex::in_range(int d) const {
    return std::all_of(values_.begin(), values_.end(), [d](int x) { return 1 <= x && x <= d; });
}

SetPartition kernel_of(const MultiIndex& m) {
    const int k = m.size();
    std::vector<std::vector<int>> blocks;
    std::vector<int> rep_value;
    for (int i = 1; i <= k; ++i) {
        bool placed = false;
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (rep_value[b] == m(i)) {
                blocks[b].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            blocks.push_back({i});
            rep_value.push_back(m(i));
        }
    }
    return SetPartition(std::move(blocks), k);
}

PairPartition::PairPartition(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    const int n = 2 * static_cast<int>(pairs_.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (auto& [a, b] : pairs_) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b || seen[static_cast<size_t>(a) - 1] ||
            seen[static_cast<size_t>(b) - 1])
            throw std::invalid_argument("PairPartition: pairs must partition {1..2k}");
        seen[static_cast<size_t>(a) - 1] = seen[static_cast<size_t>(b) - 1] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
}

SetPartition PairPartition::as_set_partition() const {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(pairs_.size());
    for (const auto& [a, b] : pairs_) blocks.push_back({a, b});
    return SetPartition(std::move(blocks), ground_size());
}

namespace {

void pair_partitions_rec(std::vector<int>& unused, std::vector<std::pair<int, int>>& acc,
                         std::vector<PairPartition>& out) {
    if (unused.empty()) {
        out.push_back(PairPartition(acc));
        return;
    }
    const int a = unused.front();
    for (size_t j = 1; j < unused.size(); ++j) {
        const int b = unused[j];
        std::vector<int> rest;
        rest.reserve(unused.size() - 2);
        for (size_t t = 1; t < unused.size(); ++t)
            if (t != j) rest.push_back(unused[t]);
        acc.emplace_back(a, b);
        pair_partitions_rec(rest, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<PairPartition> all_pair_partitions(int ground_size) {
    if (ground_size < 0 || ground_size % 2 != 0)
        throw std::invalid_argument("all_pair_partitions: ground size must be even");
    std::vector<PairPartition> out;
    if (ground_size == 0) {
        out.push_back(PairPartition(std::vector<std::pair<int, int>>{}));
        return out;
    }
    std::vector<int> unused(static_cast<size_t>(ground_size));
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<std::pair<int, int>> acc;
    pair_partitions_rec(unused, acc, out);
    return out;
}

Permutation pair_partition_to_permutation(const PairPartition& p) {
    // Canonical listing: pairs ordered by smaller element, smaller element
    // first within each pair; the embedding sends j to the j-th listed value.
    std::vector<int> im;
    im.reserve(static_cast<size_t>(p.ground_size()));
    for (const auto& [a, b] : p.pairs()) {
        im.push_back(a);
        im.push_back(b);
    }
    return Permutation(std::move(im));
}

Partition coset_type(const Permutation& s) {
    const int n = s.size();
    if (n % 2 != 0) throw std::invalid_argument("coset_type: ground set size must be even");
    const int k = n / 2;
    // Two perfect matchings on {1..2k}: base pairs {2i-1,2i} and the images
    // {s(2i-1), s(2i)}. Components of their union are even cycles.
    std::vector<int> base(static_cast<size_t>(n)), img(static_cast<size_t>(n));
    for (int i = 1; i <= k; ++i) {
        base[static_cast<size_t>(2 * i - 1) - 1] = 2 * i;
        base[static_cast<size_t>(2 * i) - 1] = 2 * i - 1;
        const int a = s(2 * i - 1), b = s(2 * i);
        img[static_cast<size_t>(a) - 1] = b;
        img[static_cast<size_t>(b) - 1] = a;
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> halves;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start) - 1]) continue;
        int len = 0, v = start;
        bool use_base = true;
        do {
            seen[static_cast<size_t>(v) - 1] = true;
            v = use_base ? base[static_cast<size_t>(v) - 1] : img[static_cast<size_t>(v) - 1];
            use_base = !use_base;
            ++len;
        } while (v != start);
        halves.push_back(len / 2);
    }
    std::sort(halves.begin(), halves.end(), std::greater<int>());
    return Partition(std::move(halves));
}

std::vector<Permutation> hyperoctahedral_group(int k) {
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>((1 << k)) * static_cast<size_t>(factorial(k).convert_to<long long>()));
    for_each_permutation(k, [&](const Permutation& tau) {
        for (unsigned bits = 0; bits < (1u << k); ++bits) {
            std::vector<int> im(static_cast<size_t>(2 * k));
            for (int i = 1; i <= k; ++i) {
                const int t = tau(i);
                const bool swap_pair = (bits >> (i - 1)) & 1u;
                im[static_cast<size_t>(2 * i - 1) - 1] = swap_pair ? 2 * t : 2 * t - 1;
                im[static_cast<size_t>(2 * i) - 1] = swap_pair ? 2 * t - 1 : 2 * t;
            }
            out.push_back(Permutation(std::move(im)));
        }
    });
    return out;
}

}  // namespace finfree
