#include "finfree/quadrature.hpp"

#include "finfree/cyclotomic.hpp"
#include "finfree/weingarten.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace finfree {

void GroupSpec::validate() const {
    if (d < 1) throw std::invalid_argument("GroupSpec: d must be positive");
    if (kind == Kind::signed_permutation && s != kInfinitePhaseOrder && s < 2)
        throw std::invalid_argument("GroupSpec: phase order must be >= 2 or infinite");
}

std::string GroupSpec::to_string() const {
    switch (kind) {
        case Kind::unitary: return "unitary";
        case Kind::orthogonal: return "orthogonal";
        case Kind::signed_permutation:
            return s == kInfinitePhaseOrder ? "signed:inf" : "signed:" + std::to_string(s);
    }
    return "?";
}

GroupSpec GroupSpec::parse(const std::string& text, int d) {
    GroupSpec g;
    g.d = d;
    if (text == "unitary") {
        g.kind = Kind::unitary;
    } else if (text == "orthogonal") {
        g.kind = Kind::orthogonal;
    } else if (text.rfind("signed:", 0) == 0) {
        g.kind = Kind::signed_permutation;
        const std::string tail = text.substr(7);
        if (tail == "inf") {
            g.s = kInfinitePhaseOrder;
        } else {
            try {
                g.s = std::stoi(tail);
            } catch (const std::exception&) {
                throw std::invalid_argument("GroupSpec: cannot parse phase order '" + tail + "'");
            }
        }
    } else {
        throw std::invalid_argument("GroupSpec: unknown group '" + text + "'");
    }
    g.validate();
    return g;
}

long long signed_group_order(int d, int s) {
    if (s == kInfinitePhaseOrder)
        throw std::invalid_argument("signed_group_order: group is infinite");
    long long order = 1;
    for (int i = 0; i < d; ++i) order *= s;
    for (int i = 2; i <= d; ++i) order *= i;
    return order;
}

void for_each_signed_element(int d, int s, long long budget,
                             const std::function<void(const SignedElement&)>& fn) {
    if (s < 2) throw std::invalid_argument("for_each_signed_element: phase order must be finite and >= 2");
    if (signed_group_order(d, s) > budget)
        throw resource_error("signed group enumeration: " + std::to_string(signed_group_order(d, s)) +
                             " elements exceed budget " + std::to_string(budget));
    SignedElement e;
    e.phases.assign(static_cast<size_t>(d), 0);
    for_each_permutation(d, [&](const Permutation& tau) {
        e.tau = tau;
        std::fill(e.phases.begin(), e.phases.end(), 0);
        while (true) {
            fn(e);
            int pos = 0;
            while (pos < d && ++e.phases[static_cast<size_t>(pos)] == s) {
                e.phases[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == d) break;
        }
    });
}

std::vector<SignedElement> signed_group_enumerate(int d, int s, long long budget) {
    std::vector<SignedElement> out;
    out.reserve(static_cast<size_t>(signed_group_order(d, s)));
    for_each_signed_element(d, s, budget, [&](const SignedElement& e) { out.push_back(e); });
    return out;
}

namespace {

Rat quadrature_sum_unitary(int d, const MultiIndex& p) {
    const int k = p.size();
    std::vector<int> identity(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) identity[static_cast<size_t>(i)] = i + 1;
    const MultiIndex rows(identity);
    Rat total = 0;
    for_each_permutation(k, [&](const Permutation& sigma) {
        const MultiIndex rows_sigma(sigma.images());
        total += Rat(sigma.sign()) * haar_moment_unitary(d, rows, p, rows_sigma, p);
    });
    return total;
}

Rat quadrature_sum_orthogonal(int d, const MultiIndex& p) {
    const int k = p.size();
    std::vector<int> doubled(static_cast<size_t>(2 * k));
    for (int i = 1; i <= k; ++i) doubled[static_cast<size_t>(2 * i - 1) - 1] = doubled[static_cast<size_t>(2 * i) - 1] = p(i);
    const MultiIndex pp(doubled);
    Rat total = 0;
    for_each_permutation(k, [&](const Permutation& sigma) {
        std::vector<int> interleaved(static_cast<size_t>(2 * k));
        for (int i = 1; i <= k; ++i) {
            interleaved[static_cast<size_t>(2 * i - 1) - 1] = i;
            interleaved[static_cast<size_t>(2 * i) - 1] = sigma(i);
        }
        total += Rat(sigma.sign()) * haar_moment_orthogonal(d, MultiIndex(interleaved), pp);
    });
    return total;
}

// One term of the alternating sum for a single group element: the product
// prod_i u_{i p(i)} conj(u_{sigma(i) p(i)}) is a root of unity when the
// permutation support matches p, so each (element, sigma) contributes +-1
// to one phase-exponent bucket.
void accumulate_signed_element(const SignedElement& e, const MultiIndex& p, int s,
                               const std::vector<Permutation>& sigmas,
                               std::vector<long long>& phase_counts) {
    const int k = p.size();
    long long prefix_exp = 0;
    for (int i = 1; i <= k; ++i) {
        if (e.tau(i) != p(i)) return;
        prefix_exp += e.phases[static_cast<size_t>(i) - 1];
    }
    for (const Permutation& sigma : sigmas) {
        long long exp = prefix_exp;
        bool ok = true;
        for (int i = 1; i <= k; ++i) {
            const int row = sigma(i);
            if (e.tau(row) != p(i)) {
                ok = false;
                break;
            }
            exp -= e.phases[static_cast<size_t>(row) - 1];
        }
        if (!ok) continue;
        long long m = exp % s;
        if (m < 0) m += s;
        phase_counts[static_cast<size_t>(m)] += sigma.sign();
    }
}

Rat signed_counts_to_value(const std::vector<long long>& phase_counts, int s, int d) {
    Cyclotomic sum(Rat(0), s);
    for (int m = 0; m < s; ++m) {
        if (phase_counts[static_cast<size_t>(m)] == 0) continue;
        Cyclotomic term = Cyclotomic::zeta_power(s, m);
        term *= Rat(phase_counts[static_cast<size_t>(m)]);
        sum += term;
    }
    sum /= Rat(signed_group_order(d, s));
    return sum.rational();  // Galois-invariant by construction
}

Rat quadrature_sum_signed_finite(int d, int s, const MultiIndex& p,
                                 std::span<const SignedElement> elements) {
    const int k = p.size();
    const std::vector<Permutation> sigmas = all_permutations(k);
    std::vector<long long> phase_counts(static_cast<size_t>(s), 0);
    for (const SignedElement& e : elements) accumulate_signed_element(e, p, s, sigmas, phase_counts);
    return signed_counts_to_value(phase_counts, s, d);
}

// Full-circle phases: the integral over the torus keeps exactly the terms
// whose net exponent on every phase variable is zero.
Rat quadrature_sum_signed_infinite(int d, const MultiIndex& p, long long budget) {
    const int k = p.size();
    long long perms = 1;
    for (int i = 2; i <= d; ++i) perms *= i;
    if (perms > budget)
        throw resource_error("signed:inf evaluation: " + std::to_string(perms) +
                             " permutations exceed budget " + std::to_string(budget));
    const std::vector<Permutation> sigmas = all_permutations(k);
    long long count = 0;
    for_each_permutation(d, [&](const Permutation& tau) {
        for (int i = 1; i <= k; ++i)
            if (tau(i) != p(i)) return;
        for (const Permutation& sigma : sigmas) {
            bool ok = true;
            std::vector<int> exps(static_cast<size_t>(d), 0);
            for (int i = 1; i <= k; ++i) {
                ++exps[static_cast<size_t>(i) - 1];
                const int row = sigma(i);
                if (tau(row) != p(i)) {
                    ok = false;
                    break;
                }
                --exps[static_cast<size_t>(row) - 1];
            }
            if (!ok) continue;
            if (std::any_of(exps.begin(), exps.end(), [](int x) { return x != 0; })) continue;
            count += sigma.sign();
        }
    });
    long long fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    return Rat(count, fact);
}

Rat quadrature_sum_dispatch(const GroupSpec& g, const MultiIndex& p, long long budget,
                            std::span<const SignedElement> signed_elements) {
    g.validate();
    const int k = p.size();
    if (!p.in_range(g.d)) throw std::invalid_argument("quadrature_sum: p has entries outside {1..d}");
    if (k > g.d) throw std::invalid_argument("quadrature_sum: k > d is outside the supported regime");
    switch (g.kind) {
        case GroupSpec::Kind::unitary: return quadrature_sum_unitary(g.d, p);
        case GroupSpec::Kind::orthogonal: return quadrature_sum_orthogonal(g.d, p);
        case GroupSpec::Kind::signed_permutation:
            if (g.s == kInfinitePhaseOrder) return quadrature_sum_signed_infinite(g.d, p, budget);
            return quadrature_sum_signed_finite(g.d, g.s, p, signed_elements);
    }
    throw std::logic_error("quadrature_sum: unreachable");
}

std::vector<MultiIndex> index_grid(int d, int k) {
    std::vector<MultiIndex> out;
    std::vector<int> v(static_cast<size_t>(k), 1);
    while (true) {
        out.push_back(MultiIndex(v));
        int pos = k - 1;
        while (pos >= 0 && ++v[static_cast<size_t>(pos)] > d) {
            v[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

}  // namespace

Rat quadrature_sum(const GroupSpec& g, const MultiIndex& p, long long budget) {
    std::vector<SignedElement> elements;
    if (g.kind == GroupSpec::Kind::signed_permutation && g.s != kInfinitePhaseOrder)
        elements = signed_group_enumerate(g.d, g.s, budget);
    return quadrature_sum_dispatch(g, p, budget, elements);
}

QuadratureReport verify_quadrature(const GroupSpec& g, int k_max, long long budget, int threads) {
    g.validate();
    if (k_max > g.d) throw std::invalid_argument("verify_quadrature: k_max must be at most d");
    std::vector<SignedElement> elements;
    if (g.kind == GroupSpec::Kind::signed_permutation && g.s != kInfinitePhaseOrder)
        elements = signed_group_enumerate(g.d, g.s, budget);

    QuadratureReport report;
    report.group = g;
    report.k_max = k_max;

    std::vector<MultiIndex> grid;
    for (int k = 0; k <= k_max; ++k)
        for (MultiIndex& p : index_grid(g.d, k)) grid.push_back(std::move(p));

    const Rat dfact(factorial(g.d));
    auto run_case = [&](const MultiIndex& p) {
        QuadratureCase c;
        c.k = p.size();
        c.p = p.values();
        c.value = quadrature_sum_dispatch(g, p, budget, elements);
        c.expected = p.is_injective() ? Rat(factorial(g.d - p.size())) / dfact : Rat(0);
        c.pass = (c.value == c.expected);
        return c;
    };

    const int n_threads = std::max(1, threads);
    if (n_threads == 1 || grid.size() < 2) {
        for (const MultiIndex& p : grid) report.cases.push_back(run_case(p));
    } else {
        const size_t chunk = (grid.size() + static_cast<size_t>(n_threads) - 1) / static_cast<size_t>(n_threads);
        std::vector<std::future<std::vector<QuadratureCase>>> futures;
        for (size_t start = 0; start < grid.size(); start += chunk) {
            const size_t stop = std::min(grid.size(), start + chunk);
            futures.push_back(std::async(std::launch::async, [&, start, stop] {
                std::vector<QuadratureCase> part;
                part.reserve(stop - start);
                for (size_t t = start; t < stop; ++t) part.push_back(run_case(grid[t]));
                return part;
            }));
        }
        for (auto& f : futures)
            for (QuadratureCase& c : f.get()) report.cases.push_back(std::move(c));
    }

    report.all_pass = std::all_of(report.cases.begin(), report.cases.end(),
                                  [](const QuadratureCase& c) { return c.pass; });
    return report;
}

}  // namespace finfree
