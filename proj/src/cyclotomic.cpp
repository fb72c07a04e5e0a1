#include "finfree/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace finfree {

namespace {

// Exact division of integer polynomials (lowest degree first); remainder must
// be zero.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    if (n == 1) return {Int(-1), Int(1)};  // x - 1
    std::vector<Int> num(static_cast<size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

struct Cyclotomic::Context {
    int n = 1;
    int degree = 1;                            // deg(Phi_n) = phi(n)
    std::vector<std::vector<Rat>> power_rows;  // x^m mod Phi_n, m < max(n, 2*degree-1)
};

Cyclotomic::Cyclotomic(std::shared_ptr<const Context> ctx)
    : ctx_(std::move(ctx)), coeffs_(static_cast<size_t>(ctx_->degree), Rat(0)) {}

Cyclotomic::Cyclotomic(const Rat& r, int order) : Cyclotomic(context_for(order)) { coeffs_[0] = r; }

Cyclotomic Cyclotomic::zeta_power(int order, long long exponent) {
    Cyclotomic c(context_for(order));
    long long m = exponent % order;
    if (m < 0) m += order;
    c.coeffs_ = c.ctx_->power_rows[static_cast<size_t>(m)];
    return c;
}

int Cyclotomic::order() const { return ctx_->n; }

void Cyclotomic::require_same_order(const Cyclotomic& o) const {
    if (ctx_->n != o.ctx_->n)
        throw std::invalid_argument("Cyclotomic: mixing roots of unity of different order");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_order(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_order(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    require_same_order(o);
    const size_t deg = coeffs_.size();
    std::vector<Rat> conv(2 * deg - 1, Rat(0));
    for (size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (o.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<Rat> out(deg, Rat(0));
    for (size_t m = 0; m < conv.size(); ++m) {
        if (conv[m] == 0) continue;
        const auto& row = ctx_->power_rows[m];
        for (size_t i = 0; i < deg; ++i)
            if (row[i] != 0) out[i] += conv[m] * row[i];
    }
    coeffs_ = std::move(out);
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator*=(const Rat& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rat& r) {
    if (r == 0) throw std::invalid_argument("Cyclotomic: division by zero");
    for (auto& c : coeffs_) c /= r;
    return *this;
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^j -> zeta^{n-j}
    Cyclotomic out(ctx_);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const size_t m = (j == 0) ? 0 : static_cast<size_t>(ctx_->n) - j;
        const auto& row = ctx_->power_rows[m];
        for (size_t i = 0; i < out.coeffs_.size(); ++i)
            if (row[i] != 0) out.coeffs_[i] += coeffs_[j] * row[i];
    }
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat Cyclotomic::rational() const {
    if (!is_rational()) throw std::invalid_argument("Cyclotomic: value is not rational");
    return coeffs_[0];
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return ctx_->n == o.ctx_->n && coeffs_ == o.coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    const double theta = 2.0 * M_PI / ctx_->n;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        z += coeffs_[j].convert_to<double>() * std::polar(1.0, theta * static_cast<double>(j));
    }
    return z;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return rat_to_string(coeffs_[0]);
    std::string s;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + rat_to_string(coeffs_[j]) + ")";
        if (j >= 1) s += "*z^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

std::shared_ptr<const Cyclotomic::Context> Cyclotomic::context_for(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Cyclotomic::Context>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<Cyclotomic::Context>();
    ctx->n = n;
    const std::vector<Int> phi = cyclotomic_polynomial(n);
    const int deg = static_cast<int>(phi.size()) - 1;
    ctx->degree = deg;

    const size_t rows = static_cast<size_t>(std::max(n, 2 * deg - 1));
    ctx->power_rows.resize(rows);
    std::vector<Rat> cur(static_cast<size_t>(deg), Rat(0));
    cur[0] = 1;
    for (size_t m = 0; m < rows; ++m) {
        ctx->power_rows[m] = cur;
        // multiply by x and reduce: x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1})
        Rat top = cur.back();
        for (size_t i = cur.size(); i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i) cur[static_cast<size_t>(i)] -= top * Rat(phi[static_cast<size_t>(i)]);
    }
    cache.emplace(n, ctx);
    return ctx;
}

}  // namespace finfree
