#include "finfree/finite_free.hpp"

namespace finfree {

PolynomialFF::PolynomialFF(int degree, std::vector<Rat> coeffs) : d(degree), a(std::move(coeffs)) {
    if (d < 0) throw std::invalid_argument("PolynomialFF: negative degree");
    if (a.size() != static_cast<size_t>(d) + 1)
        throw std::invalid_argument("PolynomialFF: need exactly d+1 coefficients");
}

std::vector<Rat> PolynomialFF::raw_coefficients() const {
    std::vector<Rat> raw = a;
    for (size_t k = 1; k < raw.size(); k += 2) raw[k] = -raw[k];
    return raw;
}

PolynomialFF PolynomialFF::from_raw_coefficients(const std::vector<Rat>& raw) {
    if (raw.empty()) throw std::invalid_argument("PolynomialFF: empty coefficient list");
    std::vector<Rat> a = raw;
    for (size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
    return PolynomialFF(static_cast<int>(raw.size()) - 1, std::move(a));
}

Rat PolynomialFF::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (const Rat& c : raw_coefficients()) acc = acc * x + c;
    return acc;
}

PolynomialFF PolynomialFF::monomial(int d) {
    std::vector<Rat> a(static_cast<size_t>(d) + 1, Rat(0));
    a[0] = 1;
    return PolynomialFF(d, std::move(a));
}

PolynomialFF PolynomialFF::shifted_power(int d, const Rat& t) {
    // (x - t)^d: a_k = binomial(d, k) t^k
    std::vector<Rat> a(static_cast<size_t>(d) + 1);
    Rat tk = 1;
    for (int k = 0; k <= d; ++k) {
        a[static_cast<size_t>(k)] = Rat(binomial(d, k)) * tk;
        tk *= t;
    }
    return PolynomialFF(d, std::move(a));
}

namespace {

void check_degrees(const PolynomialFF& p, const PolynomialFF& q, const char* op) {
    if (p.d != q.d)
        throw degree_mismatch_error(std::string(op) + ": inputs have degrees " +
                                    std::to_string(p.d) + " and " + std::to_string(q.d));
}

// (d-i)! (d-j)! / (d! (d-k)!) with k = i + j.
Rat additive_weight(int d, int i, int j) {
    return Rat(factorial(d - i) * factorial(d - j), factorial(d) * factorial(d - i - j));
}

}  // namespace

PolynomialFF box_plus(const PolynomialFF& p, const PolynomialFF& q) {
    check_degrees(p, q, "box_plus");
    const int d = p.d;
    std::vector<Rat> c(static_cast<size_t>(d) + 1, Rat(0));
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            c[static_cast<size_t>(k)] +=
                additive_weight(d, i, k - i) * p.a[static_cast<size_t>(i)] * q.a[static_cast<size_t>(k - i)];
    return PolynomialFF(d, std::move(c));
}

PolynomialFF box_times(const PolynomialFF& p, const PolynomialFF& q) {
    check_degrees(p, q, "box_times");
    const int d = p.d;
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = Rat(factorial(k) * factorial(d - k), factorial(d)) *
                                    p.a[static_cast<size_t>(k)] * q.a[static_cast<size_t>(k)];
    return PolynomialFF(d, std::move(c));
}

PolynomialFF rect_plus(const PolynomialFF& p, const PolynomialFF& q) {
    check_degrees(p, q, "rect_plus");
    const int d = p.d;
    std::vector<Rat> c(static_cast<size_t>(d) + 1, Rat(0));
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) {
            const Rat w = additive_weight(d, i, k - i);
            c[static_cast<size_t>(k)] +=
                w * w * p.a[static_cast<size_t>(i)] * q.a[static_cast<size_t>(k - i)];
        }
    return PolynomialFF(d, std::move(c));
}

Rat elementary_symmetric(int k, const std::vector<Rat>& values) {
    if (k < 0 || k > static_cast<int>(values.size()))
        throw std::invalid_argument("elementary_symmetric: k out of range");
    return elementary_symmetric_all(values, Rat(1))[static_cast<size_t>(k)];
}

ComplexRat elementary_symmetric(int k, const SpectrumSpec& values) {
    if (k < 0 || k > static_cast<int>(values.size()))
        throw std::invalid_argument("elementary_symmetric: k out of range");
    return elementary_symmetric_all(values, ComplexRat(Rat(1)))[static_cast<size_t>(k)];
}

PolynomialFF char_poly_from_spectrum(const SpectrumSpec& spectrum) {
    const std::vector<ComplexRat> e = elementary_symmetric_all(spectrum, ComplexRat(Rat(1)));
    std::vector<Rat> a;
    a.reserve(e.size());
    for (const ComplexRat& v : e) {
        if (!v.is_real())
            throw std::invalid_argument(
                "char_poly_from_spectrum: spectrum has a non-real elementary symmetric function");
        a.push_back(v.re);
    }
    return PolynomialFF(static_cast<int>(spectrum.size()), std::move(a));
}

}  // namespace finfree
