#pragma once

#include "finfree/rational.hpp"

#include <string>
#include <vector>

namespace finfree {

// Exact complex rational a + b*i.
struct ComplexRat {
    Rat re;
    Rat im;

    ComplexRat() = default;
    ComplexRat(Rat real, Rat imag = Rat(0)) : re(std::move(real)), im(std::move(imag)) {}

    bool is_real() const { return im == 0; }
    ComplexRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    ComplexRat& operator+=(const ComplexRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRat& operator*=(const ComplexRat& o) {
        const Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    ComplexRat& operator*=(const Rat& r) {
        re *= r;
        im *= r;
        return *this;
    }
    friend ComplexRat operator+(ComplexRat a, const ComplexRat& b) { return a += b; }
    friend ComplexRat operator*(ComplexRat a, const ComplexRat& b) { return a *= b; }
    friend ComplexRat operator*(ComplexRat a, const Rat& r) { return a *= r; }
    bool operator==(const ComplexRat&) const = default;
};

// Eigenvalue list of a d x d normal matrix (singular values for the
// asymmetric convolution inputs).
using SpectrumSpec = std::vector<ComplexRat>;

// Degree-d polynomial p(x) = sum_k x^{d-k} (-1)^k a_k with exact rational
// signed coefficients a_0..a_d.
struct PolynomialFF {
    int d = 0;
    std::vector<Rat> a;  // size d+1

    PolynomialFF() = default;
    PolynomialFF(int degree, std::vector<Rat> coeffs);

    bool is_monic() const { return !a.empty() && a[0] == 1; }

    // Plain coefficients of x^{d-k}, k = 0..d: raw_k = (-1)^k a_k.
    std::vector<Rat> raw_coefficients() const;
    static PolynomialFF from_raw_coefficients(const std::vector<Rat>& raw);

    Rat evaluate(const Rat& x) const;

    // x^d (identity for the additive convolutions).
    static PolynomialFF monomial(int d);
    // (x - t)^d; t = 1 is the identity for the multiplicative convolution.
    static PolynomialFF shifted_power(int d, const Rat& t);

    bool operator==(const PolynomialFF&) const = default;
};

PolynomialFF box_plus(const PolynomialFF& p, const PolynomialFF& q);
PolynomialFF box_times(const PolynomialFF& p, const PolynomialFF& q);
PolynomialFF rect_plus(const PolynomialFF& p, const PolynomialFF& q);

// e_0..e_n of the given values, by the incremental product of (1 + t x_i).
// `one` supplies the multiplicative identity of the scalar type.
template <typename T>
std::vector<T> elementary_symmetric_all(const std::vector<T>& values, const T& one) {
    T zero = one;
    zero *= Rat(0);
    std::vector<T> e(values.size() + 1, zero);
    e[0] = one;
    size_t used = 0;
    for (const T& x : values) {
        ++used;
        for (size_t k = used; k >= 1; --k) {
            T term = x;
            term *= e[k - 1];
            e[k] += term;
        }
    }
    return e;
}

Rat elementary_symmetric(int k, const std::vector<Rat>& values);
ComplexRat elementary_symmetric(int k, const SpectrumSpec& values);

// Characteristic polynomial of diag(spectrum); requires every elementary
// symmetric function of the spectrum to be real.
PolynomialFF char_poly_from_spectrum(const SpectrumSpec& spectrum);

}  // namespace finfree
