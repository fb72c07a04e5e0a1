#pragma once

#include "finfree/rational.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace finfree {

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Int> cyclotomic_polynomial(int n);

// Exact element of Q(zeta_n), zeta_n = exp(2*pi*i/n), stored reduced modulo
// the n-th cyclotomic polynomial. Arithmetic requires matching n.
class Cyclotomic {
  public:
    Cyclotomic() : Cyclotomic(Rat(0)) {}
    explicit Cyclotomic(const Rat& r, int order = 1);
    static Cyclotomic zeta_power(int order, long long exponent);

    int order() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    Cyclotomic operator-() const;

    Cyclotomic& operator*=(const Rat& r);
    Cyclotomic& operator/=(const Rat& r);

    Cyclotomic conj() const;

    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // throws if not rational

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    std::string to_string() const;  // rational, or polynomial in z = zeta_n

  private:
    struct Context;
    std::shared_ptr<const Context> ctx_;
    std::vector<Rat> coeffs_;  // size = deg(Phi_n)

    explicit Cyclotomic(std::shared_ptr<const Context> ctx);
    static std::shared_ptr<const Context> context_for(int n);
    void require_same_order(const Cyclotomic& o) const;
};

}  // namespace finfree
