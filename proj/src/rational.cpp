#include "finfree/rational.hpp"

namespace finfree {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Rat rising_factorial(const Rat& x, int k) {
    if (k < 0) throw std::invalid_argument("rising_factorial: negative k");
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= (x + i);
    return r;
}

Rat falling_factorial(const Rat& x, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= (x - i);
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return r.str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
}

}  // namespace finfree
