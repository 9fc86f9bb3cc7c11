#ifndef UNICELL_EXACT_HPP
#define UNICELL_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>

namespace unicell {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactInt factorial(int n) {
    assert(n >= 0);
    ExactInt f = 1;
    for (int i = 2; i <= n; i++) f *= i;
    return f;
}

/* (2n-1)!! = 1*3*5*...*(2n-1), the number of perfect matchings on 2n points. */
inline ExactInt double_factorial_odd(int n) {
    assert(n >= 0);
    ExactInt f = 1;
    for (int i = 3; i <= 2 * n - 1; i += 2) f *= i;
    return f;
}

/* Combinatorial binomial: 0 whenever the selection is impossible. Counting
   recursions rely on the out-of-range terms vanishing. */
inline ExactInt binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    ExactInt r = 1;
    for (long long i = 1; i <= b; i++) {
        r *= a - b + i;
        r /= i; // exact: r is always a binomial prefix
    }
    return r;
}

/* Falling-factorial binomial x(x-1)...(x-k+1)/k!, defined for any rational x.
   This is the polynomial C(x,k) — nonzero at negative integers, which matters
   when probing the roots of the R_g polynomials and when expanding the
   genus generating identity in y. */
inline ExactRational binomial_poly(const ExactRational& x, int k) {
    assert(k >= 0);
    ExactRational r = 1;
    ExactRational t = x;
    for (int i = 0; i < k; i++) {
        r *= t;
        t -= 1;
    }
    return r / ExactRational(factorial(k));
}

/* Exact quotient of a rational known to be integral; trips if the formula
   that promised integrality is wrong. */
inline ExactInt to_exact_int(const ExactRational& q) {
    assert(boost::multiprecision::denominator(q) == 1);
    return boost::multiprecision::numerator(q);
}

} // namespace unicell

#endif
