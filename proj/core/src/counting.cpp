#include "unicell/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace unicell {

namespace {

/* Memo helper: lookup under lock, compute unlocked (the recursions re-enter),
   insert under lock. Concurrent duplicate computation is possible but both
   arrive at the same value. */
template <class Key, class Value, class Fn>
Value memoized(std::map<Key, Value>& table, std::mutex& mu, const Key& key, Fn&& compute) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(mu);
    return table.emplace(key, std::move(v)).first->second;
}

std::mutex memo_mu;

} // namespace

ExactInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    ExactInt c = binomial(2LL * n, n);
    c /= n + 1; // exact
    return c;
}

ExactInt epsilon_identity(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("epsilon: need g >= 0, n >= 1");
    if (n + 1 - 2 * g < 1) return 0;
    if (g == 0) return catalan(n);

    static std::map<std::pair<int, int>, ExactInt> memo;
    return memoized(memo, memo_mu, std::make_pair(g, n), [&] {
        ExactInt sum = 0;
        for (int p = 0; p < g; p++)
            sum += binomial(n + 1 - 2 * p, 2 * (g - p) + 1) * epsilon_identity(p, n);
        ExactRational eps(sum, 2 * g);
        return to_exact_int(eps); // 2g always divides the sum
    });
}

namespace {

/* Sum over partitions of g, tracked as (largest part allowed, remaining):
   each term contributes a falling product of 2g+l(γ) factors from (n+1) and
   the denominator 2^{2g}·Π c_i!·(2i+1)^{c_i}. */
void walsh_terms(int remaining, int max_part, int parts, int g, int n, ExactRational denom,
                 ExactRational& acc) {
    if (remaining == 0) {
        ExactRational num = 1;
        for (int k = 0; k < 2 * g + parts; k++) num *= n + 1 - k;
        acc += num / denom;
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; part--) {
        // multiplicity of this part size
        ExactRational d = denom;
        int left = remaining;
        for (int c = 1; part * c <= remaining; c++) {
            left = remaining - part * c;
            d *= c;                 // builds c_i! incrementally
            d *= 2 * part + 1;      // (2i+1)^{c_i}
            walsh_terms(left, part - 1, parts + c, g, n, d, acc);
        }
    }
}

} // namespace

ExactInt epsilon_walsh(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("epsilon: need g >= 0, n >= 1");
    if (n + 1 - 2 * g < 1) return 0;
    if (g == 0) return catalan(n);

    static std::map<std::pair<int, int>, ExactInt> memo;
    return memoized(memo, memo_mu, std::make_pair(g, n), [&] {
        ExactRational acc = 0;
        ExactRational denom = ExactInt(1) << (2 * g);
        walsh_terms(g, g, 0, g, n, denom, acc);
        return to_exact_int(acc * ExactRational(catalan(n)));
    });
}

namespace {

void r_chains(int g_prev, int g, long long n, ExactRational factor, ExactRational& acc) {
    if (g_prev == g) {
        acc += factor;
        return;
    }
    for (int gi = g_prev + 1; gi <= g; gi++) {
        ExactRational step =
            binomial_poly(ExactRational(n + 1 - 2 * g_prev), 2 * (gi - g_prev) + 1);
        step /= 2 * gi;
        r_chains(gi, g, n, factor * step, acc);
    }
}

} // namespace

ExactRational r_polynomial_value(int g, long long n) {
    if (g < 0) throw std::invalid_argument("r_polynomial_value: g must be >= 0");
    if (g == 0) return 1;
    ExactRational acc = 0;
    r_chains(0, g, n, 1, acc);
    return acc;
}

ExactInt epsilon_via_r(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("epsilon: need g >= 0, n >= 1");
    if (n + 1 - 2 * g < 1) return 0;
    return to_exact_int(r_polynomial_value(g, n) * ExactRational(catalan(n)));
}

bool hz_recurrence_check(int g, int n) {
    if (n < 2 || g < 0) throw std::invalid_argument("hz_recurrence_check: need n >= 2, g >= 0");
    auto eps = [](int gg, int nn) -> ExactInt {
        if (gg < 0 || nn < 0) return 0;
        if (nn == 0) return gg == 0 ? 1 : 0; // one-vertex map with no edges
        return epsilon_identity(gg, nn);
    };
    ExactInt lhs = ExactInt(n + 1) * eps(g, n);
    ExactInt rhs = ExactInt(2) * (2 * n - 1) * eps(g, n - 1) +
                   ExactInt(2 * n - 1) * (n - 1) * (2 * n - 3) * eps(g - 1, n - 2);
    return lhs == rhs;
}

namespace {

using Poly = std::vector<ExactRational>; // coefficient of y^k at index k

void poly_add_scaled(Poly& p, const Poly& q, const ExactRational& c) {
    if (p.size() < q.size()) p.resize(q.size(), ExactRational(0));
    for (size_t k = 0; k < q.size(); k++) p[k] += q[k] * c;
}

/* C(y,i) = y(y-1)...(y-i+1)/i! as a polynomial in y. */
Poly binomial_poly_in_y(int i) {
    Poly p = {ExactRational(1)};
    for (int k = 0; k < i; k++) {
        Poly q(p.size() + 1, ExactRational(0));
        for (size_t d = 0; d < p.size(); d++) {
            q[d + 1] += p[d];       // y * p
            q[d] -= p[d] * k;       // -k * p
        }
        p = std::move(q);
    }
    ExactRational inv_fact = ExactRational(1) / ExactRational(factorial(i));
    for (auto& c : p) c *= inv_fact;
    return p;
}

} // namespace

bool hz_formula_check(int n) {
    if (n < 1) throw std::invalid_argument("hz_formula_check: need n >= 1");

    Poly lhs(n + 2, ExactRational(0));
    for (int g = 0; n + 1 - 2 * g >= 1; g++)
        lhs[n + 1 - 2 * g] = ExactRational(epsilon_identity(g, n));

    // (2n)!/(2^n n!) = (2n-1)!!
    ExactRational scale(double_factorial_odd(n));
    Poly rhs;
    for (int i = 1; i <= n + 1; i++) {
        ExactRational c = scale * ExactRational(ExactInt(1) << (i - 1)) *
                          ExactRational(binomial(n, i - 1));
        poly_add_scaled(rhs, binomial_poly_in_y(i), c);
    }

    if (rhs.size() < lhs.size()) rhs.resize(lhs.size(), ExactRational(0));
    if (lhs.size() < rhs.size()) lhs.resize(rhs.size(), ExactRational(0));
    return lhs == rhs;
}

ExactInt beta_bipartite(int g, int i, int j) {
    if (g < 0 || i < 1 || j < 1)
        throw std::invalid_argument("beta_bipartite: need g >= 0, i,j >= 1");
    if (g == 0) {
        ExactRational b = ExactRational(i + j - 1) / ExactRational(ExactInt(i) * j);
        ExactInt c = binomial(i + j - 2, i - 1);
        return to_exact_int(b * ExactRational(c * c));
    }

    static std::map<std::tuple<int, int, int>, ExactInt> memo;
    return memoized(memo, memo_mu, std::make_tuple(g, i, j), [&] {
        ExactInt sum = 0;
        for (int p = 0; p < g; p++) {
            int up = 2 * (g - p); // vertices absorbed by the gluing
            sum += binomial(i + up, up + 1) * beta_bipartite(p, i + up, j);
            sum += binomial(j + up, up + 1) * beta_bipartite(p, i, j + up);
        }
        return to_exact_int(ExactRational(sum, 2 * g));
    });
}

ExactRational s_polynomial_value(int g, int i, int j) {
    if (g < 0) throw std::invalid_argument("s_polynomial_value: g must be >= 0");
    if (g == 0) return 1;
    ExactRational sum = 0;
    for (int p = 0; p < g; p++) {
        int up = 2 * (g - p);
        sum += ExactRational(binomial(i + up, up + 1)) * s_polynomial_value(p, i + up, j);
        sum += ExactRational(binomial(j + up, up + 1)) * s_polynomial_value(p, i, j + up);
    }
    return sum / (2 * g);
}

ExactInt xi_precubic(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("xi_precubic: need g >= 0, n >= 1");
    if (n % 2 == 0) throw std::invalid_argument("xi_precubic: edge count must be odd");
    int m = (n - 1) / 2;
    if (m + 2 - 3 * g < 0) return 0;
    ExactRational num = ExactRational(4 * m + 2) * ExactRational(factorial(2 * m));
    ExactRational den = ExactRational(ExactInt(1));
    for (int k = 0; k < g; k++) den *= 12;
    den *= ExactRational(factorial(g)) * ExactRational(factorial(m + 2 - 3 * g)) *
           ExactRational(factorial(m));
    return to_exact_int(num / den);
}

ExactInt scheme_count(int g) {
    if (g < 1) throw std::invalid_argument("scheme_count: g must be >= 1");
    ExactRational num = ExactRational(2) * ExactRational(factorial(6 * g - 3));
    ExactRational den = 1;
    for (int k = 0; k < g; k++) den *= 12;
    den *= ExactRational(factorial(g)) * ExactRational(factorial(3 * g - 2));
    return to_exact_int(num / den);
}

} // namespace unicell
