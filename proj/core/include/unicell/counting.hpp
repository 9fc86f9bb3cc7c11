#ifndef UNICELL_COUNTING_HPP
#define UNICELL_COUNTING_HPP

#include "unicell/exact.hpp"

namespace unicell {

/* Exact counts of one-face maps with n edges and genus g, written ε_g(n)
   throughout. All routes below agree; they differ in what they exercise.
   Every function is memoized and safe to call concurrently. */

ExactInt catalan(int n);

/* Genus recursion route: 2g·ε_g(n) = Σ_{p<g} C(n+1-2p, 2g-2p+1)·ε_p(n),
   anchored at ε_0 = Cat(n). Returns 0 when n+1-2g < 1. */
ExactInt epsilon_identity(int g, int n);

/* Partition-sum route: ε_g(n) = Cat(n)·Σ_{γ⊢g} (n+1)···(n+2-2g-l(γ)) /
   (2^{2g}·Π c_i!·(2i+1)^{c_i}). */
ExactInt epsilon_walsh(int g, int n);

/* Polynomial route: R_g(n) = Σ over chains 0=g_0<g_1<...<g_r=g of
   Π 1/(2g_i)·C(n+1-2g_{i-1}, 2(g_i-g_{i-1})+1) with the falling-factorial
   binomial, so n may be any integer (R_g vanishes at -1..2g-1). */
ExactRational r_polynomial_value(int g, long long n);
ExactInt epsilon_via_r(int g, int n);

/* (n+1)ε_g(n) = 2(2n-1)ε_g(n-1) + (2n-1)(n-1)(2n-3)ε_{g-1}(n-2),
   with ε_{-1} = 0. */
bool hz_recurrence_check(int g, int n);

/* Σ_g ε_g(n)·y^{n+1-2g} = (2n)!/(2^n·n!)·Σ_{i>=1} 2^{i-1}·C(n,i-1)·C(y,i),
   compared coefficientwise as exact polynomials in y. */
bool hz_formula_check(int n);

/* Bipartite counts β_g(i,j) (i white, j black, root vertex white; the map
   has i+j+2g-1 edges): β_0(i,j) = ((i+j-1)/(ij))·C(i+j-2,i-1)²; for g >= 1,
   2g·β_g(i,j) = Σ_{p<g} C(i+2g-2p,2g-2p+1)·β_p(i+2g-2p,j)
               + Σ_{p<g} C(j+2g-2p,2g-2p+1)·β_p(i,j+2g-2p). */
ExactInt beta_bipartite(int g, int i, int j);

/* Diagnostic only. The companion closed form β_g = S_g·β_0 with
   S_g(i,j) = (1/2g)·[Σ_p C(i+2g-2p,2g-2p+1)·S_p(i+2g-2p,j) + (i<->j)],
   S_0 = 1, does NOT reproduce the recursion: at (g,i,j)=(1,1,2) it yields
   5/2 while beta_bipartite gives 5 (the brute-force census also gives 5).
   Shipped unfixed so the discrepancy stays visible. */
ExactRational s_polynomial_value(int g, int i, int j);

/* Precubic maps (all vertex degrees 1 or 3) with n = 2m+1 edges:
   ξ_g(n) = (4m+2)·(2m)! / (12^g·g!·(m+2-3g)!·m!); 0 when m+2-3g < 0.
   n must be odd. */
ExactInt xi_precubic(int g, int n);

/* Leafless precubic maps (all degrees 3, n = 6g-3):
   2·(6g-3)! / (12^g·g!·(3g-2)!) = ξ_g(6g-3). */
ExactInt scheme_count(int g);

} // namespace unicell

#endif
