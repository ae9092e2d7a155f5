#ifndef DISCKIT_REPDIMS_HPP_
#define DISCKIT_REPDIMS_HPP_

#include <vector>

#include <gmpxx.h>

namespace disckit {

/*
 * Dimension formulas for jet bundles on P^N = P(V*), dim V = N + 1.
 * All values are exact big integers.
 */

/* dim Sym^n of a dimV-dimensional space; 0 for n < 0. */
mpz_class dim_sym(long n, long dim_v);

/* rank Pr^k(O(d)) = dim Sym^k(V*) = C(k + N, N). */
mpz_class rank_jet(long k, long N);

/* dim H^i(P^N, wedge^j Pr^k(O(d))); needs 1 <= k < d, 1 <= j <= rank_jet(k, N). */
mpz_class h_ext_jet(long N, long d, long k, long j, long i);

/* dim H^i(P^N, (wedge^j Pr^k(O(d)))^*), nonzero only for i = N. */
mpz_class h_ext_jet_dual(long N, long d, long k, long j, long i);

struct ComplexTerm {
    long j;
    long twist;  // the O(-j) twist
    mpz_class module_dim;
};

/* Term O(-j) (x) Sym^{l(j)}(V) (x) wedge^j Sym^k(V*), l(j) = j(d-k) - N - 1.
 * Requires d - k - N - 1 >= 0 and 1 <= j <= rank_jet(k, N). */
ComplexTerm complex_term_rank(long N, long d, long k, long j);

/* j = 0 (O itself, rank 1) followed by j = 1 .. rank_jet(k, N). */
std::vector<ComplexTerm> complex_table(long N, long d, long k);

}  // namespace disckit

#endif  // DISCKIT_REPDIMS_HPP_
