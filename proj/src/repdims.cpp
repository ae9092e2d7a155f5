#include "disckit/repdims.hpp"

#include <string>

#include "disckit/error.hpp"

namespace disckit {

namespace {

mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

void check_jet_params(long N, long d, long k, long j) {
    if (N < 1) throw Error(ErrorKind::Parameter, "N must be >= 1");
    if (k < 1 || k >= d)
        throw Error(ErrorKind::Parameter, "need 1 <= k < d, got k=" + std::to_string(k) +
                                              " d=" + std::to_string(d));
    if (j < 1 || mpz_class(j) > rank_jet(k, N))
        throw Error(ErrorKind::Parameter, "need 1 <= j <= rank Pr^k = " +
                                              rank_jet(k, N).get_str() + ", got j=" +
                                              std::to_string(j));
}

void check_index(long i) {
    if (i < 0) throw Error(ErrorKind::Parameter, "cohomology index i must be >= 0");
}

/* C(rank Pr^k, j) = dim wedge^j Sym^k(V*). */
mpz_class wedge_dim(long N, long k, long j) {
    return binomial(rank_jet(k, N), static_cast<unsigned long>(j));
}

}  // namespace

mpz_class dim_sym(long n, long dim_v) {
    if (dim_v < 1) throw Error(ErrorKind::Parameter, "dim V must be >= 1");
    if (n < 0) return 0;
    return binomial(mpz_class(n + dim_v - 1), static_cast<unsigned long>(dim_v - 1));
}

mpz_class rank_jet(long k, long N) {
    if (k < 0 || N < 1) throw Error(ErrorKind::Parameter, "rank_jet needs k >= 0, N >= 1");
    return binomial(mpz_class(k + N), static_cast<unsigned long>(N));
}

mpz_class h_ext_jet(long N, long d, long k, long j, long i) {
    check_jet_params(N, d, k, j);
    check_index(i);
    if (i > 0) return 0;
    return dim_sym(j * (d - k), N + 1) * wedge_dim(N, k, j);
}

mpz_class h_ext_jet_dual(long N, long d, long k, long j, long i) {
    check_jet_params(N, d, k, j);
    check_index(i);
    const long twist = j * (d - k) - N - 1;
    if (i != N || twist < 0) return 0;
    return dim_sym(twist, N + 1) * wedge_dim(N, k, j);
}

ComplexTerm complex_term_rank(long N, long d, long k, long j) {
    if (d - k - N - 1 < 0)
        throw Error(ErrorKind::Parameter,
                    "the discriminant complex needs d-k-N-1 >= 0, got d-k-N-1 = " +
                        std::to_string(d - k - N - 1));
    check_jet_params(N, d, k, j);
    const long l = j * (d - k) - N - 1;
    return {j, -j, dim_sym(l, N + 1) * wedge_dim(N, k, j)};
}

std::vector<ComplexTerm> complex_table(long N, long d, long k) {
    if (d - k - N - 1 < 0)
        throw Error(ErrorKind::Parameter,
                    "the discriminant complex needs d-k-N-1 >= 0, got d-k-N-1 = " +
                        std::to_string(d - k - N - 1));
    std::vector<ComplexTerm> rows{{0, 0, 1}};
    const long r = rank_jet(k, N).get_si();
    for (long j = 1; j <= r; ++j) rows.push_back(complex_term_rank(N, d, k, j));
    return rows;
}

}  // namespace disckit
