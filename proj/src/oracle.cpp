#include "disckit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "disckit/error.hpp"
#include "disckit/multipoly.hpp"

namespace disckit {

namespace {

using u64 = std::uint64_t;
using Residues = std::vector<u64>;  // ascending coefficients mod q

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>((unsigned __int128)a * b % q); }

u64 powmod(u64 a, u64 e, u64 q) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 q) { return powmod(a, q - 2, q); }

void trim(Residues& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Residues derivative_mod(const Residues& f, u64 q) {
    Residues out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(mulmod(f[i], i % q, q));
    trim(out);
    return out;
}

/* a mod b, b nonzero. */
void reduce_mod(Residues& a, const Residues& b, u64 q) {
    const std::size_t db = b.size() - 1;
    const u64 inv = invmod(b.back(), q);
    while (a.size() > db) {
        const u64 c = mulmod(a.back(), inv, q);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + q - mulmod(c, b[i], q)) % q;
        trim(a);
    }
}

Residues gcd_mod(Residues a, Residues b, u64 q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        reduce_mod(a, b, q);
        std::swap(a, b);
    }
    return a;
}

bool has_multiple_root_mod(const Residues& f, int m, u64 q) {
    Residues g = f;
    Residues deriv = f;
    for (int j = 1; j < m && g.size() > 1; ++j) {
        deriv = derivative_mod(deriv, q);
        g = gcd_mod(g, deriv, q);
    }
    return g.size() > 1;
}

/* A generator of ZZ[u0..u_{n-1}] reduced mod q for fast evaluation. */
struct CompiledPoly {
    std::vector<std::pair<u64, Exponents>> terms;
};

CompiledPoly compile(const Element& gen, u64 q) {
    CompiledPoly out;
    for (const auto& t : gen.as_poly()->terms()) {
        mpz_class c;
        mpz_fdiv_r_ui(c.get_mpz_t(), t.coeff.get_num_mpz_t(), q);
        if (c != 0) out.terms.push_back({c.get_ui(), t.exps});
    }
    return out;
}

struct ChunkResult {
    u64 ideal_zero = 0;
    u64 mult_root = 0;
    std::vector<Mismatch> mismatches;
};

void check_field(int d, u64 q) {
    if (q >= kMaxPrime || !is_prime(q))
        throw Error(ErrorKind::Parameter, "field size q=" + std::to_string(q) +
                                              " must be a prime below 2^31");
    if (q <= static_cast<u64>(d))
        throw Error(ErrorKind::Parameter, "need q > d, got q=" + std::to_string(q) +
                                              " d=" + std::to_string(d));
}

u64 enumeration_size(int d, u64 q, u64 budget) {
    u64 total = 1;
    for (int k = 0; k < d; ++k) {
        if (total > budget / q)
            throw Error(ErrorKind::Budget, "enumeration of q^d = " + std::to_string(q) + "^" +
                                               std::to_string(d) + " points exceeds budget " +
                                               std::to_string(budget));
        total *= q;
    }
    return total;
}

}  // namespace

bool has_root_of_multiplicity(const UniPoly& f, int m) {
    const Ring& ring = f.coeff_ring();
    if (ring.is_polynomial() || ring.scalar_kind() != ScalarKind::PrimeField)
        throw Error(ErrorKind::Ring, "multiplicity test needs Fp coefficients, got " +
                                         ring.to_string());
    if (m < 1) throw Error(ErrorKind::Parameter, "multiplicity must be >= 1");
    if (f.is_zero()) throw Error(ErrorKind::Parameter, "multiplicity test of the zero polynomial");
    const u64 p = ring.characteristic();
    if (p <= f.degree().value())
        throw Error(ErrorKind::Parameter, "need p > deg f, got p=" + std::to_string(p) +
                                              " deg f=" + to_string(f.degree()));
    Residues r;
    for (const auto& c : f.coeffs()) r.push_back(c.constant_value().get_num().get_ui());
    return has_multiple_root_mod(r, m, p);
}

std::size_t VerifyReport::count(MismatchDirection dir) const {
    return static_cast<std::size_t>(std::count_if(
        mismatches.begin(), mismatches.end(),
        [dir](const Mismatch& m) { return m.direction == dir; }));
}

VerifyReport verify_discriminant_locus(int d, int l, u64 q, ChartId chart,
                                       const OracleOptions& opts) {
    if (d < 1) throw Error(ErrorKind::Parameter, "degree d must be >= 1");
    if (l < 1 || l > d) throw Error(ErrorKind::Parameter, "need 1 <= l <= d");
    if (!(chart == ChartId{d, 0}))
        throw Error(ErrorKind::Parameter, "only the monic chart (d, 0) is enumerated");
    check_field(d, q);
    const u64 total = enumeration_size(d, q, opts.budget);

    const IdealGens ideal = discriminant_ideal(d, l, chart);
    std::vector<CompiledPoly> gens;
    std::uint32_t max_exp = 0;
    for (const auto& g : ideal.gens) {
        gens.push_back(compile(g, q));
        for (std::size_t v = 0; v < static_cast<std::size_t>(d); ++v)
            max_exp = std::max(max_exp, g.as_poly()->degree_in(v));
    }

    auto run_chunk = [&](u64 begin, u64 end) {
        ChunkResult res;
        const auto n = static_cast<std::size_t>(d);
        std::vector<u64> point(n);
        std::vector<std::vector<u64>> pw(n, std::vector<u64>(max_exp + 1));
        Residues f(n + 1);
        for (u64 idx = begin; idx < end; ++idx) {
            u64 rest = idx;
            for (std::size_t v = 0; v < n; ++v) {
                point[v] = rest % q;
                rest /= q;
                pw[v][0] = 1;
                for (std::uint32_t e = 1; e <= max_exp; ++e) pw[v][e] = mulmod(pw[v][e - 1], point[v], q);
                f[v] = point[v];
            }
            f[n] = 1;
            bool zero = true;
            for (const auto& g : gens) {
                u64 acc = 0;
                for (const auto& [c, e] : g.terms) {
                    u64 term = c;
                    for (std::size_t v = 0; v < n; ++v)
                        if (e[v]) term = mulmod(term, pw[v][e[v]], q);
                    acc = (acc + term) % q;
                }
                if (acc != 0) {
                    zero = false;
                    break;
                }
            }
            const bool mult = has_multiple_root_mod(f, l + 1, q);
            res.ideal_zero += zero;
            res.mult_root += mult;
            if (zero != mult)
                res.mismatches.push_back(
                    {point, mult ? MismatchDirection::Soundness : MismatchDirection::Completeness});
        }
        return res;
    };

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<u64>(threads, std::max<u64>(1, total / 4096)));
    std::vector<ChunkResult> parts(threads);
    if (threads == 1) {
        parts[0] = run_chunk(0, total);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const u64 begin = total * t / threads, end = total * (t + 1) / threads;
            pool.emplace_back([&, t, begin, end] { parts[t] = run_chunk(begin, end); });
        }
        for (auto& th : pool) th.join();
    }

    VerifyReport report{d, l, q, chart, 0, 0, {}};
    for (auto& part : parts) {
        report.ideal_zero_count += part.ideal_zero;
        report.mult_root_count += part.mult_root;
        report.mismatches.insert(report.mismatches.end(),
                                 std::make_move_iterator(part.mismatches.begin()),
                                 std::make_move_iterator(part.mismatches.end()));
    }
    return report;
}

GrowthReport dimension_growth_check(int d, int l, u64 q1, u64 q2, const OracleOptions& opts) {
    const ChartId chart{d, 0};
    const u64 c1 = verify_discriminant_locus(d, l, q1, chart, opts).ideal_zero_count;
    const u64 c2 = verify_discriminant_locus(d, l, q2, chart, opts).ideal_zero_count;
    GrowthReport g{c1, c2, std::nullopt,
                   std::pow(static_cast<double>(q2) / static_cast<double>(q1), d - l), false};
    if (c1 == 0) {
        g.within_tolerance = c2 == 0;
    } else {
        g.ratio = static_cast<double>(c2) / static_cast<double>(c1);
        g.within_tolerance = *g.ratio >= g.expected / 3 && *g.ratio <= g.expected * 3;
    }
    return g;
}

}  // namespace disckit
