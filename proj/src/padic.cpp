#include "locsol/padic.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "locsol/rng.hpp"

namespace locsol::padic {

namespace {

using ZVec = std::vector<Integer>;  // low-first

Integer zeval(const ZVec& f, const Integer& x) {
    Integer acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ZVec zderiv(const ZVec& f) {
    if (f.size() <= 1) return {Integer(0)};
    ZVec d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<long>(i);
    return d;
}

// f(u0 + s*x) as a polynomial in x (degrees <= 4).
ZVec compose_affine(const ZVec& f, const Integer& u0, const Integer& s) {
    static const long kBinom[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    size_t n = f.size();
    ZVec out(n, Integer(0));
    std::vector<Integer> u0pow(n, Integer(1));
    for (size_t k = 1; k < n; ++k) u0pow[k] = u0pow[k - 1] * u0;
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i <= j; ++i) out[i] += f[j] * kBinom[j][i] * u0pow[j - i];
    Integer spow(1);
    for (size_t i = 1; i < n; ++i) {
        spow *= s;
        out[i] *= spow;
    }
    return out;
}

void div_exact(ZVec& f, const Integer& d) {
    for (auto& c : f) {
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (r != 0)
            throw std::logic_error("padic: inexact coefficient division");
        c = q;
    }
}

bool all_zero(const ZVec& f) {
    for (const auto& c : f)
        if (c != 0) return false;
    return true;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_qr(const Integer& a, const Integer& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) == 1;
}

// Tonelli-Shanks; requires p odd prime and a a quadratic residue unit.
Integer sqrt_mod(const Integer& a0, const Integer& p) {
    Integer a = mod(a0, p);
    if (mod(p, Integer(4)) == 3) {
        Integer e = (p + 1) / 4, r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    Integer q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Integer z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) z += 1;
    long m = static_cast<long>(s);
    Integer c, t, r;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Integer e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        Integer tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (long j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

Integer pow_ui(const Integer& p, unsigned long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

struct ChartPolys {
    ZVec A;  // h on the chart, deg <= 2
    ZVec B;  // f on the chart, deg <= 4
};

ChartPolys chart_polys(const GBQInt& q, int chart) {
    if (chart == 0) return {{q.n, q.m, q.l}, {q.e, q.d, q.c, q.b, q.a}};
    return {{q.l, q.m, q.n}, {q.a, q.b, q.c, q.d, q.e}};
}

struct SearchState {
    Integer p;
    int chart = 0;
    int max_depth = 1;
    int deepest = 0;
    std::optional<Witness> witness;
    int found_level = 0;
};

void set_coords(Witness& w, int chart, const Integer& u, const Integer& z) {
    w.chart = chart;
    if (chart == 0) {
        w.x = u;
        w.y = 1;
    } else {
        w.x = 1;
        w.y = u;
    }
    w.z = z;
}

// ---------------------------------------------------------------------------
// Generic two-variable refinement on P(u,z) = z^2 + A(u) z - B(u).
// Level k covers u = cu + p^k u', z = cz + p^k z', P scaled down by p^(2k).
// ---------------------------------------------------------------------------
Verdict refine_generic(SearchState& st, const ZVec& A, const ZVec& B, const Integer& cu, const Integer& cz,
                       const Integer& pk, int level) {
    st.deepest = std::max(st.deepest, level + 1);
    const Integer& p = st.p;
    struct Singular {
        long u0, z0;
        Integer val;
    };
    std::vector<Singular> singular;
    ZVec Ad = zderiv(A), Bd = zderiv(B);
    for (long u0 = 0; u0 < p; ++u0) {
        Integer Au = zeval(A, Integer(u0)), Bu = zeval(B, Integer(u0));
        Integer Adu = zeval(Ad, Integer(u0)), Bdu = zeval(Bd, Integer(u0));
        for (long z0 = 0; z0 < p; ++z0) {
            Integer val = Integer(z0) * z0 + Au * z0 - Bu;
            if (mod(val, p) != 0) continue;
            Integer dz = mod(2 * z0 + Au, p);
            Integer du = mod(Adu * z0 - Bdu, p);
            if (dz != 0 || du != 0) {
                Witness w;
                w.kind = Witness::Kind::Hensel;
                w.var = (dz != 0) ? 1 : 0;
                w.modulus_exp = static_cast<unsigned>(level + 1);
                set_coords(w, st.chart, cu + pk * u0, cz + pk * z0);
                st.witness = w;
                st.found_level = level + 1;
                return Verdict::Soluble;
            }
            if (val == 0) {
                Witness w;
                w.kind = Witness::Kind::Exact;
                set_coords(w, st.chart, cu + pk * u0, cz + pk * z0);
                st.witness = w;
                st.found_level = level + 1;
                return Verdict::Soluble;
            }
            singular.push_back({u0, z0, val});
        }
    }
    bool undecided = false;
    for (const auto& s : singular) {
        if (valuation(s.val, p) == 1) continue;  // value is p * unit on the whole class
        if (level + 1 >= st.max_depth) {
            undecided = true;
            continue;
        }
        ZVec Ashift = compose_affine(A, Integer(s.u0), p);
        ZVec A1 = Ashift;
        A1[0] += 2 * s.z0;
        div_exact(A1, p);
        // B1 = -P(u0 + p u', z0) / p^2 = (B(u0+pu') - z0 A(u0+pu') - z0^2) / p^2.
        ZVec B1 = compose_affine(B, Integer(s.u0), p);
        for (size_t i = 0; i < Ashift.size(); ++i) B1[i] -= Ashift[i] * s.z0;
        B1[0] -= Integer(s.z0) * s.z0;
        div_exact(B1, p * p);
        Verdict v = refine_generic(st, A1, B1, cu + pk * s.u0, cz + pk * s.z0, pk * p, level + 1);
        if (v == Verdict::Soluble) return v;
        if (v == Verdict::Undecided) undecided = true;
    }
    return undecided ? Verdict::Undecided : Verdict::Insoluble;
}

// ---------------------------------------------------------------------------
// Odd p: z exists over Z_p iff D(u) = A(u)^2 + 4B(u) takes a square value.
// Level k covers u = cu + p^k u' with D scaled down by p^(2k).
// ---------------------------------------------------------------------------
Witness exact_point_from_u(const ZVec& A, int chart, const Integer& u) {
    // D(u) = 0 exactly, so z = -h/2; scale by the unit 2 to clear the half:
    // (2x, 2y, -2 h(x,y)) is an exact integer point (z has weight 2).
    Witness w;
    w.kind = Witness::Kind::Exact;
    Integer hu = zeval(A, u);
    if (chart == 0) {
        w.x = 2 * u;
        w.y = 2;
    } else {
        w.x = 2;
        w.y = 2 * u;
    }
    w.z = -2 * hu;
    w.chart = chart;
    return w;
}

Verdict refine_sqrep(SearchState& st, const ZVec& A /*original chart h*/, const ZVec& D, const Integer& cu,
                     const Integer& pk, int level) {
    st.deepest = std::max(st.deepest, level + 1);
    const Integer& p = st.p;
    if (all_zero(D)) {
        // D vanishes identically: z = -h/2 works for any u in the class.
        Witness w = exact_point_from_u(A, st.chart, cu);
        st.witness = w;
        st.found_level = level + 1;
        return Verdict::Soluble;
    }
    ZVec Dd = zderiv(D);
    Integer pK1 = pk * p;  // p^(level+1)
    Integer inv2;
    mpz_invert(inv2.get_mpz_t(), Integer(2).get_mpz_t(), pK1.get_mpz_t());
    bool undecided = false;
    for (long u0 = 0; u0 < p; ++u0) {
        Integer val = zeval(D, Integer(u0));
        Integer u_global = cu + pk * u0;
        if (val == 0) {
            st.witness = exact_point_from_u(A, st.chart, u_global);
            st.found_level = level + 1;
            return Verdict::Soluble;
        }
        Integer vm = mod(val, p);
        if (vm != 0) {
            if (!is_qr(vm, p)) continue;  // non-residue unit on the whole class
            Integer w0 = sqrt_mod(vm, p);
            Witness w;
            w.kind = Witness::Kind::Hensel;
            w.var = 1;  // z-direction: F_z = 2z + h is p^level * unit
            w.modulus_exp = static_cast<unsigned>(level + 1);
            Integer hu = zeval(A, u_global);
            Integer z = mod((pk * w0 - hu) * inv2, pK1);
            set_coords(w, st.chart, u_global, z);
            st.witness = w;
            st.found_level = level + 1;
            return Verdict::Soluble;
        }
        Integer dd = mod(zeval(Dd, Integer(u0)), p);
        if (dd != 0) {
            // Simple root of D mod p lifts to an exact root: u-direction Hensel.
            Witness w;
            w.kind = Witness::Kind::Hensel;
            w.var = 0;
            w.modulus_exp = static_cast<unsigned>(level + 1);
            Integer hu = zeval(A, u_global);
            Integer z = mod(-hu * inv2, pK1);
            set_coords(w, st.chart, u_global, z);
            st.witness = w;
            st.found_level = level + 1;
            return Verdict::Soluble;
        }
        if (valuation(val, p) == 1) continue;  // odd valuation unit, never a square
        if (level + 1 >= st.max_depth) {
            undecided = true;
            continue;
        }
        ZVec D1 = compose_affine(D, Integer(u0), p);
        div_exact(D1, p * p);
        Verdict v = refine_sqrep(st, A, D1, u_global, pK1, level + 1);
        if (v == Verdict::Soluble) return v;
        if (v == Verdict::Undecided) undecided = true;
    }
    return undecided ? Verdict::Undecided : Verdict::Insoluble;
}

SolubilityVerdict run_charts(unsigned long p, const GBQInt& q, int max_depth, bool generic) {
    Integer P(p);
    auto run_chart = [&](int chart, int depth, SearchState& st) {
        st.p = P;
        st.chart = chart;
        st.max_depth = depth;
        auto [A, B] = chart_polys(q, chart);
        if (generic) return refine_generic(st, A, B, Integer(0), Integer(0), Integer(1), 0);
        ZVec D(5, Integer(0));
        ZVec A2(5, Integer(0));
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < A.size(); ++j) A2[i + j] += A[i] * A[j];
        for (size_t i = 0; i < 5; ++i) D[i] = A2[i] + 4 * (i < B.size() ? B[i] : Integer(0));
        return refine_sqrep(st, A, D, Integer(0), Integer(1), 0);
    };

    // Depth-1 pass over both charts first, so a smooth reduction is always
    // certified at depth 1 regardless of chart order.
    {
        SearchState s0, s1;
        Verdict v0 = run_chart(0, 1, s0);
        if (v0 == Verdict::Soluble) return {Verdict::Soluble, s0.witness, 1};
        Verdict v1 = run_chart(1, 1, s1);
        if (v1 == Verdict::Soluble) return {Verdict::Soluble, s1.witness, 1};
        if (v0 == Verdict::Insoluble && v1 == Verdict::Insoluble) return {Verdict::Insoluble, std::nullopt, 1};
        if (max_depth == 1) return {Verdict::Undecided, std::nullopt, 1};
    }
    SearchState s0, s1;
    Verdict v0 = run_chart(0, max_depth, s0);
    if (v0 == Verdict::Soluble) return {Verdict::Soluble, s0.witness, s0.found_level};
    Verdict v1 = run_chart(1, max_depth, s1);
    if (v1 == Verdict::Soluble) return {Verdict::Soluble, s1.witness, s1.found_level};
    int deepest = std::max(s0.deepest, s1.deepest);
    if (v0 == Verdict::Undecided || v1 == Verdict::Undecided) return {Verdict::Undecided, std::nullopt, deepest};
    return {Verdict::Insoluble, std::nullopt, deepest};
}

int resolve_workers(int workers);

}  // namespace

SolubilityVerdict decide(unsigned long p, const GBQInt& q, int max_depth) {
    if (!is_prime(p))
        throw std::invalid_argument("decide: p must be prime");
    if (max_depth < 1)
        throw std::invalid_argument("decide: max_depth must be >= 1");
    return run_charts(p, q, max_depth, /*generic=*/p == 2);
}

SolubilityVerdict decide_generic(unsigned long p, const GBQInt& q, int max_depth) {
    if (!is_prime(p))
        throw std::invalid_argument("decide_generic: p must be prime");
    if (max_depth < 1)
        throw std::invalid_argument("decide_generic: max_depth must be >= 1");
    return run_charts(p, q, max_depth, /*generic=*/true);
}

bool verify_witness(unsigned long p, const GBQInt& q, const Witness& w) {
    if (!is_prime(p))
        throw std::domain_error("verify_witness: p must be prime");
    if (w.chart != 0 && w.chart != 1)
        throw std::domain_error("verify_witness: bad chart");
    Integer P(p);
    const Integer &X = w.x, &Y = w.y, &Z = w.z;
    Integer h = q.l * X * X + q.m * X * Y + q.n * Y * Y;
    Integer f = q.a * X * X * X * X + q.b * X * X * X * Y + q.c * X * X * Y * Y + q.d * X * Y * Y * Y +
                q.e * Y * Y * Y * Y;
    Integer F = Z * Z + h * Z - f;
    if (w.kind == Witness::Kind::Exact) {
        if (mod(X, P) == 0 && mod(Y, P) == 0) return false;  // not a primitive point
        return F == 0;
    }
    if (w.modulus_exp == 0)
        throw std::domain_error("verify_witness: zero modulus");
    if (w.var != 0 && w.var != 1)
        throw std::domain_error("verify_witness: bad variable tag");
    if (F == 0) return true;
    Integer dF;
    if (w.var == 1) {
        dF = 2 * Z + h;
    } else if (w.chart == 0) {
        dF = (2 * q.l * X + q.m * Y) * Z - (4 * q.a * X * X * X + 3 * q.b * X * X * Y + 2 * q.c * X * Y * Y +
                                            q.d * Y * Y * Y);
    } else {
        dF = (q.m * X + 2 * q.n * Y) * Z - (q.b * X * X * X + 2 * q.c * X * X * Y + 3 * q.d * X * Y * Y +
                                            4 * q.e * Y * Y * Y);
    }
    if (dF == 0) return false;
    return valuation(F, P) > 2 * valuation(dF, P);
}

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("LOCSOL_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

McLocalResult monte_carlo_local(unsigned long p, ModelKind model, long long n, std::uint64_t seed, unsigned digits,
                                int workers) {
    if (!is_prime(p))
        throw std::invalid_argument("monte_carlo_local: p must be prime");
    if (n < 1)
        throw std::invalid_argument("monte_carlo_local: n must be >= 1");
    if (digits < 8)
        throw std::invalid_argument("monte_carlo_local: need at least 8 digits of precision");
    Integer bound = pow_ui(Integer(p), digits);
    int depth = std::max(1, static_cast<int>((digits - 2) / 2));
    CounterRng rng(seed);
    int W = resolve_workers(workers);
    std::vector<std::array<long long, 3>> tallies(W, {0, 0, 0});
    auto worker = [&](int wi) {
        long long lo = n * wi / W, hi = n * (wi + 1) / W;
        for (long long i = lo; i < hi; ++i) {
            GBQInt q;
            bool gen = (model == ModelKind::GeneralizedBQ);
            q.l = gen ? rng.uniform(i, 0, bound) : Integer(0);
            q.m = gen ? rng.uniform(i, 1, bound) : Integer(0);
            q.n = gen ? rng.uniform(i, 2, bound) : Integer(0);
            q.a = rng.uniform(i, 3, bound);
            q.b = rng.uniform(i, 4, bound);
            q.c = rng.uniform(i, 5, bound);
            q.d = rng.uniform(i, 6, bound);
            q.e = rng.uniform(i, 7, bound);
            switch (decide(p, q, depth).kind) {
                case Verdict::Soluble: ++tallies[wi][0]; break;
                case Verdict::Insoluble: ++tallies[wi][1]; break;
                case Verdict::Undecided: ++tallies[wi][2]; break;
            }
        }
    };
    std::vector<std::thread> threads;
    for (int wi = 0; wi < W; ++wi) threads.emplace_back(worker, wi);
    for (auto& t : threads) t.join();
    McLocalResult r;
    r.samples = n;
    for (const auto& t : tallies) {
        r.soluble += t[0];
        r.insoluble += t[1];
        r.undecided += t[2];
    }
    r.soluble_frac = Rational(Integer(static_cast<long>(r.soluble)), Integer(static_cast<long>(n)));
    r.soluble_frac.canonicalize();
    r.insoluble_frac = Rational(Integer(static_cast<long>(r.insoluble)), Integer(static_cast<long>(n)));
    r.insoluble_frac.canonicalize();
    r.undecided_frac = Rational(Integer(static_cast<long>(r.undecided)), Integer(static_cast<long>(n)));
    r.undecided_frac.canonicalize();
    return r;
}

}  // namespace locsol::padic
