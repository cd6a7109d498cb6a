// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each criterion carries its own runtime budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "golden_data.hpp"
#include "util.hpp"

using namespace oreh;
using testutil::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_seconds;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    Criterion(const char* name_, double budget) : name(name_), budget_seconds(budget) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    void finish() {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > budget_seconds) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "over budget (" + std::to_string(budget_seconds) + "s)";
        }
        std::printf("%s: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

struct Corpus {
    RingRef ring;
    std::vector<OreMatrix> matrices;
    std::vector<HermitePair> forms;  // filled by the oracle-equivalence run
};

std::vector<Corpus> build_corpus(int per_ring) {
    Rng rng(90001);
    std::vector<Corpus> out;
    for (RingSpec spec : {RingSpec::differential(), RingSpec::shift()}) {
        Corpus c;
        c.ring = make_ring(spec);
        // Dimensions and degrees are drawn uniformly within the bounds
        // n <= 3, deg_D <= 2, deg_z <= 2; maxing out every parameter at
        // once produces pathological coefficient swell in the oracle.
        for (int t = 0; t < per_ring; ++t) {
            int n = rng.uniform(2, 3);
            int d = rng.uniform(1, 2);
            int e = rng.uniform(0, 2);
            c.matrices.push_back(rng.full_rank_matrix(c.ring, n, d, e));
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

int main() {
    RingRef diff = make_ring(RingSpec::differential());

    // ----------------------------------------------------------------- 1
    {
        Criterion c("golden example A reproduced exactly", 10.0);
        OreMatrix a = golden::example_a(diff);
        HermitePair hp = hermite(a);
        c.expect(hp.h == golden::example_a_hermite(diff), "H differs from the known form");
        c.expect(verify_hermite(a, hp.h, hp.u).ok(), "certificate checks failed");
        c.finish();
    }

    // ----------------------------------------------------------------- 2
    {
        Criterion c("golden example B: multiplier, form, degree sequence", 10.0);
        OreMatrix a = golden::example_b(diff);
        Trichotomy t = hermite_given_degrees(a, {1, 0, 2}, 2);
        c.expect(t.kind == TrichotomyKind::Exact, "probe at (1,0,2) not Exact");
        if (t.pair) {
            c.expect(t.pair->u == golden::example_b_multiplier(diff), "T differs");
            c.expect(t.pair->h == golden::example_b_hermite(diff), "H differs");
        }
        c.expect(find_degree_sequence(a) == std::vector<int>{1, 0, 2},
                 "degree sequence is not (1,0,2)");
        c.finish();
    }

    // ------------------------------------------------------------- 3 & 5
    std::vector<Corpus> corpus = build_corpus(50);
    {
        Criterion c("oracle equivalence on 50 random matrices per ring", 300.0);
        for (Corpus& cp : corpus) {
            for (const OreMatrix& a : cp.matrices) {
                HermitePair lin = hermite(a);
                HermiteNaiveResult naive = hermite_naive(a);
                c.expect(lin.h == naive.pair.h, "linear-system and Euclidean forms differ");
                cp.forms.push_back(std::move(lin));
            }
        }
        c.finish();
    }
    {
        Criterion c("degree bounds hold on the whole corpus", 300.0);
        for (const Corpus& cp : corpus) {
            for (size_t i = 0; i < cp.matrices.size(); ++i) {
                const OreMatrix& a = cp.matrices[i];
                const HermitePair& hp = cp.forms[i];
                int n = a.rows();
                int d = matrix_degree(a);
                int diag_sum = 0;
                for (int r = 0; r < n; ++r) {
                    int row_sum = 0;
                    for (int j = 0; j < n; ++j)
                        if (!hp.h(r, j).is_zero()) row_sum += hp.h(r, j).degree();
                    c.expect(row_sum <= n * d, "row degree sum exceeds n*d");
                    diag_sum += hp.h(r, r).degree();
                }
                c.expect(diag_sum <= n * d, "diagonal degree sum exceeds n*d");
                c.expect(matrix_degree(hp.u) <= (n - 1) * d, "deg U exceeds (n-1)*d");
                c.expect(ddet_degree(hp.u) == Deg(0), "U is not unimodular");
            }
        }
        c.finish();
    }

    // ----------------------------------------------------------------- 4
    {
        // The probe theory pins down three regions: d equal to the true
        // sequence h gives the unique exact solution; d componentwise >= h
        // and != h gives a solvable but underdetermined system; a first
        // deviation from h that is downward (exact prefix, short entry)
        // gives an inconsistent system.  Sequences whose first deviation is
        // upward with a later short entry are not covered by the theory --
        // the system may be consistent or even uniquely solvable with a
        // non-Hermite product (rejected with an error) -- so for those the
        // requirement is only that the probe never claims Exact.
        Criterion c("trichotomy sweep over {0..3}^3 on golden example B", 300.0);
        OreMatrix a = golden::example_b(diff);
        const std::vector<int> h{1, 0, 2};
        for (int d0 = 0; d0 <= 3; ++d0)
            for (int d1 = 0; d1 <= 3; ++d1)
                for (int d2 = 0; d2 <= 3; ++d2) {
                    std::vector<int> d{d0, d1, d2};
                    std::string tag = "(" + std::to_string(d0) + "," + std::to_string(d1) + "," +
                                      std::to_string(d2) + ")";
                    bool dominates = true;
                    for (size_t i = 0; i < 3; ++i)
                        if (d[i] < h[i]) dominates = false;
                    bool prefix_short = false;
                    for (size_t i = 0; i < 3; ++i)
                        if (d[i] != h[i]) {
                            prefix_short = d[i] < h[i];
                            break;
                        }
                    bool threw = false;
                    TrichotomyKind got{};
                    try {
                        got = hermite_given_degrees(a, d).kind;
                    } catch (const math_error&) {
                        threw = true;  // unique non-Hermite solution rejected
                    }
                    if (d == h)
                        c.expect(!threw && got == TrichotomyKind::Exact, tag + " not Exact");
                    else if (dominates)
                        c.expect(!threw && got == TrichotomyKind::StrictlyDominates,
                                 tag + " not StrictlyDominates");
                    else if (prefix_short)
                        c.expect(!threw && got == TrichotomyKind::NotDominates,
                                 tag + " not NotDominates");
                    else
                        c.expect(threw || got != TrichotomyKind::Exact, tag + " falsely Exact");
                }
        c.finish();
    }

    // ----------------------------------------------------------------- 6
    {
        Criterion c("quasideterminant suite on random invertible matrices", 300.0);
        Rng rng(90002);
        auto check = [&](const OreMatrix& a) {
            int n = a.rows();
            int d = matrix_degree(a);
            SkewMatrix em = embed(a);
            SkewMatrix inv = skew_inverse(em);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    QdResult qd = quasidet(em, p, q);
                    bool nz = !inv(q, p).is_zero();
                    c.expect((qd.defined && !qd.value.is_zero()) == nz,
                             "inverse/quasideterminant support mismatch");
                    if (qd.defined && !qd.value.is_zero()) {
                        c.expect(inv(q, p) == qd.value.inverse(),
                                 "inverse entry is not the reciprocal quasideterminant");
                        c.expect(Deg(-(n - 1) * d) <= qd.value.deg() &&
                                     qd.value.deg() <= Deg(n * d),
                                 "quasideterminant degree out of bounds");
                    }
                }
        };
        for (RingRef r : {make_ring(RingSpec::differential()), make_ring(RingSpec::shift())})
            for (int t = 0; t < 4; ++t) {
                for (;;) {
                    OreMatrix a = rng.matrix(r, 2, 2, 1, 1);
                    if (ddet_degree(a).is_neg_inf()) continue;
                    check(a);
                    break;
                }
            }
        // At 3x3, dense z-dependence makes skew elimination blow up, so the
        // sample keeps a single z-bearing entry.
        OreMatrix a3(3, 3, OrePoly::zero(diff));
        for (;;) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    a3(i, j) = rng.orepoly(diff, 1, (i == 0 && j == 0) ? 1 : 0);
            if (!ddet_degree(a3).is_neg_inf()) break;
        }
        check(a3);
        c.finish();
    }

    // ----------------------------------------------------------------- 7
    {
        Criterion c("Euclidean degree identities on 200 random pairs", 60.0);
        Rng rng(90003);
        for (RingRef r : {make_ring(RingSpec::differential()), make_ring(RingSpec::shift())}) {
            for (int t = 0; t < 100; ++t) {
                OrePoly a = rng.orepoly_nonzero(r, 2, 1);
                OrePoly b = rng.orepoly_nonzero(r, 2, 1);
                GcrdCertificate g = gcrd_ext(a, b);
                OrePoly m = g.s * a;
                c.expect(g.u * a + g.v * b == g.g, "Bezout identity fails");
                c.expect(m == -(g.t * b), "lclm cross identity fails");
                c.expect(m.degree() + g.g.degree() == a.degree() + b.degree(),
                         "gcrd/lclm degree identity fails");
                GcldCertificate gl = gcld_lcrm(a, b);
                c.expect(a * gl.u + b * gl.v == gl.g, "left Bezout identity fails");
                c.expect(gl.m == a * gl.fbar && gl.m == -(b * gl.gbar),
                         "lcrm cross identity fails");
                c.expect(gl.m.degree() + gl.g.degree() == a.degree() + b.degree(),
                         "gcld/lcrm degree identity fails");
            }
        }
        c.finish();
    }

    // ----------------------------------------------------------------- 8
    {
        // Complexity claims are replaced by a desk-scale smoke benchmark:
        // an n=3, deg_D<=2, deg_z<=2 instance completes inside the budget
        // and the coefficient z-degrees stay within an explicit Hadamard
        // bound computed from the reduced coefficient matrix.
        Criterion c("smoke benchmark with explicit coefficient-size bound", 60.0);
        Rng rng(90005);
        OreMatrix a = rng.full_rank_matrix(diff, 3, 2, 2);
        HermitePair hp = hermite(a);
        c.expect(verify_hermite(a, hp.h, hp.u).ok(), "certificate checks failed");

        // Every entry of U solves the reduced system by Cramer's rule, so
        // its numerator and denominator degrees are at most the Hadamard
        // bound B = sum over equations of the largest entry z-degree.
        ReducedSystem sys = build_reduced_system(a, diag_degrees(hp.h));
        long bound = 0;
        for (int col = 0; col < sys.a_tilde.cols(); ++col) {
            Deg best = Deg::neg_inf();
            for (int row = 0; row < sys.a_tilde.rows(); ++row)
                best = max(best, sys.a_tilde(row, col).deg_z());
            if (!best.is_neg_inf() && best.value() > 0) bound += best.value();
        }
        auto entry_deg = [](const OrePoly& f) {
            Deg d = f.deg_z();
            return d.is_neg_inf() ? 0L : static_cast<long>(d.value());
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                c.expect(entry_deg(hp.u(i, j)) <= bound, "deg_z of U exceeds the Hadamard bound");
        // H = U A: numerators gain at most deg_z A per term and the common
        // denominator multiplies across a row of U.
        long hbound = 3 * bound + matrix_degree(a) + 2;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                c.expect(entry_deg(hp.h(i, j)) <= hbound, "deg_z of H exceeds the derived bound");
        c.finish();
    }

    if (g_failures == 0) std::printf("all acceptance criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
