/**
 * @file acceptance.cpp
 * @brief Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
 *        any criterion fails.
 *
 * All comparisons are exact over Q. Time budgets are checked against wall
 * clock and are part of the pass condition where a budget is stated.
 */

#include "sheetlab/centralizer.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/orbit_closure.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sampling.hpp"
#include "sheetlab/sheets.hpp"
#include "sheetlab/verify.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace sheetlab;
using namespace sheetlab::testing;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Tally {
    std::size_t checks = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && first_failure.empty()) {
            first_failure = what;
        }
    }
    [[nodiscard]] bool ok() const { return first_failure.empty(); }
};

struct Criterion {
    std::string id;
    std::string title;
    double budget_seconds;  // 0 means no stated budget
    std::function<void(Tally&)> run;
};

std::vector<Partition> sheets_up_to(int n_max) {
    std::vector<Partition> out;
    for (int n = 1; n <= n_max; ++n) {
        for (auto& p : partitions_of(n)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

int sum_sq(const Partition& p) {
    int s = 0;
    for (int c : p.parts()) {
        s += c * c;
    }
    return s;
}

void ac1(Tally& t) {
    for (const auto& sigma : sheets_up_to(6)) {
        const auto x = nilpotent_representative(sigma);
        const auto prof = gcd_minor_profile(x);
        for (std::size_t i = 1; i <= x.size(); ++i) {
            t.expect(prof.q(i) == t_pow(static_cast<std::size_t>(sigma.part(i))), "q_i != t^b_i for " + sigma.to_string());
        }
        t.expect(classify_sheet(x).sigma == sigma, "classify_sheet misses " + sigma.to_string());
    }
}

void ac2(Tally& t) {
    Rng rng(derive_seed(kSeed, "AC2"));
    for (const auto& sigma : sheets_up_to(4)) {
        for (int s = 0; s < 50; ++s) {
            const auto x = random_sheet_sample(sigma, rng);
            const auto prof = gcd_minor_profile(x);
            UniPoly product = P({1});
            for (std::size_t i = 1; i <= x.size(); ++i) {
                t.expect(divides(prof.q(i + 1), prof.q(i)), "q_{i+1} does not divide q_i");
                product *= prof.q(i);
            }
            t.expect(product == brute_force_charpoly(x), "prod q_i != monic characteristic polynomial");
            t.expect(gcd_minor_profile(random_conjugate(x, rng)) == prof, "profile not conjugation invariant");
        }
    }
}

void ac3(Tally& t) {
    Rng rng(derive_seed(kSeed, "AC3"));
    for (const auto& sigma : sheets_up_to(4)) {
        for (int s = 0; s < 50; ++s) {
            const auto z = random_quotient_point(sigma, rng);
            const auto back = quotient_point(section(z));
            t.expect(back == z, "quotient_point(section(z)) != z");
            t.expect(trace_relation(back.polys()).is_zero(), "trace relation fails on section point");
            const auto x = random_sheet_sample(sigma, rng);
            const auto zx = quotient_point(x);
            t.expect(trace_relation(zx.polys()).is_zero(), "trace relation fails on sample");
            const auto prof = gcd_minor_profile(x);
            for (std::size_t i = 1; i <= x.size(); ++i) {
                t.expect(reconstruct_Q(zx, i) == prof.Q(i), "reconstruct_Q != Q_i");
            }
        }
    }
}

void ac4(Tally& t) {
    Rng rng(derive_seed(kSeed, "AC4"));
    for (const auto& sigma : sheets_up_to(4)) {
        const auto c = conjugate(sigma);
        for (int s = 0; s < 50; ++s) {
            const auto x = random_sheet_sample(sigma, rng);
            const auto prof = gcd_minor_profile(x);
            for (std::size_t i = 1; i <= sigma.length(); ++i) {
                std::size_t bound = 0;
                for (int j = 1; j <= sigma.part(i); ++j) {
                    bound += static_cast<std::size_t>(c.part(static_cast<std::size_t>(j)));
                }
                t.expect(kernel_dim(x, prof.q(i)) >= bound, "dim ker q_i(x) below bound for " + sigma.to_string());
            }
        }
    }
}

void ac5(Tally& t) {
    const std::vector<Partition> chain{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
    for (std::size_t a = 0; a < chain.size(); ++a) {
        for (std::size_t b = 0; b < chain.size(); ++b) {
            const bool got = closure_contains(nilpotent_representative(chain[a]), nilpotent_representative(chain[b]));
            t.expect(got == (a <= b), "order on " + chain[a].to_string() + " vs " + chain[b].to_string());
        }
    }
    Rng rng(derive_seed(kSeed, "AC5"));
    std::vector<RationalMatrix> pool;
    for (const auto& sigma : partitions_of(3)) {
        pool.push_back(nilpotent_representative(sigma));
        for (int s = 0; s < 3; ++s) {
            const auto sp = random_split_point(sigma, rng);
            for (const auto& j : jordan_degenerations(sp.jordan, true)) {
                pool.push_back(jordan_matrix(j).with_ambient(Ambient::sl));
            }
        }
    }
    auto pick = [&] {
        return random_conjugate(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))], rng);
    };
    for (int s = 0; s < 100; ++s) {
        const auto x = pick();
        const auto y = pick();
        const auto z = pick();
        t.expect(closure_contains(x, x), "not reflexive");
        const bool xy = closure_contains(x, y);
        const bool yz = closure_contains(y, z);
        t.expect(!(xy && yz) || closure_contains(x, z), "not transitive");
        t.expect(closure_contains(random_conjugate(x, rng), random_conjugate(y, rng)) == xy,
                 "not conjugation invariant");
    }
}

void ac6(Tally& t) {
    // sl(2): single generator det(y) - b up to sign.
    const std::size_t nv = symbolic_arity(2);
    const auto y11 = MultiPoly::variable(nv, 0);
    const auto y12 = MultiPoly::variable(nv, 1);
    const auto y21 = MultiPoly::variable(nv, 2);
    for (long b : {-4L, 0L, 1L, 7L}) {
        const auto g = weyman_generators(QuotientPoint(Partition({2}), {P({b, 0, 1}), P({1})}));
        const MultiPoly det_minus_b = -(y11 * y11) - y12 * y21 - MultiPoly::constant(nv, R(b));
        t.expect(g.gens.size() == 1 && (g.gens[0] == det_minus_b || g.gens[0] == -det_minus_b),
                 "sl(2) generator is not det(y) - b");
    }

    Rng rng(derive_seed(kSeed, "AC6"));
    std::vector<Partition> sheets = sheets_up_to(3);
    sheets.push_back(Partition({4}));
    for (const auto& sigma : sheets) {
        for (int variant = 0; variant < 2; ++variant) {
            SplitPoint sp = random_split_point(sigma, rng);
            if (variant == 1) {
                sp = SplitPoint{QuotientPoint::nilpotent(sigma), {EigenBlock{R(0), sigma}}};
            }
            const auto gens = weyman_generators(sp.z);
            std::size_t fiber_points = 0;
            for (int s = 0; s < 20; ++s) {
                t.expect(all_vanish(gens, random_conjugate(section(sp.z), rng)), "generator nonzero on the orbit");
                ++fiber_points;
            }
            std::vector<RationalMatrix> outside;
            for (const auto& j : jordan_degenerations(sp.jordan, true)) {
                const auto y = random_conjugate(jordan_matrix(j).with_ambient(Ambient::sl), rng);
                if (fiber_contains(sp.z, y)) {
                    t.expect(all_vanish(gens, y), "generator nonzero on a boundary point");
                    ++fiber_points;
                } else {
                    outside.push_back(y);
                }
            }
            for (const auto& j : jordan_degenerations(sp.jordan, false)) {
                outside.push_back(random_conjugate(jordan_matrix(j).with_ambient(Ambient::sl), rng));
            }
            for (const auto& tau : partitions_of(sigma.total())) {
                for (int s = 0; s < 3; ++s) {
                    outside.push_back(random_sheet_sample(tau, rng));
                }
                outside.push_back(random_conjugate(section(random_split_point(tau, rng).z), rng));
            }
            for (const auto& y : outside) {
                if (!fiber_contains(sp.z, y)) {
                    t.expect(!all_vanish(gens, y), "every generator vanishes outside the fiber");
                }
            }
            t.expect(fiber_points >= 20, "fewer than 20 fiber points");
        }
    }
}

void ac7(Tally& t) {
    Rng rng(derive_seed(kSeed, "AC7"));
    for (int n = 1; n <= 5; ++n) {
        for (int s = 0; s < 25; ++s) {
            const auto c = centralizer(random_sheet_sample(Partition({n}), rng), Ambient::sl);
            t.expect(c.dimension() == static_cast<std::size_t>(n - 1), "regular centralizer dim != n - 1");
            t.expect(is_abelian(c), "regular centralizer not abelian");
        }
    }
}

void ac8(Tally& t) {
    for (const auto& sigma : sheets_up_to(6)) {
        const auto x = nilpotent_representative(sigma).with_ambient(Ambient::gl);
        const auto b1 = static_cast<std::size_t>(sigma.part(1));
        const std::string tag = " for " + sigma.to_string();
        t.expect(centralizer(x, Ambient::gl).dimension() == static_cast<std::size_t>(sum_sq(conjugate(sigma))),
                 "dim centralizer != sum c_j^2" + tag);
        t.expect(coadjoint_invariant_dim(x, Ambient::gl) == b1, "gl codim != b_1" + tag);
        t.expect(coadjoint_invariant_dim(x.with_ambient(Ambient::sl), Ambient::sl) == b1 - 1, "sl codim != b_1 - 1" + tag);
        t.expect(lemma_basis_check(sigma), "lemma basis check fails" + tag);
    }
}

void ac9(Tally& t) {
    Rng rng(derive_seed(kSeed, "AC9"));
    for (const auto& sigma : sheets_up_to(4)) {
        t.expect(killing_orthogonality_check(nilpotent_representative(sigma)), "nilpotent " + sigma.to_string());
        for (int s = 0; s < 10; ++s) {
            t.expect(killing_orthogonality_check(random_sheet_sample(sigma, rng)),
                     "complement of g.x != g_x on " + sigma.to_string());
        }
    }
}

void ac10(Tally& t) {
    Rng rng(derive_seed(kSeed, "AC10"));
    const std::vector<Rational> eps{R(2), R(1, 2), R(-1), R(1, 3)};
    for (const auto& sigma : sheets_up_to(4)) {
        for (int s = 0; s < 10; ++s) {
            const auto x = random_sheet_sample(sigma, rng);
            const auto z = quotient_point(x);
            for (const auto& e : eps) {
                t.expect(quotient_point(e * x) == scale_quotient_point(z, e), "equivariance fails");
            }
            const auto nil = QuotientPoint::nilpotent(sigma);
            for (unsigned k = 0; k <= 40; ++k) {
                const Rational step = R(1) / R(2).pow(k);
                const auto zk = scale_quotient_point(z, step);
                for (std::size_t i = 1; i <= z.size(); ++i) {
                    const std::size_t m = z.p(i).degree_nonzero();
                    t.expect(zk.p(i).degree_nonzero() == m && zk.p(i).is_monic(), "scaled p_i changed degree");
                    for (std::size_t d = 0; d < m; ++d) {
                        const Rational c = z.p(i).coefficient(d);
                        const Rational ck = zk.p(i).coefficient(d);
                        t.expect(ck == c * step.pow(static_cast<unsigned>(m - d)), "coefficient scaling is not exact");
                        t.expect((ck - nil.p(i).coefficient(d)).abs() <= c.abs() * step, "no convergence to cone");
                    }
                }
            }
        }
    }
}

void full_verify(Tally& t, std::size_t n_max) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.seed = 42;
    const auto report = run_verification(opt);
    for (const auto& c : report.cases) {
        t.expect(c.passed, c.name + ": " + c.detail);
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "nilpotent sheet classification, n <= 6", 10.0, ac1},
        {"AC2", "invariant-factor tower, 50 samples per sheet, n <= 4", 0.0, ac2},
        {"AC3", "quotient round trip, reconstruction, trace relation, n <= 4", 0.0, ac3},
        {"AC4", "kernel dimension bound, n <= 4", 0.0, ac4},
        {"AC5", "closure order in sl(3) and 100 random triples", 0.0, ac5},
        {"AC6", "remainder generators: vanishing, separation, sl(2) determinant", 60.0, ac6},
        {"AC7", "regular centralizers abelian of dim n - 1, n <= 5", 0.0, ac7},
        {"AC8", "nilpotent centralizer counts and lemma basis, n <= 6", 30.0, ac8},
        {"AC9", "Killing complement of tangent space equals centralizer, n <= 4", 0.0, ac9},
        {"AC10", "homothety equivariance and convergence to the nilpotent point", 0.0, ac10},
        {"VERIFY4", "verify --n-max 4 within 2 minutes", 120.0, [](Tally& t) { full_verify(t, 4); }},
        {"VERIFY5", "verify --n-max 5 within 10 minutes", 600.0, [](Tally& t) { full_verify(t, 5); }},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(tally);
        } catch (const std::exception& e) {
            tally.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
            tally.expect(false, "over time budget");
        }
        all_ok = all_ok && tally.ok();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (tally.ok() ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [checks=" << tally.checks
                  << ", " << timing;
        if (c.budget_seconds > 0.0) {
            std::cout << " / budget " << c.budget_seconds << "s";
        }
        std::cout << "]";
        if (!tally.ok()) {
            std::cout << "  first failure: " << tally.first_failure;
        }
        std::cout << '\n';
    }
    std::cout << (all_ok ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILED") << '\n';
    return all_ok ? 0 : 1;
}
