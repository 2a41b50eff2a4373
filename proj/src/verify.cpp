#include "sheetlab/verify.hpp"

#include "sheetlab/centralizer.hpp"
#include "sheetlab/errors.hpp"
#include "sheetlab/json_io.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/orbit_closure.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sampling.hpp"
#include "sheetlab/sheets.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>

namespace sheetlab {

using nlohmann::json;

namespace {

class Checker {
public:
    template <class Witness>
    void expect(bool ok, const std::string& detail, Witness&& witness) {
        ++checks_;
        if (!ok && !failed_) {
            failed_ = true;
            detail_ = detail;
            witness_ = std::forward<Witness>(witness)();
        }
    }

    [[nodiscard]] bool failed() const { return failed_; }
    [[nodiscard]] std::size_t checks() const { return checks_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }
    [[nodiscard]] const json& witness() const { return witness_; }

private:
    bool failed_ = false;
    std::size_t checks_ = 0;
    std::string detail_;
    json witness_;
};

struct Context {
    const VerifyOptions& opt;
    Rng& rng;
    Checker& check;
};

using CaseFn = std::function<void(Context&)>;

struct CaseDef {
    CaseInfo info;
    CaseFn run;
};

const std::vector<Rational>& scale_factors() {
    static const std::vector<Rational> eps{Rational(2), Rational(1, 2), Rational(-1), Rational(1, 3)};
    return eps;
}

UniPoly random_poly(Rng& rng, long max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(rng.uniform(0, max_degree)) + 1);
    for (auto& v : c) {
        v = rng.small_rational();
    }
    return UniPoly(std::move(c));
}

UniPoly random_nonzero_poly(Rng& rng, long max_degree) {
    while (true) {
        UniPoly p = random_poly(rng, max_degree);
        if (!p.is_zero()) {
            return p;
        }
    }
}

UniPoly random_monic(Rng& rng, long max_degree) { return monic(random_nonzero_poly(rng, max_degree)); }

json witness_polys(std::initializer_list<std::pair<const char*, const UniPoly*>> items) {
    json w = json::object();
    for (const auto& [name, p] : items) {
        w[name] = io::encode(*p);
    }
    return w;
}

json witness_matrix(const RationalMatrix& x) { return {{"x", io::encode(x)}}; }

std::vector<Partition> all_partitions_up_to(std::size_t n_max) {
    std::vector<Partition> out;
    for (int n = 1; n <= static_cast<int>(n_max); ++n) {
        for (auto& p : partitions_of(n)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Tower laws checked on raw lists so that a corrupted tower can be fed in.
std::string tower_violation(const std::vector<UniPoly>& big_q, const std::vector<UniPoly>& small_q,
                            const UniPoly& charpoly) {
    const std::size_t n = small_q.size();
    if (big_q.size() != n + 1 || !big_q.back().is_one()) {
        return "Q_{n+1} != 1";
    }
    if (big_q.front() != charpoly) {
        return "Q_1 differs from the characteristic polynomial";
    }
    UniPoly product = UniPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!divides(big_q[i + 1], big_q[i])) {
            return "Q_" + std::to_string(i + 2) + " does not divide Q_" + std::to_string(i + 1);
        }
        if (small_q[i] * big_q[i + 1] != big_q[i]) {
            return "q_" + std::to_string(i + 1) + " != Q_" + std::to_string(i + 1) + " / Q_" + std::to_string(i + 2);
        }
        if (i + 1 < n && !divides(small_q[i + 1], small_q[i])) {
            return "q_" + std::to_string(i + 2) + " does not divide q_" + std::to_string(i + 1);
        }
        product *= small_q[i];
    }
    if (product != charpoly) {
        return "product of q_i differs from the characteristic polynomial";
    }
    return {};
}

// ---------------------------------------------------------------- exact-arith

void case_div_rem(Context& ctx) {
    for (std::size_t s = 0; s < ctx.opt.samples * 4; ++s) {
        const UniPoly a = random_poly(ctx.rng, 7);
        const UniPoly b = random_nonzero_poly(ctx.rng, 4);
        const auto [q, r] = poly_div_rem(a, b);
        const bool degree_ok = r.is_zero() || r.degree_nonzero() < b.degree_nonzero();
        ctx.check.expect(q * b + r == a && degree_ok, "a != q*b + r or deg r >= deg b",
                         [&] { return witness_polys({{"a", &a}, {"b", &b}, {"q", &q}, {"r", &r}}); });
    }
}

void case_gcd(Context& ctx) {
    for (std::size_t s = 0; s < ctx.opt.samples * 2; ++s) {
        const UniPoly g = random_monic(ctx.rng, 3);
        const UniPoly u = random_nonzero_poly(ctx.rng, 3);
        const UniPoly v = random_nonzero_poly(ctx.rng, 3);
        const UniPoly a = g * u;
        const UniPoly b = g * v;
        const UniPoly d = poly_gcd(a, b);
        const bool ok = d.is_monic() && divides(d, a) && divides(d, b) && divides(g, d);
        ctx.check.expect(ok, "gcd is not a monic greatest common divisor",
                         [&] { return witness_polys({{"a", &a}, {"b", &b}, {"gcd", &d}, {"common", &g}}); });
    }
}

void case_root_sum(Context& ctx) {
    for (std::size_t s = 0; s < ctx.opt.samples * 2; ++s) {
        const UniPoly p = random_monic(ctx.rng, 4);
        const UniPoly q = random_monic(ctx.rng, 4);
        const UniPoly pq = p * q;
        ctx.check.expect(root_sum(pq) == root_sum(p) + root_sum(q), "root_sum(pq) != root_sum(p) + root_sum(q)",
                         [&] { return witness_polys({{"p", &p}, {"q", &q}}); });
    }
}

void case_rescale(Context& ctx) {
    for (std::size_t s = 0; s < ctx.opt.samples * 2; ++s) {
        const UniPoly p = random_monic(ctx.rng, 5);
        Rational eps = ctx.rng.small_rational();
        if (eps.is_zero()) {
            eps = Rational(5, 2);
        }
        const UniPoly back = poly_rescale(poly_rescale(p, eps), eps.inverse());
        ctx.check.expect(back == p, "rescale by eps then 1/eps is not the identity", [&] {
            json w = witness_polys({{"p", &p}});
            w["eps"] = io::encode(eps);
            return w;
        });
    }
}

void case_exactness(Context& ctx) {
    for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
        const Rational r(ctx.rng.uniform(-1000, 1000), ctx.rng.uniform(1, 1000));
        ctx.check.expect(Rational::parse(r.to_string()) == r, "rational text round trip",
                         [&] { return json{{"r", r.to_string()}}; });
    }
    for (std::size_t n = 2; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
            const std::string first = io::encode(gcd_minor_profile(x)).dump();
            const std::string second = io::encode(gcd_minor_profile(RationalMatrix(x.rows(), Ambient::sl))).dump();
            ctx.check.expect(first == second, "profile is not bit-reproducible", [&] { return witness_matrix(x); });
        }
    }
}

// ------------------------------------------------------------------ minor-gcd

void case_conjugation_invariance(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                const RationalMatrix y = random_conjugate(x, ctx.rng);
                ctx.check.expect(gcd_minor_profile(x) == gcd_minor_profile(y), "profile changed under conjugation",
                                 [&] { return json{{"x", io::encode(x)}, {"gxg^-1", io::encode(y)}}; });
            }
        }
    }
}

void case_tower(Context& ctx) {
    const bool corrupt = ctx.opt.inject_fault == "tower";
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                const auto profile = gcd_minor_profile(x);
                std::vector<UniPoly> big_q = profile.Q_list();
                std::vector<UniPoly> small_q = profile.q_list();
                if (corrupt && small_q.size() >= 2) {
                    // Reverse the tower so divisibility runs the wrong way.
                    std::reverse(small_q.begin(), small_q.end());
                }
                const std::string why = tower_violation(big_q, small_q, characteristic_polynomial(x));
                ctx.check.expect(why.empty(), why, [&] {
                    json q = json::array();
                    for (const auto& p : small_q) {
                        q.push_back(io::encode(p));
                    }
                    return json{{"x", io::encode(x)}, {"q", q}};
                });
            }
        }
    }
}

void case_kernel(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const Partition c = conjugate(sigma);
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                const auto profile = gcd_minor_profile(x);
                for (std::size_t i = 1; i <= sigma.length(); ++i) {
                    std::size_t bound = 0;
                    for (int j = 1; j <= sigma.part(i); ++j) {
                        bound += static_cast<std::size_t>(c.part(static_cast<std::size_t>(j)));
                    }
                    const std::size_t dim = kernel_dim(x, profile.q(i));
                    ctx.check.expect(dim >= bound, "dim ker q_i(x) below sum of c_j", [&] {
                        return json{{"x", io::encode(x)}, {"i", i}, {"dim_ker", dim}, {"bound", bound}};
                    });
                }
            }
        }
    }
}

void case_homothety(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
            const auto px = gcd_minor_profile(x);
            for (const auto& eps : scale_factors()) {
                const auto pe = gcd_minor_profile(eps * x);
                for (std::size_t i = 1; i <= n; ++i) {
                    ctx.check.expect(pe.q(i) == poly_rescale(px.q(i), eps), "q_i(eps x) != rescale(q_i(x), eps)",
                                     [&] { return json{{"x", io::encode(x)}, {"eps", io::encode(eps)}, {"i", i}}; });
                }
            }
        }
    }
}

// --------------------------------------------------------------------- sheets

void case_nilpotent_classification(Context& ctx) {
    for (const auto& sigma : all_partitions_up_to(ctx.opt.n_max)) {
        const RationalMatrix x = nilpotent_representative(sigma);
        const auto profile = gcd_minor_profile(x);
        bool powers = true;
        for (std::size_t i = 1; i <= x.size(); ++i) {
            powers = powers && profile.q(i) == UniPoly::monomial(1, static_cast<std::size_t>(sigma.part(i)));
        }
        ctx.check.expect(powers && classify_sheet(x).sigma == sigma, "nilpotent representative misclassified",
                         [&] { return json{{"sigma", io::encode(sigma)}}; });
    }
}

void case_conjugate_involution(Context& ctx) {
    for (const auto& sigma : all_partitions_up_to(12)) {
        ctx.check.expect(conjugate(conjugate(sigma)) == sigma, "conjugate is not an involution",
                         [&] { return json{{"sigma", io::encode(sigma)}}; });
    }
}

void case_orbit_dim_bruteforce(Context& ctx) {
    for (const auto& sigma : all_partitions_up_to(std::min<std::size_t>(ctx.opt.n_max, 5))) {
        const auto d = describe_sheet(sigma);
        const RationalMatrix x = nilpotent_representative(sigma);
        const auto n = static_cast<int>(x.size());
        const int brute = (n * n - 1) - static_cast<int>(centralizer(x, Ambient::sl).dimension());
        ctx.check.expect(d.orbit_dim == brute && d.orbit_dim % 2 == 0, "orbit_dim formula disagrees with ker ad", [&] {
            return json{{"sigma", io::encode(sigma)}, {"formula", d.orbit_dim}, {"brute_force", brute}};
        });
    }
}

void case_orbit_dim_constant(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const auto expected = describe_sheet(sigma);
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                const auto got = classify_sheet(x);
                const int brute = static_cast<int>(n * n) - static_cast<int>(centralizer(x, Ambient::gl).dimension());
                ctx.check.expect(got == expected && brute == expected.orbit_dim,
                                 "sheet sample has the wrong sheet or orbit dimension", [&] {
                                     return json{{"x", io::encode(x)}, {"sigma", io::encode(sigma)}, {"dim", brute}};
                                 });
            }
        }
    }
}

// ------------------------------------------------------------------- quotient

void case_section_roundtrip(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const QuotientPoint z = random_quotient_point(sigma, ctx.rng);
                const QuotientPoint back = quotient_point(section(z));
                ctx.check.expect(back == z && trace_relation(back.polys()).is_zero(), "quotient_point(section(z)) != z",
                                 [&] { return json{{"z", io::encode(z)}, {"got", io::encode(back)}}; });
            }
        }
    }
}

void case_reconstruct(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                const auto profile = gcd_minor_profile(x);
                const QuotientPoint z = quotient_point(x);
                for (std::size_t i = 1; i <= n; ++i) {
                    ctx.check.expect(reconstruct_Q(z, i) == profile.Q(i), "reconstruct_Q(z, i) != Q_i^x",
                                     [&] { return json{{"x", io::encode(x)}, {"i", i}}; });
                }
            }
        }
    }
}

void case_separation(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            std::vector<std::pair<QuotientPoint, InvariantFactorProfile>> seen;
            for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
                const QuotientPoint z = random_quotient_point(sigma, ctx.rng);
                const RationalMatrix x = random_conjugate(section(z), ctx.rng);
                const RationalMatrix y = random_conjugate(x, ctx.rng);
                ctx.check.expect(quotient_point(x) == quotient_point(y) && quotient_point(x) == z,
                                 "quotient point not constant on an orbit",
                                 [&] { return json{{"x", io::encode(x)}, {"y", io::encode(y)}}; });
                const auto profile = gcd_minor_profile(x);
                for (const auto& [other, other_profile] : seen) {
                    ctx.check.expect((other == z) == (other_profile == profile),
                                     "distinct quotient points share an invariant-factor profile",
                                     [&] { return json{{"z1", io::encode(z)}, {"z2", io::encode(other)}}; });
                }
                seen.emplace_back(z, profile);
            }
        }
    }
}

void case_equivariance(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
            const QuotientPoint z = quotient_point(x);
            for (const auto& eps : scale_factors()) {
                ctx.check.expect(quotient_point(eps * x) == scale_quotient_point(z, eps),
                                 "quotient_point(eps x) != scale(quotient_point(x), eps)",
                                 [&] { return json{{"x", io::encode(x)}, {"eps", io::encode(eps)}}; });
            }
        }
    }
}

void case_asymptotic_cone(Context& ctx) {
    constexpr unsigned kSteps = 40;
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const QuotientPoint z = random_quotient_point(sigma, ctx.rng);
            const QuotientPoint zero = QuotientPoint::nilpotent(sigma);
            ctx.check.expect(scale_quotient_point(zero, Rational(1, 7)) == zero, "nilpotent point not fixed",
                             [&] { return json{{"sigma", io::encode(sigma)}}; });
            for (unsigned k = 0; k <= kSteps; ++k) {
                const Rational eps = Rational(1).pow(1) / Rational(2).pow(k);
                const QuotientPoint zk = scale_quotient_point(z, eps);
                for (std::size_t i = 1; i <= n; ++i) {
                    const UniPoly& base = z.p(i);
                    const UniPoly& scaled = zk.p(i);
                    const std::size_t m = base.degree_nonzero();
                    for (std::size_t d = 0; d < m; ++d) {
                        // |c_d(eps)| = |c_d| eps^(m-d) <= |c_d| / 2^k, which tends to 0.
                        const Rational expected = base.coefficient(d) * eps.pow(static_cast<unsigned>(m - d));
                        const bool ok = scaled.coefficient(d) == expected &&
                                        scaled.coefficient(d).abs() <= base.coefficient(d).abs() * eps;
                        ctx.check.expect(ok, "scaled coefficient does not shrink toward the nilpotent point", [&] {
                            return json{{"z", io::encode(z)}, {"k", k}, {"i", i}, {"degree", d}};
                        });
                    }
                }
            }
        }
    }
}

// -------------------------------------------------------------- orbit-closure

/// Pool of conjugated matrices from Jordan degenerations of split points and
/// nilpotent representatives, for closure-order checks.
std::vector<RationalMatrix> closure_pool(std::size_t n, Rng& rng, std::size_t samples) {
    std::vector<RationalMatrix> pool;
    for (const auto& sigma : partitions_of(static_cast<int>(n))) {
        pool.push_back(random_conjugate(nilpotent_representative(sigma), rng));
        const SplitPoint sp = random_split_point(sigma, rng);
        for (const auto& j : jordan_degenerations(sp.jordan, true)) {
            pool.push_back(random_conjugate(jordan_matrix(j).with_ambient(Ambient::sl), rng));
            if (pool.size() >= 4 * samples) {
                return pool;
            }
        }
    }
    return pool;
}

void case_closure_order(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        const auto pool = closure_pool(n, ctx.rng, ctx.opt.samples);
        std::vector<InvariantFactorProfile> profiles;
        for (const auto& m : pool) {
            profiles.push_back(gcd_minor_profile(m));
        }
        auto contains = [&](std::size_t a, std::size_t b) {
            for (std::size_t i = 1; i <= n; ++i) {
                if (!divides(profiles[a].Q(i), profiles[b].Q(i))) {
                    return false;
                }
            }
            return true;
        };
        const auto size = static_cast<long>(pool.size());
        for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
            const auto a = static_cast<std::size_t>(ctx.rng.uniform(0, size - 1));
            const auto b = static_cast<std::size_t>(ctx.rng.uniform(0, size - 1));
            const auto c = static_cast<std::size_t>(ctx.rng.uniform(0, size - 1));
            ctx.check.expect(closure_contains(pool[a], pool[a]), "closure_contains is not reflexive",
                             [&] { return witness_matrix(pool[a]); });
            const bool ab = closure_contains(pool[a], pool[b]);
            ctx.check.expect(ab == contains(a, b), "closure_contains disagrees with profile divisibility",
                             [&] { return json{{"x", io::encode(pool[a])}, {"y", io::encode(pool[b])}}; });
            ctx.check.expect(!(ab && contains(b, c)) || contains(a, c), "closure order is not transitive", [&] {
                return json{{"x", io::encode(pool[a])}, {"y", io::encode(pool[b])}, {"z", io::encode(pool[c])}};
            });
            const RationalMatrix ga = random_conjugate(pool[a], ctx.rng);
            const RationalMatrix gb = random_conjugate(pool[b], ctx.rng);
            ctx.check.expect(closure_contains(ga, gb) == ab, "closure order not conjugation-invariant",
                             [&] { return json{{"x", io::encode(pool[a])}, {"y", io::encode(pool[b])}}; });
        }
        // Independent oracle: on nilpotent orbits the order is dominance of partitions.
        const auto parts = partitions_of(static_cast<int>(n));
        for (const auto& lam : parts) {
            for (const auto& mu : parts) {
                const bool got = closure_contains(nilpotent_representative(lam), nilpotent_representative(mu));
                ctx.check.expect(got == dominates(lam, mu), "nilpotent closure order differs from dominance",
                                 [&] { return json{{"lambda", io::encode(lam)}, {"mu", io::encode(mu)}}; });
            }
        }
    }
}

void case_closure_antisymmetry(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        const auto pool = closure_pool(n, ctx.rng, ctx.opt.samples);
        const auto size = static_cast<long>(pool.size());
        for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
            const auto a = static_cast<std::size_t>(ctx.rng.uniform(0, size - 1));
            // Half the time compare against a conjugate so mutual containment occurs.
            const RationalMatrix other =
                ctx.rng.uniform(0, 1) == 0 ? random_conjugate(pool[a], ctx.rng)
                                           : pool[static_cast<std::size_t>(ctx.rng.uniform(0, size - 1))];
            if (closure_contains(pool[a], other) && closure_contains(other, pool[a])) {
                ctx.check.expect(gcd_minor_profile(pool[a]) == gcd_minor_profile(other),
                                 "mutually contained orbits with different profiles",
                                 [&] { return json{{"x", io::encode(pool[a])}, {"y", io::encode(other)}}; });
            } else {
                ctx.check.expect(gcd_minor_profile(pool[a]) != gcd_minor_profile(other) ||
                                     !(pool[a].size() == other.size()),
                                 "equal profiles but containment fails one way",
                                 [&] { return json{{"x", io::encode(pool[a])}, {"y", io::encode(other)}}; });
            }
        }
    }
}

struct FiberSamples {
    std::vector<RationalMatrix> inside;   // expected in the fiber
    std::vector<RationalMatrix> outside;  // expected outside
};

/// Fiber and non-fiber points for z: conjugated sections, conjugated Jordan
/// degenerations (inside), non-dominated degenerations and points of other
/// sheets or other z (outside).
FiberSamples fiber_samples(const SplitPoint& sp, std::size_t count, Rng& rng) {
    FiberSamples out;
    const Partition& sigma = sp.z.sigma();
    const RationalMatrix base = section(sp.z);
    const auto degenerations = jordan_degenerations(sp.jordan, true);
    for (std::size_t k = 0; out.inside.size() < count; ++k) {
        if (k % 2 == 0 || degenerations.empty()) {
            out.inside.push_back(random_conjugate(base, rng));
        } else {
            const auto& j = degenerations[(k / 2) % degenerations.size()];
            out.inside.push_back(random_conjugate(jordan_matrix(j).with_ambient(Ambient::sl), rng));
        }
    }
    for (const auto& j : jordan_degenerations(sp.jordan, false)) {
        out.outside.push_back(random_conjugate(jordan_matrix(j).with_ambient(Ambient::sl), rng));
    }
    for (const auto& tau : partitions_of(sigma.total())) {
        out.outside.push_back(random_sheet_sample(tau, rng));
        out.outside.push_back(random_conjugate(section(random_split_point(tau, rng).z), rng));
    }
    return out;
}

std::vector<Partition> symbolic_sheets(const VerifyOptions& opt) {
    std::vector<Partition> out = all_partitions_up_to(std::min<std::size_t>(opt.n_max, 3));
    for (std::size_t n = 4; n <= std::min(opt.n_max, opt.symbolic_limit); ++n) {
        out.push_back(Partition({static_cast<int>(n)}));
    }
    return out;
}

enum class GeneratorCheck { vanishing, separation, consistency };

void run_generator_case(Context& ctx, GeneratorCheck which) {
    for (const auto& sigma : symbolic_sheets(ctx.opt)) {
        for (int variant = 0; variant < 2; ++variant) {
            const SplitPoint sp = variant == 0 ? random_split_point(sigma, ctx.rng)
                                               : SplitPoint{QuotientPoint::nilpotent(sigma), {}};
            SplitPoint point = sp;
            if (variant == 1) {
                // Jordan data of the nilpotent point: a single eigenvalue 0 of type sigma.
                point.jordan = {EigenBlock{Rational(0), sigma}};
            }
            const auto gens = weyman_generators(point.z, ctx.opt.symbolic_limit);
            const auto samples = fiber_samples(point, ctx.opt.samples, ctx.rng);
            auto witness = [&](const RationalMatrix& y) {
                return json{{"z", io::encode(point.z)}, {"y", io::encode(y)}};
            };
            if (which == GeneratorCheck::vanishing) {
                for (const auto& y : samples.inside) {
                    ctx.check.expect(fiber_contains(point.z, y) && all_vanish(gens, y),
                                     "fiber point where a generator does not vanish", [&] { return witness(y); });
                }
            } else if (which == GeneratorCheck::separation) {
                for (const auto& y : samples.outside) {
                    if (!fiber_contains(point.z, y)) {
                        ctx.check.expect(!all_vanish(gens, y), "point outside the fiber where every generator vanishes",
                                         [&] { return witness(y); });
                    }
                }
            } else {
                for (const auto* list : {&samples.inside, &samples.outside}) {
                    for (const auto& y : *list) {
                        ctx.check.expect(fiber_contains(point.z, y) == all_vanish(gens, y),
                                         "fiber_contains disagrees with generator vanishing",
                                         [&] { return witness(y); });
                    }
                }
            }
        }
    }
}

// ------------------------------------------------------------ centralizer-lab

void case_regular(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        const Partition regular({static_cast<int>(n)});
        for (std::size_t s = 0; s < ctx.opt.samples; ++s) {
            const RationalMatrix x = random_sheet_sample(regular, ctx.rng);
            const auto c = centralizer(x, Ambient::sl);
            ctx.check.expect(c.dimension() == n - 1 && is_abelian(c), "regular centralizer not abelian of dim n-1",
                             [&] { return witness_matrix(x); });
        }
    }
}

void case_nilpotent_counts(Context& ctx) {
    for (const auto& sigma : all_partitions_up_to(ctx.opt.n_max)) {
        const RationalMatrix x = nilpotent_representative(sigma).with_ambient(Ambient::gl);
        const Partition dual = conjugate(sigma);
        int sum_sq = 0;
        for (int c : dual.parts()) {
            sum_sq += c * c;
        }
        const auto b1 = static_cast<std::size_t>(sigma.part(1));
        const bool ok = centralizer(x, Ambient::gl).dimension() == static_cast<std::size_t>(sum_sq) &&
                        coadjoint_invariant_dim(x, Ambient::gl) == b1 &&
                        coadjoint_invariant_dim(x.with_ambient(Ambient::sl), Ambient::sl) == b1 - 1 &&
                        lemma_basis_check(sigma);
        ctx.check.expect(ok, "centralizer counts of N_sigma differ from sum c_j^2, b_1, b_1 - 1",
                         [&] { return json{{"sigma", io::encode(sigma)}}; });
    }
}

void case_offdiagonal(Context& ctx) {
    for (const auto& sigma : all_partitions_up_to(ctx.opt.n_max)) {
        if (sigma.length() < 2) {
            continue;
        }
        ctx.check.expect(offdiagonal_absorbed(sigma), "off-diagonal centralizer component outside the derived algebra",
                         [&] { return json{{"sigma", io::encode(sigma)}}; });
    }
}

void case_killing(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            for (std::size_t s = 0; s < std::max<std::size_t>(1, ctx.opt.samples / 5); ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                ctx.check.expect(killing_orthogonality_check(x), "Killing complement of g.x is not g_x",
                                 [&] { return witness_matrix(x); });
            }
        }
    }
}

void case_centralizer_invariance(Context& ctx) {
    for (std::size_t n = 1; n <= ctx.opt.n_max; ++n) {
        for (const auto& sigma : partitions_of(static_cast<int>(n))) {
            const Partition dual = conjugate(sigma);
            int sum_sq = 0;
            for (int c : dual.parts()) {
                sum_sq += c * c;
            }
            for (std::size_t s = 0; s < std::max<std::size_t>(1, ctx.opt.samples / 5); ++s) {
                const RationalMatrix x = random_sheet_sample(sigma, ctx.rng);
                const RationalMatrix y = random_conjugate(x, ctx.rng);
                const auto dx = centralizer(x, Ambient::gl).dimension();
                const auto dy = centralizer(y, Ambient::gl).dimension();
                ctx.check.expect(dx == dy && dx == static_cast<std::size_t>(sum_sq),
                                 "centralizer dimension not constant on the sheet",
                                 [&] { return json{{"x", io::encode(x)}, {"dim_x", dx}, {"dim_gxg^-1", dy}}; });
            }
        }
    }
}

const std::vector<CaseDef>& registry() {
    static const std::vector<CaseDef> cases = {
        {{"arith.div_rem_reassembly", {"exact-arith.div_rem"}}, case_div_rem},
        {{"arith.gcd_greatest", {"exact-arith.gcd"}}, case_gcd},
        {{"arith.root_sum_additive", {"exact-arith.root_sum"}}, case_root_sum},
        {{"arith.rescale_inverse", {"exact-arith.rescale"}}, case_rescale},
        {{"arith.exact_reproducible", {"exact-arith.exactness"}}, case_exactness},
        {{"minors.conjugation_invariance", {"minor-gcd.conjugation"}}, case_conjugation_invariance},
        {{"minors.tower_law", {"minor-gcd.tower"}}, case_tower},
        {{"minors.kernel_characterization", {"minor-gcd.kernel"}}, case_kernel},
        {{"minors.homothety", {"minor-gcd.homothety"}}, case_homothety},
        {{"sheets.nilpotent_classification", {"sheets.nilpotent_classification"}}, case_nilpotent_classification},
        {{"sheets.conjugate_involution", {"sheets.involution"}}, case_conjugate_involution},
        {{"sheets.orbit_dim_bruteforce", {"sheets.orbit_dim_bruteforce"}}, case_orbit_dim_bruteforce},
        {{"sheets.orbit_dim_constant", {"sheets.orbit_dim_constant"}}, case_orbit_dim_constant},
        {{"quotient.section_roundtrip", {"quotient.section_roundtrip"}}, case_section_roundtrip},
        {{"quotient.reconstruct_Q", {"quotient.reconstruct"}}, case_reconstruct},
        {{"quotient.separates_orbits", {"quotient.separation"}}, case_separation},
        {{"quotient.equivariance", {"quotient.equivariance"}}, case_equivariance},
        {{"quotient.asymptotic_cone", {"quotient.asymptotic_cone"}}, case_asymptotic_cone},
        {{"closure.order", {"orbit-closure.order"}}, case_closure_order},
        {{"closure.antisymmetry", {"orbit-closure.antisymmetry"}}, case_closure_antisymmetry},
        {{"closure.generators_vanish", {"orbit-closure.vanishing"}},
         [](Context& c) { run_generator_case(c, GeneratorCheck::vanishing); }},
        {{"closure.generators_separate", {"orbit-closure.separation"}},
         [](Context& c) { run_generator_case(c, GeneratorCheck::separation); }},
        {{"closure.set_consistency", {"orbit-closure.set_consistency"}},
         [](Context& c) { run_generator_case(c, GeneratorCheck::consistency); }},
        {{"centralizer.regular_abelian", {"centralizer-lab.regular"}}, case_regular},
        {{"centralizer.nilpotent_counts", {"centralizer-lab.nilpotent_counts"}}, case_nilpotent_counts},
        {{"centralizer.offdiagonal_absorption", {"centralizer-lab.offdiagonal"}}, case_offdiagonal},
        {{"centralizer.killing_orthogonality", {"centralizer-lab.killing"}}, case_killing},
        {{"centralizer.dimension_invariance", {"centralizer-lab.invariance"}}, case_centralizer_invariance},
    };
    return cases;
}

CaseResult run_case(const CaseDef& def, const VerifyOptions& opt) {
    Rng rng(derive_seed(opt.seed, def.info.name));
    Checker check;
    Context ctx{opt, rng, check};
    CaseResult result;
    result.name = def.info.name;
    result.covers = def.info.covers;
    try {
        def.run(ctx);
        result.passed = !check.failed();
        result.detail = check.detail();
        result.witness = check.witness();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
        result.witness = json{{"exception", e.what()}};
    }
    result.checks = check.checks();
    return result;
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

json VerificationReport::to_json(bool include_elapsed) const {
    json list = json::array();
    for (const auto& c : cases) {
        json entry{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"checks", c.checks}, {"covers", c.covers}};
        if (!c.passed) {
            entry["detail"] = c.detail;
            entry["witness"] = c.witness;
        }
        list.push_back(std::move(entry));
    }
    json out{{"suite", suite},
             {"seed", options.seed},
             {"n_max", options.n_max},
             {"samples", options.samples},
             {"passed", all_passed()},
             {"cases", std::move(list)}};
    if (include_elapsed) {
        out["elapsed_seconds"] = elapsed_seconds;
    }
    return out;
}

std::vector<std::string> invariant_manifest() {
    return {
        "exact-arith.div_rem",
        "exact-arith.gcd",
        "exact-arith.root_sum",
        "exact-arith.rescale",
        "exact-arith.exactness",
        "minor-gcd.conjugation",
        "minor-gcd.tower",
        "minor-gcd.kernel",
        "minor-gcd.homothety",
        "sheets.nilpotent_classification",
        "sheets.involution",
        "sheets.orbit_dim_bruteforce",
        "sheets.orbit_dim_constant",
        "quotient.section_roundtrip",
        "quotient.reconstruct",
        "quotient.separation",
        "quotient.equivariance",
        "quotient.asymptotic_cone",
        "orbit-closure.order",
        "orbit-closure.antisymmetry",
        "orbit-closure.vanishing",
        "orbit-closure.separation",
        "orbit-closure.set_consistency",
        "centralizer-lab.regular",
        "centralizer-lab.nilpotent_counts",
        "centralizer-lab.offdiagonal",
        "centralizer-lab.killing",
        "centralizer-lab.invariance",
    };
}

std::vector<CaseInfo> suite_cases() {
    std::vector<CaseInfo> out;
    for (const auto& def : registry()) {
        out.push_back(def.info);
    }
    return out;
}

VerificationReport run_verification(const VerifyOptions& options) {
    if (options.n_max == 0 || options.n_max > options.size_limit) {
        throw ResourceGuardError("verify: n_max must be in 1.." + std::to_string(options.size_limit) + ", got " +
                                 std::to_string(options.n_max));
    }
    if (options.symbolic_limit > kSymbolicSizeLimit) {
        throw ResourceGuardError("verify: symbolic checks are limited to n <= " + std::to_string(kSymbolicSizeLimit));
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.options = options;
    const auto& defs = registry();
    if (options.parallel) {
        std::vector<std::future<CaseResult>> futures;
        futures.reserve(defs.size());
        for (const auto& def : defs) {
            futures.push_back(std::async(std::launch::async, [&def, &options] { return run_case(def, options); }));
        }
        for (auto& f : futures) {
            report.cases.push_back(f.get());
        }
    } else {
        for (const auto& def : defs) {
            report.cases.push_back(run_case(def, options));
        }
    }
    std::sort(report.cases.begin(), report.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace sheetlab
