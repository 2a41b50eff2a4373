#include "sheetlab/sampling.hpp"

#include <map>
#include <stdexcept>

namespace sheetlab {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) {
        throw std::invalid_argument("Rng::uniform: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

long Rng::nonzero(long lo, long hi) {
    while (true) {
        const long v = uniform(lo, hi);
        if (v != 0) {
            return v;
        }
    }
}

Rational Rng::small_rational(long bound) { return {uniform(-bound, bound), uniform(1, 3)}; }

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    // FNV-1a over the label, then a splitmix64 finalizer.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

Conjugator random_conjugator(std::size_t n, Rng& rng) {
    RationalMatrix g = RationalMatrix::identity(n);
    RationalMatrix g_inv = RationalMatrix::identity(n);
    if (n < 2) {
        return {g, g_inv};
    }
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
        if (j >= i) {
            ++j;
        }
        const Rational a(rng.nonzero(-3, 3));
        RationalMatrix e = RationalMatrix::identity(n);
        e(i, j) = a;
        RationalMatrix e_inv = RationalMatrix::identity(n);
        e_inv(i, j) = -a;
        g = g * e;
        g_inv = e_inv * g_inv;
    }
    return {g, g_inv};
}

RationalMatrix random_conjugate(const RationalMatrix& x, Rng& rng) {
    const auto c = random_conjugator(x.size(), rng);
    return conjugate_by(c.g, c.g_inv, x);
}

QuotientPoint random_quotient_point(const Partition& sigma, Rng& rng) {
    std::vector<Rational> chart(static_cast<std::size_t>(sigma.part(1)) - 1);
    for (auto& c : chart) {
        c = rng.small_rational();
    }
    return QuotientPoint::from_chart(sigma, chart);
}

RationalMatrix random_sheet_sample(const Partition& sigma, Rng& rng) {
    return random_conjugate(section(random_quotient_point(sigma, rng)), rng);
}

SplitPoint random_split_point(const Partition& sigma, Rng& rng) {
    const auto n = static_cast<std::size_t>(sigma.total());
    const std::size_t k = eliminated_index(sigma);
    std::vector<std::vector<Rational>> roots(n);
    Rational weighted;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t d = quotient_degree(sigma, i);
        for (std::size_t r = 0; r < d; ++r) {
            if (i == k && r + 1 == d) {
                continue;
            }
            // Few distinct values so eigenvalues repeat across p_i.
            roots[i - 1].emplace_back(rng.uniform(-2, 2));
            weighted += Rational(static_cast<long>(i)) * roots[i - 1].back();
        }
    }
    if (k != 0) {
        roots[k - 1].push_back(-weighted / Rational(static_cast<long>(k)));
    }

    std::vector<UniPoly> p;
    for (const auto& rs : roots) {
        UniPoly f = UniPoly::constant(1);
        for (const auto& r : rs) {
            f *= UniPoly::linear_factor(r);
        }
        p.push_back(std::move(f));
    }

    // Multiplicity of lambda in q_i = sum_{j >= i} multiplicity in p_j.
    std::map<Rational, std::vector<int>> mult;
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& r : roots[j]) {
            auto& m = mult[r];
            m.resize(n, 0);
            for (std::size_t i = 0; i <= j; ++i) {
                ++m[i];
            }
        }
    }
    std::vector<EigenBlock> jordan;
    for (auto& [lambda, m] : mult) {
        std::vector<int> parts;
        for (int v : m) {
            if (v > 0) {
                parts.push_back(v);
            }
        }
        jordan.push_back({lambda, Partition(parts)});
    }
    return {QuotientPoint(sigma, std::move(p)), std::move(jordan)};
}

RationalMatrix jordan_matrix(const std::vector<EigenBlock>& jordan) {
    std::size_t n = 0;
    for (const auto& e : jordan) {
        n += static_cast<std::size_t>(e.blocks.total());
    }
    RationalMatrix m(n, Ambient::gl);
    std::size_t offset = 0;
    for (const auto& e : jordan) {
        for (int b : e.blocks.parts()) {
            for (int k = 0; k < b; ++k) {
                const std::size_t r = offset + static_cast<std::size_t>(k);
                m(r, r) = e.eigenvalue;
                if (k + 1 < b) {
                    m(r, r + 1) = 1;
                }
            }
            offset += static_cast<std::size_t>(b);
        }
    }
    return m;
}

std::vector<std::vector<EigenBlock>> jordan_degenerations(const std::vector<EigenBlock>& jordan, bool dominated) {
    std::vector<std::vector<EigenBlock>> out;
    if (dominated) {
        out.push_back({});
        for (const auto& e : jordan) {
            std::vector<std::vector<EigenBlock>> next;
            for (const auto& prefix : out) {
                for (const auto& tau : partitions_of(e.blocks.total())) {
                    if (dominates(e.blocks, tau)) {
                        auto extended = prefix;
                        extended.push_back({e.eigenvalue, tau});
                        next.push_back(std::move(extended));
                    }
                }
            }
            out = std::move(next);
        }
        return out;
    }
    for (std::size_t idx = 0; idx < jordan.size(); ++idx) {
        for (const auto& tau : partitions_of(jordan[idx].blocks.total())) {
            if (!dominates(jordan[idx].blocks, tau)) {
                auto changed = jordan;
                changed[idx].blocks = tau;
                out.push_back(std::move(changed));
            }
        }
    }
    return out;
}

}  // namespace sheetlab
