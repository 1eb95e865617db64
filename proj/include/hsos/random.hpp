/**
 * @file random.hpp
 * @brief Seeded generators for random Gaussian-rational maps.
 *
 * Draws are built from std::mt19937_64 words directly (no standard
 * distributions), so a (seed, stream) pair gives the same maps on every
 * standard library.
 */
#pragma once

#include "rank.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace hsos {

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            throw std::invalid_argument("empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t x = engine_();
            if (x < limit)
                return x % bound;
        }
    }

    /// Uniform in [lo, hi].
    long between(long lo, long hi)
    {
        if (hi < lo)
            throw std::invalid_argument("empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

/// p/q with |p| <= height, 1 <= q <= height.
inline Rational random_rational(Rng& rng, long height)
{
    Rational q(mpz_class(rng.between(-height, height)), mpz_class(rng.between(1, height)));
    q.canonicalize();
    return q;
}

inline GaussianRational random_gaussian(Rng& rng, long height)
{
    for (;;) {
        GaussianRational c(random_rational(rng, height), random_rational(rng, height));
        if (!c.is_zero())
            return c;
    }
}

/// Polynomial in n variables supported on degrees [min_degree, max_degree];
/// each monomial is present with probability 1/2. Never zero.
inline HoloPoly random_poly(Rng& rng, std::size_t n, long min_degree, long max_degree, long height)
{
    auto mons = monomials_up_to(n, min_degree, max_degree);
    if (mons.empty())
        throw std::invalid_argument("no monomials in the requested degree range");
    for (;;) {
        HoloPoly p(n);
        for (auto& m : mons)
            if (rng.coin())
                p.add_term(m, random_gaussian(rng, height));
        if (!p.is_zero())
            return p;
    }
}

/// Minimal map f with f(0) = 0, d components of degree <= max_degree.
/// Dependent draws are discarded and redrawn.
inline HoloMap random_minimal_map(Rng& rng, std::size_t n, std::size_t d, long max_degree, long height)
{
    if (d > monomials_up_to(n, 1, max_degree).size())
        throw std::invalid_argument("too many components for a minimal map of this degree");
    for (;;) {
        HoloMap f(n);
        for (std::size_t k = 0; k < d; ++k)
            f.push_back(random_poly(rng, n, 1, max_degree, height));
        if (is_minimal(f))
            return f;
    }
}

} // namespace hsos
