/**
 * @file isometry.hpp
 * @brief The sum-of-squares identities behind isometries of modified
 * Fubini-Study metrics:
 *
 *     (1 + ||z||^2)^b (1 + ||f||^2)^c = (1 + ||h||^2)^a,
 *
 * solved for h when a = 1 and verified exactly otherwise, plus the
 * homogeneous division by ||Z||^2 used for rational maps.
 */
#pragma once

#include "bounds.hpp"
#include "rank.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hsos {

class NotVanishingAtOriginError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotMinimalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Data of a c/b-modification with conformal factor a/b on h.
struct ModificationSpec {
    ScaledMap f;
    long a = 1;
    long b = 1;
    long c = 1;
    std::size_t n = 0;

    void validate() const
    {
        if (a < 1 || b < 1 || c < 1)
            throw std::invalid_argument("a, b, c must be positive");
        if (std::gcd(std::gcd(a, b), c) != 1)
            throw std::invalid_argument("a, b, c share a common prime factor");
        if (f.nvars() != n)
            throw std::invalid_argument("f does not live in the ambient dimension");
        if (!f.vanishes_at_origin())
            throw NotVanishingAtOriginError("f(0) != 0");
        if (!is_minimal(f))
            throw NotMinimalError("components of f are linearly dependent");
    }
};

/// (1 + ||f||^2)^c, with c >= 1.
inline HermitianForm one_plus_norm_power(const ScaledMap& f, long c)
{
    return pow(HermitianForm::constant(f.nvars(), 1) + norm_form(f), static_cast<int>(c));
}

/// (1 + ||z||^2)^b (1 + ||f||^2)^c.
inline HermitianForm modification_form(const ModificationSpec& spec)
{
    spec.validate();
    return mul(pow(one_plus_norm_z(spec.n), static_cast<int>(spec.b)), one_plus_norm_power(spec.f, spec.c));
}

/// The minimal h with (1 + ||z||^2)^b (1 + ||f||^2)^c = 1 + ||h||^2, unique up
/// to a unitary change of components.
inline ScaledMap solve_h(const ScaledMap& f, long b, long c, PivotOrder order = PivotOrder::first)
{
    ModificationSpec spec{f, 1, b, c, f.nvars()};
    auto split = affine_split(modification_form(spec));
    if (!split.ok)
        throw std::logic_error("modification form is not of the form 1 + SOS");
    return extract_sos(split.rest, order);
}

/// Exact check of (1 + ||z||^2)^b (1 + ||f||^2)^c = (1 + ||h||^2)^a.
inline bool verify_identity(const ScaledMap& f, const ScaledMap& h, long a, long b, long c)
{
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("a, b, c must be positive");
    if (std::gcd(std::gcd(a, b), c) != 1)
        throw std::invalid_argument("a, b, c share a common prime factor");
    detail::require_same_nvars(f.nvars(), h.nvars());
    auto lhs = mul(pow(one_plus_norm_z(f.nvars()), static_cast<int>(b)), one_plus_norm_power(f, c));
    return lhs == one_plus_norm_power(h, a);
}

/// e with rank((1, f)^{(x)c}) = e + 1, i.e. dim span{f^alpha : 1 <= |alpha| <= c}.
/// Requires f(0) = 0 and f minimal; the result is checked against
/// cd <= e <= sum_{k<=c} C(d+k-1, k).
inline std::size_t tensor_rank_e(const HoloMap& f, long c)
{
    if (c < 1)
        throw std::invalid_argument("tensor power must be positive");
    if (!f.vanishes_at_origin())
        throw NotVanishingAtOriginError("f(0) != 0");
    if (!is_minimal(f))
        throw NotMinimalError("components of f are linearly dependent");
    const std::size_t d = f.size();

    // products f^alpha with nondecreasing index sequences, one degree at a time
    struct Product {
        HoloPoly value;
        std::size_t last;
    };
    std::vector<Product> layer;
    for (std::size_t j = 0; j < d; ++j)
        layer.push_back({f[j], j});
    HoloMap all(f.nvars());
    for (long k = 1; k <= c; ++k) {
        for (auto& p : layer)
            all.push_back(p.value);
        if (k == c)
            break;
        std::vector<Product> next;
        for (auto& p : layer)
            for (std::size_t j = p.last; j < d; ++j)
                next.push_back({p.value * f[j], j});
        layer = std::move(next);
    }
    std::size_t e = reduce_minimal(all).rank;

    const long dl = static_cast<long>(d);
    if (Integer(static_cast<long>(e)) < c * dl || Integer(static_cast<long>(e)) > binomial_sum(dl, c))
        throw std::logic_error("tensor rank outside [cd, sum C(d+k-1,k)]");
    return e;
}

/// R with ||Z||^2 R = S for a bihomogeneous S, or nothing when ||Z||^2 does
/// not divide S. Coefficientwise S[alpha][beta] = sum_j R[alpha - e_j][beta - e_j];
/// the system splits by alpha - beta and each block is solved exactly.
inline std::optional<HermitianForm> divide_by_norm(const HermitianForm& s)
{
    if (!s.is_bihomogeneous())
        throw std::invalid_argument("divide_by_norm: form is not bihomogeneous");
    const std::size_t n = s.nvars();
    if (s.is_zero())
        return HermitianForm(n);
    const long deg = s.degree();
    if (deg == 0)
        return std::nullopt;

    auto rmons = monomials_up_to(n, deg - 1, deg - 1);
    auto smons = monomials_up_to(n, deg, deg);
    auto diff = [n](const Monomial& x, const Monomial& y) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = x[i] - y[i];
        return v;
    };

    struct Block {
        std::vector<std::pair<std::size_t, std::size_t>> unknowns; // indices into rmons
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> column;
        std::vector<std::pair<std::size_t, std::size_t>> equations; // indices into smons
    };
    std::map<std::vector<int>, Block> blocks;
    for (std::size_t i = 0; i < rmons.size(); ++i)
        for (std::size_t j = 0; j < rmons.size(); ++j) {
            auto& blk = blocks[diff(rmons[i], rmons[j])];
            blk.column[{i, j}] = blk.unknowns.size();
            blk.unknowns.emplace_back(i, j);
        }
    for (std::size_t i = 0; i < smons.size(); ++i)
        for (std::size_t j = 0; j < smons.size(); ++j)
            blocks[diff(smons[i], smons[j])].equations.emplace_back(i, j);

    std::map<Monomial, std::size_t> rindex;
    for (std::size_t i = 0; i < rmons.size(); ++i)
        rindex.emplace(rmons[i], i);

    FormTerms result;
    for (auto& [v, blk] : blocks) {
        const std::size_t nu = blk.unknowns.size();
        std::vector<std::vector<GaussianRational>> rows;
        for (auto [ia, ib] : blk.equations) {
            std::vector<GaussianRational> row(nu + 1);
            const Monomial& alpha = smons[ia];
            const Monomial& beta = smons[ib];
            for (std::size_t jv = 0; jv < n; ++jv) {
                if (alpha[jv] == 0 || beta[jv] == 0)
                    continue;
                auto lower = [&](const Monomial& m) {
                    std::vector<int> e = m.exponents();
                    --e[jv];
                    return rindex.at(Monomial(std::move(e)));
                };
                row[blk.column.at({lower(alpha), lower(beta)})] += 1;
            }
            row[nu] = s.coefficient(alpha, beta);
            rows.push_back(std::move(row));
        }

        // reduced echelon form of the augmented system
        std::vector<std::size_t> pivot_cols;
        std::size_t r = 0;
        for (std::size_t col = 0; col < nu && r < rows.size(); ++col) {
            std::size_t piv = r;
            while (piv < rows.size() && rows[piv][col].is_zero())
                ++piv;
            if (piv == rows.size())
                continue;
            std::swap(rows[piv], rows[r]);
            GaussianRational inv = GaussianRational(1) / rows[r][col];
            for (std::size_t j = col; j <= nu; ++j)
                rows[r][j] *= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][col].is_zero())
                    continue;
                GaussianRational factor = rows[i][col];
                for (std::size_t j = col; j <= nu; ++j)
                    if (!rows[r][j].is_zero())
                        rows[i][j] -= factor * rows[r][j];
            }
            pivot_cols.push_back(col);
            ++r;
        }
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][nu].is_zero())
                return std::nullopt;
        // ||Z||^2 is not a zero divisor, so every unknown is a pivot
        if (r != nu)
            throw std::logic_error("divide_by_norm: deconvolution system is singular");
        for (std::size_t i = 0; i < r; ++i) {
            auto [ia, ib] = blk.unknowns[pivot_cols[i]];
            if (!rows[i][nu].is_zero())
                result[{rmons[ia], rmons[ib]}] = rows[i][nu];
        }
    }
    return HermitianForm::from_terms(n, result);
}

/// R_lambda = (1 + |z|^2)^4 - lambda |z|^4 = 1 + 4|z|^2 + (6 - lambda)|z|^4 + 4|z|^6 + |z|^8.
inline HermitianForm r_lambda(const Rational& lambda)
{
    std::vector<Rational> c{1, 4, Rational(6 - lambda), 4, 1};
    return diagonal_form_1d(c);
}

} // namespace hsos
