/**
 * @file rank.hpp
 * @brief Exact rank, inertia and sum-of-squares extraction for Hermitian forms.
 *
 * Everything here runs on Wedderburn rank-one reductions of the Gram matrix:
 * for a vector y with delta = y* W y != 0,
 *
 *     W  <-  W - (W y)(W y)* / delta
 *
 * lowers the rank by exactly one and splits off the square delta |p|^2 with
 * p = sum_alpha (W y / delta)_alpha z^alpha. Using y = e_s on a nonzero
 * diagonal entry gives the usual LDL* step; when the remaining diagonal is
 * zero but W_ij != 0, y = e_i + conj(W_ij) e_j gives delta = 2 |W_ij|^2 > 0.
 * The signs of the deltas are the inertia (Sylvester's law).
 */
#pragma once

#include "scaled_map.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hsos {

/// Counts (p, q) of positive and negative squares.
struct Inertia {
    std::size_t pos = 0;
    std::size_t neg = 0;

    std::size_t rank() const { return pos + neg; }
    bool is_sos() const { return neg == 0; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Inertia& i)
    {
        return os << "(" << i.pos << "," << i.neg << ")";
    }
};

/// Which nonzero diagonal entry a reduction step pivots on.
enum class PivotOrder { first, last };

/// A = sum_k delta_k u_k u_k* over the form's basis.
struct Diagonalization {
    struct Pivot {
        Rational delta;
        std::vector<GaussianRational> u;
    };
    std::size_t nvars = 0;
    std::vector<Monomial> basis;
    std::vector<Pivot> pivots;
};

class NotSosError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Diagonalization diagonalize(const HermitianForm& a, PivotOrder order = PivotOrder::first)
{
    const std::size_t k = a.size();
    std::vector<GaussianRational> w(a.gram_data().begin(), a.gram_data().end());
    auto at = [&](std::size_t i, std::size_t j) -> GaussianRational& { return w[i * k + j]; };

    Diagonalization out{a.nvars(), a.basis(), {}};
    std::vector<GaussianRational> wy(k);
    for (;;) {
        // pivot vector y; wy = W y, delta = y* W y
        std::optional<std::size_t> diag;
        for (std::size_t s = 0; s < k; ++s) {
            std::size_t idx = order == PivotOrder::first ? s : k - 1 - s;
            if (!at(idx, idx).is_zero()) {
                diag = idx;
                break;
            }
        }
        Rational delta;
        if (diag) {
            for (std::size_t i = 0; i < k; ++i)
                wy[i] = at(i, *diag);
            delta = at(*diag, *diag).re();
        } else {
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t i = 0; i < k && !off; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (!at(i, j).is_zero()) {
                        off = {i, j};
                        break;
                    }
            if (!off)
                break;
            auto [i0, j0] = *off;
            GaussianRational t = at(i0, j0).conj();
            for (std::size_t i = 0; i < k; ++i)
                wy[i] = at(i, i0) + at(i, j0) * t;
            delta = 2 * at(i0, j0).norm2();
        }
        GaussianRational inv(Rational(1) / delta);
        for (std::size_t i = 0; i < k; ++i) {
            if (wy[i].is_zero())
                continue;
            GaussianRational wi = wy[i] * inv;
            for (std::size_t j = 0; j < k; ++j)
                if (!wy[j].is_zero())
                    at(i, j) -= wi * wy[j].conj();
        }
        Diagonalization::Pivot pv{delta, {}};
        pv.u.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            pv.u.push_back(wy[i] * inv);
        out.pivots.push_back(std::move(pv));
    }
    return out;
}

inline Inertia inertia(const HermitianForm& a)
{
    Inertia in;
    for (auto& pv : diagonalize(a).pivots)
        (sgn(pv.delta) > 0 ? in.pos : in.neg)++;
    return in;
}

namespace detail {
inline HoloPoly pivot_poly(const Diagonalization& dz, const Diagonalization::Pivot& pv)
{
    HoloPoly p(dz.nvars);
    for (std::size_t i = 0; i < dz.basis.size(); ++i)
        p.add_term(dz.basis[i], pv.u[i]);
    return p;
}
} // namespace detail

/// a = ||pos||^2 - ||neg||^2 with each side's polynomials linearly independent.
inline std::pair<ScaledMap, ScaledMap> signed_decomposition(const HermitianForm& a,
                                                            PivotOrder order = PivotOrder::first)
{
    auto dz = diagonalize(a, order);
    ScaledMap pos(a.nvars()), neg(a.nvars());
    for (auto& pv : dz.pivots) {
        if (sgn(pv.delta) > 0)
            pos.push_back(pv.delta, detail::pivot_poly(dz, pv));
        else
            neg.push_back(-pv.delta, detail::pivot_poly(dz, pv));
    }
    return {std::move(pos), std::move(neg)};
}

/// Writes a PSD form as ||h||^2 with rank(a) components. Throws NotSosError
/// when a has a negative square.
inline ScaledMap extract_sos(const HermitianForm& a, PivotOrder order = PivotOrder::first)
{
    auto [pos, neg] = signed_decomposition(a, order);
    if (!neg.empty())
        throw NotSosError("form is not a sum of squares: inertia has " + std::to_string(neg.size()) +
                          " negative square(s)");
    return pos;
}

/// A basis of the span of F's components together with its dimension.
struct Reduction {
    HoloMap basis;
    std::size_t rank = 0;
};

/// Row reduction of F's coefficient matrix; the result is in reduced echelon
/// form with pivot coefficient 1 on the graded-largest monomial.
inline Reduction reduce_minimal(const HoloMap& f)
{
    std::vector<Monomial> cols;
    for (auto& p : f)
        for (auto& [m, c] : p.terms())
            cols.push_back(m);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::reverse(cols.begin(), cols.end());
    const std::size_t nc = cols.size();

    std::vector<std::vector<GaussianRational>> rows;
    for (auto& p : f) {
        std::vector<GaussianRational> r(nc);
        for (std::size_t j = 0; j < nc; ++j)
            r[j] = p.coefficient(cols[j]);
        rows.push_back(std::move(r));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero())
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        GaussianRational inv = GaussianRational(1) / rows[rank][col];
        for (std::size_t j = col; j < nc; ++j)
            rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero())
                continue;
            GaussianRational factor = rows[i][col];
            for (std::size_t j = col; j < nc; ++j)
                if (!rows[rank][j].is_zero())
                    rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }

    Reduction out{HoloMap(f.nvars()), rank};
    for (std::size_t i = 0; i < rank; ++i) {
        HoloPoly p(f.nvars());
        for (std::size_t j = 0; j < nc; ++j)
            p.add_term(cols[j], rows[i][j]);
        out.basis.push_back(std::move(p));
    }
    return out;
}

/// Components linearly independent (image spans the target).
inline bool is_minimal(const HoloMap& f) { return reduce_minimal(f).rank == f.size(); }
inline bool is_minimal(const ScaledMap& h) { return is_minimal(h.polys()); }

/// ||F||^2 == ||G||^2 as Hermitian forms. For minimal F and G this is the
/// criterion for G = U F with U unitary.
template <class F, class G>
bool grams_equal(const F& f, const G& g)
{
    return norm_form(f) == norm_form(g);
}

/// Result of writing a = 1 + ||h||^2.
struct AffineSplit {
    bool ok = false;
    std::size_t m = 0;
    /// a - 1; meaningful only when ok.
    HermitianForm rest;
};

/// Checks that a = 1 + (PSD form with no constant or pure terms) and reports
/// the rank of that form.
inline AffineSplit affine_split(const HermitianForm& a)
{
    AffineSplit out;
    const std::size_t n = a.nvars();
    const Monomial one = Monomial::one(n);
    if (a.coefficient(one, one) != GaussianRational(1))
        return out;
    for (auto& m : a.basis())
        if (!(m == one) && !a.coefficient(one, m).is_zero())
            return out;
    out.rest = a - HermitianForm::constant(n, 1);
    Inertia in = inertia(out.rest);
    out.m = in.pos;
    out.ok = in.neg == 0;
    return out;
}

} // namespace hsos
