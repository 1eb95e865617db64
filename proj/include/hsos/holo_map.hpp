/**
 * @file holo_map.hpp
 * @brief Holomorphic polynomials and polynomial maps over the Gaussian
 * rationals, together with the map-level constructions used throughout
 * the library (direct sum, tensor product, homogenization, truncation and
 * monomial substitution).
 */
#pragma once

#include "gaussian_rational.hpp"
#include "monomial.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hsos {

/// Sparse polynomial sum c_alpha z^alpha; zero coefficients are never stored.
class HoloPoly {
public:
    using Terms = std::map<Monomial, GaussianRational>;

    HoloPoly() = default;
    explicit HoloPoly(std::size_t n) : n_(n) {}

    HoloPoly(std::size_t n, std::initializer_list<std::pair<std::vector<int>, GaussianRational>> terms)
        : n_(n)
    {
        for (auto& [e, c] : terms)
            add_term(Monomial(e), c);
    }

    static HoloPoly constant(std::size_t n, GaussianRational c)
    {
        HoloPoly p(n);
        p.add_term(Monomial::one(n), std::move(c));
        return p;
    }
    static HoloPoly variable(std::size_t n, std::size_t i)
    {
        HoloPoly p(n);
        p.add_term(Monomial::variable(n, i), 1);
        return p;
    }
    static HoloPoly monomial(const Monomial& m, GaussianRational c = 1)
    {
        HoloPoly p(m.nvars());
        p.add_term(m, std::move(c));
        return p;
    }

    std::size_t nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest term degree; -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    GaussianRational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    GaussianRational constant_term() const { return coefficient(Monomial::one(n_)); }

    /// True when every term has the same degree (the zero polynomial counts).
    bool is_homogeneous() const
    {
        return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    void add_term(const Monomial& m, const GaussianRational& c)
    {
        if (m.nvars() != n_)
            throw std::invalid_argument("monomial has wrong variable count");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    HoloPoly& operator+=(const HoloPoly& o)
    {
        check_same(o);
        for (auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    HoloPoly& operator-=(const HoloPoly& o)
    {
        check_same(o);
        for (auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    HoloPoly& operator*=(const GaussianRational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
    friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
    friend HoloPoly operator*(HoloPoly a, const GaussianRational& s) { return a *= s; }
    friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b)
    {
        a.check_same(b);
        HoloPoly out(a.n_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const HoloPoly& a, const HoloPoly& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Value at a point of C^n with Gaussian-rational coordinates.
    GaussianRational evaluate(std::span<const GaussianRational> z) const
    {
        if (z.size() != n_)
            throw std::invalid_argument("evaluation point has wrong dimension");
        GaussianRational sum;
        for (auto& [m, c] : terms_) {
            GaussianRational v = c;
            for (std::size_t i = 0; i < n_; ++i)
                for (int k = 0; k < m[i]; ++k)
                    v *= z[i];
            sum += v;
        }
        return sum;
    }

    friend std::ostream& operator<<(std::ostream& os, const HoloPoly& p)
    {
        if (p.terms_.empty())
            return os << "0";
        bool first = true;
        for (auto& [m, c] : p.terms_) {
            if (!first)
                os << " + ";
            first = false;
            if (m.degree() == 0)
                os << c;
            else if (c == GaussianRational(1))
                os << m;
            else
                os << c << "*" << m;
        }
        return os;
    }

private:
    void check_same(const HoloPoly& o) const
    {
        if (o.n_ != n_)
            throw std::invalid_argument("polynomial variable-count mismatch");
    }

    std::size_t n_ = 0;
    Terms terms_;
};

/// Ordered tuple f = (f_1, ..., f_p) of polynomials in the same n variables.
class HoloMap {
public:
    HoloMap() = default;
    explicit HoloMap(std::size_t n) : n_(n) {}
    HoloMap(std::size_t n, std::vector<HoloPoly> components) : n_(n), comps_(std::move(components))
    {
        for (auto& c : comps_)
            if (c.nvars() != n_)
                throw std::invalid_argument("map component has wrong variable count");
    }

    /// The identity map z = (z_1, ..., z_n).
    static HoloMap identity(std::size_t n)
    {
        HoloMap m(n);
        for (std::size_t i = 0; i < n; ++i)
            m.push_back(HoloPoly::variable(n, i));
        return m;
    }

    std::size_t nvars() const { return n_; }
    std::size_t size() const { return comps_.size(); }
    bool empty() const { return comps_.empty(); }
    const HoloPoly& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<HoloPoly>& components() const { return comps_; }
    auto begin() const { return comps_.begin(); }
    auto end() const { return comps_.end(); }

    void push_back(HoloPoly p)
    {
        if (p.nvars() != n_)
            throw std::invalid_argument("map component has wrong variable count");
        comps_.push_back(std::move(p));
    }

    /// Largest component degree; -1 when every component is zero.
    long degree() const
    {
        long d = -1;
        for (auto& c : comps_)
            d = std::max(d, c.degree());
        return d;
    }

    /// f(0) = 0 componentwise.
    bool vanishes_at_origin() const
    {
        return std::all_of(comps_.begin(), comps_.end(),
                           [](const HoloPoly& p) { return p.constant_term().is_zero(); });
    }

    friend bool operator==(const HoloMap& a, const HoloMap& b)
    {
        return a.n_ == b.n_ && a.comps_ == b.comps_;
    }

    friend std::ostream& operator<<(std::ostream& os, const HoloMap& f)
    {
        os << "(";
        for (std::size_t i = 0; i < f.comps_.size(); ++i)
            os << (i ? ", " : "") << f.comps_[i];
        return os << ")";
    }

private:
    std::size_t n_ = 0;
    std::vector<HoloPoly> comps_;
};

namespace detail {
inline void require_same_nvars(std::size_t a, std::size_t b)
{
    if (a != b)
        throw std::invalid_argument("variable-count mismatch");
}
} // namespace detail

/// F (+) G = (F, G).
inline HoloMap oplus(const HoloMap& f, const HoloMap& g)
{
    detail::require_same_nvars(f.nvars(), g.nvars());
    HoloMap out(f.nvars(), f.components());
    for (auto& c : g)
        out.push_back(c);
    return out;
}

/// F (x) G with components F_i G_j, i outer and j inner.
inline HoloMap tensor(const HoloMap& f, const HoloMap& g)
{
    detail::require_same_nvars(f.nvars(), g.nvars());
    HoloMap out(f.nvars());
    for (auto& fi : f)
        for (auto& gj : g)
            out.push_back(fi * gj);
    return out;
}

/// F tensored with itself k times; k = 0 gives the constant map (1).
inline HoloMap tensor_power(const HoloMap& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative tensor power");
    HoloMap out(f.nvars(), {HoloPoly::constant(f.nvars(), 1)});
    for (int i = 0; i < k; ++i)
        out = tensor(out, f);
    return out;
}

/// (1, f): prepends the constant component.
inline HoloMap with_unit(const HoloMap& f)
{
    return oplus(HoloMap(f.nvars(), {HoloPoly::constant(f.nvars(), 1)}), f);
}

/// Homogenizes each component to degree d in the variables (Z_0, Z_1..Z_n),
/// F_i(Z) = Z_0^d f_i(Z~/Z_0). Z_0 is variable index 0 of the result.
inline HoloMap homogenize_map(const HoloMap& f, long d)
{
    if (d < f.degree())
        throw std::invalid_argument("homogenization degree below map degree");
    const std::size_t n = f.nvars();
    HoloMap out(n + 1);
    for (auto& p : f) {
        HoloPoly q(n + 1);
        for (auto& [m, c] : p.terms()) {
            std::vector<int> e;
            e.reserve(n + 1);
            e.push_back(static_cast<int>(d - m.degree()));
            e.insert(e.end(), m.exponents().begin(), m.exponents().end());
            q.add_term(Monomial(std::move(e)), c);
        }
        out.push_back(std::move(q));
    }
    return out;
}

/// Sets Z_0 = 1. Components must be homogeneous of one common degree.
inline HoloMap dehomogenize_map(const HoloMap& big)
{
    if (big.nvars() == 0)
        throw std::invalid_argument("dehomogenize needs at least one variable");
    std::optional<long> common;
    for (auto& p : big) {
        if (!p.is_homogeneous())
            throw std::invalid_argument("dehomogenize: component is not homogeneous");
        if (p.is_zero())
            continue;
        if (common && *common != p.degree())
            throw std::invalid_argument("dehomogenize: components differ in degree");
        common = p.degree();
    }
    const std::size_t n = big.nvars() - 1;
    HoloMap out(n);
    for (auto& p : big) {
        HoloPoly q(n);
        for (auto& [m, c] : p.terms())
            q.add_term(Monomial(std::vector<int>(m.exponents().begin() + 1, m.exponents().end())), c);
        out.push_back(std::move(q));
    }
    return out;
}

/// Keeps the terms of degree <= d in each component.
inline HoloMap truncate_map(const HoloMap& f, long d)
{
    if (d < 0)
        throw std::invalid_argument("negative truncation degree");
    HoloMap out(f.nvars());
    for (auto& p : f) {
        HoloPoly q(f.nvars());
        for (auto& [m, c] : p.terms())
            if (m.degree() <= d)
                q.add_term(m, c);
        out.push_back(std::move(q));
    }
    return out;
}

/// One-variable map zeta -> f(zeta^{a_1}, ..., zeta^{a_n}).
inline HoloMap substitute_powers(const HoloMap& f, std::span<const long> a)
{
    if (a.size() != f.nvars())
        throw std::invalid_argument("substitution vector length must equal variable count");
    HoloMap out(1);
    for (auto& p : f) {
        HoloPoly q(1);
        for (auto& [m, c] : p.terms()) {
            long e = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                e += a[i] * m[i];
            q.add_term(Monomial({static_cast<int>(e)}), c);
        }
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace hsos
