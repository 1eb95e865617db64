/**
 * @file hermitian_form.hpp
 * @brief Hermitian symmetric polynomials a(z, zbar) = sum G[alpha][beta] z^alpha zbar^beta
 * stored as a dense Gram matrix over the monomials actually present.
 *
 * The Gram matrix is Hermitian, G[beta][alpha] = conj(G[alpha][beta]), and rows
 * (equivalently columns) that vanish are pruned, so two forms are equal exactly
 * when their bases and Gram matrices agree entrywise.
 *
 * For a map F the norm ||F||^2 = sum_k |F_k|^2 has G[alpha][beta] =
 * sum_k c_{k,alpha} conj(c_{k,beta}) where c_{k,alpha} is the coefficient of
 * z^alpha in F_k.
 */
#pragma once

#include "holo_map.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hsos {

/// Sparse (row monomial, column monomial) -> coefficient view of a form.
using FormTerms = std::map<std::pair<Monomial, Monomial>, GaussianRational>;

class HermitianForm {
public:
    HermitianForm() = default;
    explicit HermitianForm(std::size_t n) : n_(n) {}

    /// Builds a form from sparse coefficients. Throws if the coefficients are
    /// not Hermitian symmetric or monomials have the wrong variable count.
    static HermitianForm from_terms(std::size_t n, const FormTerms& terms)
    {
        HermitianForm a(n);
        std::vector<Monomial> support;
        for (auto& [key, c] : terms) {
            if (c.is_zero())
                continue;
            if (key.first.nvars() != n || key.second.nvars() != n)
                throw std::invalid_argument("form monomial has wrong variable count");
            auto it = terms.find({key.second, key.first});
            if (it == terms.end() || !(it->second == c.conj()))
                throw std::invalid_argument("coefficients are not Hermitian symmetric");
            support.push_back(key.first);
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        a.basis_ = std::move(support);
        const std::size_t k = a.basis_.size();
        a.gram_.assign(k * k, GaussianRational());
        for (auto& [key, c] : terms) {
            if (c.is_zero())
                continue;
            a.gram_[a.index_of(key.first) * k + a.index_of(key.second)] = c;
        }
        return a;
    }

    /// Form on an explicit basis with a dense row-major Gram matrix. Zero rows
    /// are pruned and the basis is re-sorted.
    static HermitianForm from_gram(std::size_t n, std::span<const Monomial> basis,
                                   std::span<const GaussianRational> gram)
    {
        const std::size_t k = basis.size();
        if (gram.size() != k * k)
            throw std::invalid_argument("Gram matrix size does not match basis");
        FormTerms t;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (!gram[i * k + j].is_zero())
                    t[{basis[i], basis[j]}] += gram[i * k + j];
        return from_terms(n, t);
    }

    static HermitianForm constant(std::size_t n, const Rational& c)
    {
        FormTerms t;
        t[{Monomial::one(n), Monomial::one(n)}] = GaussianRational(c);
        return from_terms(n, t);
    }

    std::size_t nvars() const { return n_; }
    std::size_t size() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const GaussianRational& gram(std::size_t i, std::size_t j) const { return gram_[i * basis_.size() + j]; }
    std::span<const GaussianRational> gram_data() const { return gram_; }

    GaussianRational coefficient(const Monomial& alpha, const Monomial& beta) const
    {
        auto i = find(alpha), j = find(beta);
        if (!i || !j)
            return {};
        return gram(*i, *j);
    }

    std::optional<std::size_t> find(const Monomial& m) const
    {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), m);
        if (it == basis_.end() || !(*it == m))
            return std::nullopt;
        return static_cast<std::size_t>(it - basis_.begin());
    }

    FormTerms terms() const
    {
        FormTerms t;
        const std::size_t k = basis_.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (!gram(i, j).is_zero())
                    t.emplace(std::pair{basis_[i], basis_[j]}, gram(i, j));
        return t;
    }

    /// Largest basis degree; -1 for the zero form.
    long degree() const { return basis_.empty() ? -1 : basis_.back().degree(); }

    /// Every basis monomial has the same degree.
    bool is_bihomogeneous() const
    {
        return basis_.empty() || basis_.front().degree() == basis_.back().degree();
    }

    /// Every nonzero coefficient sits on the diagonal.
    bool is_diagonal() const
    {
        const std::size_t k = basis_.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i != j && !gram(i, j).is_zero())
                    return false;
        return true;
    }

    bool is_hermitian() const
    {
        const std::size_t k = basis_.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j)
                if (!(gram(j, i) == gram(i, j).conj()))
                    return false;
        return true;
    }

    /// a(z, zbar); the imaginary part of the result is always zero.
    GaussianRational evaluate(std::span<const GaussianRational> z) const
    {
        if (z.size() != n_)
            throw std::invalid_argument("evaluation point has wrong dimension");
        std::vector<GaussianRational> w;
        w.reserve(basis_.size());
        for (auto& m : basis_)
            w.push_back(HoloPoly::monomial(m).evaluate(z));
        GaussianRational sum;
        const std::size_t k = basis_.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (!gram(i, j).is_zero())
                    sum += gram(i, j) * w[i] * w[j].conj();
        return sum;
    }

    HermitianForm& operator+=(const HermitianForm& o) { return *this = combine(*this, o, 1); }
    HermitianForm& operator-=(const HermitianForm& o) { return *this = combine(*this, o, -1); }
    friend HermitianForm operator+(const HermitianForm& a, const HermitianForm& b) { return combine(a, b, 1); }
    friend HermitianForm operator-(const HermitianForm& a, const HermitianForm& b) { return combine(a, b, -1); }

    friend HermitianForm operator*(const Rational& s, const HermitianForm& a)
    {
        FormTerms t = a.terms();
        for (auto& [key, c] : t)
            c *= GaussianRational(s);
        return from_terms(a.n_, t);
    }

    friend bool operator==(const HermitianForm& a, const HermitianForm& b)
    {
        return a.n_ == b.n_ && a.basis_ == b.basis_ && a.gram_ == b.gram_;
    }

    friend std::ostream& operator<<(std::ostream& os, const HermitianForm& a)
    {
        if (a.is_zero())
            return os << "0";
        bool first = true;
        for (auto& [key, c] : a.terms()) {
            if (!first)
                os << " + ";
            first = false;
            os << c << "*[" << key.first << "][" << key.second << "]~";
        }
        return os;
    }

private:
    std::size_t index_of(const Monomial& m) const { return *find(m); }

    static HermitianForm combine(const HermitianForm& a, const HermitianForm& b, long sign)
    {
        detail::require_same_nvars(a.n_, b.n_);
        FormTerms t = a.terms();
        for (auto& [key, c] : b.terms())
            t[key] += sign > 0 ? c : -c;
        return from_terms(a.n_, t);
    }

    std::size_t n_ = 0;
    std::vector<Monomial> basis_;
    std::vector<GaussianRational> gram_;
};

/// ||F||^2 = sum_k |F_k(z)|^2.
inline HermitianForm norm_form(const HoloMap& f)
{
    FormTerms t;
    for (auto& p : f)
        for (auto& [ma, ca] : p.terms())
            for (auto& [mb, cb] : p.terms())
                t[{ma, mb}] += ca * cb.conj();
    return HermitianForm::from_terms(f.nvars(), t);
}

/// ||z||^2 = |z_1|^2 + ... + |z_n|^2.
inline HermitianForm norm_z(std::size_t n) { return norm_form(HoloMap::identity(n)); }

/// 1 + ||z||^2.
inline HermitianForm one_plus_norm_z(std::size_t n)
{
    return HermitianForm::constant(n, 1) + norm_z(n);
}

/// Product of Hermitian polynomials: (AB)[g][d] = sum over a+a'=g, b+b'=d of A[a][b] B[a'][b'].
inline HermitianForm mul(const HermitianForm& a, const HermitianForm& b)
{
    detail::require_same_nvars(a.nvars(), b.nvars());
    FormTerms t;
    auto ta = a.terms();
    auto tb = b.terms();
    for (auto& [ka, ca] : ta)
        for (auto& [kb, cb] : tb)
            t[{ka.first * kb.first, ka.second * kb.second}] += ca * cb;
    return HermitianForm::from_terms(a.nvars(), t);
}

/// a^t for t >= 1.
inline HermitianForm pow(const HermitianForm& a, int t)
{
    if (t < 1)
        throw std::invalid_argument("form power must be at least 1");
    HermitianForm out = a;
    for (int i = 1; i < t; ++i)
        out = mul(out, a);
    return out;
}

/// One-variable diagonal form sum_k coeffs[k] |z|^{2k}.
inline HermitianForm diagonal_form_1d(std::span<const Rational> coeffs)
{
    FormTerms t;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial m({static_cast<int>(k)});
        t[{m, m}] = GaussianRational(coeffs[k]);
    }
    return HermitianForm::from_terms(1, t);
}

/// |Z_0|^{2d} a(Z~/Z_0, conj(Z~/Z_0)) in variables (Z_0, Z_1..Z_n).
inline HermitianForm homogenize_form(const HermitianForm& a, long d)
{
    if (d < a.degree())
        throw std::invalid_argument("homogenization degree below form degree");
    const std::size_t n = a.nvars();
    auto lift = [&](const Monomial& m) {
        std::vector<int> e;
        e.reserve(n + 1);
        e.push_back(static_cast<int>(d - m.degree()));
        e.insert(e.end(), m.exponents().begin(), m.exponents().end());
        return Monomial(std::move(e));
    };
    FormTerms t;
    for (auto& [key, c] : a.terms())
        t[{lift(key.first), lift(key.second)}] = c;
    return HermitianForm::from_terms(n + 1, t);
}

/// Substitutes Z = (1, z). Requires a bihomogeneous form.
inline HermitianForm dehomogenize_form(const HermitianForm& big)
{
    if (big.nvars() == 0 || !big.is_bihomogeneous())
        throw std::invalid_argument("dehomogenize: form is not bihomogeneous");
    const std::size_t n = big.nvars() - 1;
    auto drop = [](const Monomial& m) {
        return Monomial(std::vector<int>(m.exponents().begin() + 1, m.exponents().end()));
    };
    FormTerms t;
    for (auto& [key, c] : big.terms())
        t[{drop(key.first), drop(key.second)}] += c;
    return HermitianForm::from_terms(n, t);
}

} // namespace hsos
