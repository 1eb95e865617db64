/**
 * @file monomial.hpp
 * @brief Exponent vectors z^alpha over a fixed set of variables z_1..z_n.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hsos {

class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents))
    {
        for (int e : exps_)
            if (e < 0)
                throw std::invalid_argument("negative exponent in monomial");
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0L);
    }

    /// The constant monomial 1 in n variables.
    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

    /// z_i (zero-based index).
    static Monomial variable(std::size_t n, std::size_t i)
    {
        std::vector<int> e(n, 0);
        e.at(i) = 1;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return exps_.size(); }
    long degree() const { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        if (a.nvars() != b.nvars())
            throw std::invalid_argument("monomial variable-count mismatch");
        std::vector<int> e(a.exps_);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] += b.exps_[i];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    /// Graded order: lower degree first; within a degree, z_1 before z_2 before ...
    /// (descending lexicographic on the exponent vector).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree_ <=> b.degree_; c != 0)
            return c;
        return b.exps_ <=> a.exps_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m)
    {
        bool any = false;
        for (std::size_t i = 0; i < m.exps_.size(); ++i) {
            if (m.exps_[i] == 0)
                continue;
            if (any)
                os << "*";
            os << "z" << (i + 1);
            if (m.exps_[i] > 1)
                os << "^" << m.exps_[i];
            any = true;
        }
        if (!any)
            os << "1";
        return os;
    }

private:
    std::vector<int> exps_;
    long degree_ = 0;
};

/// All monomials in n variables with degree in [lo, hi], in graded order.
inline std::vector<Monomial> monomials_up_to(std::size_t n, long lo, long hi)
{
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    for (long d = lo; d <= hi; ++d) {
        if (n == 0) {
            if (d == 0)
                out.push_back(Monomial::one(0));
            continue;
        }
        // enumerate exponent vectors of total degree d, z_1 heaviest first
        auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
            if (i + 1 == n) {
                e[i] = static_cast<int>(remaining);
                out.emplace_back(e);
                return;
            }
            for (long k = remaining; k >= 0; --k) {
                e[i] = static_cast<int>(k);
                self(self, i + 1, remaining - k);
            }
        };
        rec(rec, 0, d);
    }
    return out;
}

} // namespace hsos
