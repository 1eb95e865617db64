/**
 * @file scaled_map.hpp
 * @brief Maps h = (sqrt(r_1) p_1, ..., sqrt(r_m) p_m) with r_k positive rational.
 *
 * Square roots are never taken; ||h||^2 = sum_k r_k |p_k|^2 stays rational.
 */
#pragma once

#include "hermitian_form.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace hsos {

class ScaledMap {
public:
    struct Component {
        Rational scale;
        HoloPoly poly;

        friend bool operator==(const Component&, const Component&) = default;
    };

    ScaledMap() = default;
    explicit ScaledMap(std::size_t n) : n_(n) {}

    /// Unit scales.
    ScaledMap(const HoloMap& f) : n_(f.nvars())
    {
        for (auto& p : f)
            comps_.push_back({Rational(1), p});
    }

    std::size_t nvars() const { return n_; }
    std::size_t size() const { return comps_.size(); }
    bool empty() const { return comps_.empty(); }
    const Component& operator[](std::size_t i) const { return comps_[i]; }
    auto begin() const { return comps_.begin(); }
    auto end() const { return comps_.end(); }

    void push_back(Rational scale, HoloPoly poly)
    {
        if (sgn(scale) <= 0)
            throw std::invalid_argument("scaled map component needs a positive scale");
        if (poly.nvars() != n_)
            throw std::invalid_argument("scaled map component has wrong variable count");
        comps_.push_back({std::move(scale), std::move(poly)});
    }

    /// The unscaled polynomials (p_1, ..., p_m); they span the same space as h.
    HoloMap polys() const
    {
        HoloMap out(n_);
        for (auto& c : comps_)
            out.push_back(c.poly);
        return out;
    }

    bool vanishes_at_origin() const { return polys().vanishes_at_origin(); }

    friend bool operator==(const ScaledMap&, const ScaledMap&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ScaledMap& h)
    {
        os << "(";
        for (std::size_t i = 0; i < h.comps_.size(); ++i) {
            os << (i ? ", " : "");
            if (h.comps_[i].scale != 1)
                os << "sqrt(" << h.comps_[i].scale << ")*";
            os << "[" << h.comps_[i].poly << "]";
        }
        return os << ")";
    }

private:
    std::size_t n_ = 0;
    std::vector<Component> comps_;
};

/// ||h||^2 = sum_k r_k |p_k(z)|^2.
inline HermitianForm norm_form(const ScaledMap& h)
{
    FormTerms t;
    for (auto& [r, p] : h)
        for (auto& [ma, ca] : p.terms())
            for (auto& [mb, cb] : p.terms())
                t[{ma, mb}] += GaussianRational(r) * ca * cb.conj();
    return HermitianForm::from_terms(h.nvars(), t);
}

} // namespace hsos
