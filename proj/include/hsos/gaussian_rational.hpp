/**
 * @file gaussian_rational.hpp
 * @brief Exact complex scalars with rational real and imaginary parts.
 */
#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsos {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument on
/// malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](std::string_view part) {
        if (!part.empty() && (part.front() == '-' || part.front() == '+'))
            part.remove_prefix(1);
        if (part.empty())
            return false;
        for (char ch : part)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s))
            throw std::invalid_argument("malformed rational '" + s + "'");
        if (s.front() == '+')
            s.erase(0, 1);
        return Rational(mpz_class(s, 10));
    }
    std::string_view num(s.data(), slash);
    std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Lowest-terms "p" or "p/q".
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// Complex number a + b i with a, b rational.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |c|^2 = re^2 + im^2
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        Rational d = o.norm2();
        if (sgn(d) == 0)
            throw std::domain_error("division by zero Gaussian rational");
        Rational r = (re_ * o.re_ + im_ * o.im_) / d;
        Rational i = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& c)
    {
        if (c.is_real())
            return os << c.re_;
        if (sgn(c.re_) == 0)
            return os << c.im_ << "i";
        os << "(" << c.re_ << (sgn(c.im_) < 0 ? "-" : "+");
        return os << abs(c.im_) << "i)";
    }

private:
    Rational re_;
    Rational im_;
};

} // namespace hsos
