/**
 * @file bounds.hpp
 * @brief Rank bounds and gap predictions for sums of squares arising from
 * 1-modifications and rational modifications of the Fubini-Study metric,
 * as checkable predicates on plain integers.
 *
 * Predicates never compute ranks themselves. Every check is reduced to
 * lower <= observed <= upper on a single observed integer so that a report
 * can audit library output and external data alike.
 */
#pragma once

#include "holo_map.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hsos {

using Integer = mpz_class;

/// C(n, k) exactly.
inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// sum_{k=1}^t C(p+k-1, k): monomials of degree 1..t in p variables.
inline Integer binomial_sum(long p, long t)
{
    Integer s = 0;
    for (long k = 1; k <= t; ++k)
        s += binomial(p + k - 1, k);
    return s;
}

struct BoundReport {
    std::string theorem;
    std::vector<std::pair<std::string, long>> inputs;
    long observed = 0;
    Integer lower;
    std::optional<Integer> upper;
    bool satisfied = false;

    friend std::ostream& operator<<(std::ostream& os, const BoundReport& r)
    {
        os << r.theorem << ":";
        for (auto& [k, v] : r.inputs)
            os << " " << k << "=" << v;
        os << " bounds=[" << r.lower << ",";
        if (r.upper)
            os << *r.upper;
        else
            os << "inf";
        return os << "] " << (r.satisfied ? "satisfied" : "violated");
    }
};

namespace detail {

inline void require_positive(std::initializer_list<long> values)
{
    for (long v : values)
        if (v < 1)
            throw std::invalid_argument("bound inputs must be positive");
}

inline BoundReport make_report(std::string id, std::vector<std::pair<std::string, long>> inputs, long observed,
                               Integer lower, std::optional<Integer> upper)
{
    BoundReport r{std::move(id), std::move(inputs), observed, std::move(lower), std::move(upper), false};
    r.satisfied = r.lower <= observed && (!r.upper || observed <= *r.upper);
    return r;
}

/// Smallest m >= 1 with binomial_sum(m, a) >= target. The sum is strictly
/// increasing in m, so "sum >= target" is equivalent to "m >= result".
inline Integer min_m_for_power_sum(const Integer& target, long a)
{
    if (target <= binomial_sum(1, a))
        return 1;
    long lo = 1, hi = 2;
    while (binomial_sum(hi, a) < target)
        hi *= 2;
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        (binomial_sum(mid, a) >= target ? hi : lo) = mid;
    }
    return hi;
}

} // namespace detail

/// Rank m of h for a 1-modification by a minimal f with d components.
/// d <= n: n(d+1) - d(d-1)/2 <= m <= n(d+1) + d; d >= n: m >= max(n(n+3)/2, d).
inline BoundReport check_thm_main0(long n, long d, long m)
{
    detail::require_positive({n, d, m});
    std::vector<std::pair<std::string, long>> in{{"n", n}, {"d", d}, {"m", m}};
    if (d <= n)
        return detail::make_report("thm1.1", std::move(in), m, Integer(n * (d + 1) - d * (d - 1) / 2),
                                   Integer(n * (d + 1) + d));
    return detail::make_report("thm1.1", std::move(in), m, Integer(std::max(n * (n + 3) / 2, d)), std::nullopt);
}

/// Open gap intervals (lo, hi) of ranks m that no 1-modification realizes:
/// (0, 2n) followed by (n(k+1)+k, n(k+2) - k(k+1)/2) for k = 1, 2, ... while
/// the interval contains an integer.
inline std::vector<std::pair<long, long>> gap_intervals(long n)
{
    detail::require_positive({n});
    std::vector<std::pair<long, long>> out;
    for (long k = 0;; ++k) {
        long lo = k == 0 ? 0 : n * (k + 1) + k;
        long hi = n * (k + 2) - k * (k + 1) / 2;
        if (lo + 1 > hi - 1)
            break;
        out.emplace_back(lo, hi);
    }
    return out;
}

/// The gap interval strictly containing m, if any.
inline std::optional<std::pair<long, long>> gap_containing(long n, long m)
{
    for (auto [lo, hi] : gap_intervals(n))
        if (lo < m && m < hi)
            return std::pair{lo, hi};
    return std::nullopt;
}

/// Gap exclusion as a band report: the admissible ranks are the union of the
/// bands [n(d+1) - d(d-1)/2, n(d+1) + d] for d = 1..n and [n(n+3)/2, inf).
/// The report carries the band containing m, or the nearest band below m
/// (the first band when m lies below all of them).
inline BoundReport check_cor_gap(long n, long m)
{
    detail::require_positive({n, m});
    std::vector<std::pair<std::string, long>> in{{"n", n}, {"m", m}};
    std::optional<std::pair<long, std::optional<long>>> below;
    for (long d = 1; d <= n + 1; ++d) {
        long lo = d <= n ? n * (d + 1) - d * (d - 1) / 2 : n * (n + 3) / 2;
        std::optional<long> hi;
        if (d <= n)
            hi = n * (d + 1) + d;
        if (lo <= m && (!hi || m <= *hi))
            return detail::make_report("cor1.3", std::move(in), m, Integer(lo),
                                       hi ? std::optional<Integer>(*hi) : std::nullopt);
        if (lo <= m)
            below = {lo, hi};
    }
    auto band = below ? *below : std::pair<long, std::optional<long>>{2 * n, 2 * n + 1};
    return detail::make_report("cor1.3", std::move(in), m, Integer(band.first),
                               band.second ? std::optional<Integer>(*band.second) : std::nullopt);
}

/// Rational conformal factors: (1+|z|^2)^b (1+|f|^2)^c = (1+|h|^2)^a with
/// rank((1, f)^{(x)c}) = e + 1. Both cases are rewritten as bounds on m:
/// case (i) (e <= n, b = 1) gives [min m with sum_{k<=a} C(m+k-1,k) >= n(e+1) - e(e-1)/2,
/// floor((n(e+1)+e)/a)]; case (ii) gives [min m with the sum >= n(n+3)/2, inf).
inline BoundReport check_thm_main1(long n, long e, long m, long a, long b)
{
    detail::require_positive({n, e, m, a, b});
    std::vector<std::pair<std::string, long>> in{{"n", n}, {"e", e}, {"m", m}, {"a", a}, {"b", b}};
    if (e <= n && b == 1) {
        Integer lower = detail::min_m_for_power_sum(Integer(n * (e + 1) - e * (e - 1) / 2), a);
        Integer upper = Integer(n * (e + 1) + e) / a;
        return detail::make_report("thm1.4", std::move(in), m, std::move(lower), std::move(upper));
    }
    return detail::make_report("thm1.4", std::move(in), m, detail::min_m_for_power_sum(Integer(n * (n + 3) / 2), a),
                               std::nullopt);
}

/// Rank R of ||Z||^2 A for a bihomogeneous SOS A of rank p in Z_0..Z_n.
/// p <= n+1: (n+1)p - p(p-1)/2 <= R <= p(n+1); p >= n+1: R >= (n+1)(n+2)/2.
inline BoundReport check_prop_grha(long n, long p, long rank)
{
    detail::require_positive({n, p, rank});
    std::vector<std::pair<std::string, long>> in{{"n", n}, {"p", p}, {"R", rank}};
    if (p <= n + 1)
        return detail::make_report("prop2.1", std::move(in), rank, Integer((n + 1) * p - p * (p - 1) / 2),
                                   Integer(p * (n + 1)));
    return detail::make_report("prop2.1", std::move(in), rank, Integer((n + 1) * (n + 2) / 2), std::nullopt);
}

/// Rank r of ||z||^2 a for an SOS a of rank p.
/// p <= n: np - p(p-1)/2 <= r <= pn; p >= n: r >= max(n(n+1)/2, p).
inline BoundReport check_thm_asos(long n, long p, long r)
{
    detail::require_positive({n, p, r});
    std::vector<std::pair<std::string, long>> in{{"n", n}, {"p", p}, {"r", r}};
    if (p <= n)
        return detail::make_report("thm2.2", std::move(in), r, Integer(n * p - p * (p - 1) / 2), Integer(p * n));
    return detail::make_report("thm2.2", std::move(in), r, Integer(std::max(n * (n + 1) / 2, p)), std::nullopt);
}

/// Rank r of h in (1+|z|^2)(1+|f|^2) = 1+|h|^2 for minimal f with p components.
/// p <= n: n(p+1) - p(p-1)/2 <= r <= n(p+1) + p; p >= n: r >= n(n+3)/2.
inline BoundReport check_thm_nonhomo(long n, long p, long r)
{
    detail::require_positive({n, p, r});
    std::vector<std::pair<std::string, long>> in{{"n", n}, {"p", p}, {"r", r}};
    if (p <= n)
        return detail::make_report("thm2.4", std::move(in), r, Integer(n * (p + 1) - p * (p - 1) / 2),
                                   Integer(n * (p + 1) + p));
    return detail::make_report("thm2.4", std::move(in), r, Integer(n * (n + 3) / 2), std::nullopt);
}

/// Rank r of h in (1+|f|^2)^t = 1+|h|^2: tp <= r <= sum_{k<=t} C(p+k-1,k).
inline BoundReport check_prop_power(long p, long t, long r)
{
    detail::require_positive({p, t, r});
    return detail::make_report("prop2.5", {{"p", p}, {"t", t}, {"r", r}}, r, Integer(t * p), binomial_sum(p, t));
}

/// Best lower bound obtainable for a >= 2: n(n+3)/2 <= m + m(m+1)/2. The
/// report's lower end is the least such m.
inline BoundReport check_rem_best_bound(long n, long m)
{
    detail::require_positive({n, m});
    return detail::make_report("rem1.6", {{"n", n}, {"m", m}}, m,
                               detail::min_m_for_power_sum(Integer(n * (n + 3) / 2), 2), std::nullopt);
}

/// Exponents a_1..a_n such that z^alpha -> zeta^{sum a_i alpha_i} is injective
/// on monomials of degree <= t. Collapses the last two variables into one
/// using the two smallest distinct primes >= T + 1 (T the current exponent
/// bound, initially t), then sets T <- T * (larger prime), and repeats.
inline std::vector<long> prime_substitution(long n, long t)
{
    detail::require_positive({n, t});
    auto is_prime = [](long v) {
        if (v < 2)
            return false;
        for (long d = 2; d * d <= v; ++d)
            if (v % d == 0)
                return false;
        return true;
    };
    auto next_prime = [&](long from) {
        while (!is_prime(from))
            ++from;
        return from;
    };

    // groups[i] = exponents of the original variables folded into slot i,
    // relative to that slot's own variable
    std::vector<std::vector<long>> groups;
    for (long i = 0; i < n; ++i)
        groups.push_back({1});
    std::vector<std::vector<long>> members;
    for (long i = 0; i < n; ++i)
        members.push_back({i});

    long bound = t;
    while (groups.size() > 1) {
        long p1 = next_prime(bound + 1);
        long p2 = next_prime(p1 + 1);
        auto last = groups.size() - 1;
        std::vector<long> merged_exp, merged_members;
        for (std::size_t k = 0; k < groups[last - 1].size(); ++k) {
            merged_exp.push_back(groups[last - 1][k] * p1);
            merged_members.push_back(members[last - 1][k]);
        }
        for (std::size_t k = 0; k < groups[last].size(); ++k) {
            merged_exp.push_back(groups[last][k] * p2);
            merged_members.push_back(members[last][k]);
        }
        groups.pop_back();
        members.pop_back();
        groups.back() = std::move(merged_exp);
        members.back() = std::move(merged_members);
        bound *= p2;
    }
    std::vector<long> a(n);
    for (std::size_t k = 0; k < groups[0].size(); ++k)
        a[members[0][k]] = groups[0][k];
    return a;
}

/// True iff sum a_i alpha_i is distinct over all multi-indices |alpha| <= t.
inline bool verify_injective(const std::vector<long>& a, long n, long t)
{
    if (static_cast<long>(a.size()) != n)
        throw std::invalid_argument("exponent vector length must equal n");
    std::vector<long> values;
    for (auto& m : monomials_up_to(static_cast<std::size_t>(n), 0, t)) {
        long v = 0;
        for (long i = 0; i < n; ++i)
            v += a[i] * m[i];
        values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

/// f_i = z_i, i = 1..p (p <= n).
inline HoloMap extremal_lower(long n, long p)
{
    detail::require_positive({n, p});
    if (p > n)
        throw std::invalid_argument("extremal_lower needs p <= n");
    HoloMap f(static_cast<std::size_t>(n));
    for (long i = 0; i < p; ++i)
        f.push_back(HoloPoly::variable(n, i));
    return f;
}

/// f_i = z_1^i, i = 1..p, in n variables.
inline HoloMap extremal_power_lower(long p, long n = 1)
{
    detail::require_positive({p, n});
    HoloMap f(static_cast<std::size_t>(n));
    for (long i = 1; i <= p; ++i) {
        std::vector<int> e(n, 0);
        e[0] = static_cast<int>(i);
        f.push_back(HoloPoly::monomial(Monomial(std::move(e))));
    }
    return f;
}

} // namespace hsos
