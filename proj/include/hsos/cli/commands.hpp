/**
 * @file commands.hpp
 * @brief The hsos command implementations, independent of argument parsing.
 *
 * Exit codes: 0 success, 1 identity/bound/divisibility check failed,
 * 2 parse or precondition failure, 3 f(0) != 0, 4 f not minimal.
 */
#pragma once

#include "../hsos.hpp"
#include "../random.hpp"
#include "document.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace hsos::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
    exit_not_vanishing = 3,
    exit_not_minimal = 4,
};

namespace detail {

inline void print_terms(std::ostream& out, const HermitianForm& a)
{
    out << form_to_json(a).dump() << "\n";
}

/// Coefficients of a one-variable diagonal form on |z|^{0,2,4,...}.
inline std::string diagonal_profile(const HermitianForm& a)
{
    std::ostringstream os;
    os << "(";
    if (a.nvars() == 1 && a.is_diagonal() && !a.is_zero()) {
        for (long k = 0; k <= a.degree(); ++k) {
            Monomial m({static_cast<int>(k)});
            os << (k ? "," : "") << a.coefficient(m, m);
        }
    }
    return os.str() + ")";
}

} // namespace detail

/// rank: for a map, dim span of components, inertia of ||F||^2 and minimality;
/// for a form document, its inertia.
inline int cmd_rank(const std::string& text, std::ostream& out, std::ostream& err)
{
    try {
        json doc = parse_json_text(text);
        if (is_form_document(doc)) {
            auto a = form_from_json(doc);
            auto in = inertia(a);
            out << "rank: " << in.rank() << "\n"
                << "inertia: " << in << "\n"
                << "sos: " << (in.is_sos() ? "true" : "false") << "\n";
            return exit_ok;
        }
        auto f = map_from_json(doc);
        auto red = reduce_minimal(f.polys());
        auto in = inertia(norm_form(f));
        out << "rank: " << red.rank << "\n"
            << "inertia: " << in << "\n"
            << "minimal: " << (red.rank == f.size() ? "true" : "false") << "\n";
        return exit_ok;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

inline int cmd_solve_h(const std::string& text, long b, long c, std::ostream& out, std::ostream& err)
{
    ScaledMap f;
    try {
        f = map_from_json(parse_json_text(text));
        if (b < 1 || c < 1)
            throw ParseError("b and c must be positive");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        auto h = solve_h(f, b, c);
        const long n = static_cast<long>(f.nvars());
        const long d = static_cast<long>(f.size());
        const long m = static_cast<long>(h.size());
        out << "m: " << m << "\n"
            << "h: " << map_to_json(h).dump() << "\n";
        if (n >= 1 && d >= 1 && m >= 1) {
            if (b == 1 && c == 1)
                out << "bounds: " << check_thm_nonhomo(n, d, m) << "\n";
            else
                out << "bounds: "
                    << check_thm_main1(n, static_cast<long>(tensor_rank_e(f.polys(), c)), m, 1, b) << "\n";
        }
        return exit_ok;
    } catch (const NotVanishingAtOriginError& e) {
        err << "error: " << e.what() << "\n";
        return exit_not_vanishing;
    } catch (const NotMinimalError& e) {
        err << "error: " << e.what() << "\n";
        return exit_not_minimal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

inline int cmd_verify(const std::string& f_text, const std::string& h_text, long a, long b, long c,
                      std::ostream& out, std::ostream& err)
{
    try {
        auto f = map_from_json(parse_json_text(f_text));
        auto h = map_from_json(parse_json_text(h_text));
        if (f.nvars() != h.nvars())
            throw ParseError("f and h have different variable counts");
        if (a < 1 || b < 1 || c < 1 || std::gcd(std::gcd(a, b), c) != 1)
            throw ParseError("a, b, c must be positive without a common prime factor");
        if (verify_identity(f, h, a, b, c)) {
            out << "identity: holds\n";
            return exit_ok;
        }
        auto lhs = mul(pow(one_plus_norm_z(f.nvars()), static_cast<int>(b)), one_plus_norm_power(f, c));
        auto rhs = one_plus_norm_power(h, a);
        out << "identity: fails\n"
            << "difference: ";
        detail::print_terms(out, lhs - rhs);
        return exit_mismatch;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

inline int cmd_tensor_rank(const std::string& text, long c, std::ostream& out, std::ostream& err)
{
    HoloMap f;
    try {
        f = map_from_json(parse_json_text(text)).polys();
        if (c < 1)
            throw ParseError("c must be positive");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        auto e = static_cast<long>(tensor_rank_e(f, c));
        out << "e: " << e << "\n";
        if (!f.empty())
            out << "bounds: " << check_prop_power(static_cast<long>(f.size()), c, e) << "\n";
        return exit_ok;
    } catch (const NotVanishingAtOriginError& e) {
        err << "error: " << e.what() << "\n";
        return exit_not_vanishing;
    } catch (const NotMinimalError& e) {
        err << "error: " << e.what() << "\n";
        return exit_not_minimal;
    }
}

inline int cmd_gaps(long n, const std::string& format, std::ostream& out, std::ostream& err)
{
    if (n < 1) {
        err << "error: n must be positive\n";
        return exit_usage;
    }
    auto gaps = gap_intervals(n);
    if (format == "csv") {
        out << "k,lo,hi\n";
        for (std::size_t k = 0; k < gaps.size(); ++k)
            out << k << "," << gaps[k].first << "," << gaps[k].second << "\n";
        return exit_ok;
    }
    for (std::size_t k = 0; k < gaps.size(); ++k)
        out << (k ? " " : "") << "(" << gaps[k].first << "," << gaps[k].second << ")";
    out << "\n";
    return exit_ok;
}

/// Named integer inputs for cmd_bounds.
using NamedInts = std::map<std::string, long>;

inline int cmd_bounds(const std::string& theorem, const NamedInts& values, const std::string& format,
                      std::ostream& out, std::ostream& err)
{
    auto need = [&](std::initializer_list<const char*> keys) {
        std::vector<long> v;
        for (auto* k : keys) {
            auto it = values.find(k);
            if (it == values.end())
                throw ParseError(theorem + " needs --" + k);
            v.push_back(it->second);
        }
        return v;
    };
    try {
        std::optional<BoundReport> r;
        if (theorem == "thm1.1") {
            auto v = need({"n", "d", "m"});
            r = check_thm_main0(v[0], v[1], v[2]);
        } else if (theorem == "cor1.3") {
            auto v = need({"n", "m"});
            r = check_cor_gap(v[0], v[1]);
        } else if (theorem == "thm1.4") {
            auto v = need({"n", "e", "m", "a", "b"});
            r = check_thm_main1(v[0], v[1], v[2], v[3], v[4]);
        } else if (theorem == "prop2.1") {
            auto v = need({"n", "p", "R"});
            r = check_prop_grha(v[0], v[1], v[2]);
        } else if (theorem == "thm2.2") {
            auto v = need({"n", "p", "r"});
            r = check_thm_asos(v[0], v[1], v[2]);
        } else if (theorem == "thm2.4") {
            auto v = need({"n", "p", "r"});
            r = check_thm_nonhomo(v[0], v[1], v[2]);
        } else if (theorem == "prop2.5") {
            auto v = need({"p", "t", "r"});
            r = check_prop_power(v[0], v[1], v[2]);
        } else if (theorem == "rem1.6") {
            auto v = need({"n", "m"});
            r = check_rem_best_bound(v[0], v[1]);
        } else {
            throw ParseError("unknown theorem id '" + theorem + "'");
        }
        if (format == "csv") {
            out << "theorem,observed,lower,upper,satisfied\n"
                << r->theorem << "," << r->observed << "," << r->lower << ","
                << (r->upper ? r->upper->get_str() : std::string()) << "," << (r->satisfied ? "true" : "false")
                << "\n";
        } else {
            out << *r << "\n";
        }
        return r->satisfied ? exit_ok : exit_mismatch;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

inline int cmd_primes(long n, long t, std::ostream& out, std::ostream& err)
{
    if (n < 1 || t < 1) {
        err << "error: n and t must be positive\n";
        return exit_usage;
    }
    auto a = prime_substitution(n, t);
    for (std::size_t i = 0; i < a.size(); ++i)
        out << (i ? " " : "") << a[i];
    out << "\n";
    return verify_injective(a, n, t) ? exit_ok : exit_mismatch;
}

inline int cmd_divide(const std::string& text, std::ostream& out, std::ostream& err)
{
    try {
        auto s = form_from_json(parse_json_text(text));
        if (!s.is_bihomogeneous())
            throw ParseError("form is not bihomogeneous");
        auto r = divide_by_norm(s);
        if (!r) {
            out << "divisible: false\n";
            return exit_mismatch;
        }
        out << "divisible: true\n"
            << "quotient: " << form_to_json(*r).dump() << "\n"
            << "quotient_inertia: " << inertia(*r) << "\n";
        // ||Z||^2 R = ||H||^2 with R != 0 forces rank H >= number of variables
        auto in = inertia(s);
        if (in.is_sos() && !r->is_zero())
            out << "extraction_rank: " << in.pos << "\n"
                << "rank_at_least_nvars: " << (in.pos >= s.nvars() ? "true" : "false") << "\n";
        return exit_ok;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

inline int cmd_example1(const std::string& lambda_text, std::ostream& out, std::ostream& err)
{
    Rational lambda;
    try {
        lambda = parse_rational(lambda_text);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    auto r = r_lambda(lambda);
    auto prod = mul(one_plus_norm_z(1), r);
    auto sq = pow(r, 2);
    out << "lambda: " << lambda << "\n"
        << "R: " << detail::diagonal_profile(r) << "\n"
        << "R_inertia: " << inertia(r) << "\n"
        << "R_minus_1_sos: " << (affine_split(r).ok ? "true" : "false") << "\n"
        << "(1+|z|^2)R: " << detail::diagonal_profile(prod) << "\n"
        << "(1+|z|^2)R_inertia: " << inertia(prod) << "\n"
        << "R^2: " << detail::diagonal_profile(sq) << "\n"
        << "R^2_inertia: " << inertia(sq) << "\n";
    auto hs = affine_split(prod);
    auto fs = affine_split(sq);
    if (hs.ok)
        out << "m: " << hs.m << "\n";
    else
        out << "m: none ((1+|z|^2)R - 1 is not an SOS)\n";
    if (fs.ok)
        out << "d: " << fs.m << "\n";
    else
        out << "d: none (R^2 - 1 is not an SOS)\n";
    if (hs.ok && fs.ok) {
        auto h = extract_sos(hs.rest);
        auto f = extract_sos(fs.rest);
        bool holds = verify_identity(f, h, 2, 2, 1);
        out << "h: " << map_to_json(h).dump() << "\n"
            << "f: " << map_to_json(f).dump() << "\n"
            << "identity (1+|z|^2)^2(1+|f|^2) = (1+|h|^2)^2: " << (holds ? "holds" : "fails") << "\n";
        return holds ? exit_ok : exit_mismatch;
    }
    return exit_ok;
}

struct EnsembleConfig {
    long n = 2;
    long d_max = 2;
    long degree_max = 2;
    long count = 0;
    std::uint64_t seed = 0;
    long coefficient_height = 5;
    unsigned threads = 1;

    void validate() const
    {
        if (n < 1 || d_max < 1 || degree_max < 1 || count < 0 || coefficient_height < 1)
            throw ParseError("ensemble parameters must be positive");
    }
};

/// One sample of the gap study.
struct EnsembleRow {
    long n, d, degree, m;
    BoundReport report;
    bool in_gap;
};

inline EnsembleRow ensemble_sample(const EnsembleConfig& cfg, std::uint64_t index)
{
    Rng rng(cfg.seed, index);
    const long degree = rng.between(1, cfg.degree_max);
    const long available = static_cast<long>(monomials_up_to(cfg.n, 1, degree).size());
    const long d = rng.between(1, std::min(cfg.d_max, available));
    auto f = random_minimal_map(rng, cfg.n, d, degree, cfg.coefficient_height);
    const long m = static_cast<long>(solve_h(f, 1, 1).size());
    return {cfg.n, d, degree, m, check_thm_nonhomo(cfg.n, d, m), gap_containing(cfg.n, m).has_value()};
}

/// CSV columns: n,d,degree,m,lower,upper,in_gap (upper empty when one-sided).
inline int cmd_ensemble(const EnsembleConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        cfg.validate();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    std::vector<std::string> lines(static_cast<std::size_t>(cfg.count));
    std::atomic<long> next{0};
    auto worker = [&] {
        for (long i; (i = next++) < cfg.count;) {
            auto row = ensemble_sample(cfg, static_cast<std::uint64_t>(i));
            std::ostringstream os;
            os << row.n << "," << row.d << "," << row.degree << "," << row.m << "," << row.report.lower << ","
               << (row.report.upper ? row.report.upper->get_str() : std::string()) << ","
               << (row.in_gap ? "true" : "false") << "\n";
            lines[static_cast<std::size_t>(i)] = os.str();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, cfg.threads); ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    out << "n,d,degree,m,lower,upper,in_gap\n";
    for (auto& l : lines)
        out << l;
    return exit_ok;
}

} // namespace hsos::cli
