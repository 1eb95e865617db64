#include "test_support.hpp"

using namespace hsos;
using namespace hsos::testing;

TEST(gaussian_rational, parse_and_canonical_form)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-10"), Rational(-10));
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(gaussian_rational, field_operations)
{
    GaussianRational a(Rational(1, 2), Rational(-3)), b(Rational(2), Rational(1, 3));
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * a.conj(), GaussianRational(a.norm2()));
    EXPECT_EQ(a.norm2(), Rational(37, 4));
    EXPECT_THROW(a / GaussianRational(), std::domain_error);
}

TEST(monomial, graded_order)
{
    auto mons = monomials_up_to(2, 0, 2);
    ASSERT_EQ(mons.size(), 6u);
    EXPECT_EQ(mons[0], Monomial({0, 0}));
    EXPECT_EQ(mons[1], Monomial({1, 0}));
    EXPECT_EQ(mons[2], Monomial({0, 1}));
    EXPECT_EQ(mons[3], Monomial({2, 0}));
    EXPECT_EQ(mons[4], Monomial({1, 1}));
    EXPECT_EQ(mons[5], Monomial({0, 2}));
    EXPECT_TRUE(std::is_sorted(mons.begin(), mons.end()));
    EXPECT_EQ(Monomial({2, 1}).degree(), 3);
    EXPECT_THROW(Monomial({-1}), std::invalid_argument);
}

TEST(norm_form, examples)
{
    auto a = norm_form(HoloMap(1, {var(1, 0)}));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.basis()[0], Monomial({1}));
    EXPECT_EQ(a.gram(0, 0), GaussianRational(1));

    auto b = norm_form(HoloMap(1, {var(1, 0), var(1, 0)}));
    EXPECT_EQ(b.gram(0, 0), GaussianRational(2));

    // |1+z|^2 + |1-z|^2 = 2 + 2|z|^2
    HoloPoly one = HoloPoly::constant(1, 1);
    auto c = norm_form(HoloMap(1, {one + var(1, 0), one - var(1, 0)}));
    EXPECT_TRUE(c.is_diagonal());
    EXPECT_EQ(radial_profile(c, 2), rats({2, 2}));
    EXPECT_TRUE(c.is_hermitian());
}

TEST(norm_form, cross_terms_are_hermitian)
{
    HoloPoly p(2, {{{1, 0}, GaussianRational(Rational(1, 2))}, {{0, 2}, GaussianRational(Rational(-1, 3), 1)}});
    auto a = norm_form(HoloMap(2, {p}));
    EXPECT_TRUE(a.is_hermitian());
    EXPECT_EQ(a.coefficient(Monomial({1, 0}), Monomial({0, 2})),
              GaussianRational(Rational(1, 2)) * GaussianRational(Rational(-1, 3), 1).conj());
    EXPECT_THROW(HermitianForm::from_terms(1, {{{Monomial({0}), Monomial({1})}, GaussianRational(1)}}),
                 std::invalid_argument);
}

TEST(form_mul, examples)
{
    auto u = one_plus_norm_z(1);
    EXPECT_EQ(radial_profile(mul(u, u), 3), rats({1, 2, 1}));

    auto prod = mul(u, r_lambda(7));
    EXPECT_EQ(radial_profile(prod, 6), rats({1, 5, 3, 3, 5, 1}));

    auto z1 = HoloMap(2, {var(2, 0)}), z2 = HoloMap(2, {var(2, 1)});
    EXPECT_EQ(mul(norm_form(z1), norm_form(z2)), norm_form(HoloMap(2, {var(2, 0) * var(2, 1)})));
    EXPECT_THROW(mul(norm_z(1), norm_z(2)), std::invalid_argument);
}

TEST(form_pow, examples)
{
    EXPECT_EQ(radial_profile(pow(one_plus_norm_z(1), 2), 3), rats({1, 2, 1}));
    EXPECT_EQ(pow(norm_form(HoloMap(1, {var(1, 0)})), 3), norm_form(HoloMap(1, {mono({3})})));
    EXPECT_EQ(pow(r_lambda(5), 1), r_lambda(5));
    EXPECT_THROW(pow(norm_z(1), 0), std::invalid_argument);
}

TEST(form_pow, r_lambda_square_matches_convolution)
{
    for (long num : {0L, 6L, 7L, 8L, 13L, 15L, -3L}) {
        Rational lambda(num, 2);
        lambda.canonicalize();
        std::vector<Rational> base{1, 4, Rational(6 - lambda), 4, 1};
        auto expected = convolve(base, base);
        // closed form of the self-convolution
        std::vector<Rational> closed{1,
                                     8,
                                     Rational(2 * (14 - lambda)),
                                     Rational(8 * (7 - lambda)),
                                     Rational((6 - lambda) * (6 - lambda) + 34),
                                     Rational(8 * (7 - lambda)),
                                     Rational(2 * (14 - lambda)),
                                     8,
                                     1};
        EXPECT_EQ(expected, closed);
        auto sq = pow(r_lambda(lambda), 2);
        EXPECT_EQ(radial_profile(sq, 9), expected) << "lambda=" << lambda;
    }
}

TEST(holo_map, tensor_and_oplus)
{
    auto z1 = HoloMap(2, {var(2, 0)}), z2 = HoloMap(2, {var(2, 1)});
    EXPECT_EQ(tensor(z1, z2), HoloMap(2, {var(2, 0) * var(2, 1)}));
    EXPECT_EQ(oplus(z1, z2), HoloMap(2, {var(2, 0), var(2, 1)}));

    auto f = with_unit(HoloMap(1, {var(1, 0)}));
    auto sq = tensor(f, f);
    EXPECT_EQ(sq, HoloMap(1, {HoloPoly::constant(1, 1), mono({1}), mono({1}), mono({2})}));
    EXPECT_EQ(reduce_minimal(sq).rank, 3u);
    EXPECT_EQ(tensor_power(f, 2), sq);
    EXPECT_THROW(tensor(z1, HoloMap(1, {var(1, 0)})), std::invalid_argument);
}

TEST(holo_map, homogenize_round_trip)
{
    HoloPoly one = HoloPoly::constant(1, 1);
    auto f = HoloMap(1, {one + var(1, 0)});
    EXPECT_EQ(homogenize_map(f, 1), HoloMap(2, {var(2, 0) + var(2, 1)}));

    auto g = HoloMap(1, {mono({1}), mono({2})});
    auto big = homogenize_map(g, 2);
    EXPECT_EQ(big, HoloMap(2, {mono({1, 1}), mono({0, 2})}));
    EXPECT_EQ(dehomogenize_map(big), g);
    EXPECT_EQ(reduce_minimal(big).rank, reduce_minimal(g).rank);

    EXPECT_THROW(homogenize_map(g, 1), std::invalid_argument);
    EXPECT_THROW(dehomogenize_map(HoloMap(2, {mono({1, 0}) + mono({2, 0})})), std::invalid_argument);
    EXPECT_THROW(dehomogenize_map(HoloMap(2, {mono({1, 0}), mono({2, 0})})), std::invalid_argument);
}

TEST(holo_map, truncate)
{
    HoloPoly one = HoloPoly::constant(1, 1);
    auto f = HoloMap(1, {one + mono({1}) + mono({3})});
    EXPECT_EQ(truncate_map(f, 2), HoloMap(1, {one + mono({1})}));
    EXPECT_EQ(truncate_map(f, f.degree()), f);
    EXPECT_EQ(truncate_map(truncate_map(f, 2), 2), truncate_map(f, 2));

    auto g = HoloMap(2, {mono({1, 0}) + mono({0, 2}), mono({0, 1})});
    EXPECT_EQ(truncate_map(g, 1), HoloMap(2, {mono({1, 0}), mono({0, 1})}));
    EXPECT_THROW(truncate_map(g, -1), std::invalid_argument);
}

TEST(holo_map, substitute_powers)
{
    std::vector<long> a{2, 3};
    EXPECT_EQ(substitute_powers(HoloMap(2, {mono({1, 1})}), a), HoloMap(1, {mono({5})}));
    auto indep = substitute_powers(HoloMap(2, {mono({1, 0}), mono({0, 1})}), a);
    EXPECT_EQ(indep, HoloMap(1, {mono({2}), mono({3})}));
    EXPECT_EQ(reduce_minimal(indep).rank, 2u);

    std::vector<long> bad{1, 2};
    auto collapsed = substitute_powers(HoloMap(2, {mono({2, 0}), mono({0, 1})}), bad);
    EXPECT_EQ(collapsed, HoloMap(1, {mono({2}), mono({2})}));
    EXPECT_EQ(reduce_minimal(collapsed).rank, 1u);
    std::vector<long> short_vec{1};
    EXPECT_THROW(substitute_powers(HoloMap(2, {mono({2, 0})}), short_vec), std::invalid_argument);
}

// Random-instance properties, checked against pointwise evaluation.
class form_properties : public ::testing::TestWithParam<int> {};

TEST_P(form_properties, identities_hold_pointwise_and_exactly)
{
    Rng rng(2024, static_cast<std::uint64_t>(GetParam()));
    const std::size_t n = 1 + rng.below(3);
    auto random_map = [&] {
        HoloMap f(n);
        auto p = 1 + rng.below(3);
        for (std::size_t k = 0; k < p; ++k)
            f.push_back(random_poly(rng, n, 0, 2, 4));
        return f;
    };
    auto f = random_map(), g = random_map(), k = random_map();
    auto nf = norm_form(f), ng = norm_form(g), nk = norm_form(k);

    EXPECT_EQ(norm_form(tensor(f, g)), mul(nf, ng));
    EXPECT_EQ(norm_form(oplus(f, g)), nf + ng);
    EXPECT_EQ(mul(nf, ng), mul(ng, nf));
    EXPECT_EQ(mul(mul(nf, ng), nk), mul(nf, mul(ng, nk)));
    for (auto* a : {&nf, &ng}) {
        EXPECT_TRUE(a->is_hermitian());
    }
    EXPECT_TRUE(mul(nf, ng).is_hermitian());

    for (int i = 0; i < 20; ++i) {
        auto z = random_point(rng, n);
        EXPECT_EQ(form_at(nf, z), norm_at(f, z));
        EXPECT_EQ(form_at(mul(nf, ng), z), norm_at(f, z) * norm_at(g, z));
        EXPECT_EQ(form_at(nf + ng, z), norm_at(f, z) + norm_at(g, z));
        auto pw = pow(one_plus_norm_z(n) + nf, 2);
        Rational base = 1 + norm_at(HoloMap::identity(n), z) + norm_at(f, z);
        EXPECT_EQ(form_at(pw, z), base * base);
    }

    // homogenization: |Z_0|^{2d} a(Z~/Z_0) at Z_0 = 1 reproduces a
    const long d = std::max(0L, nf.degree());
    auto hom = homogenize_form(nf, d);
    EXPECT_TRUE(hom.is_bihomogeneous());
    EXPECT_EQ(dehomogenize_form(hom), nf);
    EXPECT_EQ(hom, norm_form(homogenize_map(f, d)));
    EXPECT_EQ(dehomogenize_map(homogenize_map(f, d)), f);
    EXPECT_EQ(reduce_minimal(homogenize_map(f, d)).rank, reduce_minimal(f).rank);
}

INSTANTIATE_TEST_SUITE_P(seeded, form_properties, ::testing::Range(0, 25));
