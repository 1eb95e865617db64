#include "test_support.hpp"

using namespace hsos;
using namespace hsos::testing;

namespace {

struct QuarticPair {
    ScaledMap f; // R_7^2 = 1 + ||f||^2
    ScaledMap h; // (1 + |z|^2) R_7 = 1 + ||h||^2
};

QuarticPair quartic_pair()
{
    auto r = r_lambda(7);
    auto hs = affine_split(mul(one_plus_norm_z(1), r));
    auto fs = affine_split(pow(r, 2));
    return {extract_sos(fs.rest), extract_sos(hs.rest)};
}

} // namespace

TEST(modification_form, examples)
{
    ModificationSpec s1{HoloMap(1, {var(1, 0)}), 1, 1, 1, 1};
    EXPECT_EQ(radial_profile(modification_form(s1), 3), rats({1, 2, 1}));

    auto ex = quartic_pair();
    EXPECT_EQ(ex.f.size(), 6u);
    ModificationSpec s2{ex.f, 1, 2, 1, 1};
    EXPECT_EQ(modification_form(s2), pow(mul(one_plus_norm_z(1), r_lambda(7)), 2));

    // f = (z1, z2) in n = 2 is the identity: (1 + ||z||^2)^2, six terms, rank 5
    ModificationSpec s3{HoloMap::identity(2), 1, 1, 1, 2};
    auto a = modification_form(s3);
    EXPECT_EQ(a, pow(one_plus_norm_z(2), 2));
    EXPECT_EQ(a.terms().size(), 6u);
    EXPECT_EQ(affine_split(a).m, 5u);
}

TEST(modification_form, rejects_invalid_specs)
{
    auto z = HoloMap(1, {var(1, 0)});
    EXPECT_THROW(modification_form({z, 2, 2, 2, 1}), std::invalid_argument);
    EXPECT_THROW(modification_form({z, 1, 1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(modification_form({HoloMap(1, {HoloPoly::constant(1, 1) + var(1, 0)}), 1, 1, 1, 1}),
                 NotVanishingAtOriginError);
    EXPECT_THROW(modification_form({HoloMap(1, {var(1, 0), var(1, 0)}), 1, 1, 1, 1}), NotMinimalError);
}

TEST(solve_h, examples)
{
    auto h1 = solve_h(HoloMap(1, {var(1, 0)}), 1, 1);
    EXPECT_EQ(h1.size(), 2u);
    ScaledMap expected(1);
    expected.push_back(2, mono({1}));
    expected.push_back(1, mono({2}));
    EXPECT_TRUE(grams_equal(h1, expected));

    auto z1 = HoloMap(2, {var(2, 0)});
    EXPECT_EQ(expanded_m(z1), 4u);
    EXPECT_EQ(solve_h(z1, 1, 1).size(), 4u);

    auto id2 = HoloMap::identity(2);
    EXPECT_EQ(expanded_m(id2), 5u);
    EXPECT_EQ(solve_h(id2, 1, 1).size(), 5u);
}

TEST(verify_identity, examples)
{
    auto ex = quartic_pair();
    EXPECT_TRUE(verify_identity(ex.f, ex.h, 2, 2, 1));
    EXPECT_FALSE(verify_identity(ex.f, ex.h, 1, 2, 1));

    ScaledMap h(1);
    h.push_back(2, mono({1}));
    h.push_back(1, mono({2}));
    auto z = HoloMap(1, {var(1, 0)});
    EXPECT_TRUE(verify_identity(z, h, 1, 1, 1));
    EXPECT_FALSE(verify_identity(z, z, 1, 1, 1));
    EXPECT_THROW(verify_identity(z, h, 2, 2, 2), std::invalid_argument);
}

TEST(tensor_rank_e, examples)
{
    auto z = HoloMap(1, {var(1, 0)});
    EXPECT_EQ(span_of_products(z, 2), 2u);
    EXPECT_EQ(tensor_rank_e(z, 2), 2u);

    auto zz = HoloMap(1, {mono({1}), mono({2})});
    EXPECT_EQ(span_of_products(zz, 2), 4u);
    EXPECT_EQ(tensor_rank_e(zz, 2), 4u);

    auto id2 = HoloMap::identity(2);
    EXPECT_EQ(span_of_products(id2, 2), 5u);
    EXPECT_EQ(tensor_rank_e(id2, 2), 5u);

    EXPECT_THROW(tensor_rank_e(HoloMap(1, {var(1, 0), var(1, 0)}), 2), NotMinimalError);
    EXPECT_THROW(tensor_rank_e(HoloMap(1, {HoloPoly::constant(1, 1)}), 2), NotVanishingAtOriginError);
}

TEST(divide_by_norm, examples)
{
    auto s = mul(norm_z(2), norm_z(2));
    auto r = divide_by_norm(s);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, norm_z(2));

    auto big = homogenize_form(mul(one_plus_norm_z(1), r_lambda(7)), 5);
    auto q = divide_by_norm(big);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, homogenize_form(r_lambda(7), 4));
    EXPECT_FALSE(inertia(*q).is_sos());
    // ||Z||^2 R_7 is an SOS even though R_7 is not; its rank is at least the variable count
    EXPECT_TRUE(inertia(big).is_sos());
    EXPECT_GE(inertia(big).pos, big.nvars());

    Monomial z0sq({2, 0});
    auto quartic = HermitianForm::from_terms(2, {{{z0sq, z0sq}, 1}});
    EXPECT_FALSE(divide_by_norm(quartic).has_value());

    EXPECT_THROW(divide_by_norm(one_plus_norm_z(2)), std::invalid_argument);
    EXPECT_TRUE(divide_by_norm(HermitianForm(3))->is_zero());
    EXPECT_FALSE(divide_by_norm(HermitianForm::constant(2, 1)).has_value());
}

TEST(r_lambda, examples)
{
    EXPECT_EQ(r_lambda(0), pow(one_plus_norm_z(1), 4));
    EXPECT_EQ(radial_profile(r_lambda(6), 5), rats({1, 4, 0, 4, 1}));
    EXPECT_EQ(inertia(r_lambda(7)), (Inertia{4, 1}));
    EXPECT_EQ(radial_profile(r_lambda(Rational(13, 2)), 5),
              (std::vector<Rational>{1, 4, Rational(-1, 2), 4, 1}));
}

// Random minimal maps: existence, identity, uniqueness and the tensor-rank sandwich.
class isometry_properties : public ::testing::TestWithParam<int> {};

TEST_P(isometry_properties, random_minimal_maps)
{
    Rng rng(31337, static_cast<std::uint64_t>(GetParam()));
    const std::size_t n = 1 + rng.below(3);
    const long degree = 1 + static_cast<long>(rng.below(2));
    const std::size_t available = monomials_up_to(n, 1, degree).size();
    const std::size_t d = 1 + rng.below(std::min<std::size_t>(3, available));
    auto f = random_minimal_map(rng, n, d, degree, 4);
    const long b = 1 + static_cast<long>(rng.below(2));
    const long c = 1 + static_cast<long>(rng.below(2));

    auto h = solve_h(f, b, c);
    EXPECT_TRUE(verify_identity(f, h, 1, b, c));
    EXPECT_TRUE(is_minimal(h));
    auto h_other = solve_h(f, b, c, PivotOrder::last);
    EXPECT_TRUE(grams_equal(h, h_other));
    EXPECT_EQ(h.size(), h_other.size());
    if (b == 1 && c == 1)
        EXPECT_EQ(h.size(), expanded_m(f));

    // (1 + ||f||^2)^c = ||(1, f)^{(x)c}||^2 = 1 + ||g||^2 with g of rank e
    auto power = one_plus_norm_power(f, c);
    EXPECT_EQ(norm_form(tensor_power(with_unit(f), static_cast<int>(c))), power);
    auto gs = affine_split(power);
    ASSERT_TRUE(gs.ok);
    auto g = extract_sos(gs.rest);
    const std::size_t e = tensor_rank_e(f, c);
    EXPECT_EQ(g.size(), e);
    EXPECT_EQ(e, span_of_products(f, static_cast<int>(c)));
    EXPECT_EQ(e + 1, reduce_minimal(tensor_power(with_unit(f), static_cast<int>(c))).rank);
    EXPECT_TRUE(check_prop_power(static_cast<long>(d), c, static_cast<long>(e)).satisfied);

    // both constructions of the modification form agree
    auto via_g = mul(pow(one_plus_norm_z(n), static_cast<int>(b)), HermitianForm::constant(n, 1) + norm_form(g));
    EXPECT_EQ(modification_form({f, 1, b, c, n}), via_g);
}

INSTANTIATE_TEST_SUITE_P(seeded, isometry_properties, ::testing::Range(0, 20));

class division_round_trip : public ::testing::TestWithParam<int> {};

TEST_P(division_round_trip, multiply_then_divide)
{
    Rng rng(4242, static_cast<std::uint64_t>(GetParam()));
    const std::size_t vars = 2 + rng.below(3);
    const long deg = static_cast<long>(rng.below(3));
    HermitianForm r(vars);
    if (rng.coin()) {
        HoloMap f(vars);
        for (std::size_t k = 0, p = 1 + rng.below(3); k < p; ++k)
            f.push_back(random_poly(rng, vars, deg, deg, 4));
        r = norm_form(f);
    } else {
        // indefinite: difference of two norms
        HoloMap f(vars), g(vars);
        f.push_back(random_poly(rng, vars, deg, deg, 4));
        g.push_back(random_poly(rng, vars, deg, deg, 4));
        r = norm_form(f) - norm_form(g);
    }
    auto s = mul(norm_z(vars), r);
    auto q = divide_by_norm(s);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, r);
}

INSTANTIATE_TEST_SUITE_P(seeded, division_round_trip, ::testing::Range(0, 15));
