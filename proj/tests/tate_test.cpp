#include "motivec/cellular.hpp"
#include "motivec/correspondence.hpp"
#include "motivec/decompose.hpp"
#include "motivec/errors.hpp"
#include "motivec/random.hpp"
#include "motivec/theory.hpp"

#include <gtest/gtest.h>

using namespace motivec;

namespace {

GradedRingElement c(const RingPtr& ring, std::string_view text)
{
    return GradedRingElement::parse(ring, text);
}

Correspondence matrix(const RingPtr& ring, std::vector<int> source, std::vector<int> target, int degree,
                      std::vector<std::string_view> entries)
{
    std::vector<GradedRingElement> e;
    for (auto t : entries)
        e.push_back(c(ring, t));
    return Correspondence(ring, TateMotive(std::move(source)), TateMotive(std::move(target)), degree, std::move(e));
}

} // namespace

TEST(TateMotive, SortedAndNonnegative)
{
    EXPECT_EQ(TateMotive({3, 0, 1}).twists(), (std::vector<int>{0, 1, 3}));
    EXPECT_THROW(TateMotive({-1}), NegativeTwist);
    EXPECT_EQ(TateMotive({0, 2}).twisted(1).twists(), (std::vector<int>{1, 3}));
    EXPECT_EQ(TateMotive({0, 1, 1}).dual(2).twists(), (std::vector<int>{1, 1, 2}));
    EXPECT_THROW(TateMotive({3}).dual(2), NegativeTwist);
    EXPECT_EQ(TateMotive({0, 1}).to_string(), "L^0 + L^1");
}

TEST(Correspondence, EntryDegreeIsChecked)
{
    auto k = RingDescriptor::k0();
    EXPECT_NO_THROW(matrix(k, {0}, {1}, 0, {"beta"}));
    EXPECT_THROW(matrix(k, {0}, {1}, 0, {"1"}), InvalidElement);
    EXPECT_THROW(matrix(k, {0}, {1}, 0, {"1 + beta"}), InvalidElement);
}

TEST(Compose, Identity)
{
    auto ring = RingDescriptor::universal(4);
    random::Engine rng(5);
    TateMotive a({0, 1, 3}), b({1, 2});
    auto alpha = random::correspondence(ring, a, b, -1, rng);
    EXPECT_EQ(compose(Correspondence::identity(ring, b), alpha), alpha);
    EXPECT_EQ(compose(alpha, Correspondence::identity(ring, a)), alpha);
}

TEST(Compose, Diagonal)
{
    auto chow = RingDescriptor::chow();
    auto alpha = matrix(chow, {0, 1}, {0, 1}, 0, {"1", "0", "0", "1"});
    auto beta = matrix(chow, {0, 1}, {0, 1}, 0, {"2", "0", "0", "3"});
    EXPECT_EQ(compose(alpha, beta), beta);
}

TEST(Compose, K0DegreeBookkeeping)
{
    auto k = RingDescriptor::k0();
    auto e = matrix(k, {0}, {1}, 0, {"beta"});
    auto f = matrix(k, {1}, {0}, 0, {"beta^-1"});
    EXPECT_EQ(compose(f, e), Correspondence::identity(k, TateMotive({0})));
    EXPECT_EQ(compose(e, f), Correspondence::identity(k, TateMotive({1})));
}

TEST(Compose, DegreesAddAndShapesMustMatch)
{
    auto ring = RingDescriptor::universal(6);
    random::Engine rng(9);
    TateMotive a({0, 2}), b({1}), m({0, 1, 1});
    auto beta = random::correspondence(ring, a, b, -1, rng);
    auto alpha = random::correspondence(ring, b, m, -2, rng);
    EXPECT_EQ(compose(alpha, beta).degree(), -3);
    EXPECT_THROW(compose(beta, alpha), ShapeMismatch);
}

TEST(Transpose, Involution)
{
    auto ring = RingDescriptor::k0();
    random::Engine rng(13);
    TateMotive a({0, 1, 2}), b({1, 3});
    auto alpha = random::correspondence(ring, a, b, 1, rng);
    auto t = transpose(alpha, 2, 3);
    EXPECT_EQ(t.degree(), 2 + 1 - 3);
    EXPECT_EQ(t.source(), b.dual(3));
    EXPECT_EQ(t.target(), a.dual(2));
    EXPECT_EQ(transpose(t, 3, 2), alpha);
}

TEST(Transpose, QuadricIdentity)
{
    auto ring = RingDescriptor::chow();
    auto m = decompose_by_rank(quadric(1));
    auto t = transpose(Correspondence::identity(ring, m), 2, 2);
    EXPECT_EQ(t, Correspondence::identity(ring, m.dual(2)));
    EXPECT_EQ(t.degree(), 0);
}

TEST(Transpose, RejectsInconsistentDimensions)
{
    auto ring = RingDescriptor::chow();
    auto id = Correspondence::identity(ring, TateMotive({0, 3}));
    EXPECT_THROW(transpose(id, 2, 2), NegativeTwist);
}

TEST(Product, IdentitiesAndEmpty)
{
    auto ring = RingDescriptor::k0();
    TateMotive m({0, 1}), n({0, 2});
    EXPECT_EQ(product(Correspondence::identity(ring, m), Correspondence::identity(ring, n)),
              Correspondence::identity(ring, product(m, n)));
    EXPECT_EQ(product(m, n).twists(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_TRUE(product(m, TateMotive{}).empty());
    EXPECT_EQ(product(Correspondence::identity(ring, m), Correspondence::identity(ring, TateMotive{})).rows(), 0u);
}

TEST(Product, Interchange)
{
    auto ring = RingDescriptor::universal(6);
    random::Engine rng(17);
    TateMotive a({0, 1}), b({1}), x({0}), y({0, 2});
    auto gamma = random::correspondence(ring, a, b, 0, rng);
    auto alpha = random::correspondence(ring, b, a, -1, rng);
    auto delta = random::correspondence(ring, x, y, -1, rng);
    auto beta = random::correspondence(ring, y, x, 0, rng);
    EXPECT_EQ(compose(product(alpha, beta), product(gamma, delta)), product(compose(alpha, gamma), compose(beta, delta)));
}

TEST(Split, Identity)
{
    auto ring = RingDescriptor::chow();
    TateMotive m({0, 2, 2});
    auto s = split_idempotent(Correspondence::identity(ring, m));
    EXPECT_EQ(s.image, m);
    EXPECT_EQ(s.section, Correspondence::identity(ring, m));
    EXPECT_EQ(s.retraction, Correspondence::identity(ring, m));
    EXPECT_TRUE(s.integral);
}

TEST(Split, DiagonalAndComplement)
{
    auto ring = RingDescriptor::chow();
    auto p = matrix(ring, {2, 5}, {2, 5}, 0, {"1", "0", "0", "0"});
    auto q = Correspondence::identity(ring, p.source()) - p;
    EXPECT_EQ(split_idempotent(p).image.twists(), std::vector<int>{2});
    EXPECT_EQ(split_idempotent(q).image.twists(), std::vector<int>{5});
}

TEST(Split, RankOneBlock)
{
    auto ring = RingDescriptor::chow();
    auto p = matrix(ring, {3, 3}, {3, 3}, 0, {"1", "1", "0", "0"});
    ASSERT_TRUE(is_idempotent(p));
    auto s = split_idempotent(p);
    EXPECT_EQ(s.image.twists(), std::vector<int>{3});
    EXPECT_EQ(compose(s.retraction, s.section), Correspondence::identity(ring, s.image));
    EXPECT_EQ(compose(s.section, s.retraction), p);
    EXPECT_TRUE(s.integral);
    // p(x, y) = (x + y, 0): image spanned by e_1, retraction is the row (1, 1)
    EXPECT_EQ(s.section, matrix(ring, {3}, {3, 3}, 0, {"1", "0"}));
    EXPECT_EQ(s.retraction, matrix(ring, {3, 3}, {3}, 0, {"1", "1"}));
}

TEST(Split, K0ProjectorAcrossTwists)
{
    auto k = RingDescriptor::k0();
    auto p = matrix(k, {0, 1}, {0, 1}, 0, {"0", "0", "beta", "1"});
    ASSERT_TRUE(is_idempotent(p));
    auto s = split_idempotent(p);
    auto t = split_idempotent(Correspondence::identity(k, p.source()) - p);
    EXPECT_EQ(s.image.size(), 1u);
    EXPECT_EQ(s.image + t.image, p.source());
    EXPECT_EQ(compose(s.section, s.retraction), p);
    EXPECT_EQ(compose(s.retraction, s.section), Correspondence::identity(k, s.image));
}

TEST(Split, Errors)
{
    auto ring = RingDescriptor::chow();
    EXPECT_THROW(split_idempotent(matrix(ring, {0}, {0}, 0, {"2"})), NotIdempotent);
    auto u = RingDescriptor::universal(3);
    auto p = matrix(u, {0, 1}, {0, 1}, 0, {"1", "0", "m_1", "0"});
    ASSERT_TRUE(is_idempotent(p));
    EXPECT_THROW(split_idempotent(p), NonSplittable);
}

TEST(Split, RationalFallback)
{
    auto q = std::make_shared<const RingDescriptor>("Q", std::vector<Generator>{}, ScalarField::Rationals);
    auto p = matrix(q, {0, 0}, {0, 0}, 0, {"1/2", "1/2", "1/2", "1/2"});
    ASSERT_TRUE(is_idempotent(p));
    auto s = split_idempotent(p);
    EXPECT_EQ(s.image.size(), 1u);
    EXPECT_EQ(compose(s.section, s.retraction), p);
    EXPECT_EQ(compose(s.retraction, s.section), Correspondence::identity(q, s.image));
}

TEST(Pbt, PointInRankThreeBundle)
{
    auto ring = RingDescriptor::chow();
    auto x = TateMotive({0});
    auto ps = pbt_projectors(ring, x, 3);
    ASSERT_EQ(ps.size(), 3u);
    auto total = projective_bundle_motive(x, 3);
    EXPECT_EQ(total, decompose_by_rank(projective_space(2)));
    Correspondence sum(ring, total, total, 0);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        EXPECT_EQ(split_idempotent(ps[i]).image.twists(), std::vector<int>{static_cast<int>(i)});
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (i != j)
                EXPECT_TRUE(compose(ps[i], ps[j]).is_zero());
        sum += ps[i];
    }
    EXPECT_EQ(sum, Correspondence::identity(ring, total));
}

TEST(Realize, QuadricTables)
{
    auto chow = OrientedTheory::chow();
    auto t = realize_table(decompose_by_rank(quadric(2)), *chow);
    const std::size_t expect[] = {1, 1, 2, 1, 1};
    for (int k = 0; k <= 4; ++k)
        EXPECT_EQ(t.rank(k), expect[k]);
    EXPECT_EQ(t.rank(5), 0u);
    EXPECT_EQ(t.rank(-1), 0u);

    auto k0 = realize_table(decompose_by_rank(quadric(2)), *OrientedTheory::k0());
    EXPECT_TRUE(k0.periodic);
    EXPECT_EQ(k0.total_rank(), 6u);
    EXPECT_EQ(k0.rank(-17), 6u);
}

TEST(Realize, UniversalKnownRange)
{
    auto u = OrientedTheory::universal(3);
    auto m = decompose_by_rank(projective_space(2));
    auto t = realize_table(m, *u);
    EXPECT_EQ(t.known_from, -1);
    // A^k(P^2) = A^k + A^{k-1} + A^{k-2} with ranks p(-k) of the coefficient ring
    EXPECT_EQ(t.rank(2), 1u);
    EXPECT_EQ(t.rank(1), 2u);
    EXPECT_EQ(t.rank(0), 4u);
    EXPECT_EQ(t.rank(-1), 1u + 2u + 3u);
    EXPECT_THROW(t.rank(-2), TruncationExceeded);
    EXPECT_THROW(realize(m, *u, -3), TruncationExceeded);
}

TEST(Realize, Additivity)
{
    random::Engine rng(21);
    for (const auto& theory : {OrientedTheory::chow(), OrientedTheory::k0(), OrientedTheory::universal(4)})
        for (int i = 0; i < 10; ++i) {
            auto a = random::motive(rng), b = random::motive(rng);
            EXPECT_EQ(realize_table(a + b, *theory), realize_table(a, *theory) + realize_table(b, *theory));
        }
}
