#include "motivec/errors.hpp"
#include "motivec/random.hpp"
#include "motivec/theory.hpp"

#include <gtest/gtest.h>

using namespace motivec;

namespace {

ProjectiveSpaceElement xi(const TheoryPtr& t, int m, int i)
{
    return ProjectiveSpaceElement::xi_power(t, m, i);
}

ProjectiveSpaceElement constant(const TheoryPtr& t, int m, std::string_view text)
{
    return ProjectiveSpaceElement::pullback(t, m, GradedRingElement::parse(t->ring(), text));
}

} // namespace

TEST(Theory, Selectors)
{
    EXPECT_EQ(OrientedTheory::from_selector("chow")->name(), "chow");
    EXPECT_EQ(OrientedTheory::from_selector("k0")->name(), "k0");
    auto u = OrientedTheory::from_selector("universal:4");
    EXPECT_EQ(u->ring()->truncation(), 4);
    EXPECT_EQ(OrientedTheory::from_selector("universal", 3)->ring()->truncation(), 3);
    EXPECT_THROW(OrientedTheory::from_selector("universal"), InvalidElement);
    EXPECT_THROW(OrientedTheory::from_selector("universal:x"), InvalidElement);
    EXPECT_THROW(OrientedTheory::from_selector("mgl"), InvalidElement);
}

TEST(PmMul, TruncationRelation)
{
    auto t = OrientedTheory::chow();
    for (int m = 0; m <= 4; ++m)
        EXPECT_EQ(pm_mul(xi(t, m, 1), xi(t, m, m)), ProjectiveSpaceElement(t, m));
}

TEST(PmMul, Examples)
{
    auto chow = OrientedTheory::chow();
    const GradedRingElement minus_one(chow->ring(), -1);
    auto one = constant(chow, 2, "1");
    auto lhs = pm_mul(one + xi(chow, 2, 1), one + xi(chow, 2, 1) * minus_one);
    EXPECT_EQ(lhs, one + xi(chow, 2, 2) * minus_one);

    auto k = OrientedTheory::k0();
    EXPECT_EQ(pm_mul(xi(k, 2, 1), xi(k, 2, 1)), xi(k, 2, 2));
    EXPECT_EQ(pm_mul(xi(k, 2, 1), xi(k, 2, 2)), ProjectiveSpaceElement(k, 2));
}

TEST(Pushforward, Chow)
{
    auto t = OrientedTheory::chow();
    EXPECT_EQ(pushforward_to_point(xi(t, 3, 3)), GradedRingElement::one(t->ring()));
    EXPECT_TRUE(pushforward_to_point(xi(t, 3, 2)).is_zero());
}

TEST(Pushforward, K0ClassOfP2)
{
    auto t = OrientedTheory::k0();
    EXPECT_EQ(pushforward_to_point(constant(t, 2, "1")), GradedRingElement::parse(t->ring(), "beta^2"));
}

TEST(Pushforward, PointIsIdentity)
{
    const std::pair<TheoryPtr, const char*> cases[] = {
        {OrientedTheory::chow(), "7"},
        {OrientedTheory::k0(), "2 - beta^-1"},
        {OrientedTheory::universal(4), "1/3*m_2 + m_1"},
    };
    for (const auto& [t, text] : cases) {
        auto a = GradedRingElement::parse(t->ring(), text);
        EXPECT_EQ(pushforward_to_point(ProjectiveSpaceElement::pullback(t, 0, a)), a);
    }
}

TEST(Pushforward, UniversalReadsProjectiveClasses)
{
    auto t = OrientedTheory::universal(6);
    // p_*(xi^i) = [P^{m - i}]
    for (int m = 0; m <= 5; ++m)
        for (int i = 0; i <= m; ++i)
            EXPECT_EQ(pushforward_to_point(xi(t, m, i)), t->projective_class(m - i));
}

TEST(ProjectionFormula, Examples)
{
    auto chow = OrientedTheory::chow();
    EXPECT_TRUE(projection_formula_check(chow, 1, xi(chow, 1, 1), GradedRingElement::one(chow->ring())));
    auto k = OrientedTheory::k0();
    EXPECT_TRUE(projection_formula_check(k, 2, xi(k, 2, 2), GradedRingElement::parse(k->ring(), "beta")));
}

TEST(ProjectionFormula, RandomUniversal)
{
    auto t = OrientedTheory::universal(5);
    random::Engine rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto alpha = random::projective_element(t, 3, rng);
        auto b = random::element(t->ring(), rng);
        EXPECT_TRUE(projection_formula_check(t, 3, alpha, b));
    }
}

TEST(Pushforward, ShiftsDegreeByDimension)
{
    auto t = OrientedTheory::universal(8);
    random::Engine rng(11);
    for (int m = 0; m <= 4; ++m)
        for (int k = 0; k <= m; ++k) {
            auto u = random::homogeneous_projective_element(t, m, k, rng);
            auto p = pushforward_to_point(u);
            EXPECT_TRUE(p.is_zero() || p.is_homogeneous_of(k - m)) << m << " " << k;
        }
}
