#include "posetalg/homalg.hpp"
#include "posetalg/simconn.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace posetalg;
using testing_support::load;

TEST(H1, ContractibleAndCircle) {
    const auto d = h1_order_complex(load("diamond"));
    EXPECT_EQ(d.betti1, 0u);
    EXPECT_TRUE(d.torsion.empty());
    const auto c = h1_order_complex(load("crown22"));
    EXPECT_EQ(c.betti1, 1u);
    EXPECT_TRUE(c.torsion.empty());
    EXPECT_EQ(c.simplices, (std::array<std::size_t, 3>{4, 4, 0}));
    EXPECT_THROW(h1_order_complex(load("two_chains")), ValidationError);
}

TEST(H1, ProjectivePlane) {
    const Poset p = load("rp2_faces");
    ASSERT_EQ(p.size(), 31u);
    const auto h = h1_order_complex(p);
    EXPECT_EQ(h.betti1, 0u);
    EXPECT_EQ(h.torsion, std::vector<mpz_class>{2});
    EXPECT_EQ(hh1_dimension(h, 0), 0u);
    EXPECT_EQ(hh1_dimension(h, 2), 1u);
    EXPECT_EQ(hh1_dimension(h, 3), 0u);
}

TEST(HH1, CharacteristicMustBePrimeOrZero) {
    const auto h = h1_order_complex(load("diamond"));
    EXPECT_THROW(hh1_dimension(h, 4), ValidationError);
    EXPECT_THROW(hh1_dimension(h, 1), ValidationError);
    EXPECT_NO_THROW(hh1_dimension(h, 7));
}

TEST(HH1, CrownHasOneOuterDerivation) {
    EXPECT_EQ(hh1_dimension(load("crown22"), 0), 1u);
    EXPECT_EQ(hh1_dimension_via_derivations(IncidenceAlgebra(load("crown22"))), 1u);
}

TEST(HH1, DerivationQuotientMatchesHomology) {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 40; ++t) {
        const Poset p = testing_support::random_connected_poset(rng, 2 + t % 7, 35);
        EXPECT_EQ(hh1_dimension_via_derivations(IncidenceAlgebra(p)), hh1_dimension(p, 0));
    }
}

TEST(Pi1, ProjectivePlanePresentation) {
    const Poset p = load("rp2_faces");
    const auto oc = order_complex_2skeleton(p);
    const auto pres = pi1_presentation(p);
    // generators = edges outside a spanning tree
    EXPECT_EQ(pres.generators(), oc.edges.size() - (oc.vertices.size() - 1));
    EXPECT_EQ(pres.relators.size(), oc.triangles.size());
    const auto ab = abelianization(pres);
    EXPECT_EQ(ab.betti1, 0u);
    EXPECT_EQ(ab.torsion, std::vector<mpz_class>{2});
}

TEST(Pi1, AbelianizationMatchesHomology) {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 40; ++t) {
        const Poset p = testing_support::random_connected_poset(rng, 2 + t % 9, 30);
        const auto a = abelianization(pi1_presentation(p));
        const auto h = h1_order_complex(p);
        EXPECT_EQ(a.betti1, h.betti1);
        EXPECT_EQ(a.torsion, h.torsion);
    }
}

TEST(Pi1, FreeReduction) {
    const Word w{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}};
    EXPECT_EQ(free_reduce(w), (Word{{2, 1}}));
}

TEST(Crown, TwoByTwo) {
    const Poset p = load("crown22");
    const auto w = find_crown(p);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->n, 2u);
    EXPECT_EQ(w->kind, CrownKind::crown);
    EXPECT_TRUE(detail::is_crown_pattern(p, w->xs, w->ys));
    EXPECT_FALSE(is_strongly_simply_connected(p).strongly_simply_connected);
}

TEST(Crown, ExampleContainsCrown) {
    const Poset p = load("gldim3_example");
    const auto w = find_crown(p);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->n, 2u);
    std::vector<std::string> xs, ys;
    for (Element e : w->xs) xs.push_back(p.id(e));
    for (Element e : w->ys) ys.push_back(p.id(e));
    EXPECT_EQ(xs, (std::vector<std::string>{"b1", "b2"}));
    EXPECT_EQ(ys, (std::vector<std::string>{"c1", "c2"}));
}

TEST(Crown, TreesAndChainsAreCrownFree) {
    EXPECT_TRUE(is_strongly_simply_connected(testing_support::chain(5)).strongly_simply_connected);
    EXPECT_TRUE(is_strongly_simply_connected(load("diamond")).strongly_simply_connected);
    EXPECT_THROW(find_crown(load("diamond"), 1), ValidationError);
}

TEST(Crown, WitnessesSatisfyDefinition) {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 60; ++t) {
        const Poset p = testing_support::random_connected_poset(rng, 4 + t % 7, 40);
        if (auto w = find_crown(p, 6, CrownKind::weak)) {
            EXPECT_TRUE(detail::is_crown_pattern(p, w->xs, w->ys));
            EXPECT_EQ(classify_crown(p, w->xs, w->ys), w->kind);
        }
    }
}

TEST(Crown, CrownFreeImpliesSmallGlobalDimension) {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 60; ++t) {
        const Poset p = testing_support::random_connected_poset(rng, 2 + t % 7, 40);
        const auto ssc = is_strongly_simply_connected(p);
        ASSERT_GE(2 * ssc.searched_up_to + 1, std::min<std::size_t>(p.size(), 13));
        if (ssc.strongly_simply_connected) {
            EXPECT_LE(global_dimension(p), 2u);
            EXPECT_EQ(h1_order_complex(p).betti1, 0u);
        }
    }
}

TEST(CriticalQn, Example) {
    const Poset p = load("gldim3_example");
    const auto w = find_critical_qn(p);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->n, 2u);
    EXPECT_EQ(p.id(w->source), "a");
    EXPECT_EQ(p.id(w->sink), "d");
    EXPECT_FALSE(find_critical_qn(load("diamond")));
}

TEST(Crown, GlobalDimensionThreeYieldsCrown) {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 80; ++t) {
        const Poset p = testing_support::random_connected_poset(rng, 6 + t % 3, 45);
        if (global_dimension(p) >= 3) EXPECT_TRUE(find_crown(p)) << to_dot(p, "p");
    }
}
