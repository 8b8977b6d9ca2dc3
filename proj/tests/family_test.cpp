#include "pipedlab/family.hpp"

#include <gtest/gtest.h>

#include "pipedlab/classify.hpp"
#include "pipedlab/signature.hpp"
#include "test_util.hpp"

using namespace pipedlab;
using pipedlab::testing::random_valid_sextuple;

namespace {
bool has_member(const TetraFamily& fam, const EdgeSextuple& s) {
    return std::find(fam.members.begin(), fam.members.end(), s) !=
           fam.members.end();
}
}  // namespace

TEST(Family, RectangularHasSixMembers) {
    TetraFamily fam = tetra_family(EdgeSextuple{44, 125, 117, 244, 240, 267});
    EXPECT_EQ(fam.members.size(), 6u);
    EXPECT_EQ(fam.excluded_rows, 0);
    // axis permutations of the same brick
    EXPECT_TRUE(has_member(fam, EdgeSextuple{117, 125, 44, 267, 240, 244}));
    EXPECT_TRUE(has_member(fam, EdgeSextuple{240, 244, 44, 267, 117, 125}));
}

TEST(Family, AllPartnersIrrationalLeavesPurePermutations) {
    // partners of (3,4,5,6,7,8): 52, 80, 84 - none square
    TetraFamily fam = tetra_family(EdgeSextuple{3, 4, 5, 6, 7, 8});
    EXPECT_EQ(fam.members.size(), 6u);
    EXPECT_EQ(fam.excluded_rows, 18);
    EXPECT_TRUE(has_member(fam, EdgeSextuple{3, 6, 7, 4, 5, 8}));
    EXPECT_TRUE(has_member(fam, EdgeSextuple{7, 8, 5, 6, 3, 4}));
}

TEST(Family, SmallestTetrahedronCluster) {
    // partners of (5,6,5,9,10,13): 8, 13, 9 - all integers, so the family
    // spans 24 integer rows (12 distinct here because a == c).
    TetraFamily fam = tetra_family(EdgeSextuple{5, 6, 5, 9, 10, 13});
    EXPECT_EQ(fam.excluded_rows, 0);
    EXPECT_EQ(fam.members.size(), 12u);
    EXPECT_TRUE(has_member(fam, EdgeSextuple{5, 8, 5, 9, 10, 9}));
    EXPECT_TRUE(has_member(fam, EdgeSextuple{5, 6, 5, 13, 10, 9}));
    EXPECT_TRUE(has_member(fam, EdgeSextuple{5, 8, 5, 13, 10, 13}));
    // (5,6,5,13,10,13) has a different squared volume (40176 vs 26624),
    // so it belongs to a different family
    EXPECT_FALSE(has_member(fam, EdgeSextuple{5, 6, 5, 13, 10, 13}));
    EXPECT_EQ(volume_squared(gram_from_edges(EdgeSextuple{5, 6, 5, 9, 10, 13})),
              26624);
    EXPECT_EQ(volume_squared(gram_from_edges(EdgeSextuple{5, 6, 5, 13, 10, 13})),
              40176);
}

TEST(Family, SharedVolumeCoMembership) {
    // four of the five one-rational-body-area pipeds share volume 8781696
    // because they are one family
    TetraFamily fam = tetra_family(EdgeSextuple{99, 452, 463, 220, 209, 560});
    EXPECT_TRUE(has_member(fam, EdgeSextuple{99, 494, 463, 242, 209, 560}));
    EXPECT_TRUE(has_member(fam, EdgeSextuple{209, 450, 463, 220, 99, 494}));
    EXPECT_TRUE(has_member(fam, EdgeSextuple{209, 450, 463, 242, 99, 452}));
    EXPECT_FALSE(has_member(fam, EdgeSextuple{274, 298, 428, 507, 617, 325}));
    for (const EdgeSextuple& m : fam.members)
        EXPECT_EQ(volume_squared(gram_from_edges(m)),
                  Rational(BigInt(8781696) * 8781696));
}

TEST(Family, ClosureAndCanonicalInvariance) {
    std::mt19937_64 rng(20250811);
    for (int i = 0; i < 100; ++i) {
        EdgeSextuple s = random_valid_sextuple(rng);
        TetraFamily fam = tetra_family(s);
        EdgeSextuple canon = canonical_form(s);
        EXPECT_EQ(canon, fam.members.front());
        for (const EdgeSextuple& m : fam.members) {
            TetraFamily again = tetra_family(m);
            EXPECT_EQ(again.members, fam.members) << s.str();
            EXPECT_EQ(canonical_form(m), canon);
        }
        EXPECT_EQ(canonical_form(canon), canon);
    }
}

TEST(Family, SizeBoundsAndInvariants) {
    std::mt19937_64 rng(7777);
    for (int i = 0; i < 300; ++i) {
        EdgeSextuple s = random_valid_sextuple(rng);
        TetraFamily fam = tetra_family(s);
        EXPECT_GE(fam.members.size(), 1u);
        EXPECT_LE(fam.members.size(), 24u);
        CategoryKey cat = category_of(compute_signature(s));
        PipedClass cls = classify(sign_vector(gram_from_edges(s)));
        Rational vol2 = volume_squared(gram_from_edges(s));
        for (const EdgeSextuple& m : fam.members) {
            EXPECT_EQ(category_of(compute_signature(m)), cat) << m.str();
            EXPECT_EQ(classify(sign_vector(gram_from_edges(m))), cls);
            EXPECT_EQ(volume_squared(gram_from_edges(m)), vol2);
        }
    }
}
