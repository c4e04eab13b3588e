#include "gradedlie/error.hpp"
#include "gradedlie/parastat.hpp"

#include <gtest/gtest.h>

using namespace gradedlie;

namespace {

constexpr Degree d00{0, 0}, d01{0, 1}, d10{1, 0}, d11{1, 1};
const Scalar kSqrt2 = Scalar::sqrt2();

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i - 1, j - 1); }

Matrix nested(const GeneratorFamily& fam, std::size_t j, int xi, std::size_t k, int eta,
              std::size_t l, int eps) {
    const auto conv = fam.convention();
    return graded_bracket(graded_bracket(fam.op(j, xi), fam.op(k, eta), conv), fam.op(l, eps), conv)
        .mat();
}

} // namespace

TEST(Parafermions, Construction) {
    const auto f = build_parafermions(2, 1);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.annihilation[0].mat(), kSqrt2 * (E(5, 1, 5) - E(5, 5, 3)));
    EXPECT_EQ(f.annihilation[0].degree(), d01);
    EXPECT_EQ(f.creation[1].degree(), d10);
    EXPECT_EQ(f.ensemble_split, 1u);
    for (const auto& g : f.all())
        EXPECT_TRUE(form_membership(g, f.form()));
    EXPECT_THROW(build_parafermions(2, 2), Error);
}

TEST(Parafermions, DegreesByEnsemble) {
    const auto f = build_parafermions(4, 3);
    for (std::size_t k = 0; k < 4; ++k) {
        const Degree want = k < 3 ? d01 : d10;
        EXPECT_EQ(f.creation[k].degree(), want);
        EXPECT_EQ(f.annihilation[k].degree(), want);
    }
}

TEST(Parabosons, Construction) {
    const auto b = build_parabosons(1, 1);
    EXPECT_EQ(b.annihilation[0].mat(), kSqrt2 * (E(5, 1, 2) - E(5, 4, 1)));
    EXPECT_EQ(b.annihilation[0].degree(), d10);
    EXPECT_EQ(b.creation[1].degree(), d01);
    for (const auto& g : b.all())
        EXPECT_TRUE(form_membership(g, b.form()));
    EXPECT_THROW(build_parabosons(0, 1), Error);
    EXPECT_THROW(build_parabosons(1, 0), Error);
}

TEST(Relations, SingleSameEnsembleExample) {
    const auto f = build_parafermions(2, 1);
    EXPECT_EQ(nested(f, 0, -1, 0, +1, 0, -1), Scalar(2) * f.annihilation[0].mat());
}

TEST(Relations, EqualSignsVanish) {
    const auto b = build_parabosons(2, 1);
    for (std::size_t j = 0; j < b.size(); ++j)
        for (int s : {-1, 1})
            EXPECT_TRUE(nested(b, j, s, j, s, j, s).is_zero());
}

TEST(Relations, FullSuitesPass) {
    for (int n = 2; n <= 3; ++n)
        for (int q = 1; q < n; ++q) {
            const auto f = build_parafermions(n, q);
            EXPECT_TRUE(verify_relations(f, RelationSet::PfSame).passed());
            EXPECT_TRUE(verify_relations(f, RelationSet::RelCrossSoQ).passed());
        }
    for (auto [n1, n2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
        const auto b = build_parabosons(n1, n2);
        EXPECT_TRUE(verify_relations(b, RelationSet::PbSame).passed());
        EXPECT_TRUE(verify_relations(b, RelationSet::RelCrossOsp).passed());
    }
}

TEST(Relations, EnumerationSizes) {
    // same-ensemble: (q^3 + (n-q)^3) index triples; cross: 2 q (n-q) ordered pairs times n
    for (int n = 2; n <= 4; ++n)
        for (int q = 1; q < n; ++q) {
            const auto f = build_parafermions(n, q);
            const std::size_t same = q * q * q + (n - q) * (n - q) * (n - q);
            const std::size_t cross = 2 * q * (n - q) * n;
            EXPECT_EQ(verify_relations(f, RelationSet::PfSame).total_checked, 8 * same);
            EXPECT_EQ(verify_relations(f, RelationSet::RelCrossSoQ).total_checked, 8 * cross);
        }
    EXPECT_EQ(verify_relations(build_parafermions(2, 1), RelationSet::PfSame).total_checked, 16u);
    EXPECT_EQ(verify_relations(build_parafermions(2, 1), RelationSet::RelCrossSoQ).total_checked,
              32u);
}

TEST(Relations, MismatchesAndMissingRealizations) {
    const auto f = build_parafermions(2, 1);
    const auto b = build_parabosons(1, 1);
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(kind_of([&] { verify_relations(f, RelationSet::PbSame); }),
              ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([&] { verify_relations(b, RelationSet::RelCrossSoQ); }),
              ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([&] { verify_relations(f, RelationSet::MixedRelPf); }),
              ErrorKind::NoRealization);
    EXPECT_EQ(kind_of([&] { verify_relations(b, RelationSet::MixedRelPb); }),
              ErrorKind::NoRealization);
    EXPECT_FALSE(relation_template(RelationSet::MixedRelPb).empty());
}

TEST(Relations, SetNames) {
    for (auto s : {RelationSet::PfSame, RelationSet::PbSame, RelationSet::RelCrossSoQ,
                   RelationSet::RelCrossOsp, RelationSet::MixedRelPf, RelationSet::MixedRelPb})
        EXPECT_EQ(parse_relation_set(to_string(s)), s);
    EXPECT_THROW(parse_relation_set("pf"), Error);
}

// The (anti)commutator pattern of each relation emerges from the degrees.
TEST(Relations, BracketPatternsFromDegrees) {
    const auto f = build_parafermions(3, 1);
    EXPECT_EQ(bracket_pattern(f, 0, 0, 0), "cc");  // [[f,f],f], same ensemble
    EXPECT_EQ(bracket_pattern(f, 1, 2, 1), "cc");
    EXPECT_EQ(bracket_pattern(f, 0, 1, 0), "aa");  // {{f_j,f_k},f_l} across ensembles
    EXPECT_EQ(bracket_pattern(f, 0, 1, 1), "aa");
    const auto b = build_parabosons(1, 2);
    EXPECT_EQ(bracket_pattern(b, 0, 0, 0), "ac");  // [{b,b},b], same ensemble
    EXPECT_EQ(bracket_pattern(b, 1, 2, 2), "ac");
    EXPECT_EQ(bracket_pattern(b, 0, 1, 0), "ca");  // {[b_j,b_k],b_l} across ensembles
    EXPECT_EQ(bracket_pattern(b, 0, 2, 2), "ca");
}

TEST(Spans, SameAndCrossEnsembles) {
    for (auto [n, q] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
        const auto f = build_parafermions(n, q);
        const auto a = build(f.ambient_spec());
        const auto s = ensemble_spans(f);
        std::vector<Matrix> g00, g11;
        for (const auto& x : a.component(d00))
            g00.push_back(x.mat());
        for (const auto& x : a.component(d11))
            g11.push_back(x.mat());
        EXPECT_TRUE(same_span(s.same, g00));
        EXPECT_TRUE(same_span(s.cross, g11));
    }
    const auto b = build_parabosons(2, 1);
    const auto a = build(b.ambient_spec());
    const auto s = ensemble_spans(b);
    EXPECT_EQ(s.same.size(), a.dim(d00));
    EXPECT_EQ(s.cross.size(), a.dim(d11));
}
