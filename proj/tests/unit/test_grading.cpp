#include "gradedlie/error.hpp"
#include "gradedlie/grading.hpp"

#include <gtest/gtest.h>

using namespace gradedlie;

namespace {

constexpr Degree d00{0, 0}, d01{0, 1}, d10{1, 0}, d11{1, 1};
constexpr auto LA = Convention::GradedLieAlgebra;
constexpr auto LSA = Convention::GradedLieSuperalgebra;

// 1-based entry degree, matching the usual e_{ij} labels.
Degree at1(const DegreePartition& p, std::size_t i, std::size_t j) {
    return p.entry_degree(i - 1, j - 1);
}

} // namespace

TEST(Degree, AdditionExamples) {
    EXPECT_EQ(add_degrees(d01, d10), d11);
    EXPECT_EQ(add_degrees(d00, d11), d11);
    EXPECT_EQ(add_degrees(d11, d11), d00);
}

TEST(Degree, GroupLaws) {
    for (Degree a : kAllDegrees) {
        EXPECT_EQ(a + d00, a);
        EXPECT_EQ(a + a, d00);
        for (Degree b : kAllDegrees) {
            EXPECT_EQ(a + b, b + a);
            for (Degree c : kAllDegrees)
                EXPECT_EQ((a + b) + c, a + (b + c));
        }
    }
}

TEST(Degree, StringRoundTrip) {
    for (Degree a : kAllDegrees)
        EXPECT_EQ(Degree::parse(a.to_string()), a);
    EXPECT_EQ(d10.to_string(), "10");
    EXPECT_THROW(Degree::parse("2"), Error);
    EXPECT_THROW(Degree::parse("012"), Error);
    EXPECT_THROW(Degree::parse("0x"), Error);
}

TEST(BracketSign, Examples) {
    EXPECT_EQ(bracket_sign(LA, d01, d10), -1);
    EXPECT_EQ(bracket_sign(LSA, d10, d01), 1);
    for (Degree b : kAllDegrees) {
        EXPECT_EQ(bracket_sign(LA, d00, b), 1);
        EXPECT_EQ(bracket_sign(LSA, d00, b), 1);
    }
}

TEST(BracketSign, SelfPairing) {
    for (Degree a : kAllDegrees)
        EXPECT_EQ(bracket_sign(LA, a, a), 1);
    EXPECT_EQ(bracket_sign(LSA, d00, d00), 1);
    EXPECT_EQ(bracket_sign(LSA, d11, d11), 1);
    EXPECT_EQ(bracket_sign(LSA, d10, d10), -1);
    EXPECT_EQ(bracket_sign(LSA, d01, d01), -1);
}

TEST(BracketSign, Symmetric) {
    for (auto conv : {LA, LSA})
        for (Degree a : kAllDegrees)
            for (Degree b : kAllDegrees)
                EXPECT_EQ(bracket_sign(conv, a, b), bracket_sign(conv, b, a));
}

TEST(BracketSign, FullTables) {
    // rows/cols in order 00, 01, 10, 11
    const int la[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    const int lsa[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(bracket_sign(LA, Degree::from_index(i), Degree::from_index(j)), la[i][j]);
            EXPECT_EQ(bracket_sign(LSA, Degree::from_index(i), Degree::from_index(j)), lsa[i][j]);
        }
}

TEST(EntryDegree, Examples) {
    const auto gl = DegreePartition::gl_pqrs(1, 1, 1, 1);
    EXPECT_EQ(at1(gl, 2, 3), d11);
    const auto so = DegreePartition::so_q(2, 1);
    EXPECT_EQ(at1(so, 1, 5), d01);
    for (const auto& p : {gl, so, DegreePartition::osp(0, 0, 2, 1)})
        for (std::size_t i = 0; i < p.size(); ++i)
            EXPECT_EQ(p.entry_degree(i, i), d00);
}

TEST(EntryDegree, OutOfRange) {
    const auto p = DegreePartition::gl_pqrs(1, 1, 0, 0);
    EXPECT_THROW(p.entry_degree(2, 0), Error);
    EXPECT_THROW(p.entry_degree(0, 2), Error);
    try {
        p.entry_degree(5, 0);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
}

// Block labels of the generic gl_{p,q,r,s} matrix: the block in row-band u, column-band v
// has degree band(u) + band(v).
TEST(CanonicalPartition, GlBlockLabels) {
    const Degree band[4] = {d00, d01, d10, d11};
    const auto p = DegreePartition::gl_pqrs(2, 1, 3, 1);
    const std::size_t sizes[4] = {2, 1, 3, 1};
    std::vector<std::size_t> owner;
    for (std::size_t b = 0; b < 4; ++b)
        owner.insert(owner.end(), sizes[b], b);
    ASSERT_EQ(p.size(), owner.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            EXPECT_EQ(p.entry_degree(i, j), band[owner[i]] + band[owner[j]]);
    // block pattern for p=q=r=s=1
    const char* pattern[4][4] = {{"00", "01", "10", "11"},
                                 {"01", "00", "11", "10"},
                                 {"10", "11", "00", "01"},
                                 {"11", "10", "01", "00"}};
    const auto g = DegreePartition::gl_pqrs(1, 1, 1, 1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(g.entry_degree(i, j).to_string(), pattern[i][j]);
}

// so_q(2n+1) block degrees: the 2n x 2n part
// splits into q / n-q bands, the last row and column carry (0,1) on the q-bands and
// (1,0) on the (n-q)-bands.
TEST(CanonicalPartition, SoQBlockLabels) {
    for (int n = 2; n <= 5; ++n)
        for (int q = 1; q < n; ++q) {
            const auto p = DegreePartition::so_q(n, q);
            ASSERT_EQ(p.size(), static_cast<std::size_t>(2 * n + 1));
            auto first = [&](std::size_t i) { return (i % n) < static_cast<std::size_t>(q); };
            const std::size_t last = 2 * n;
            for (std::size_t i = 0; i < last; ++i) {
                const Degree edge = first(i) ? d01 : d10;
                EXPECT_EQ(p.entry_degree(i, last), edge);
                EXPECT_EQ(p.entry_degree(last, i), edge);
                for (std::size_t j = 0; j < last; ++j)
                    EXPECT_EQ(p.entry_degree(i, j), first(i) == first(j) ? d00 : d11);
            }
            EXPECT_EQ(p.entry_degree(last, last), d00);
        }
}

TEST(CanonicalPartition, SuperAndOsp) {
    EXPECT_EQ(DegreePartition::gl_super(1, 2, 1, 1).to_string(), "00,11,11,10,01");
    EXPECT_EQ(DegreePartition::osp(0, 0, 1, 1).to_string(), "00,10,01,10,01");
    EXPECT_EQ(DegreePartition::osp(0, 0, 2, 1).to_string(), "00,10,10,01,10,10,01");
    EXPECT_EQ(DegreePartition::osp(1, 1, 1, 0).to_string(), "00,11,00,11,00,10,10");
}

// The osp(1,0|2n1,2n2) block form: first row/column odd-type (1,0)/(0,1), the
// 2N x 2N part (0,0) within an ensemble and (1,1) across.
TEST(CanonicalPartition, OspBlockLabels) {
    const int n1 = 2, n2 = 1, N = n1 + n2;
    const auto p = DegreePartition::osp(0, 0, n1, n2);
    auto first = [&](std::size_t i) { return static_cast<int>((i - 1) % N) < n1; };
    for (std::size_t i = 1; i <= static_cast<std::size_t>(2 * N); ++i) {
        EXPECT_EQ(p.entry_degree(0, i), first(i) ? d10 : d01);
        for (std::size_t j = 1; j <= static_cast<std::size_t>(2 * N); ++j)
            EXPECT_EQ(p.entry_degree(i, j), first(i) == first(j) ? d00 : d11);
    }
}

TEST(CanonicalPartition, SoQRange) {
    EXPECT_THROW(DegreePartition::so_q(2, 0), Error);
    EXPECT_THROW(DegreePartition::so_q(2, 2), Error);
    EXPECT_THROW(DegreePartition::so_q(1, 1), Error);
}

TEST(PartitionText, RoundTrip) {
    const auto p = DegreePartition::so_q(3, 2);
    EXPECT_EQ(DegreePartition::parse(p.to_string()), p);
    EXPECT_THROW(DegreePartition::parse("00,2"), Error);
    EXPECT_THROW(DegreePartition::parse(""), Error);
}
