#include "gradedlie/algebra.hpp"
#include "gradedlie/error.hpp"
#include "gradedlie/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gradedlie;

namespace {

Matrix E(std::size_t n, std::size_t i, std::size_t j) { return Matrix::unit(n, i - 1, j - 1); }

const Scalar kSqrt2 = Scalar::sqrt2();

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

} // namespace

TEST(Rational, CanonicalForm) {
    Rational x(6, -4);
    EXPECT_EQ(x.num(), -3);
    EXPECT_EQ(x.den(), 2);
    EXPECT_EQ(x.to_fraction(), "-3/2");
    EXPECT_EQ(Rational(0, 5).to_fraction(), "0/1");
    EXPECT_EQ(Rational(4).to_fraction(), "4/1");
    EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational(1, 0), Error);
    EXPECT_THROW(Rational::parse("1/x"), Error);
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::int64_t{1} << 62);
    try {
        (void)(big * big);
        FAIL() << "expected overflow";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Overflow);
    }
}

TEST(Scalar, ProductRule) {
    // (1 + 2 sqrt2)(3 - sqrt2) = 3 - 4 + (6 - 1) sqrt2
    Scalar a(Rational(1), Rational(2)), b(Rational(3), Rational(-1));
    EXPECT_EQ(a * b, Scalar(Rational(-1), Rational(5)));
    EXPECT_EQ(kSqrt2 * kSqrt2, Scalar(2));
}

TEST(Scalar, ZeroAndText) {
    EXPECT_TRUE(Scalar().is_zero());
    EXPECT_FALSE(kSqrt2.is_zero());
    EXPECT_EQ(Scalar(2).to_string(), "2");
    EXPECT_EQ((-kSqrt2).to_string(), "-sqrt2");
    EXPECT_EQ(Scalar(Rational(1, 2), Rational(3)).to_string(), "1/2+3*sqrt2");
    EXPECT_THROW(Scalar().inverse(), Error);
}

TEST(Scalar, FieldAxiomsOnRandomValues) {
    std::mt19937 rng(20240611);
    for (int t = 0; t < 300; ++t) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, Scalar());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Scalar(1));
            // (r + s sqrt2)^{-1} = (r - s sqrt2) / (r^2 - 2 s^2)
            const Rational norm = a.r() * a.r() - Rational(2) * a.s() * a.s();
            EXPECT_EQ(a.inverse(), Scalar(a.r() / norm, -a.s() / norm));
        }
    }
}

TEST(MatMul, Examples) {
    EXPECT_EQ(mat_mul(E(5, 1, 5), E(5, 5, 1)), E(5, 1, 1));
    EXPECT_TRUE(mat_mul(E(5, 1, 5), E(5, 3, 5)).is_zero());
    EXPECT_EQ(mat_mul(kSqrt2 * E(2, 1, 2), kSqrt2 * E(2, 2, 1)), Scalar(2) * E(2, 1, 1));
}

TEST(MatMul, DimensionMismatch) {
    try {
        mat_mul(Matrix(2), Matrix(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(MatMul, AgreesWithEntrywiseDefinition) {
    std::mt19937 rng(7);
    Matrix a(4), b(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            a(i, j) = random_scalar(rng);
            b(i, j) = (i + j) % 3 ? random_scalar(rng) : Scalar();
        }
    const Matrix c = mat_mul(a, b);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar s;
            for (std::size_t k = 0; k < 4; ++k)
                s += a(i, k) * b(k, j);
            EXPECT_EQ(c(i, j), s);
        }
}

TEST(SpanBasis, Examples) {
    {
        const std::vector<Matrix> v{E(2, 1, 2), Scalar(2) * E(2, 1, 2)};
        EXPECT_EQ(span_basis(v).size(), 1u);
    }
    {
        const std::vector<Matrix> v{E(2, 1, 2), E(2, 2, 1)};
        EXPECT_EQ(span_basis(v).size(), 2u);
    }
    {
        const std::vector<Matrix> v{kSqrt2 * E(2, 1, 2), E(2, 1, 2)};
        const auto b = span_basis(v);
        ASSERT_EQ(b.size(), 1u);
        EXPECT_EQ(b[0], v[0]);
    }
}

TEST(SpanBasis, Idempotent) {
    std::mt19937 rng(3);
    std::vector<Matrix> v;
    for (int t = 0; t < 6; ++t) {
        Matrix m(3);
        for (int k = 0; k < 3; ++k)
            m(rng() % 3, rng() % 3) = random_scalar(rng);
        v.push_back(m);
    }
    v.push_back(v[0] + kSqrt2 * v[1]);
    const auto once = span_basis(v);
    const auto twice = span_basis(once);
    EXPECT_EQ(once.size(), twice.size());
    EXPECT_TRUE(same_span(once, twice));
    EXPECT_TRUE(same_span(once, v));
    EXPECT_EQ(rank(v), once.size());
}

TEST(ReducedBasis, CanonicalForSameSpan) {
    const std::vector<Matrix> a{E(2, 1, 1) + E(2, 2, 2), E(2, 1, 1) - E(2, 2, 2)};
    const std::vector<Matrix> b{E(2, 2, 2), Scalar(3) * E(2, 1, 1)};
    EXPECT_EQ(reduced_basis(a), reduced_basis(b));
    EXPECT_FALSE(same_span(a, std::vector<Matrix>{E(2, 1, 1)}));
}

TEST(Echelon, CoordinatesAndResidual) {
    EchelonBasis e(3);
    EXPECT_TRUE(e.insert({Scalar(1), Scalar(1), Scalar()}));
    EXPECT_TRUE(e.insert({Scalar(), kSqrt2, Scalar(1)}));
    EXPECT_FALSE(e.insert({Scalar(2), Scalar(2), Scalar()}));
    const Vector v{Scalar(1), Scalar(1) + kSqrt2, Scalar(1)};
    EXPECT_TRUE(e.contains(v));
    auto c = e.coordinates(v);
    ASSERT_TRUE(c);
    Vector back(3);
    for (std::size_t k = 0; k < e.rank(); ++k)
        for (std::size_t i = 0; i < 3; ++i)
            back[i] += (*c)[k] * e.rows()[k][i];
    EXPECT_EQ(back, v);
    EXPECT_FALSE(e.coordinates({Scalar(), Scalar(), Scalar(1)}).has_value());
}

TEST(Nullspace, AntisymmetricTwoByTwo) {
    const std::vector<UnitIndex> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    auto sol = matrix_nullspace(2, all, [](const Matrix& a) {
        const Matrix r = a + a.transpose();
        return Vector(r.flat().begin(), r.flat().end());
    });
    ASSERT_EQ(sol.size(), 1u);
    EXPECT_EQ(sol[0], E(2, 1, 2) - E(2, 2, 1));
}

TEST(Nullspace, TracelessTwoByTwo) {
    const std::vector<UnitIndex> all{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    auto sol = matrix_nullspace(2, all, [](const Matrix& a) { return Vector{a.trace()}; });
    EXPECT_EQ(sol.size(), 3u);
    for (const auto& m : sol)
        EXPECT_TRUE(m.trace().is_zero());
}

TEST(Nullspace, KFormCondition) {
    const int n = 2, q = 1;
    const auto part = DegreePartition::so_q(n, q);
    const FormCondition cond{so_q_form(n, q), TransposeKind::GradedTranspose};
    std::vector<UnitIndex> all;
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = 0; j < part.size(); ++j)
            all.emplace_back(i, j);
    const auto sol = matrix_nullspace(part.size(), all, [&](const Matrix& a) {
        const Matrix r = form_residual(a, part, cond);
        return Vector(r.flat().begin(), r.flat().end());
    });
    EXPECT_EQ(sol.size(), 10u);
    for (const auto& m : sol)
        EXPECT_TRUE(form_residual(m, part, cond).is_zero());
}

TEST(Nullspace, VectorsSatisfyConstraintsExactly) {
    const std::vector<Vector> rows{{Scalar(1), kSqrt2, Scalar(), Scalar(-1)},
                                   {Scalar(), Scalar(1), Scalar(1), Scalar(2)}};
    const auto sol = nullspace(rows, 4);
    EXPECT_EQ(sol.size(), 2u);
    for (const auto& v : sol)
        for (const auto& r : rows) {
            Scalar dot;
            for (std::size_t i = 0; i < 4; ++i)
                dot += r[i] * v[i];
            EXPECT_TRUE(dot.is_zero());
        }
}
