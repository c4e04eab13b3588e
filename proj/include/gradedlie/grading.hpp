// Z2xZ2 degrees, sign conventions, index partitions.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gradedlie {

/// Element (a1, a2) of Z2 x Z2.
class Degree {
public:
    constexpr Degree() noexcept = default;
    /// Components are reduced mod 2.
    constexpr Degree(int a1, int a2) noexcept
        : a1_(static_cast<std::uint8_t>(a1 & 1)), a2_(static_cast<std::uint8_t>(a2 & 1)) {}

    constexpr int a1() const noexcept { return a1_; }
    constexpr int a2() const noexcept { return a2_; }

    /// Position in the fixed order (0,0), (0,1), (1,0), (1,1).
    constexpr std::size_t index() const noexcept { return 2u * a1_ + a2_; }
    static constexpr Degree from_index(std::size_t i) noexcept {
        return Degree(static_cast<int>(i >> 1), static_cast<int>(i & 1));
    }

    /// "00", "01", "10" or "11".
    std::string to_string() const;
    /// Inverse of to_string; throws Error(Parse).
    static Degree parse(std::string_view text);

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        return Degree(a.a1_ ^ b.a1_, a.a2_ ^ b.a2_);
    }
    friend constexpr bool operator==(Degree, Degree) noexcept = default;
    friend constexpr auto operator<=>(Degree a, Degree b) noexcept {
        return a.index() <=> b.index();
    }

private:
    std::uint8_t a1_ = 0;
    std::uint8_t a2_ = 0;
};

inline constexpr std::array<Degree, 4> kAllDegrees{
    Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)};

enum class Convention { GradedLieAlgebra, GradedLieSuperalgebra };

std::string_view to_string(Convention conv) noexcept;

constexpr Degree add_degrees(Degree a, Degree b) noexcept { return a + b; }

/// a.b mod 2: a1 b2 - a2 b1 for graded Lie algebras, a1 b1 + a2 b2 for superalgebras.
constexpr int pairing(Convention conv, Degree a, Degree b) noexcept {
    if (conv == Convention::GradedLieAlgebra)
        return (a.a1() * b.a2() + a.a2() * b.a1()) & 1;
    return (a.a1() * b.a1() + a.a2() * b.a2()) & 1;
}

/// (-1)^{a.b}.
constexpr int bracket_sign(Convention conv, Degree a, Degree b) noexcept {
    return pairing(conv, a, b) ? -1 : 1;
}

/// Degree attached to each row/column index; e_{ij} has degree d_i + d_j.
class DegreePartition {
public:
    DegreePartition() = default;
    explicit DegreePartition(std::vector<Degree> index_degrees)
        : degrees_(std::move(index_degrees)) {}
    DegreePartition(std::initializer_list<Degree> index_degrees) : degrees_(index_degrees) {}

    std::size_t size() const noexcept { return degrees_.size(); }
    const std::vector<Degree>& index_degrees() const noexcept { return degrees_; }

    /// Zero-based index; throws Error(IndexOutOfRange).
    Degree at(std::size_t i) const;
    Degree operator[](std::size_t i) const noexcept { return degrees_[i]; }

    /// Degree of the matrix unit e_{ij}, zero-based; throws Error(IndexOutOfRange).
    Degree entry_degree(std::size_t i, std::size_t j) const;

    /// Comma-separated degree strings, e.g. "00,01,01".
    std::string to_string() const;
    static DegreePartition parse(std::string_view text);

    /// ((0,0)^p, (0,1)^q, (1,0)^r, (1,1)^s).
    static DegreePartition gl_pqrs(int p, int q, int r, int s);
    /// Row/column order q, n-q, q, n-q, 1 with degrees (0,0), (1,1), (0,0), (1,1), (0,1).
    static DegreePartition so_q(int n, int q);
    /// ((0,0)^{m1}, (1,1)^{m2}, (1,0)^{n1}, (0,1)^{n2}).
    static DegreePartition gl_super(int m1, int m2, int n1, int n2);
    /// osp(2m1+1, 2m2 | 2n1, 2n2) in the order of its J form:
    /// (00^{m1} 11^{m2} | 00^{m1} 11^{m2} | 00 | 10^{n1} 01^{n2} | 10^{n1} 01^{n2}).
    static DegreePartition osp(int m1, int m2, int n1, int n2);

    friend bool operator==(const DegreePartition&, const DegreePartition&) = default;

private:
    std::vector<Degree> degrees_;
};

} // namespace gradedlie
