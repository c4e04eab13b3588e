// Roots, bracket closure and structure constants.

#pragma once

#include "gradedlie/catalog.hpp"

#include <array>
#include <string>
#include <vector>

namespace gradedlie {

using Weight = std::vector<int>;

struct RootDatum {
    Weight root;
    Degree degree;
    GradedMatrix vector;
};

/// Eigenvalues of ad(h_i) on x for each Cartan element. Throws Error(NotEigenvector)
/// if x is zero, not a simultaneous eigenvector, or has a non-integer eigenvalue.
Weight weight_of(const GradedMatrix& x, const std::vector<GradedMatrix>& cartan);

struct RootDecomposition {
    std::vector<GradedMatrix> cartan;
    /// Nonzero roots, ordered by root (descending lexicographic) then degree.
    std::vector<RootDatum> roots;
    /// Basis of the zero-weight space.
    std::vector<GradedMatrix> zero_weight;
};

/// Splits every graded component into weight spaces of the diagonal Cartan subalgebra.
/// Root vectors are in reduced echelon form (leading coefficient +1).
/// Throws Error(Unsupported) if a nonzero root has multiplicity above one.
RootDecomposition root_decomposition(const AlgebraBasis& a);

struct PositiveSystem {
    /// Lexicographically positive roots, in decomposition order.
    std::vector<RootDatum> positive;
    std::array<std::vector<RootDatum>, 4> positive_by_degree;
    /// Indecomposable positive roots, ordered descending lexicographically.
    std::vector<RootDatum> simple;
};

PositiveSystem positive_and_simple_roots(const RootDecomposition& d);

/// Root table entry for so_q(2n+1) or osp(1,0|2n1,2n2).
struct ReferenceRoot {
    Weight root;
    Degree degree;
    Matrix vector;
};

/// The listed roots of so_q(2n+1) with degrees and root vectors (long roots j < k).
std::vector<ReferenceRoot> reference_roots_so_q(int n, int q);
/// The listed short and long roots of osp(1,0|2n1,2n2) (long roots j <= k).
std::vector<ReferenceRoot> reference_roots_osp(int n1, int n2);
/// eps_1 - eps_2, ..., eps_{n-1} - eps_n, eps_n with their degrees.
std::vector<std::pair<Weight, Degree>> reference_simple_roots_so_q(int n, int q);
/// delta_1 - delta_2, ..., delta_{N-1} - delta_N, delta_N with their degrees.
std::vector<std::pair<Weight, Degree>> reference_simple_roots_osp(int n1, int n2);

struct RootTableComparison {
    bool equal = true;
    std::vector<std::string> mismatches;
};

/// Set equality on (root, degree); vectors compared up to a nonzero scalar.
RootTableComparison compare_root_tables(const RootDecomposition& computed,
                                        const std::vector<ReferenceRoot>& reference);

/// Smallest bracket-closed span containing the generators.
AlgebraBasis generate_closure(const std::vector<GradedMatrix>& generators, Convention conv);

struct StructureConstant {
    std::size_t alpha;
    std::size_t beta;
    std::size_t gamma;
    Scalar value;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Sparse c with [[e_alpha, e_beta]] = sum_gamma c_{alpha beta}^gamma e_gamma.
struct StructureConstants {
    std::size_t dimension = 0;
    std::vector<Degree> degrees;
    Convention convention = Convention::GradedLieAlgebra;
    /// Nonzero constants sorted by (alpha, beta, gamma).
    std::vector<StructureConstant> entries;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

/// Throws Error(SpanEscape) if a bracket leaves the span.
StructureConstants structure_constants(const AlgebraBasis& a);

/// Dense (dimension^2) table of bracket coefficient vectors, for comparisons.
std::vector<Vector> bracket_table(const StructureConstants& c);

/// sum_gamma c_{alpha beta}^gamma e_gamma.
Matrix bracket_from_constants(const StructureConstants& c, const AlgebraBasis& a,
                              std::size_t alpha, std::size_t beta);

/// c_{ab}^g = -(-1)^{deg a . deg b} c_{ba}^g for all a, b, g.
bool graded_antisymmetric(const StructureConstants& c);

/// Graded Jacobi identity contracted on the constants; returns the failing triples.
std::vector<std::array<std::size_t, 3>> jacobi_failures_from_constants(const StructureConstants& c);

} // namespace gradedlie
