// The graded matrix algebra families and their bases.

#pragma once

#include "gradedlie/algebra.hpp"
#include "gradedlie/linalg.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gradedlie {

enum class Family { GlPqrs, SlPqrs, SoPqrs, SoQ, GlSuper, SlSuper, Osp };

std::string_view to_string(Family f) noexcept;
/// "gl_pqrs", "sl_pqrs", "so_pqrs", "so_q", "gl_super", "sl_super", "osp".
Family parse_family(std::string_view name);

/// Which algebra to build.
///
/// params by family: gl/sl/so_pqrs [p,q,r,s]; so_q [n,q]; gl/sl_super [m1,m2,n1,n2];
/// osp [m1,m2,n1,n2] for osp(2m1+1,2m2|2n1,2n2). `partition` overrides the default
/// grading for osp with m1 or m2 nonzero.
struct AlgebraSpec {
    Family family;
    std::vector<int> params;
    std::optional<DegreePartition> partition;

    Convention convention() const noexcept;
    /// Throws Error(InvalidParameter) when params are out of range.
    void validate() const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

enum class TraceCondition { None, Trace, Supertrace };

/// Degree-ordered basis of a graded matrix algebra.
///
/// Within each degree the basis is in reduced echelon form over the row-major matrix
/// units, so coordinates of an element are its entries at the pivot positions.
class AlgebraBasis {
public:
    AlgebraBasis(std::optional<AlgebraSpec> spec, DegreePartition partition, Convention conv,
                 std::span<const Matrix> spanning, std::optional<FormCondition> form,
                 TraceCondition trace);

    const std::optional<AlgebraSpec>& spec() const noexcept { return spec_; }
    const DegreePartition& partition() const noexcept { return partition_; }
    Convention convention() const noexcept { return conv_; }
    const std::vector<GradedMatrix>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::size_t matrix_size() const noexcept { return partition_.size(); }
    const std::array<std::size_t, 4>& dims_by_degree() const noexcept { return dims_; }
    std::size_t dim(Degree d) const noexcept { return dims_[d.index()]; }
    /// Index of the first basis element of degree d.
    std::size_t offset(Degree d) const noexcept { return offsets_[d.index()]; }
    std::vector<GradedMatrix> component(Degree d) const;
    const std::optional<FormCondition>& form() const noexcept { return form_; }
    TraceCondition trace_condition() const noexcept { return trace_; }

    /// True when x lies in the span of the basis.
    bool contains(const Matrix& x) const;
    /// Coefficients on basis(), or nullopt when x escapes the span.
    std::optional<Vector> coordinates(const Matrix& x) const;
    /// Checks the defining condition (form and trace) rather than span membership.
    bool satisfies_definition(const Matrix& x) const;

    /// First basis pair whose bracket leaves the span, if any.
    std::optional<std::pair<std::size_t, std::size_t>> closure_violation() const;

private:
    std::optional<AlgebraSpec> spec_;
    DegreePartition partition_;
    Convention conv_;
    std::vector<GradedMatrix> basis_;
    std::array<std::size_t, 4> dims_{};
    std::array<std::size_t, 4> offsets_{};
    std::vector<EchelonBasis> echelons_;
    std::optional<FormCondition> form_;
    TraceCondition trace_;
};

/// Grading used by build() for this spec.
DegreePartition canonical_partition(const AlgebraSpec& spec);
/// Form condition of the family, if it has one.
std::optional<FormCondition> defining_form(const AlgebraSpec& spec);
TraceCondition defining_trace(const AlgebraSpec& spec);

/// Builds the algebra and verifies membership, independence and closure.
///
/// gl/sl families, so_q and osp with m1 = m2 = 0 come from their explicit block forms;
/// so_pqrs and general osp are solved from their defining conditions. General osp is
/// additionally checked for the graded Jacobi identity before it is returned.
AlgebraBasis build(const AlgebraSpec& spec);

/// The algebra obtained purely as the solution space of the family's defining
/// conditions, degree by degree. Independent of the block-form constructors.
AlgebraBasis build_from_conditions(const AlgebraSpec& spec);

/// Closed-form graded dimensions of so_q(2n+1), indexed by Degree::index().
/// The (0,0) entry is the complement n(2n+1) - 2n - 4q(n-q).
std::array<std::size_t, 4> dims_formula_so_q(int n, int q);
/// 2n^2 - n - 4q(n-q)^2, a circulating closed form for dim g_(0,0) that disagrees with
/// the complement rule (it is negative at n = 3, q = 1). Only ever reported, never trusted.
long reference_dim00_so_q(int n, int q);

/// Diagonal Cartan basis for so_q, canonical osp and the gl/sl families.
/// Throws Error(Unsupported) for so_pqrs and non-canonical osp.
std::vector<GradedMatrix> cartan_basis(const AlgebraBasis& a);

} // namespace gradedlie
