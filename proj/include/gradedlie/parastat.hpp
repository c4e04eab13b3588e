// Parafermion / paraboson generators and triple relations.

#pragma once

#include "gradedlie/catalog.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gradedlie {

enum class GeneratorKind { ParafermionSoQ, ParabosonOsp };

/// Creation/annihilation operators realized as short root vectors.
///
/// Index k (zero-based) belongs to the first ensemble when k < ensemble_split.
struct GeneratorFamily {
    GeneratorKind kind;
    /// (n, q) for parafermions, (n1, n2) for parabosons.
    int first;
    int second;
    std::vector<GradedMatrix> creation;
    std::vector<GradedMatrix> annihilation;
    std::size_t ensemble_split;

    std::size_t size() const noexcept { return creation.size(); }
    Convention convention() const noexcept;
    /// so_q(2n+1) or osp(1,0|2n1,2n2).
    AlgebraSpec ambient_spec() const;
    FormCondition form() const;
    bool same_ensemble(std::size_t j, std::size_t k) const noexcept {
        return (j < ensemble_split) == (k < ensemble_split);
    }
    /// sign = -1 selects annihilation, +1 creation.
    const GradedMatrix& op(std::size_t k, int sign) const {
        return sign < 0 ? annihilation.at(k) : creation.at(k);
    }
    /// All 2n generators: annihilators then creators.
    std::vector<GradedMatrix> all() const;
};

/// f_k^- = sqrt2 (e_{k,2n+1} - e_{2n+1,n+k}), f_k^+ = sqrt2 (e_{2n+1,k} - e_{n+k,2n+1}).
GeneratorFamily build_parafermions(int n, int q);
/// b_k^- = sqrt2 (e_{1,k+1} - e_{N+k+1,1}), b_k^+ = sqrt2 (e_{1,N+k+1} + e_{k+1,1}).
GeneratorFamily build_parabosons(int n1, int n2);

enum class RelationSet {
    PfSame,
    PbSame,
    RelCrossSoQ,
    RelCrossOsp,
    /// Relative parafermion relations of a mixed parafermion/paraboson system.
    MixedRelPf,
    /// Relative paraboson relations of a mixed parafermion/paraboson system.
    MixedRelPb,
};

std::string_view to_string(RelationSet s) noexcept;
RelationSet parse_relation_set(std::string_view name);
/// Human-readable statement of the relation family.
std::string_view relation_template(RelationSet s) noexcept;

struct RelationFailure {
    std::size_t j, k, l;
    int xi, eta, eps;
    Matrix expected;
    Matrix got;
};

struct RelationReport {
    RelationSet relation_set;
    std::size_t total_checked = 0;
    std::vector<RelationFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Evaluates [[ [[x_j^xi, x_k^eta]], x_l^eps ]] with the ambient graded bracket for every
/// admissible (j,k,l) and all eight sign patterns, against the coefficient formula.
/// Throws Error(InvalidParameter) for a family/set mismatch and Error(NoRealization)
/// for the mixed systems.
RelationReport verify_relations(const GeneratorFamily& fam, RelationSet set);

/// Bracket pattern of a nested product as two characters, 'c' for commutator and 'a'
/// for anticommutator, inner bracket first; derived from the generator degrees.
std::string bracket_pattern(const GeneratorFamily& fam, std::size_t j, std::size_t k,
                            std::size_t l);

/// Reduced bases of span{[[x_k^xi, x_l^eta]]} over same-ensemble and cross-ensemble pairs.
struct EnsembleSpans {
    std::vector<Matrix> same;
    std::vector<Matrix> cross;
};

EnsembleSpans ensemble_spans(const GeneratorFamily& fam);

} // namespace gradedlie
