// Exhaustive axiom and table checks over an algebra.

#pragma once

#include "gradedlie/catalog.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gradedlie {

struct CheckResult {
    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// First few failure descriptions.
    std::vector<std::string> details;

    bool passed() const noexcept { return failed == 0; }
    void fail(std::string what);
};

/// Number of worker threads for the exhaustive loops: GRADEDLIE_THREADS if set to a
/// positive integer, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// deg [[x,y]] = deg x + deg y over all basis pairs.
CheckResult check_grading(const AlgebraBasis& a);
/// [[x,y]] = -(-1)^{a.b} [[y,x]] over all basis pairs.
CheckResult check_symmetry(const AlgebraBasis& a);
/// Graded Jacobi identity over all ordered basis triples.
CheckResult check_jacobi(const AlgebraBasis& a);
/// Every pairwise bracket lies in the span.
CheckResult check_closure(const AlgebraBasis& a);
/// Every basis element and every pairwise bracket satisfies the defining form/trace.
CheckResult check_definition(const AlgebraBasis& a);
/// tr [[A,B]] = 0 (graded Lie algebras) or Str [[A,B]] = 0 (superalgebras) over pairs.
CheckResult check_trace_vanishing(const AlgebraBasis& a);

struct VerificationReport {
    std::vector<CheckResult> checks;
    /// Informational findings that are not failures.
    std::vector<std::string> flags;

    bool passed() const noexcept;
};

/// Axiom checks for any algebra, plus for so_q and canonical osp: conditions route
/// agreement, dimension formulas, root tables, simple roots, generator closure, span
/// identities and the triple relations.
VerificationReport verify_algebra(const AlgebraSpec& spec);

} // namespace gradedlie
