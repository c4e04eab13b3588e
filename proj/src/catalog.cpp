#include "gradedlie/catalog.hpp"

#include "gradedlie/error.hpp"

#include <algorithm>
#include <numeric>

namespace gradedlie {

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::GlPqrs: return "gl_pqrs";
    case Family::SlPqrs: return "sl_pqrs";
    case Family::SoPqrs: return "so_pqrs";
    case Family::SoQ: return "so_q";
    case Family::GlSuper: return "gl_super";
    case Family::SlSuper: return "sl_super";
    case Family::Osp: return "osp";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (auto f : {Family::GlPqrs, Family::SlPqrs, Family::SoPqrs, Family::SoQ, Family::GlSuper,
                   Family::SlSuper, Family::Osp})
        if (to_string(f) == name)
            return f;
    throw Error(ErrorKind::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

Convention AlgebraSpec::convention() const noexcept {
    switch (family) {
    case Family::GlSuper:
    case Family::SlSuper:
    case Family::Osp: return Convention::GradedLieSuperalgebra;
    default: return Convention::GradedLieAlgebra;
    }
}

namespace {

[[noreturn]] void bad(const AlgebraSpec& spec, const std::string& why) {
    throw Error(ErrorKind::InvalidParameter, std::string(to_string(spec.family)) + ": " + why);
}

} // namespace

void AlgebraSpec::validate() const {
    const std::size_t expected = family == Family::SoQ ? 2 : 4;
    if (params.size() != expected)
        bad(*this, "expected " + std::to_string(expected) + " parameters");
    if (std::any_of(params.begin(), params.end(), [](int v) { return v < 0; }))
        bad(*this, "parameters must be nonnegative");
    switch (family) {
    case Family::SoQ:
        if (params[0] < 2 || params[1] < 1 || params[1] > params[0] - 1)
            bad(*this, "requires 1 <= q <= n-1");
        break;
    case Family::Osp:
        if (params[0] == 0 && params[1] == 0 && (params[2] < 1 || params[3] < 1))
            bad(*this, "osp(1,0|2n1,2n2) requires n1 >= 1 and n2 >= 1");
        break;
    default:
        if (std::accumulate(params.begin(), params.end(), 0) < 1)
            bad(*this, "matrix size must be positive");
    }
    if (partition) {
        if (family != Family::Osp)
            bad(*this, "a custom partition is only accepted for osp");
        const std::size_t size =
            2 * static_cast<std::size_t>(params[0] + params[1] + params[2] + params[3]) + 1;
        if (partition->size() != size)
            bad(*this, "custom partition must have length " + std::to_string(size));
    }
}

DegreePartition canonical_partition(const AlgebraSpec& spec) {
    spec.validate();
    auto& p = spec.params;
    switch (spec.family) {
    case Family::GlPqrs:
    case Family::SlPqrs:
    case Family::SoPqrs: return DegreePartition::gl_pqrs(p[0], p[1], p[2], p[3]);
    case Family::SoQ: return DegreePartition::so_q(p[0], p[1]);
    case Family::GlSuper:
    case Family::SlSuper: return DegreePartition::gl_super(p[0], p[1], p[2], p[3]);
    case Family::Osp:
        return spec.partition ? *spec.partition : DegreePartition::osp(p[0], p[1], p[2], p[3]);
    }
    return {};
}

std::optional<FormCondition> defining_form(const AlgebraSpec& spec) {
    spec.validate();
    auto& p = spec.params;
    switch (spec.family) {
    case Family::SoPqrs: {
        const std::size_t n = static_cast<std::size_t>(p[0] + p[1] + p[2] + p[3]);
        return FormCondition{Matrix::identity(n), TransposeKind::GradedTranspose};
    }
    case Family::SoQ: return FormCondition{so_q_form(p[0], p[1]), TransposeKind::GradedTranspose};
    case Family::Osp:
        return FormCondition{osp_form(p[0], p[1], p[2], p[3]), TransposeKind::GradedSupertranspose};
    default: return std::nullopt;
    }
}

TraceCondition defining_trace(const AlgebraSpec& spec) {
    switch (spec.family) {
    case Family::GlPqrs:
    case Family::GlSuper: return TraceCondition::None;
    case Family::SlPqrs:
    case Family::SoPqrs:
    case Family::SoQ: return TraceCondition::Trace;
    case Family::SlSuper:
    case Family::Osp: return TraceCondition::Supertrace;
    }
    return TraceCondition::None;
}

AlgebraBasis::AlgebraBasis(std::optional<AlgebraSpec> spec, DegreePartition partition,
                           Convention conv, std::span<const Matrix> spanning,
                           std::optional<FormCondition> form, TraceCondition trace)
    : spec_(std::move(spec)), partition_(std::move(partition)), conv_(conv),
      form_(std::move(form)), trace_(trace) {
    const std::size_t n = partition_.size();
    std::array<std::vector<Matrix>, 4> parts;
    for (const auto& m : spanning) {
        auto comps = homogeneous_components(m, partition_);
        for (std::size_t d = 0; d < 4; ++d)
            if (!comps[d].is_zero())
                parts[d].push_back(std::move(comps[d]));
    }
    for (std::size_t d = 0; d < 4; ++d) {
        offsets_[d] = basis_.size();
        echelons_.emplace_back(n * n);
        for (auto& m : reduced_basis(parts[d])) {
            echelons_[d].insert(Vector(m.flat().begin(), m.flat().end()));
            basis_.emplace_back(std::move(m), partition_, Degree::from_index(d));
        }
        dims_[d] = basis_.size() - offsets_[d];
    }
}

std::vector<GradedMatrix> AlgebraBasis::component(Degree d) const {
    auto first = basis_.begin() + static_cast<std::ptrdiff_t>(offsets_[d.index()]);
    return {first, first + static_cast<std::ptrdiff_t>(dims_[d.index()])};
}

std::optional<Vector> AlgebraBasis::coordinates(const Matrix& x) const {
    if (x.dim() != partition_.size())
        throw Error(ErrorKind::DimensionMismatch, "element size does not match algebra");
    auto comps = homogeneous_components(x, partition_);
    Vector coords(basis_.size());
    for (std::size_t d = 0; d < 4; ++d) {
        if (comps[d].is_zero())
            continue;
        auto c = echelons_[d].coordinates(Vector(comps[d].flat().begin(), comps[d].flat().end()));
        if (!c)
            return std::nullopt;
        std::copy(c->begin(), c->end(), coords.begin() + static_cast<std::ptrdiff_t>(offsets_[d]));
    }
    return coords;
}

bool AlgebraBasis::contains(const Matrix& x) const { return coordinates(x).has_value(); }

bool AlgebraBasis::satisfies_definition(const Matrix& x) const {
    if (form_ && !form_residual(x, partition_, *form_).is_zero())
        return false;
    switch (trace_) {
    case TraceCondition::None: return true;
    case TraceCondition::Trace: return x.trace().is_zero();
    case TraceCondition::Supertrace: return graded_supertrace(x, partition_).is_zero();
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> AlgebraBasis::closure_violation() const {
    for (std::size_t a = 0; a < basis_.size(); ++a)
        for (std::size_t b = 0; b < basis_.size(); ++b)
            if (!contains(graded_bracket(basis_[a], basis_[b], conv_).mat()))
                return std::make_pair(a, b);
    return std::nullopt;
}

namespace {

using Units = std::vector<MatrixEntry>;

Matrix combo(std::size_t n, std::initializer_list<MatrixEntry> entries) {
    return Matrix::from_entries(n, std::span<const MatrixEntry>(entries.begin(), entries.size()));
}

std::vector<Matrix> all_units(std::size_t n) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.push_back(Matrix::unit(n, i, j));
    return out;
}

/// Off-diagonal units plus traceless (weighted) diagonal differences.
std::vector<Matrix> traceless_units(const DegreePartition& part, bool super) {
    const std::size_t n = part.size();
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                out.push_back(Matrix::unit(n, i, j));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // (super)trace of e_ii - w_i w_{i+1} e_{i+1,i+1} vanishes
        int w = super ? supertrace_weight(part[i]) * supertrace_weight(part[i + 1]) : 1;
        out.push_back(combo(n, {{i, i, Scalar(1)}, {i + 1, i + 1, Scalar(-w)}}));
    }
    return out;
}

/// Block form of so_q(2n+1): index blocks q, n-q, q, n-q, 1.
std::vector<Matrix> so_q_block_form(int n, int q) {
    const std::size_t size = 2 * static_cast<std::size_t>(n) + 1;
    const std::size_t z = size - 1;
    auto x = [](int j) { return static_cast<std::size_t>(j); };
    auto y = [n](int j) { return static_cast<std::size_t>(n + j); };
    auto same = [q](int j, int k) { return (j < q) == (k < q); };
    const Scalar one(1), minus(-1);
    std::vector<Matrix> out;
    for (int j = 0; j < n; ++j) {
        out.push_back(combo(size, {{x(j), z, one}, {z, y(j), minus}}));
        out.push_back(combo(size, {{y(j), z, one}, {z, x(j), minus}}));
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            // a, a~ blocks and their partners; the cross blocks keep a + sign.
            const Scalar s = same(j, k) ? minus : one;
            out.push_back(combo(size, {{x(j), x(k), one}, {y(k), y(j), s}}));
            if (j < k || !same(j, k)) {
                if (!same(j, k) && j >= q)
                    continue;
                // b, b~, d, d~ antisymmetric blocks; b11 and d11 with their transposes.
                out.push_back(combo(size, {{x(j), y(k), one}, {x(k), y(j), s}}));
                out.push_back(combo(size, {{y(j), x(k), one}, {y(k), x(j), s}}));
            }
        }
    return out;
}

/// Block form of osp(1,0|2n1,2n2): index blocks 1, n1, n2, n1, n2.
std::vector<Matrix> osp_block_form(int n1, int n2) {
    const int nn = n1 + n2;
    const std::size_t size = 2 * static_cast<std::size_t>(nn) + 1;
    auto u = [](int j) { return static_cast<std::size_t>(1 + j); };
    auto v = [nn](int j) { return static_cast<std::size_t>(1 + nn + j); };
    auto same = [n1](int j, int k) { return (j < n1) == (k < n1); };
    const Scalar one(1), minus(-1);
    std::vector<Matrix> out;
    for (int j = 0; j < nn; ++j) {
        out.push_back(combo(size, {{0, u(j), one}, {v(j), 0, minus}}));
        out.push_back(combo(size, {{0, v(j), one}, {u(j), 0, one}}));
    }
    for (int j = 0; j < nn; ++j)
        for (int k = 0; k < nn; ++k) {
            // b, c blocks against -b^t, -c^t; the cross blocks against +transposes.
            const Scalar s = same(j, k) ? minus : one;
            out.push_back(combo(size, {{u(j), u(k), one}, {v(k), v(j), s}}));
            const bool symmetric = same(j, k) && j <= k;
            const bool cross = !same(j, k) && j < n1;
            if (symmetric || cross) {
                const Scalar t = same(j, k) ? one : minus;
                out.push_back(combo(size, {{u(j), v(k), one}, {u(k), v(j), t}}));
                out.push_back(combo(size, {{v(j), u(k), one}, {v(k), u(j), t}}));
            }
        }
    return out;
}

void verify_basis(const AlgebraBasis& a) {
    for (std::size_t i = 0; i < a.dimension(); ++i)
        if (!a.satisfies_definition(a.basis()[i].mat()))
            throw Error(ErrorKind::SpanEscape,
                        "basis element " + std::to_string(i) + " violates the defining condition");
    if (auto bad_pair = a.closure_violation())
        throw Error(ErrorKind::SpanEscape, "bracket of basis elements " +
                                               std::to_string(bad_pair->first) + " and " +
                                               std::to_string(bad_pair->second) +
                                               " leaves the span");
}

bool jacobi_on_basis(const AlgebraBasis& a) {
    const auto& b = a.basis();
    for (const auto& x : b)
        for (const auto& y : b)
            for (const auto& z : b)
                if (!jacobi_check(x, y, z, a.convention()))
                    return false;
    return true;
}

} // namespace

AlgebraBasis build_from_conditions(const AlgebraSpec& spec) {
    spec.validate();
    DegreePartition part = canonical_partition(spec);
    auto form = defining_form(spec);
    auto trace = defining_trace(spec);
    const std::size_t n = part.size();
    auto condition = [&](const Matrix& m) {
        Vector out;
        if (form) {
            auto r = form_residual(m, part, *form);
            out.assign(r.flat().begin(), r.flat().end());
        }
        if (trace == TraceCondition::Trace)
            out.push_back(m.trace());
        else if (trace == TraceCondition::Supertrace)
            out.push_back(graded_supertrace(m, part));
        return out;
    };
    std::vector<Matrix> spanning;
    for (Degree d : kAllDegrees) {
        std::vector<UnitIndex> units;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (part[i] + part[j] == d)
                    units.emplace_back(i, j);
        if (!form && trace == TraceCondition::None) {
            for (auto [i, j] : units)
                spanning.push_back(Matrix::unit(n, i, j));
            continue;
        }
        for (auto& m : matrix_nullspace(n, units, condition))
            spanning.push_back(std::move(m));
    }
    return AlgebraBasis(spec, std::move(part), spec.convention(), spanning, std::move(form),
                        trace);
}

AlgebraBasis build(const AlgebraSpec& spec) {
    spec.validate();
    DegreePartition part = canonical_partition(spec);
    auto& p = spec.params;
    std::vector<Matrix> spanning;
    switch (spec.family) {
    case Family::GlPqrs:
    case Family::GlSuper: spanning = all_units(part.size()); break;
    case Family::SlPqrs: spanning = traceless_units(part, false); break;
    case Family::SlSuper: spanning = traceless_units(part, true); break;
    case Family::SoQ: spanning = so_q_block_form(p[0], p[1]); break;
    case Family::Osp:
        if (p[0] == 0 && p[1] == 0 && !spec.partition) {
            spanning = osp_block_form(p[2], p[3]);
            break;
        }
        [[fallthrough]];
    case Family::SoPqrs: {
        auto a = build_from_conditions(spec);
        verify_basis(a);
        if (spec.family == Family::Osp && !jacobi_on_basis(a))
            throw Error(ErrorKind::InvalidParameter,
                        "osp grading " + a.partition().to_string() +
                            " does not yield a graded Lie superalgebra");
        return a;
    }
    }
    AlgebraBasis a(spec, std::move(part), spec.convention(), spanning, defining_form(spec),
                   defining_trace(spec));
    verify_basis(a);
    return a;
}

std::array<std::size_t, 4> dims_formula_so_q(int n, int q) {
    if (n < 2 || q < 1 || q > n - 1)
        throw Error(ErrorKind::InvalidParameter, "so_q requires 1 <= q <= n-1");
    const auto un = static_cast<std::size_t>(n), uq = static_cast<std::size_t>(q);
    const std::size_t d01 = 2 * uq, d10 = 2 * (un - uq), d11 = 4 * uq * (un - uq);
    const std::size_t total = un * (2 * un + 1);
    return {total - d01 - d10 - d11, d01, d10, d11};
}

long reference_dim00_so_q(int n, int q) {
    const long ln = n, lq = q;
    return 2 * ln * ln - ln - 4 * lq * (ln - lq) * (ln - lq);
}

std::vector<GradedMatrix> cartan_basis(const AlgebraBasis& a) {
    if (!a.spec())
        throw Error(ErrorKind::Unsupported, "cartan_basis needs a catalog algebra");
    const auto& spec = *a.spec();
    const auto& part = a.partition();
    const std::size_t n = part.size();
    std::vector<Matrix> hs;
    switch (spec.family) {
    case Family::SoQ: {
        const auto rank = static_cast<std::size_t>(spec.params[0]);
        for (std::size_t i = 0; i < rank; ++i)
            hs.push_back(combo(n, {{i, i, Scalar(1)}, {rank + i, rank + i, Scalar(-1)}}));
        break;
    }
    case Family::Osp: {
        if (spec.params[0] != 0 || spec.params[1] != 0 || spec.partition)
            throw Error(ErrorKind::Unsupported, "cartan_basis is defined for osp(1,0|2n1,2n2)");
        const auto rank = static_cast<std::size_t>(spec.params[2] + spec.params[3]);
        for (std::size_t i = 1; i <= rank; ++i)
            hs.push_back(combo(n, {{i, i, Scalar(1)}, {rank + i, rank + i, Scalar(-1)}}));
        break;
    }
    case Family::GlPqrs:
    case Family::GlSuper:
        for (std::size_t i = 0; i < n; ++i)
            hs.push_back(Matrix::unit(n, i, i));
        break;
    case Family::SlPqrs:
    case Family::SlSuper:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            int w = spec.family == Family::SlSuper
                        ? supertrace_weight(part[i]) * supertrace_weight(part[i + 1])
                        : 1;
            hs.push_back(combo(n, {{i, i, Scalar(1)}, {i + 1, i + 1, Scalar(-w)}}));
        }
        break;
    case Family::SoPqrs:
        throw Error(ErrorKind::Unsupported,
                    "so_pqrs has no diagonal Cartan subalgebra in its antisymmetric form");
    }
    std::vector<GradedMatrix> out;
    for (auto& h : hs)
        out.emplace_back(std::move(h), part, Degree(0, 0));
    return out;
}

} // namespace gradedlie
