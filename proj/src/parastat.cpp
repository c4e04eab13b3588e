#include "gradedlie/parastat.hpp"

#include "gradedlie/error.hpp"
#include "gradedlie/linalg.hpp"

#include <cstdlib>

namespace gradedlie {

Convention GeneratorFamily::convention() const noexcept {
    return kind == GeneratorKind::ParafermionSoQ ? Convention::GradedLieAlgebra
                                                 : Convention::GradedLieSuperalgebra;
}

AlgebraSpec GeneratorFamily::ambient_spec() const {
    if (kind == GeneratorKind::ParafermionSoQ)
        return {Family::SoQ, {first, second}, std::nullopt};
    return {Family::Osp, {0, 0, first, second}, std::nullopt};
}

FormCondition GeneratorFamily::form() const {
    if (kind == GeneratorKind::ParafermionSoQ)
        return {so_q_form(first, second), TransposeKind::GradedTranspose};
    return {osp_form(0, 0, first, second), TransposeKind::GradedSupertranspose};
}

std::vector<GradedMatrix> GeneratorFamily::all() const {
    std::vector<GradedMatrix> out = annihilation;
    out.insert(out.end(), creation.begin(), creation.end());
    return out;
}

namespace {

Matrix sqrt2_pair(std::size_t n, std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2,
                  int sign) {
    Matrix m(n);
    m(i1, j1) = Scalar::sqrt2();
    m(i2, j2) = sign > 0 ? Scalar::sqrt2() : -Scalar::sqrt2();
    return m;
}

} // namespace

GeneratorFamily build_parafermions(int n, int q) {
    if (n < 2 || q < 1 || q > n - 1)
        throw Error(ErrorKind::InvalidParameter, "parafermions require 1 <= q <= n-1");
    const auto part = DegreePartition::so_q(n, q);
    const std::size_t size = part.size(), z = size - 1;
    GeneratorFamily fam{GeneratorKind::ParafermionSoQ, n, q, {}, {}, static_cast<std::size_t>(q)};
    for (int k = 0; k < n; ++k) {
        const auto x = static_cast<std::size_t>(k), y = static_cast<std::size_t>(n + k);
        const Degree d = k < q ? Degree(0, 1) : Degree(1, 0);
        fam.annihilation.emplace_back(sqrt2_pair(size, x, z, z, y, -1), part, d);
        fam.creation.emplace_back(sqrt2_pair(size, z, x, y, z, -1), part, d);
    }
    return fam;
}

GeneratorFamily build_parabosons(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw Error(ErrorKind::InvalidParameter, "parabosons require n1 >= 1 and n2 >= 1");
    const int nn = n1 + n2;
    const auto part = DegreePartition::osp(0, 0, n1, n2);
    const std::size_t size = part.size();
    GeneratorFamily fam{GeneratorKind::ParabosonOsp, n1, n2, {}, {}, static_cast<std::size_t>(n1)};
    for (int k = 0; k < nn; ++k) {
        const auto u = static_cast<std::size_t>(1 + k), v = static_cast<std::size_t>(1 + nn + k);
        const Degree d = k < n1 ? Degree(1, 0) : Degree(0, 1);
        fam.annihilation.emplace_back(sqrt2_pair(size, 0, u, v, 0, -1), part, d);
        fam.creation.emplace_back(sqrt2_pair(size, 0, v, u, 0, 1), part, d);
    }
    return fam;
}

std::string_view to_string(RelationSet s) noexcept {
    switch (s) {
    case RelationSet::PfSame: return "pf_same";
    case RelationSet::PbSame: return "pb_same";
    case RelationSet::RelCrossSoQ: return "rel_cross_so_q";
    case RelationSet::RelCrossOsp: return "rel_cross_osp";
    case RelationSet::MixedRelPf: return "mixed_rel_pf";
    case RelationSet::MixedRelPb: return "mixed_rel_pb";
    }
    return "unknown";
}

RelationSet parse_relation_set(std::string_view name) {
    for (auto s : {RelationSet::PfSame, RelationSet::PbSame, RelationSet::RelCrossSoQ,
                   RelationSet::RelCrossOsp, RelationSet::MixedRelPf, RelationSet::MixedRelPb})
        if (to_string(s) == name)
            return s;
    throw Error(ErrorKind::InvalidParameter, "unknown relation set '" + std::string(name) + "'");
}

std::string_view relation_template(RelationSet s) noexcept {
    switch (s) {
    case RelationSet::PfSame:
        return "[[f_j^xi, f_k^eta], f_l^eps] = |eps-eta| d_kl f_j^xi - |eps-xi| d_jl f_k^eta";
    case RelationSet::PbSame:
        return "[{b_j^xi, b_k^eta}, b_l^eps] = (eps-eta) d_kl b_j^xi + (eps-xi) d_jl b_k^eta";
    case RelationSet::RelCrossSoQ:
        return "{{f_j^xi, f_k^eta}, f_l^eps} = |eps-eta| d_kl f_j^xi + |eps-xi| d_jl f_k^eta";
    case RelationSet::RelCrossOsp:
        return "{[b_j^xi, b_k^eta], b_l^eps} = -(eps-xi) d_jl b_k^eta + (eps-eta) d_kl b_j^xi";
    case RelationSet::MixedRelPf:
        return "[[f,f],b] = 0, [{b,b},f] = 0, [[f_j^xi, b_k^eta], f_l^eps] = -|eps-xi| d_jl b_k^eta, "
               "{[f_j^xi, b_k^eta], b_l^eps} = (eps-eta) d_kl f_j^xi";
    case RelationSet::MixedRelPb:
        return "[[f,f],b] = 0, [{b,b},f] = 0, {{f_j^xi, b_k^eta}, f_l^eps} = |eps-xi| d_jl b_k^eta, "
               "[{f_j^xi, b_k^eta}, b_l^eps] = (eps-eta) d_kl f_j^xi";
    }
    return "";
}

namespace {

/// Coefficients (on x_j^xi, on x_k^eta) for the right-hand side.
std::pair<int, int> rhs_coefficients(RelationSet set, std::size_t j, std::size_t k,
                                     std::size_t l, int xi, int eta, int eps) {
    const int dkl = k == l, djl = j == l;
    switch (set) {
    case RelationSet::PfSame: return {std::abs(eps - eta) * dkl, -std::abs(eps - xi) * djl};
    case RelationSet::PbSame: return {(eps - eta) * dkl, (eps - xi) * djl};
    case RelationSet::RelCrossSoQ: return {std::abs(eps - eta) * dkl, std::abs(eps - xi) * djl};
    case RelationSet::RelCrossOsp: return {(eps - eta) * dkl, -(eps - xi) * djl};
    default: return {0, 0};
    }
}

} // namespace

RelationReport verify_relations(const GeneratorFamily& fam, RelationSet set) {
    if (set == RelationSet::MixedRelPf || set == RelationSet::MixedRelPb)
        throw Error(ErrorKind::NoRealization,
                    std::string(to_string(set)) +
                        ": no matrix realization of the mixed parafermion/paraboson system is "
                        "available");
    const bool fermionic = fam.kind == GeneratorKind::ParafermionSoQ;
    const bool wants_fermions = set == RelationSet::PfSame || set == RelationSet::RelCrossSoQ;
    if (fermionic != wants_fermions)
        throw Error(ErrorKind::InvalidParameter,
                    std::string(to_string(set)) + " does not apply to this generator family");
    const bool cross = set == RelationSet::RelCrossSoQ || set == RelationSet::RelCrossOsp;
    const Convention conv = fam.convention();
    const std::size_t n = fam.size();

    RelationReport report{set, 0, {}};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (fam.same_ensemble(j, k) == cross)
                continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (!cross && !fam.same_ensemble(j, l))
                    continue;
                for (int xi : {-1, 1})
                    for (int eta : {-1, 1})
                        for (int eps : {-1, 1}) {
                            ++report.total_checked;
                            const auto inner = graded_bracket(fam.op(j, xi), fam.op(k, eta), conv);
                            const auto got = graded_bracket(inner, fam.op(l, eps), conv);
                            auto [cj, ck] = rhs_coefficients(set, j, k, l, xi, eta, eps);
                            Matrix expected = Scalar(cj) * fam.op(j, xi).mat();
                            expected += Scalar(ck) * fam.op(k, eta).mat();
                            if (got.mat() != expected)
                                report.failures.push_back(
                                    {j, k, l, xi, eta, eps, std::move(expected), got.mat()});
                        }
            }
        }
    return report;
}

std::string bracket_pattern(const GeneratorFamily& fam, std::size_t j, std::size_t k,
                            std::size_t l) {
    const Convention conv = fam.convention();
    const Degree a = fam.creation.at(j).require_degree();
    const Degree b = fam.creation.at(k).require_degree();
    const Degree c = fam.creation.at(l).require_degree();
    auto kind = [&](Degree x, Degree y) { return bracket_sign(conv, x, y) > 0 ? 'c' : 'a'; };
    return {kind(a, b), kind(a + b, c)};
}

EnsembleSpans ensemble_spans(const GeneratorFamily& fam) {
    std::vector<Matrix> same, cross;
    const auto conv = fam.convention();
    for (std::size_t k = 0; k < fam.size(); ++k)
        for (std::size_t l = 0; l < fam.size(); ++l)
            for (int xi : {-1, 1})
                for (int eta : {-1, 1}) {
                    auto br = graded_bracket(fam.op(k, xi), fam.op(l, eta), conv).mat();
                    (fam.same_ensemble(k, l) ? same : cross).push_back(std::move(br));
                }
    return {reduced_basis(same), reduced_basis(cross)};
}

} // namespace gradedlie
