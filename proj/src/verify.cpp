#include "gradedlie/verify.hpp"

#include "gradedlie/error.hpp"
#include "gradedlie/parastat.hpp"
#include "gradedlie/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

namespace gradedlie {

namespace {

constexpr std::size_t kMaxDetails = 8;

std::string label(std::size_t a) { return "e" + std::to_string(a); }

/// Runs body(i, result) for i in [0, count) across workers and merges in index order.
CheckResult parallel_check(std::string name, std::size_t count,
                           const std::function<void(std::size_t, CheckResult&)>& body) {
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    std::vector<CheckResult> partial(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i, partial[i]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += workers)
                    body(i, partial[i]);
            });
        for (auto& t : pool)
            t.join();
    }
    CheckResult out{std::move(name)};
    for (auto& p : partial) {
        out.checked += p.checked;
        out.failed += p.failed;
        for (auto& d : p.details)
            if (out.details.size() < kMaxDetails)
                out.details.push_back(std::move(d));
    }
    return out;
}

Matrix raw_bracket(const Matrix& x, Degree a, const Matrix& y, Degree b, Convention conv) {
    Matrix out = x * y;
    if (bracket_sign(conv, a, b) > 0)
        out -= y * x;
    else
        out += y * x;
    return out;
}

} // namespace

void CheckResult::fail(std::string what) {
    ++failed;
    if (details.size() < kMaxDetails)
        details.push_back(std::move(what));
}

std::size_t worker_count() {
    if (const char* env = std::getenv("GRADEDLIE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CheckResult check_grading(const AlgebraBasis& a) {
    const auto& b = a.basis();
    return parallel_check("grading", b.size(), [&](std::size_t x, CheckResult& r) {
        const Degree dx = b[x].require_degree();
        for (std::size_t y = 0; y < b.size(); ++y) {
            ++r.checked;
            const Degree dy = b[y].require_degree();
            Matrix br = raw_bracket(b[x].mat(), dx, b[y].mat(), dy, a.convention());
            if (br.is_zero())
                continue;
            auto deg = homogeneous_degree(br, a.partition());
            if (!deg || *deg != dx + dy)
                r.fail("[[" + label(x) + "," + label(y) + "]] is not of degree " +
                       (dx + dy).to_string());
        }
    });
}

CheckResult check_symmetry(const AlgebraBasis& a) {
    const auto& b = a.basis();
    const auto conv = a.convention();
    return parallel_check("symmetry", b.size(), [&](std::size_t x, CheckResult& r) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            ++r.checked;
            const int s = bracket_sign(conv, *b[x].degree(), *b[y].degree());
            const Matrix xy = graded_bracket(b[x], b[y], conv).mat();
            const Matrix yx = graded_bracket(b[y], b[x], conv).mat();
            if (s > 0 ? xy != -yx : xy != yx)
                r.fail("symmetry fails for (" + label(x) + "," + label(y) + ")");
        }
    });
}

CheckResult check_jacobi(const AlgebraBasis& a) {
    const auto& b = a.basis();
    const auto conv = a.convention();
    const std::size_t d = b.size();
    std::vector<GradedMatrix> pair(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            pair[x * d + y] = graded_bracket(b[x], b[y], conv);
    return parallel_check("jacobi", d, [&](std::size_t x, CheckResult& r) {
        for (std::size_t y = 0; y < d; ++y) {
            const int s = bracket_sign(conv, *b[x].degree(), *b[y].degree());
            for (std::size_t z = 0; z < d; ++z) {
                ++r.checked;
                const Matrix lhs = graded_bracket(b[x], pair[y * d + z], conv).mat();
                Matrix rhs = graded_bracket(pair[x * d + y], b[z], conv).mat();
                const Matrix swapped = graded_bracket(b[y], pair[x * d + z], conv).mat();
                if (s > 0)
                    rhs += swapped;
                else
                    rhs -= swapped;
                if (lhs != rhs)
                    r.fail("jacobi fails for (" + label(x) + "," + label(y) + "," + label(z) +
                           ")");
            }
        }
    });
}

CheckResult check_closure(const AlgebraBasis& a) {
    const auto& b = a.basis();
    return parallel_check("closure", b.size(), [&](std::size_t x, CheckResult& r) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            ++r.checked;
            if (!a.contains(graded_bracket(b[x], b[y], a.convention()).mat()))
                r.fail("[[" + label(x) + "," + label(y) + "]] leaves the span");
        }
    });
}

CheckResult check_definition(const AlgebraBasis& a) {
    const auto& b = a.basis();
    return parallel_check("definition", b.size(), [&](std::size_t x, CheckResult& r) {
        ++r.checked;
        if (!a.satisfies_definition(b[x].mat()))
            r.fail(label(x) + " violates the defining condition");
        for (std::size_t y = 0; y < b.size(); ++y) {
            ++r.checked;
            if (!a.satisfies_definition(graded_bracket(b[x], b[y], a.convention()).mat()))
                r.fail("[[" + label(x) + "," + label(y) + "]] violates the defining condition");
        }
    });
}

CheckResult check_trace_vanishing(const AlgebraBasis& a) {
    const auto& b = a.basis();
    const bool super = a.convention() == Convention::GradedLieSuperalgebra;
    return parallel_check(super ? "supertrace" : "trace", b.size(),
                          [&](std::size_t x, CheckResult& r) {
                              for (std::size_t y = 0; y < b.size(); ++y) {
                                  ++r.checked;
                                  auto br = graded_bracket(b[x], b[y], a.convention());
                                  Scalar t = super ? graded_supertrace(br) : br.mat().trace();
                                  if (!t.is_zero())
                                      r.fail("trace of [[" + label(x) + "," + label(y) +
                                             "]] is " + t.to_string());
                              }
                          });
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

namespace {

CheckResult check_same_basis(std::string name, const AlgebraBasis& a, const AlgebraBasis& b) {
    CheckResult r{std::move(name)};
    r.checked = 1;
    if (a.dims_by_degree() != b.dims_by_degree())
        r.fail("graded dimensions differ");
    else if (a.basis() != b.basis())
        r.fail("bases differ");
    return r;
}

CheckResult check_roots(const AlgebraBasis& a, const std::vector<ReferenceRoot>& reference,
                        const std::vector<std::pair<Weight, Degree>>& simple_ref) {
    CheckResult r{"root_table"};
    const auto dec = root_decomposition(a);
    auto cmp = compare_root_tables(dec, reference);
    r.checked = reference.size();
    for (auto& m : cmp.mismatches)
        r.fail(std::move(m));
    if (dec.zero_weight.size() != dec.cartan.size())
        r.fail("zero-weight space is not the Cartan subalgebra");
    const auto pos = positive_and_simple_roots(dec);
    ++r.checked;
    std::vector<std::pair<Weight, Degree>> simple;
    for (const auto& s : pos.simple)
        simple.emplace_back(s.root, s.degree);
    if (simple != simple_ref)
        r.fail("simple roots differ from the listed simple roots");
    return r;
}

CheckResult check_relations(const GeneratorFamily& fam, RelationSet set) {
    CheckResult r{"relations_" + std::string(to_string(set))};
    auto rep = verify_relations(fam, set);
    r.checked = rep.total_checked;
    for (const auto& f : rep.failures)
        r.fail("(j,k,l)=(" + std::to_string(f.j + 1) + "," + std::to_string(f.k + 1) + "," +
               std::to_string(f.l + 1) + ") signs " + (f.xi > 0 ? "+" : "-") +
               (f.eta > 0 ? "+" : "-") + (f.eps > 0 ? "+" : "-"));
    return r;
}

CheckResult check_generators(const GeneratorFamily& fam, const AlgebraBasis& a) {
    CheckResult r{"generators"};
    const auto closure = generate_closure(fam.all(), a.convention());
    ++r.checked;
    if (closure.basis() != a.basis())
        r.fail("bracket closure of the generators differs from the algebra");
    const auto spans = ensemble_spans(fam);
    // the same-ensemble brackets give (0,0), the cross-ensemble ones (1,1)
    std::vector<Matrix> g00, g11;
    for (const auto& x : a.component(Degree(0, 0)))
        g00.push_back(x.mat());
    for (const auto& x : a.component(Degree(1, 1)))
        g11.push_back(x.mat());
    r.checked += 2;
    if (spans.same != g00)
        r.fail("same-ensemble brackets do not span the (0,0) component");
    if (spans.cross != g11)
        r.fail("cross-ensemble brackets do not span the (1,1) component");
    for (const auto& g : fam.all()) {
        ++r.checked;
        if (!form_membership(g, fam.form()))
            r.fail("generator violates the form condition");
    }
    return r;
}

} // namespace

VerificationReport verify_algebra(const AlgebraSpec& spec) {
    VerificationReport rep;
    const AlgebraBasis a = build(spec);
    rep.checks.push_back(check_grading(a));
    rep.checks.push_back(check_symmetry(a));
    rep.checks.push_back(check_jacobi(a));
    rep.checks.push_back(check_closure(a));
    rep.checks.push_back(check_definition(a));
    rep.checks.push_back(check_trace_vanishing(a));
    rep.checks.push_back(check_same_basis("conditions_route", a, build_from_conditions(spec)));

    const auto& p = spec.params;
    if (spec.family == Family::SoQ) {
        const int n = p[0], q = p[1];
        CheckResult dims{"dimension_formula"};
        dims.checked = 1;
        const auto formula = dims_formula_so_q(n, q);
        if (formula != a.dims_by_degree())
            dims.fail("computed graded dimensions differ from the closed form");
        rep.checks.push_back(std::move(dims));
        const long ref = reference_dim00_so_q(n, q);
        if (ref != static_cast<long>(a.dim(Degree(0, 0))))
            rep.flags.push_back("dim g_(0,0): reference formula 2n^2-n-4q(n-q)^2 gives " +
                                std::to_string(ref) + ", computed value is " +
                                std::to_string(a.dim(Degree(0, 0))) + " = 2n^2-n-4q(n-q)");
        rep.checks.push_back(
            check_roots(a, reference_roots_so_q(n, q), reference_simple_roots_so_q(n, q)));
        const auto fam = build_parafermions(n, q);
        rep.checks.push_back(check_generators(fam, a));
        rep.checks.push_back(check_relations(fam, RelationSet::PfSame));
        rep.checks.push_back(check_relations(fam, RelationSet::RelCrossSoQ));
    } else if (spec.family == Family::Osp && p[0] == 0 && p[1] == 0 && !spec.partition) {
        const int n1 = p[2], n2 = p[3];
        rep.checks.push_back(
            check_roots(a, reference_roots_osp(n1, n2), reference_simple_roots_osp(n1, n2)));
        const auto fam = build_parabosons(n1, n2);
        rep.checks.push_back(check_generators(fam, a));
        rep.checks.push_back(check_relations(fam, RelationSet::PbSame));
        rep.checks.push_back(check_relations(fam, RelationSet::RelCrossOsp));
    }
    return rep;
}

} // namespace gradedlie
