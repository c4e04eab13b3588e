#include "gradedlie/structure.hpp"

#include "gradedlie/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gradedlie {

namespace {

std::string weight_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

bool lex_positive(const Weight& w) {
    for (int c : w)
        if (c != 0)
            return c > 0;
    return false;
}

bool is_zero_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int c) { return c == 0; });
}

Matrix commutator_with_diagonal(const Matrix& h, const Matrix& x) { return h * x - x * h; }

} // namespace

Weight weight_of(const GradedMatrix& x, const std::vector<GradedMatrix>& cartan) {
    if (x.is_zero())
        throw Error(ErrorKind::NotEigenvector, "zero matrix has no weight");
    const auto entries = x.mat().entries();
    const auto& lead = entries.front();
    Weight w;
    w.reserve(cartan.size());
    for (const auto& h : cartan) {
        if (h.dim() != x.dim())
            throw Error(ErrorKind::DimensionMismatch, "Cartan element size differs");
        // h has degree (0,0), so its bracket is the commutator in either convention.
        Matrix br = commutator_with_diagonal(h.mat(), x.mat());
        Scalar lambda = br(lead.row, lead.col) / lead.value;
        if (br != lambda * x.mat())
            throw Error(ErrorKind::NotEigenvector, "not a simultaneous eigenvector of ad(h)");
        if (!lambda.is_rational() || !lambda.r().is_integer())
            throw Error(ErrorKind::NotEigenvector,
                        "eigenvalue " + lambda.to_string() + " is not an integer");
        w.push_back(static_cast<int>(lambda.r().num()));
    }
    return w;
}

RootDecomposition root_decomposition(const AlgebraBasis& a) {
    RootDecomposition out;
    out.cartan = cartan_basis(a);
    const std::size_t n = a.matrix_size();
    // Each matrix unit e_ij is a weight vector of weight h(i,i) - h(j,j).
    std::vector<Weight> index_weight(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& h : out.cartan) {
            const Scalar& v = h.mat()(i, i);
            if (!v.is_rational() || !v.r().is_integer())
                throw Error(ErrorKind::Unsupported, "Cartan diagonal must be integral");
            index_weight[i].push_back(static_cast<int>(v.r().num()));
        }
    auto unit_weight = [&](std::size_t i, std::size_t j) {
        Weight w(out.cartan.size());
        for (std::size_t k = 0; k < w.size(); ++k)
            w[k] = index_weight[i][k] - index_weight[j][k];
        return w;
    };

    std::map<Weight, std::vector<RootDatum>> by_weight;
    for (Degree d : kAllDegrees) {
        std::map<Weight, std::vector<Matrix>> pieces;
        for (const auto& x : a.component(d))
            for (const auto& e : x.mat().entries()) {
                auto& bucket = pieces[unit_weight(e.row, e.col)];
                if (bucket.empty() || bucket.back() != x.mat())
                    bucket.push_back(x.mat());
            }
        for (auto& [w, sources] : pieces) {
            std::vector<Matrix> projected;
            for (const auto& src : sources) {
                Matrix p(n);
                for (const auto& e : src.entries())
                    if (unit_weight(e.row, e.col) == w)
                        p(e.row, e.col) = e.value;
                projected.push_back(std::move(p));
            }
            for (auto& v : reduced_basis(projected)) {
                if (!a.contains(v))
                    throw Error(ErrorKind::SpanEscape, "weight projection left the algebra");
                GradedMatrix gv(std::move(v), a.partition(), d);
                if (is_zero_weight(w)) {
                    out.zero_weight.push_back(std::move(gv));
                    continue;
                }
                Weight check = weight_of(gv, out.cartan);
                if (check != w)
                    throw Error(ErrorKind::NotEigenvector, "weight mismatch");
                by_weight[w].push_back({w, d, std::move(gv)});
            }
        }
    }
    for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
        if (it->second.size() != 1)
            throw Error(ErrorKind::Unsupported,
                        "root " + weight_string(it->first) + " has multiplicity " +
                            std::to_string(it->second.size()));
        out.roots.push_back(std::move(it->second.front()));
    }
    return out;
}

PositiveSystem positive_and_simple_roots(const RootDecomposition& d) {
    PositiveSystem out;
    for (const auto& r : d.roots)
        if (lex_positive(r.root)) {
            out.positive.push_back(r);
            out.positive_by_degree[r.degree.index()].push_back(r);
        }
    auto is_sum = [&](const Weight& w) {
        for (const auto& a : out.positive)
            for (const auto& b : out.positive) {
                bool match = true;
                for (std::size_t k = 0; k < w.size() && match; ++k)
                    match = a.root[k] + b.root[k] == w[k];
                if (match)
                    return true;
            }
        return false;
    };
    for (const auto& r : out.positive)
        if (!is_sum(r.root))
            out.simple.push_back(r);
    std::sort(out.simple.begin(), out.simple.end(),
              [](const RootDatum& a, const RootDatum& b) { return a.root > b.root; });
    return out;
}

namespace {

Weight basis_weight(std::size_t rank, std::initializer_list<std::pair<int, int>> terms) {
    Weight w(rank, 0);
    for (auto [idx, coeff] : terms)
        w[static_cast<std::size_t>(idx)] += coeff;
    return w;
}

Matrix pair_of_units(std::size_t n, std::size_t i1, std::size_t j1, std::size_t i2,
                     std::size_t j2, int sign) {
    Matrix m(n);
    m(i1, j1) += Scalar(1);
    m(i2, j2) += Scalar(sign);
    return m;
}

} // namespace

std::vector<ReferenceRoot> reference_roots_so_q(int n, int q) {
    if (n < 2 || q < 1 || q > n - 1)
        throw Error(ErrorKind::InvalidParameter, "so_q requires 1 <= q <= n-1");
    const std::size_t size = 2 * static_cast<std::size_t>(n) + 1, rank = static_cast<std::size_t>(n);
    const std::size_t z = size - 1;
    auto x = [](int j) { return static_cast<std::size_t>(j); };
    auto y = [n](int j) { return static_cast<std::size_t>(n + j); };
    auto same = [q](int j, int k) { return (j < q) == (k < q); };
    std::vector<ReferenceRoot> out;
    for (int j = 0; j < n; ++j) {
        const Degree d = j < q ? Degree(0, 1) : Degree(1, 0);
        out.push_back({basis_weight(rank, {{j, 1}}), d, pair_of_units(size, x(j), z, z, y(j), -1)});
        out.push_back({basis_weight(rank, {{j, -1}}), d, pair_of_units(size, y(j), z, z, x(j), -1)});
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (j == k)
                continue;
            const bool s = same(j, k);
            const Degree d = s ? Degree(0, 0) : Degree(1, 1);
            const int sign = s ? -1 : 1;
            out.push_back({basis_weight(rank, {{j, 1}, {k, -1}}), d,
                           pair_of_units(size, x(j), x(k), y(k), y(j), sign)});
            if (j < k) {
                out.push_back({basis_weight(rank, {{j, 1}, {k, 1}}), d,
                               pair_of_units(size, x(j), y(k), x(k), y(j), sign)});
                out.push_back({basis_weight(rank, {{j, -1}, {k, -1}}), d,
                               pair_of_units(size, y(j), x(k), y(k), x(j), sign)});
            }
        }
    return out;
}

std::vector<ReferenceRoot> reference_roots_osp(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw Error(ErrorKind::InvalidParameter, "osp(1,0|2n1,2n2) requires n1, n2 >= 1");
    const int nn = n1 + n2;
    const std::size_t size = 2 * static_cast<std::size_t>(nn) + 1, rank = static_cast<std::size_t>(nn);
    auto u = [](int j) { return static_cast<std::size_t>(1 + j); };
    auto v = [nn](int j) { return static_cast<std::size_t>(1 + nn + j); };
    auto same = [n1](int j, int k) { return (j < n1) == (k < n1); };
    std::vector<ReferenceRoot> out;
    for (int j = 0; j < nn; ++j) {
        const Degree d = j < n1 ? Degree(1, 0) : Degree(0, 1);
        out.push_back({basis_weight(rank, {{j, -1}}), d, pair_of_units(size, 0, u(j), v(j), 0, -1)});
        out.push_back({basis_weight(rank, {{j, 1}}), d, pair_of_units(size, 0, v(j), u(j), 0, 1)});
    }
    for (int j = 0; j < nn; ++j)
        for (int k = 0; k < nn; ++k) {
            const bool s = same(j, k);
            const Degree d = s ? Degree(0, 0) : Degree(1, 1);
            if (j != k)
                out.push_back({basis_weight(rank, {{j, 1}, {k, -1}}), d,
                               pair_of_units(size, u(j), u(k), v(k), v(j), s ? -1 : 1)});
            if (j <= k) {
                const int sign = s ? 1 : -1;
                out.push_back({basis_weight(rank, {{j, 1}, {k, 1}}), d,
                               pair_of_units(size, u(j), v(k), u(k), v(j), sign)});
                out.push_back({basis_weight(rank, {{j, -1}, {k, -1}}), d,
                               pair_of_units(size, v(j), u(k), v(k), u(j), sign)});
            }
        }
    return out;
}

std::vector<std::pair<Weight, Degree>> reference_simple_roots_so_q(int n, int q) {
    const auto rank = static_cast<std::size_t>(n);
    std::vector<std::pair<Weight, Degree>> out;
    for (int i = 0; i + 1 < n; ++i)
        out.emplace_back(basis_weight(rank, {{i, 1}, {i + 1, -1}}),
                         i + 1 == q ? Degree(1, 1) : Degree(0, 0));
    out.emplace_back(basis_weight(rank, {{n - 1, 1}}), Degree(1, 0));
    return out;
}

std::vector<std::pair<Weight, Degree>> reference_simple_roots_osp(int n1, int n2) {
    const int nn = n1 + n2;
    const auto rank = static_cast<std::size_t>(nn);
    std::vector<std::pair<Weight, Degree>> out;
    for (int i = 0; i + 1 < nn; ++i)
        out.emplace_back(basis_weight(rank, {{i, 1}, {i + 1, -1}}),
                         i + 1 == n1 ? Degree(1, 1) : Degree(0, 0));
    out.emplace_back(basis_weight(rank, {{nn - 1, 1}}), Degree(0, 1));
    return out;
}

RootTableComparison compare_root_tables(const RootDecomposition& computed,
                                        const std::vector<ReferenceRoot>& reference) {
    RootTableComparison cmp;
    auto fail = [&](std::string msg) {
        cmp.equal = false;
        cmp.mismatches.push_back(std::move(msg));
    };
    std::map<std::pair<Weight, std::size_t>, const RootDatum*> have;
    for (const auto& r : computed.roots)
        have[{r.root, r.degree.index()}] = &r;
    std::map<std::pair<Weight, std::size_t>, const ReferenceRoot*> want;
    for (const auto& r : reference)
        if (!want.emplace(std::make_pair(r.root, r.degree.index()), &r).second)
            fail("reference lists " + weight_string(r.root) + " twice");
    for (const auto& [key, ref] : want) {
        auto it = have.find(key);
        if (it == have.end()) {
            fail("missing root " + weight_string(key.first) + " of degree " +
                 Degree::from_index(key.second).to_string());
            continue;
        }
        const Matrix pair[] = {it->second->vector.mat(), ref->vector};
        if (rank(pair) != 1)
            fail("root vector for " + weight_string(key.first) + " differs beyond a scalar");
    }
    for (const auto& [key, got] : have)
        if (!want.count(key))
            fail("unexpected root " + weight_string(key.first) + " of degree " +
                 Degree::from_index(key.second).to_string());
    return cmp;
}

AlgebraBasis generate_closure(const std::vector<GradedMatrix>& generators, Convention conv) {
    if (generators.empty())
        throw Error(ErrorKind::InvalidParameter, "closure of an empty generating set");
    const DegreePartition& part = generators.front().partition();
    const std::size_t n = part.size();
    std::vector<EchelonBasis> ech(4, EchelonBasis(n * n));
    std::vector<GradedMatrix> all;
    std::vector<GradedMatrix> fresh;
    auto add = [&](const GradedMatrix& g, std::vector<GradedMatrix>& sink) {
        if (g.is_zero())
            return;
        const Degree d = g.require_degree();
        if (ech[d.index()].insert(Vector(g.mat().flat().begin(), g.mat().flat().end())))
            sink.push_back(g);
    };
    for (const auto& g : generators) {
        if (g.partition() != part)
            throw Error(ErrorKind::PartitionMismatch, "generators use different gradings");
        g.require_degree();
        add(g, fresh);
    }
    while (!fresh.empty()) {
        all.insert(all.end(), fresh.begin(), fresh.end());
        std::vector<GradedMatrix> next;
        // Graded symmetry makes [[y,x]] a multiple of [[x,y]]; one order suffices.
        for (const auto& x : fresh)
            for (const auto& y : all)
                add(graded_bracket(x, y, conv), next);
        fresh = std::move(next);
    }
    std::vector<Matrix> mats;
    for (const auto& g : all)
        mats.push_back(g.mat());
    return AlgebraBasis(std::nullopt, part, conv, mats, std::nullopt, TraceCondition::None);
}

StructureConstants structure_constants(const AlgebraBasis& a) {
    StructureConstants c;
    c.dimension = a.dimension();
    c.convention = a.convention();
    for (const auto& e : a.basis())
        c.degrees.push_back(e.require_degree());
    const auto& b = a.basis();
    for (std::size_t alpha = 0; alpha < b.size(); ++alpha)
        for (std::size_t beta = 0; beta < b.size(); ++beta) {
            auto coords = a.coordinates(graded_bracket(b[alpha], b[beta], a.convention()).mat());
            if (!coords)
                throw Error(ErrorKind::SpanEscape, "bracket of basis elements " +
                                                       std::to_string(alpha) + " and " +
                                                       std::to_string(beta) + " leaves the span");
            for (std::size_t gamma = 0; gamma < coords->size(); ++gamma)
                if (!(*coords)[gamma].is_zero())
                    c.entries.push_back({alpha, beta, gamma, (*coords)[gamma]});
        }
    return c;
}

std::vector<Vector> bracket_table(const StructureConstants& c) {
    std::vector<Vector> table(c.dimension * c.dimension, Vector(c.dimension));
    for (const auto& e : c.entries) {
        if (e.alpha >= c.dimension || e.beta >= c.dimension || e.gamma >= c.dimension)
            throw Error(ErrorKind::IndexOutOfRange, "structure constant index out of range");
        table[e.alpha * c.dimension + e.beta][e.gamma] += e.value;
    }
    return table;
}

Matrix bracket_from_constants(const StructureConstants& c, const AlgebraBasis& a,
                              std::size_t alpha, std::size_t beta) {
    Matrix out(a.matrix_size());
    for (const auto& e : c.entries)
        if (e.alpha == alpha && e.beta == beta)
            out += e.value * a.basis()[e.gamma].mat();
    return out;
}

bool graded_antisymmetric(const StructureConstants& c) {
    const auto table = bracket_table(c);
    const std::size_t d = c.dimension;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const int s = bracket_sign(c.convention, c.degrees[a], c.degrees[b]);
            for (std::size_t g = 0; g < d; ++g) {
                const Scalar& ab = table[a * d + b][g];
                const Scalar& ba = table[b * d + a][g];
                if (s > 0 ? ab != -ba : ab != ba)
                    return false;
            }
        }
    return true;
}

std::vector<std::array<std::size_t, 3>> jacobi_failures_from_constants(const StructureConstants& c) {
    const std::size_t d = c.dimension;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse(d * d);
    for (const auto& e : c.entries)
        sparse[e.alpha * d + e.beta].emplace_back(e.gamma, e.value);
    // coefficients of [[u, v]] where v is a combination of basis elements
    auto bracket_left = [&](std::size_t u, const Vector& v, Vector& out) {
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero())
                for (const auto& [g, val] : sparse[u * d + k])
                    out[g] += v[k] * val;
    };
    auto bracket_right = [&](const Vector& v, std::size_t u, Vector& out) {
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero())
                for (const auto& [g, val] : sparse[k * d + u])
                    out[g] += v[k] * val;
    };
    auto as_vector = [&](std::size_t a, std::size_t b) {
        Vector v(d);
        for (const auto& [g, val] : sparse[a * d + b])
            v[g] = val;
        return v;
    };
    std::vector<std::array<std::size_t, 3>> failures;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const Vector xy = as_vector(x, y);
            const int s = bracket_sign(c.convention, c.degrees[x], c.degrees[y]);
            for (std::size_t z = 0; z < d; ++z) {
                Vector lhs(d), rhs(d), swapped(d);
                bracket_left(x, as_vector(y, z), lhs);
                bracket_right(xy, z, rhs);
                bracket_left(y, as_vector(x, z), swapped);
                for (std::size_t g = 0; g < d; ++g)
                    rhs[g] = s > 0 ? rhs[g] + swapped[g] : rhs[g] - swapped[g];
                if (lhs != rhs)
                    failures.push_back({x, y, z});
            }
        }
    return failures;
}

} // namespace gradedlie
