#include "gradedlie/serialize.hpp"

#include "gradedlie/error.hpp"

#include <algorithm>
#include <tuple>

namespace gradedlie {

Json to_json(Degree d) { return d.to_string(); }

Json to_json(const Scalar& x) {
    Json j = Json::object();
    j["r"] = x.r().to_fraction();
    j["s"] = x.s().to_fraction();
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("s") || !j["r"].is_string() ||
        !j["s"].is_string())
        throw Error(ErrorKind::Parse, "scalar must be {\"r\":\"p/q\",\"s\":\"p/q\"}");
    return Scalar(Rational::parse(j["r"].get<std::string>()),
                  Rational::parse(j["s"].get<std::string>()));
}

Json sparse_entries(const Matrix& m) {
    Json out = Json::array();
    for (const auto& e : m.entries())
        out.push_back(Json::array({e.row + 1, e.col + 1, to_json(e.value)}));
    return out;
}

Matrix matrix_from_sparse(const Json& j, std::size_t n) {
    if (!j.is_array())
        throw Error(ErrorKind::Parse, "sparse matrix must be an array");
    Matrix m(n);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned())
            throw Error(ErrorKind::Parse, "sparse entry must be [i, j, scalar]");
        const auto r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
        if (r < 1 || c < 1 || r > n || c > n)
            throw Error(ErrorKind::Parse, "sparse entry index out of range");
        m(r - 1, c - 1) += scalar_from_json(e[2]);
    }
    return m;
}

Json to_json(const AlgebraSpec& spec) {
    Json j = Json::object();
    j["family"] = std::string(to_string(spec.family));
    j["params"] = spec.params;
    if (spec.partition)
        j["partition"] = spec.partition->to_string();
    return j;
}

namespace {

Json dims_json(const std::array<std::size_t, 4>& dims) {
    Json j = Json::object();
    for (Degree d : kAllDegrees)
        j[d.to_string()] = dims[d.index()];
    return j;
}

Json element_json(const GradedMatrix& x) {
    Json j = Json::object();
    j["degree"] = to_json(x.require_degree());
    j["entries"] = sparse_entries(x.mat());
    return j;
}

const char* coordinate_name(const AlgebraBasis& a) {
    if (!a.spec())
        return "h";
    switch (a.spec()->family) {
    case Family::SoQ: return "eps";
    case Family::Osp: return "delta";
    default: return "h";
    }
}

} // namespace

Json algebra_document(const AlgebraBasis& a, const std::string& source, const Json& header) {
    Json j = Json::object();
    j[source] = header;
    j["convention"] = std::string(to_string(a.convention()));
    j["matrix_size"] = a.matrix_size();
    j["partition"] = a.partition().to_string();
    j["dimension"] = a.dimension();
    j["dims"] = dims_json(a.dims_by_degree());
    Json basis = Json::array();
    for (const auto& x : a.basis())
        basis.push_back(element_json(x));
    j["basis"] = std::move(basis);
    return j;
}

Json build_document(const AlgebraBasis& a) {
    if (!a.spec())
        throw Error(ErrorKind::InvalidParameter, "algebra has no catalog spec");
    return algebra_document(a, "algebra", to_json(*a.spec()));
}

Json to_json(const RootDatum& r) {
    Json j = Json::object();
    j["root"] = r.root;
    j["degree"] = to_json(r.degree);
    j["vector"] = sparse_entries(r.vector.mat());
    return j;
}

Json roots_document(const AlgebraBasis& a, const RootDecomposition& dec,
                    const PositiveSystem& pos) {
    Json j = Json::object();
    if (a.spec())
        j["algebra"] = to_json(*a.spec());
    j["coordinates"] = coordinate_name(a);
    Json cartan = Json::array();
    for (const auto& h : dec.cartan)
        cartan.push_back(sparse_entries(h.mat()));
    j["cartan"] = std::move(cartan);
    Json roots = Json::array();
    for (const auto& r : dec.roots)
        roots.push_back(to_json(r));
    j["roots"] = std::move(roots);
    Json positive = Json::array();
    for (const auto& r : pos.positive)
        positive.push_back(r.root);
    j["positive"] = std::move(positive);
    Json simple = Json::array();
    for (const auto& r : pos.simple) {
        Json s = Json::object();
        s["root"] = r.root;
        s["degree"] = to_json(r.degree);
        simple.push_back(std::move(s));
    }
    j["simple"] = std::move(simple);
    return j;
}

Json to_json(const GeneratorFamily& fam, const RelationReport& rep) {
    Json j = Json::object();
    j["relation"] = std::string(to_string(rep.relation_set));
    j["family"] = fam.kind == GeneratorKind::ParafermionSoQ ? "parafermion" : "paraboson";
    j["params"] = Json::array({fam.first, fam.second});
    j["checked"] = rep.total_checked;
    Json failures = Json::array();
    for (const auto& f : rep.failures) {
        Json r = Json::object();
        r["j"] = f.j + 1;
        r["k"] = f.k + 1;
        r["l"] = f.l + 1;
        r["signs"] = Json::array({f.xi, f.eta, f.eps});
        r["expected"] = sparse_entries(f.expected);
        r["got"] = sparse_entries(f.got);
        failures.push_back(std::move(r));
    }
    j["failures"] = std::move(failures);
    return j;
}

Json to_json(const CheckResult& c) {
    Json j = Json::object();
    j["name"] = c.name;
    j["checked"] = c.checked;
    j["failed"] = c.failed;
    j["details"] = c.details;
    return j;
}

Json to_json(const AlgebraSpec& spec, const VerificationReport& rep) {
    Json j = Json::object();
    j["algebra"] = to_json(spec);
    j["passed"] = rep.passed();
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    j["flags"] = rep.flags;
    return j;
}

Json to_json(const StructureConstants& c) {
    Json j = Json::object();
    j["dimension"] = c.dimension;
    j["convention"] = std::string(to_string(c.convention));
    Json degrees = Json::array();
    for (Degree d : c.degrees)
        degrees.push_back(to_json(d));
    j["degrees"] = std::move(degrees);
    Json constants = Json::array();
    for (const auto& e : c.entries) {
        Json r = Json::object();
        r["a"] = e.alpha + 1;
        r["b"] = e.beta + 1;
        r["c"] = e.gamma + 1;
        r["value"] = to_json(e.value);
        constants.push_back(std::move(r));
    }
    j["constants"] = std::move(constants);
    return j;
}

StructureConstants structure_constants_from_json(const Json& j) {
    try {
        StructureConstants c;
        c.dimension = j.at("dimension").get<std::size_t>();
        const auto conv = j.at("convention").get<std::string>();
        if (conv == to_string(Convention::GradedLieAlgebra))
            c.convention = Convention::GradedLieAlgebra;
        else if (conv == to_string(Convention::GradedLieSuperalgebra))
            c.convention = Convention::GradedLieSuperalgebra;
        else
            throw Error(ErrorKind::Parse, "unknown convention '" + conv + "'");
        for (const auto& d : j.at("degrees"))
            c.degrees.push_back(Degree::parse(d.get<std::string>()));
        if (c.degrees.size() != c.dimension)
            throw Error(ErrorKind::Parse, "degree list does not match the dimension");
        for (const auto& r : j.at("constants")) {
            const auto a = r.at("a").get<std::size_t>(), b = r.at("b").get<std::size_t>(),
                       g = r.at("c").get<std::size_t>();
            if (a < 1 || b < 1 || g < 1 || a > c.dimension || b > c.dimension ||
                g > c.dimension)
                throw Error(ErrorKind::Parse, "structure constant index out of range");
            c.entries.push_back({a - 1, b - 1, g - 1, scalar_from_json(r.at("value"))});
        }
        std::sort(c.entries.begin(), c.entries.end(), [](const auto& x, const auto& y) {
            return std::tie(x.alpha, x.beta, x.gamma) < std::tie(y.alpha, y.beta, y.gamma);
        });
        return c;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed structure constants: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace gradedlie
