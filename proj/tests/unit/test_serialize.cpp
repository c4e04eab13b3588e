#include "gradedlie/error.hpp"
#include "gradedlie/serialize.hpp"

#include <gtest/gtest.h>

using namespace gradedlie;

namespace {

AlgebraBasis make(Family f, std::vector<int> params) {
    return build(AlgebraSpec{f, std::move(params), std::nullopt});
}

} // namespace

TEST(ScalarJson, WireFormat) {
    EXPECT_EQ(to_json(Scalar()).dump(), R"({"r":"0/1","s":"0/1"})");
    EXPECT_EQ(to_json(Scalar(Rational(-6, 4), Rational(1))).dump(), R"({"r":"-3/2","s":"1/1"})");
    const Scalar x(Rational(5, 7), Rational(-2, 3));
    EXPECT_EQ(scalar_from_json(to_json(x)), x);
    EXPECT_THROW(scalar_from_json(Json::parse(R"({"r":"1/2"})")), Error);
    EXPECT_THROW(scalar_from_json(Json::parse(R"({"r":1,"s":"0/1"})")), Error);
}

TEST(DegreeJson, TwoCharacters) {
    EXPECT_EQ(to_json(Degree(1, 0)).dump(), R"("10")");
}

TEST(SparseJson, OneBasedRoundTrip) {
    Matrix m(3);
    m(0, 2) = Scalar::sqrt2();
    m(2, 1) = Scalar(-1);
    const Json j = sparse_entries(m);
    EXPECT_EQ(j[0][0], 1);
    EXPECT_EQ(j[0][1], 3);
    EXPECT_EQ(matrix_from_sparse(j, 3), m);
    EXPECT_THROW(matrix_from_sparse(Json::parse(R"([[0,1,{"r":"1/1","s":"0/1"}]])"), 3), Error);
    EXPECT_THROW(matrix_from_sparse(Json::parse(R"([[4,1,{"r":"1/1","s":"0/1"}]])"), 3), Error);
}

TEST(BuildDocument, KeysAndDims) {
    const Json doc = build_document(make(Family::SoQ, {3, 1}));
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"algebra", "convention", "matrix_size", "partition",
                                              "dimension", "dims", "basis"}));
    EXPECT_EQ(doc["dims"].dump(), R"({"00":7,"01":2,"10":4,"11":8})");
    EXPECT_EQ(doc["algebra"].dump(), R"({"family":"so_q","params":[3,1]})");
    EXPECT_EQ(doc["basis"].size(), 21u);
}

TEST(RootsDocument, CoordinateNames) {
    const auto so = make(Family::SoQ, {2, 1});
    const auto dso = root_decomposition(so);
    EXPECT_EQ(roots_document(so, dso, positive_and_simple_roots(dso))["coordinates"], "eps");
    const auto osp = make(Family::Osp, {0, 0, 1, 1});
    const auto dosp = root_decomposition(osp);
    const Json j = roots_document(osp, dosp, positive_and_simple_roots(dosp));
    EXPECT_EQ(j["coordinates"], "delta");
    EXPECT_EQ(j["simple"].dump(), R"([{"root":[1,-1],"degree":"11"},{"root":[0,1],"degree":"01"}])");
    const auto& row = j["roots"][0];
    EXPECT_TRUE(row.contains("root") && row.contains("degree") && row.contains("vector"));
}

TEST(StructureConstantsJson, RoundTrip) {
    const auto a = make(Family::SoQ, {2, 1});
    const auto c = structure_constants(a);
    const Json j = to_json(c);
    const auto back = structure_constants_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, c);
    EXPECT_EQ(bracket_table(back), bracket_table(c));
}

TEST(StructureConstantsJson, EmptyAlgebra) {
    StructureConstants empty;
    const Json j = to_json(empty);
    EXPECT_TRUE(j["constants"].is_array());
    EXPECT_TRUE(j["constants"].empty());
    EXPECT_EQ(structure_constants_from_json(j), empty);
}

TEST(StructureConstantsJson, CommutatorSignForGl) {
    // [[e_12, e_21]] in gl_{1,1,1,1}(4): degrees (0,1).(0,1) = 0, so a commutator e_11 - e_22
    const auto a = make(Family::GlPqrs, {1, 1, 1, 1});
    const auto c = structure_constants(a);
    const Matrix e12 = Matrix::unit(4, 0, 1), e21 = Matrix::unit(4, 1, 0);
    std::size_t i12 = a.dimension(), i21 = a.dimension();
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (a.basis()[k].mat() == e12)
            i12 = k;
        if (a.basis()[k].mat() == e21)
            i21 = k;
    }
    ASSERT_LT(i12, a.dimension());
    ASSERT_LT(i21, a.dimension());
    EXPECT_EQ(bracket_from_constants(c, a, i12, i21),
              Matrix::unit(4, 0, 0) - Matrix::unit(4, 1, 1));
    EXPECT_EQ(bracket_from_constants(c, a, i21, i12),
              Matrix::unit(4, 1, 1) - Matrix::unit(4, 0, 0));
    bool found = false;
    const Json doc = to_json(c);
    for (const auto& e : doc["constants"])
        if (e["a"] == i12 + 1 && e["b"] == i21 + 1)
            found = true;
    EXPECT_TRUE(found);
}

TEST(StructureConstantsJson, Malformed) {
    EXPECT_THROW(structure_constants_from_json(Json::parse("{}")), Error);
    EXPECT_THROW(structure_constants_from_json(Json::parse(
                     R"({"dimension":1,"convention":"x","degrees":["00"],"constants":[]})")),
                 Error);
    EXPECT_THROW(structure_constants_from_json(Json::parse(
                     R"({"dimension":1,"convention":"graded_lie_algebra","degrees":["00"],
                         "constants":[{"a":2,"b":1,"c":1,"value":{"r":"1/1","s":"0/1"}}]})")),
                 Error);
}

TEST(RelationJson, Shape) {
    const auto f = build_parafermions(2, 1);
    const Json j = to_json(f, verify_relations(f, RelationSet::PfSame));
    EXPECT_EQ(j.dump(),
              R"({"relation":"pf_same","family":"parafermion","params":[2,1],"checked":16,"failures":[]})");
}
