#include "helpers.hpp"

#include "ppa/quiver.hpp"

using namespace ppa;
using unit::error_code;

TEST_CASE("building and validating quivers") {
    auto a2 = Quiver::build({"1", "2"}, {{"a", "1", "2"}});
    CHECK(a2.num_vertices() == 2);
    CHECK(a2.num_arrows() == 1);
    CHECK(error_code([] { Quiver::build({"1"}, {{"a", "1", "1"}}); }) == "LoopArrow");
    CHECK(error_code([] { Quiver::build({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}); }) == "DuplicateName");
    CHECK(error_code([] { Quiver::build({"1", "2"}, {{"a", "1", "3"}}); }) == "DanglingEndpoint");
    auto kr = Quiver::build({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
    CHECK(kr.edge_count(0, 1) == 2);
}

TEST_CASE("doubling") {
    auto dq = standard_quiver("A2").double_quiver();
    REQUIRE(dq.num_arrows() == 2);
    CHECK(dq.bar(0) == 1);
    CHECK(dq.arrow(1).source == dq.arrow(0).target);
    CHECK(dq.arrow(1).target == dq.arrow(0).source);
    for (std::size_t a = 0; a < dq.num_arrows(); ++a) CHECK(dq.bar(dq.bar(a)) == a);
    CHECK(standard_quiver("A1").double_quiver().num_arrows() == 0);
    CHECK(standard_quiver("A1~").double_quiver().num_arrows() == 4);
    CHECK(error_code([&] { dq.double_quiver(); }) == "AlreadyDoubled");
    CHECK(error_code([] { standard_quiver("A2").bar(0); }) == "NotDoubled");
}

TEST_CASE("Cartan matrix and classification") {
    auto c = cartan_matrix(standard_quiver("A2"));
    CHECK(c.matrix == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
    CHECK(c.kind == QuiverKind::Finite);
    auto ca = cartan_matrix(standard_quiver("A1~"));
    CHECK(ca.matrix == std::vector<std::vector<long long>>{{2, -2}, {-2, 2}});
    CHECK(ca.kind == QuiverKind::Affine);

    auto tri = Quiver::build({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"},
                                               {"d", "2", "3"}, {"e", "1", "3"}, {"f", "3", "1"}});
    CHECK(classify(tri).kind == QuiverKind::Wild);

    auto a3 = classify(standard_quiver("A3"));
    CHECK(a3.kind == QuiverKind::Finite);
    CHECK(a3.label == std::optional<std::string>("A3"));

    // orientation does not matter
    CHECK(cartan_matrix(standard_quiver("D5")).matrix == cartan_matrix(standard_quiver("D5").opposite()).matrix);
}

TEST_CASE("catalogue classifies as expected") {
    for (int n = 1; n <= 8; ++n) {
        auto label = "A" + std::to_string(n);
        auto cl = classify(standard_quiver(label));
        CHECK(cl.kind == QuiverKind::Finite);
        CHECK(cl.label == std::optional<std::string>(label));
    }
    for (int n = 4; n <= 8; ++n) {
        auto label = "D" + std::to_string(n);
        CHECK(classify(standard_quiver(label)).label == std::optional<std::string>(label));
    }
    for (const std::string e : {"E6", "E7", "E8"}) CHECK(classify(standard_quiver(e)).label == std::optional<std::string>(e));
    for (const std::string l : {"A1~", "A2~", "A5~", "D4~", "D6~", "E6~", "E7~", "E8~"})
        CHECK(classify(standard_quiver(l)).kind == QuiverKind::Affine);
}

TEST_CASE("disconnected finite quivers get a composite label") {
    auto q = Quiver::build({"1", "2", "3"}, {{"a", "1", "2"}});
    auto cl = classify(q);
    CHECK(cl.kind == QuiverKind::Finite);
    REQUIRE(cl.label);
    CHECK(cl.label->find("A2") != std::string::npos);
    CHECK(cl.label->find("A1") != std::string::npos);
}

TEST_CASE("JSON round trip") {
    for (const std::string l : {"A3", "D4", "A1~"}) {
        auto q = standard_quiver(l);
        CHECK(Quiver::from_json(q.to_json()) == q);
        auto dq = q.double_quiver();
        CHECK(Quiver::from_json(dq.to_json()).double_quiver() == dq);
    }
    CHECK(error_code([] { Quiver::from_json(nlohmann::json::parse("[1,2]")); }) == "BadQuiverJson");
    CHECK(error_code([] { standard_quiver("Z9"); }) == "UnknownQuiver");
}

TEST_CASE("dimension vectors") {
    DimVector a{1, 2}, b{0, 1};
    CHECK((a - b) == DimVector{1, 1});
    CHECK(b.leq(a));
    CHECK(error_code([&] { (void)(b - a); }) != "");
    CHECK(error_code([] { DimVector::from_signed({1, -1}); }) == "NegativeDimension");
    CHECK(cartan_apply(cartan_matrix(standard_quiver("A2")), {1, 1}) == WeightVec{1, 1});
}
