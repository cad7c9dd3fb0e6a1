#include "helpers.hpp"

#include "ppa/geomrep.hpp"

using namespace ppa;
using unit::error_code;

namespace {

InjectiveModel<Rationals> model(const std::string& l, DimVector w) {
    PreprojectiveAlgebra alg(standard_quiver(l));
    return injective_module(alg, w);
}

const std::vector<std::uint32_t> kPrimes{2, 3, 5};

}  // namespace

TEST_CASE("finite point sets") {
    auto q = model("A2", {1, 0});
    auto real = finite_points(q.rep, {1, 0}, kPrimes);
    CHECK(real.all_finite());
    CHECK(real.num_points() == 3);
    for (const auto& v : std::vector<DimVector>{{0, 0}, {1, 0}, {1, 1}}) {
        auto k = real.find_weight(v);
        REQUIRE(k);
        CHECK(real.weights[*k].points.size() == 1);
    }
    CHECK_FALSE(real.find_weight({0, 1}));

    auto a3 = model("A3", {1, 0, 0});
    CHECK(finite_points(a3.rep, {1, 0, 0}, kPrimes).num_points() == 4);

    auto a1 = model("A1", {2});
    auto r1 = finite_points(a1.rep, {2}, kPrimes);
    CHECK_FALSE(r1.all_finite());
    auto k = r1.find_weight({1});
    REQUIRE(k);
    CHECK_FALSE(r1.weights[*k].finite);
    CHECK(r1.weights[*k].counts == std::vector<std::uint64_t>{3, 4, 6});
}

TEST_CASE("operators in the finite regime") {
    auto q = model("A2", {1, 0});
    auto c = cartan_matrix(standard_quiver("A2"));
    auto real = finite_points(q.rep, {1, 0}, kPrimes);
    auto ops = operator_matrices(real, c);
    REQUIRE(ops.E.size() == 2);
    // point order: (0,0), (1,0), (1,1)
    CHECK(ops.H[0] == IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
    CHECK(ops.H[1] == IntMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    CHECK(ops.E[0] == IntMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    for (std::size_t i = 0; i < 2; ++i) {
        auto comm = mat_sub(mat_mul(ops.E[i], ops.F[i]), mat_mul(ops.F[i], ops.E[i]));
        CHECK(comm == ops.H[i]);
    }
    CHECK(mat_is_zero(mat_sub(mat_mul(ops.E[0], ops.F[1]), mat_mul(ops.F[1], ops.E[0]))));

    auto a1 = model("A1", {2});
    auto r1 = finite_points(a1.rep, {2}, kPrimes);
    CHECK(error_code([&] { operator_matrices(r1, cartan_matrix(standard_quiver("A1"))); }) == "NotFiniteRegime");
}

TEST_CASE("fiber Euler characteristics") {
    auto q = model("A1", {2});
    auto z = zero_subrep(q.rep);
    CHECK(fiber_euler(q.rep, z, 0, Direction::Up, kPrimes) == 2);
    CHECK(fiber_euler(q.rep, z, 0, Direction::Down, kPrimes) == 0);
    auto line = enumerate_submodules(reduce_rep(q.rep, PrimeField(2)), {1});
    REQUIRE_FALSE(line.empty());
    Subrep<Rationals> l{{Subspace<Rationals>::span(Rationals{}, 2, {{1, 0}})}};
    CHECK(fiber_euler(q.rep, l, 0, Direction::Up, kPrimes) == 1);
    CHECK(fiber_euler(q.rep, l, 0, Direction::Down, kPrimes) == 1);

    auto a3 = model("A1", {3});
    CHECK(fiber_euler(a3.rep, zero_subrep(a3.rep), 0, Direction::Up, kPrimes) == 3);
}

TEST_CASE("sl2 relations") {
    CHECK(verify_sl2(standard_quiver("A2"), {1, 0}, kPrimes).passed());
    auto r = verify_sl2(standard_quiver("A2"), {1, 0}, kPrimes);
    CHECK(r.finite_regime);
    CHECK(r.total_dim == 3);
    auto a1 = verify_sl2(standard_quiver("A1"), {2}, kPrimes);
    CHECK_FALSE(a1.finite_regime);
    CHECK(a1.passed());
    CHECK(verify_sl2(standard_quiver("A3"), {0, 0, 1}, kPrimes).passed());
    CHECK(error_code([] { verify_sl2(standard_quiver("A1~"), {1, 0}, kPrimes); }) == "NotFiniteType");
}

TEST_CASE("restriction to Demazure submodules") {
    CHECK(restricted_compat(standard_quiver("A2"), {1, 0}, {1, 0}, kPrimes).passed);
    CHECK(restricted_compat(standard_quiver("A3"), {1, 0, 0}, {2, 1, 0}, kPrimes).passed);
    CHECK(restricted_compat(standard_quiver("A3"), {1, 0, 0}, {1, 0}, kPrimes).passed);
}

TEST_CASE("Chevalley comparison") {
    auto rep = chevalley_compare(standard_quiver("A2"), {1, 0}, kPrimes);
    CHECK(rep.passed());
    CHECK(rep.theta_w == DimVector{0, 1});
    CHECK(rep.bijection.size() == 3);
    CHECK(chevalley_compare(standard_quiver("A3"), {0, 1, 0}, kPrimes).passed());
    CHECK(error_code([] { chevalley_compare(standard_quiver("A1"), {2}, kPrimes); }) != "");
}
