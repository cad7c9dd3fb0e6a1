#include "helpers.hpp"

#include "ppa/rep.hpp"

using namespace ppa;
using unit::a2_rep;
using unit::error_code;
using unit::qmat;

namespace {

// q^1 for A2 written out by hand: x_a = 0 and x_a* sends the vertex-2 vector
// to the vertex-1 vector.
Rep<Rationals> q1() { return a2_rep({1, 1}, qmat(1, 1, {0}), qmat(1, 1, {1})); }

Rep<Rationals> semisimple(DimVector d) {
    return zero_maps_rep(Rationals{}, standard_quiver("A2").double_quiver(), d);
}

Vec<Rationals> e1(std::size_t n, std::size_t k) {
    Vec<Rationals> v(n, mpq_class(0));
    v[k] = 1;
    return v;
}

}  // namespace

TEST_CASE("validated construction") {
    CHECK_NOTHROW(q1());
    CHECK(error_code([] { a2_rep({1, 1}, qmat(1, 1, {1}), qmat(1, 1, {1})); }) == "RelationViolated");
    CHECK(error_code([] { a2_rep({1, 2}, qmat(1, 1, {0}), qmat(1, 1, {1})); }) == "ShapeMismatch");
    CHECK(error_code([] {
              make_rep(Rationals{}, standard_quiver("A2"), {1, 1}, {qmat(1, 1, {0})}, true);
          }) == "NotDoubled");
    CHECK_NOTHROW(make_rep(Rationals{}, standard_quiver("A3").double_quiver(), {2, 1, 3},
                           zero_maps_rep(Rationals{}, standard_quiver("A3").double_quiver(), {2, 1, 3}).maps(), true));
}

TEST_CASE("socle and radical") {
    auto q = q1();
    CHECK(socle(q).dims() == DimVector{1, 0});
    CHECK(radical(q).dims() == DimVector{1, 0});
    auto s = semisimple({2, 1});
    CHECK(socle(s).dims() == DimVector{2, 1});
    CHECK(radical(s).dims() == DimVector{0, 0});
    // p^1 = span{e1, a}: a sends e1 to the vertex-2 vector
    auto p1 = a2_rep({1, 1}, qmat(1, 1, {1}), qmat(1, 1, {0}));
    CHECK(radical(p1).dims() == DimVector{0, 1});

    // arrows vanish on the socle
    auto soc = socle(q);
    auto r = restrict_to(q, soc);
    for (const auto& m : r.rep.maps()) CHECK(m.is_zero());
}

TEST_CASE("filtrations and nilpotency") {
    auto s = semisimple({1, 2});
    auto chain = socle_filtration(s);
    REQUIRE(chain.size() == 2);
    CHECK(chain[1].dims() == DimVector{1, 2});
    CHECK(is_nilpotent(s));

    auto qq = direct_sum(q1(), a2_rep({1, 1}, qmat(1, 1, {1}), qmat(1, 1, {0})));
    auto sf = socle_filtration(qq);
    REQUIRE(sf.size() == 3);
    CHECK(sf[1].dims() == DimVector{1, 1});
    CHECK(sf[2].dims() == DimVector{2, 2});
    CHECK(radical_filtration(qq).size() == sf.size());

    auto cyc = a2_rep({1, 1}, qmat(1, 1, {1}), qmat(1, 1, {1}), false);
    CHECK_FALSE(is_nilpotent(cyc));
    CHECK(socle_filtration(cyc).back().dims() == DimVector{0, 0});

    // affine A1: x_{a1} = 1 and x_{a2*} = 1 satisfy the relation but cycle
    auto dq = standard_quiver("A1~").double_quiver();
    auto v = make_rep(Rationals{}, dq, {1, 1}, {qmat(1, 1, {1}), qmat(1, 1, {0}), qmat(1, 1, {0}), qmat(1, 1, {1})}, true);
    CHECK_FALSE(is_nilpotent(v));
}

TEST_CASE("Hom spaces") {
    auto q = q1();
    CHECK(hom_space(semisimple({1, 0}), q).size() == 1);
    CHECK(hom_space(semisimple({1, 0}), semisimple({0, 1})).size() == 0);
    CHECK(hom_space(q, q).size() == 1);
    auto v = direct_sum(q, semisimple({0, 1}));
    auto endo = hom_space(v, v);
    CHECK(endo.size() >= 1);
    CHECK(is_homomorphism(v, v, identity_map(v)));
}

TEST_CASE("isomorphism testing") {
    auto q = q1();
    auto p2 = a2_rep({1, 1}, qmat(1, 1, {0}), qmat(1, 1, {1}));
    CHECK(is_isomorphic(q, p2).outcome == IsoOutcome::Isomorphic);
    CHECK(is_isomorphic(semisimple({1, 1}), q).outcome == IsoOutcome::NotIsomorphic);
    CHECK(is_isomorphic(q, q).outcome == IsoOutcome::Isomorphic);

    // a rescaled copy is still isomorphic, in both directions
    auto scaled = a2_rep({1, 1}, qmat(1, 1, {0}), qmat(1, 1, {5}));
    CHECK(is_isomorphic(q, scaled).outcome == IsoOutcome::Isomorphic);
    CHECK(is_isomorphic(scaled, q).outcome == IsoOutcome::Isomorphic);
    auto res = is_isomorphic(q, scaled);
    REQUIRE(res.witness);
    CHECK(is_homomorphism(q, scaled, *res.witness));

    // over a prime field
    PrimeField f5(5);
    auto r5 = reduce_rep(q, f5);
    CHECK(is_isomorphic(r5, reduce_rep(scaled, PrimeField(7))).outcome != IsoOutcome::Inconclusive);
}

TEST_CASE("quotients") {
    auto q = q1();
    auto quo = quotient(q, socle(q));
    CHECK(quo.rep.dims() == DimVector{0, 1});
    CHECK(is_isomorphic(quo.rep, semisimple({0, 1})).outcome == IsoOutcome::Isomorphic);
    CHECK(is_isomorphic(quotient(q, zero_subrep(q)).rep, q).outcome == IsoOutcome::Isomorphic);
    CHECK(quotient(q, full_subrep(q)).rep.dims() == DimVector{0, 0});
    CHECK(is_homomorphism(q, quo.rep, quo.projection));

    Subrep<Rationals> bad{{Subspace<Rationals>(Rationals{}, 1), Subspace<Rationals>::full(Rationals{}, 1)}};
    CHECK(error_code([&] { quotient(q, bad); }) == "NotSubmodule");
}

TEST_CASE("generated submodules") {
    auto q = q1();
    CHECK(sub_generated(q, {{1, e1(1, 0)}}).dims() == DimVector{1, 1});
    CHECK(sub_generated(q, {{0, e1(1, 0)}}).dims() == DimVector{1, 0});
    CHECK(sub_generated(q, {}).dims() == DimVector{0, 0});
    CHECK(is_submodule(q, sub_generated(q, {{1, e1(1, 0)}})));
}

TEST_CASE("change of basis and subspace canonical forms") {
    Rationals f;
    auto a = Subspace<Rationals>::span(f, 3, {{1, 2, 3}, {0, 1, 1}});
    auto b = Subspace<Rationals>::span(f, 3, {{1, 3, 4}, {2, 4, 6}});
    CHECK(a == b);
    CHECK(a.intersect(Subspace<Rationals>::span(f, 3, {{0, 0, 1}})).dim() == 0);
    CHECK(a.sum(Subspace<Rationals>::span(f, 3, {{0, 0, 1}})).dim() == 3);

    auto q = q1();
    GradedMap<Rationals> P{qmat(1, 1, {3}), qmat(1, 1, {-2})};
    auto moved = change_basis(q, P);
    CHECK(is_homomorphism(q, moved, P));
    CHECK(error_code([&] { change_basis(q, GradedMap<Rationals>{qmat(1, 1, {0}), qmat(1, 1, {1})}); }) == "NotInvertible");
}
