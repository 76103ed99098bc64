#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homore/catalog.hpp"
#include "homore/unitalization.hpp"
#include "support.hpp"

using namespace homore;
using namespace homore::test;

namespace {
const Ring Q = Ring::rationals();
}

TEST_CASE("family constructor constraints") {
    CHECK_THROWS_AS(make_quantum_plane(rq(0), rq(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_quantum_plane(rq(2), rq(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_enveloping(rq(0)), std::invalid_argument);
    CHECK_NOTHROW(make_weyl(rq(0)));
}

TEST_CASE("commutation relations across parameter values") {
    for (const Scalar& k : {rq(1), rq(-2), rq(3, 2)}) {
        for (const Scalar& q : {rq(2), rq(1, 3)})
            CHECK(check_commutation_relation(make_quantum_plane(q, k)).pass);
        CHECK(check_commutation_relation(make_enveloping(k)).pass);
        CHECK(check_commutation_relation(make_weyl(k)).pass);
    }
    CHECK(check_commutation_relation(make_weyl(rq(0))).pass);
    CHECK(check_commutation_relation(symbolic_quantum_plane()).pass);
    CHECK(check_commutation_relation(symbolic_enveloping()).pass);
    CHECK(check_commutation_relation(symbolic_weyl()).pass);
}

TEST_CASE("k = 1 members coincide with the associative product") {
    FamilySpec qp = make_quantum_plane(rq(2), rq(1));
    FamilySpec weyl = make_weyl(rq(0));
    for (const FamilySpec& fam : {qp, weyl}) {
        OreContext plain = with_mode(fam.ctx, MulMode::Plain);
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = 0; j < 16; ++j) {
                OrePoly p = OrePoly::monomial(ypow(Q, i % 4), i / 4);
                OrePoly q = OrePoly::monomial(ypow(Q, j % 4), j / 4);
                CHECK(mul(fam.ctx, p, q) == mul(plain, p, q));
            }
    }
}

TEST_CASE("enveloping delta is Y d/dY") {
    FamilySpec env = make_enveloping(rq(1));
    CHECK(env.ctx.delta().apply(ypow(Q, 3)) == ypow(Q, 3).scaled(rq(3)));
}

TEST_CASE("sigma and delta survive the star deformation") {
    // sigma stays multiplicative and delta stays a sigma-derivation for the
    // star product a*b = alpha(a.b) on the coefficient ring
    std::vector<FamilySpec> fams{make_weyl(rq(3, 2)), make_enveloping(rq(-2)),
                                 make_quantum_plane(rq(2), rq(3))};
    for (const auto& fam : fams) {
        const OreContext& ctx = fam.ctx;
        const Ring& ring = ctx.ring();
        auto star = [&](const Polynomial& a, const Polynomial& b) {
            return ctx.coeff_mul(a, b);
        };
        for (std::size_t da = 0; da <= 4; ++da)
            for (std::size_t db = 0; db <= 4; ++db) {
                Polynomial a = ypow(ring, da), b = ypow(ring, db);
                const MapSpec& sg = ctx.sigma();
                const MapSpec& dl = ctx.delta();
                CHECK(sg.apply(star(a, b)) == star(sg.apply(a), sg.apply(b)));
                CHECK(dl.apply(star(a, b)) ==
                      star(sg.apply(a), dl.apply(b)) + star(dl.apply(a), b));
            }
    }
}

TEST_CASE("twisting-map classifier reproduces the families' constraints") {
    FamilySpec weyl = make_weyl(rq(1));
    CHECK(endomorphism_classifier(weyl, ypow(Q, 1) + Polynomial::constant(rq(5)), 4).commutes);
    CHECK(endomorphism_classifier(weyl, ypow(Q, 1), 4).commutes);  // k = 0
    CHECK(!endomorphism_classifier(weyl, ypow(Q, 1).scaled(rq(2)), 4).commutes);
    CHECK(!endomorphism_classifier(weyl, ypow(Q, 2), 4).commutes);

    FamilySpec qp = make_quantum_plane(rq(2), rq(1));
    CHECK(endomorphism_classifier(qp, ypow(Q, 1).scaled(rq(3)), 4).commutes);
    CHECK(!endomorphism_classifier(qp, ypow(Q, 1) + Polynomial::one(Q), 4).commutes);

    FamilySpec env = make_enveloping(rq(1));
    CHECK(endomorphism_classifier(env, ypow(Q, 1).scaled(rq(7)), 4).commutes);
    CHECK(!endomorphism_classifier(env, ypow(Q, 2), 4).commutes);
}

TEST_CASE("simplicity reduction trace for Y^2 X at k = 0") {
    OrePoly p = OrePoly::monomial(ypow(Q, 2), 1);
    ReductionTrace trace = simplicity_reduce(Rational(0), p, 100);
    REQUIRE(trace.steps.size() == 4);
    // [X, Y^2 X] = 2YX, then 2X, then [2X, Y] = 2, then scale
    CHECK(trace.steps[0].result == OrePoly::monomial(ypow(Q, 1).scaled(rq(2)), 1));
    CHECK(trace.steps[1].result == OrePoly::x(Q).scaled(rq(2)));
    CHECK(trace.steps[2].result == OrePoly::one(Q).scaled(rq(2)));
    CHECK(trace.steps[3].result == OrePoly::one(Q));
    CHECK(trace.final_element == OrePoly::one(Q));
    CHECK(trace.x_steps == 2);
    CHECK(trace.y_steps == 1);
    CHECK(trace.regeneration_ok);
}

TEST_CASE("simplicity reduction of 1 is a single scaling") {
    ReductionTrace trace = simplicity_reduce(Rational(1), OrePoly::one(Q), 10);
    CHECK(trace.x_steps == 0);
    CHECK(trace.y_steps == 0);
    CHECK(trace.steps.size() == 1);
    CHECK(trace.final_element == OrePoly::one(Q));
}

TEST_CASE("simplicity reduction for Y X + Y^3 at k = 1") {
    OrePoly p = OrePoly::monomial(ypow(Q, 1), 1) + OrePoly::from_poly(ypow(Q, 3));
    ReductionTrace trace = simplicity_reduce(Rational(1), p, 100);
    CHECK(trace.final_element == OrePoly::one(Q));
    CHECK(trace.steps.size() <= 3 + 1 + 2);
    CHECK(trace.regeneration_ok);
}

TEST_CASE("simplicity reduction terminates at 1 across parameters") {
    std::vector<Rational> ks{Rational(0), Rational(1), Rational(-2),
                             Rational(BigInt(3), BigInt(2))};
    for (const auto& k : ks) {
        // all monomials within (3, 3)
        for (std::size_t m = 0; m <= 3; ++m)
            for (std::size_t d = 0; d <= 3; ++d) {
                OrePoly p = OrePoly::monomial(ypow(Q, d), m);
                ReductionTrace trace = simplicity_reduce(k, p, 50);
                CHECK(trace.final_element == OrePoly::one(Q));
                CHECK(trace.steps.size() <= d + m + 1);
                CHECK(trace.regeneration_ok);
            }
        // dense seeded elements
        SampleGen gen(99);
        for (int trial = 0; trial < 5; ++trial) {
            OrePoly p(Q);
            for (std::size_t m = 0; m <= 3; ++m) p.add_term(m, random_poly_in(gen, Q, 3));
            if (p.is_zero()) continue;
            ReductionTrace trace = simplicity_reduce(k, p, 50);
            CHECK(trace.final_element == OrePoly::one(Q));
            CHECK(trace.regeneration_ok);
        }
    }
}

TEST_CASE("simplicity reduction rejects bad inputs") {
    CHECK_THROWS_AS(simplicity_reduce(Rational(0), OrePoly::zero(Q), 10),
                    std::invalid_argument);
    OrePoly p = OrePoly::monomial(ypow(Q, 3), 2);
    CHECK_THROWS_AS(simplicity_reduce(Rational(0), p, 1), std::runtime_error);
    Ring pk = Ring::parameters({"k"});
    CHECK_THROWS_AS(simplicity_reduce(Rational(1), OrePoly::one(pk), 10),
                    std::invalid_argument);
}

TEST_CASE("hom-associativity and weak unit across sampled parameters") {
    std::vector<FamilySpec> fams;
    for (const Scalar& k : {rq(1), rq(-2), rq(3, 2), rq(5)}) {
        fams.push_back(make_weyl(k));
        fams.push_back(make_enveloping(k));
        fams.push_back(make_quantum_plane(rq(2), k));
    }
    fams.push_back(make_weyl(rq(0)));
    fams.push_back(symbolic_weyl());
    for (const auto& fam : fams) {
        CAPTURE(family_name(fam.kind));
        CHECK(check_hom_associativity(fam.ctx, 2, 2).pass);
        CHECK(check_weak_unit(fam.ctx, OrePoly::one(fam.ctx.ring()), 2, 2).pass);
        CHECK(check_commutation_relation(fam).pass);
    }
}
