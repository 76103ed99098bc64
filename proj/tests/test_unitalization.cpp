#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homore/catalog.hpp"
#include "homore/parse.hpp"
#include "homore/unitalization.hpp"
#include "support.hpp"

using namespace homore;
using namespace homore::test;

namespace {

const Ring Q = Ring::rationals();

BulletAlgebra weyl_unitalization(const Scalar& k) {
    FamilySpec fam = make_weyl(k);
    return BulletAlgebra(fam.ctx, fam.ctx.ring());
}

}  // namespace

TEST_CASE("bullet product collapses twist terms at r = 0") {
    BulletAlgebra u = weyl_unitalization(rq(1));
    OrePoly m1 = OrePoly::monomial(ypow(Q, 1), 1);
    OrePoly m2 = OrePoly::y(Q);
    UnitalizedElement x{m1, Scalar::zero(Q)};
    UnitalizedElement y{m2, Scalar::zero(Q)};
    UnitalizedElement prod = bullet_mul(u, x, y);
    CHECK(prod.m == mul(u.ctx, m1, m2));
    CHECK(prod.r.is_zero());
}

TEST_CASE("the weak unit twists the other factor") {
    BulletAlgebra u = weyl_unitalization(rq(2));
    SampleGen gen(3);
    for (int trial = 0; trial < 5; ++trial) {
        OrePoly m = random_ore_poly(gen, Q, 2, 2);
        UnitalizedElement x{m, random_scalar_in(gen, Q)};
        UnitalizedElement left = bullet_mul(u, unital_one(u), x);
        UnitalizedElement right = bullet_mul(u, x, unital_one(u));
        UnitalizedElement expect = beta_alpha(u, x);
        CHECK(left == expect);
        CHECK(right == expect);
    }
}

TEST_CASE("bullet product over hom-Weyl k=1, frozen expansion") {
    // (YX, 2) . (Y, 3) = (YX*Y + 2 alpha(Y) + 3 alpha(YX), 6); expanding by
    // hand: YX*Y = (Y+1) + (Y+1)^2 X, so the first component is
    // (Y^2 + 5Y + 4) X + 3Y + 3
    BulletAlgebra u = weyl_unitalization(rq(1));
    UnitalizedElement x{OrePoly::monomial(ypow(Q, 1), 1), rq(2)};
    UnitalizedElement y{OrePoly::y(Q), rq(3)};
    UnitalizedElement prod = bullet_mul(u, x, y);
    OrePoly expect_m = parse_ore_poly("(Y^2 + 5*Y + 4)*X + 3*Y + 3", Q);
    CHECK(prod.m == expect_m);
    CHECK(prod.r == rq(6));
}

TEST_CASE("beta_alpha twists the first component only") {
    BulletAlgebra u = weyl_unitalization(rq(3));
    UnitalizedElement x{OrePoly::y(Q), rq(5)};
    UnitalizedElement b = beta_alpha(u, x);
    CHECK(b.m == OrePoly::from_poly(ypow(Q, 1) + Polynomial::constant(rq(3))));
    CHECK(b.r == rq(5));
    UnitalizedElement scalar_only{OrePoly::zero(Q), rq(7)};
    CHECK(beta_alpha(u, scalar_only) == scalar_only);
}

TEST_CASE("unitalization checks pass for the hom-Weyl family") {
    BulletAlgebra u = weyl_unitalization(rq(1));
    for (const auto& r : check_unitalization(u, 2, 2, 10, 42)) {
        CAPTURE(r.property);
        CHECK(r.pass);
    }
    CHECK(check_embedding(u, 2, 2).pass);
    CHECK(check_hom_ideal(u, 2, 2).pass);
}

TEST_CASE("hom-associativity of bullet across families and parameters") {
    std::vector<FamilySpec> fams{make_weyl(rq(0)), make_weyl(rq(1)), make_weyl(rq(-2)),
                                 make_enveloping(rq(1)), make_enveloping(rq(-2)),
                                 make_quantum_plane(rq(2), rq(-2))};
    for (const auto& fam : fams) {
        BulletAlgebra u(fam.ctx, fam.ctx.ring());
        auto reports = check_unitalization(u, 1, 2, 6, 7);
        for (const auto& r : reports) {
            CAPTURE(family_name(fam.kind), r.property);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("identity twist gives an honest unital algebra") {
    OreContext assoc(MapSpec::identity(Q),
                     MapSpec::derivation(Polynomial::one(Q), MapSpec::identity(Q)),
                     MapSpec::identity(Q), MulMode::Plain);
    BulletAlgebra u(assoc, Q);
    SampleGen gen(8);
    for (int trial = 0; trial < 10; ++trial) {
        UnitalizedElement x{random_ore_poly(gen, Q, 2, 2), random_scalar_in(gen, Q)};
        CHECK(bullet_mul(u, unital_one(u), x) == x);
        CHECK(bullet_mul(u, x, unital_one(u)) == x);
    }
}

TEST_CASE("a non-multiplicative twist breaks beta multiplicativity") {
    // alpha = id + d/dY sends Y to Y+1 but is only linear, not an endomorphism
    MapSpec bad = MapSpec::sum(
        {MapSpec::identity(Q), MapSpec::derivation(Polynomial::one(Q), MapSpec::identity(Q))});
    OreContext ctx(MapSpec::identity(Q),
                   MapSpec::derivation(Polynomial::one(Q), MapSpec::identity(Q)), bad,
                   MulMode::Plain);
    BulletAlgebra u(ctx, Q);
    UnitalizedElement x{OrePoly::y(Q), Scalar::zero(Q)};
    UnitalizedElement lhs = beta_alpha(u, bullet_mul(u, x, x));
    UnitalizedElement rhs = bullet_mul(u, beta_alpha(u, x), beta_alpha(u, x));
    CHECK(lhs != rhs);
    auto reports = check_unitalization(u, 1, 1, 0, 0);
    CHECK(!reports[2].pass);  // beta-multiplicative
}

TEST_CASE("embedding intertwines the twists") {
    BulletAlgebra u = weyl_unitalization(rq(2));
    CHECK(check_embedding(u, 2, 2).pass);
    OrePoly m = OrePoly::monomial(ypow(Q, 2), 1);
    OrePoly via_beta = beta_alpha(u, {m, Scalar::zero(Q)}).m;
    OrePoly via_alpha = twist_apply(u.ctx, m);
    OrePoly expect = OrePoly::monomial(
        substitute(ypow(Q, 2), ypow(Q, 1) + Polynomial::constant(rq(2))), 1);
    CHECK(via_beta == expect);
    CHECK(via_alpha == expect);
}

TEST_CASE("the embedded copy is a hom-ideal") {
    BulletAlgebra u = weyl_unitalization(rq(1));
    // (Y, 3).(X, 0) lands in M + 0 with first component Y*X + 3 alpha(X)
    UnitalizedElement x{OrePoly::y(Q), rq(3)};
    UnitalizedElement mx{OrePoly::x(Q), Scalar::zero(Q)};
    UnitalizedElement prod = bullet_mul(u, x, mx);
    CHECK(prod.r.is_zero());
    CHECK(prod.m == mul(u.ctx, OrePoly::y(Q), OrePoly::x(Q)) +
                        twist_apply(u.ctx, OrePoly::x(Q)).scaled(rq(3)));
    CHECK(check_hom_ideal(u, 2, 2).pass);
}

TEST_CASE("characteristic of unitalizations") {
    FamilySpec weyl_q = make_weyl(rq(1));
    BulletAlgebra over_z(weyl_q.ctx, Ring::integers());
    CHECK(characteristic(over_z) == 0);

    for (std::uint64_t n : {std::uint64_t{2}, std::uint64_t{6}}) {
        Ring zn = Ring::integers_mod(n);
        FamilySpec weyl_zn = make_weyl(Scalar::from_int(zn, 1));
        BulletAlgebra u(weyl_zn.ctx, zn);
        CHECK(characteristic(u) == n);
        CHECK(check_characteristic_propagation(u, 1, 1, 5, 13).pass);
        for (const auto& r : check_unitalization(u, 1, 1, 5, 13)) {
            CAPTURE(r.property);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("integer base acts through repeated addition") {
    FamilySpec weyl = make_weyl(rq(1));
    BulletAlgebra u(weyl.ctx, Ring::integers());
    UnitalizedElement x{OrePoly::y(Q), Scalar::from_int(Ring::integers(), 2)};
    UnitalizedElement y{OrePoly::x(Q), Scalar::from_int(Ring::integers(), -1)};
    UnitalizedElement prod = bullet_mul(u, x, y);
    // m-part: Y*X + 2 alpha(X) - alpha(Y); r-part: -2
    OrePoly expect = mul(u.ctx, OrePoly::y(Q), OrePoly::x(Q)) +
                     twist_apply(u.ctx, OrePoly::x(Q)).scaled(rq(2)) -
                     twist_apply(u.ctx, OrePoly::y(Q));
    CHECK(prod.m == expect);
    CHECK(prod.r == Scalar::from_int(Ring::integers(), -2));
    for (const auto& r : check_unitalization(u, 1, 1, 5, 21)) {
        CAPTURE(r.property);
        CHECK(r.pass);
    }
}

TEST_CASE("fixed weak unit forces multiplicativity across the families") {
    for (const auto& fam :
         {make_weyl(rq(1)), make_enveloping(rq(-2)), make_quantum_plane(rq(2), rq(3))}) {
        const Ring& ring = fam.ctx.ring();
        CHECK(twist_apply(fam.ctx, OrePoly::one(ring)) == OrePoly::one(ring));
        CHECK(check_multiplicative_from_fixed_unit(fam.ctx, OrePoly::one(ring), 2, 2).pass);
    }
}

TEST_CASE("mismatched base rings are rejected") {
    FamilySpec weyl = make_weyl(rq(1));
    CHECK_THROWS_AS(BulletAlgebra(weyl.ctx, Ring::integers_mod(6)), ring_mismatch_error);
}
