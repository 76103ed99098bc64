#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homore/maps.hpp"
#include "homore/ore.hpp"
#include "support.hpp"

using namespace homore;
using namespace homore::test;

namespace {

const Ring Q = Ring::rationals();

MapSpec ddy(const Ring& ring) {
    return MapSpec::derivation(Polynomial::one(ring), MapSpec::identity(ring));
}

MapSpec y_ddy(const Ring& ring) {
    return MapSpec::derivation(Polynomial::y(ring), MapSpec::identity(ring));
}

MapSpec scale_endo(const Scalar& c) { return MapSpec::endo(Polynomial::monomial(c, 1)); }

MapSpec shift_endo(const Ring& ring, const Scalar& k) {
    return MapSpec::endo(Polynomial::y(ring) + Polynomial::constant(k));
}

}  // namespace

TEST_CASE("endomorphism evaluation") {
    Ring pq = Ring::parameters({"q"});
    Scalar q = Scalar::of(ParamPoly::generator(pq.params(), "q"));
    MapSpec sigma = scale_endo(q);
    CHECK(sigma.apply(ypow(pq, 3)) == Polynomial::monomial(q * q * q, 3));
    CHECK(sigma.apply(Polynomial::one(pq)) == Polynomial::one(pq));

    MapSpec d = ddy(Q);
    CHECK(d.apply(ypow(Q, 3)) == ypow(Q, 2).scaled(rq(3)));
    CHECK(MapSpec::zero(Q).apply(ypow(Q, 5)).is_zero());
}

TEST_CASE("derivation recursion matches Y d/dY") {
    MapSpec d = y_ddy(Q);
    CHECK(d.apply(ypow(Q, 3)) == ypow(Q, 3).scaled(rq(3)));
    CHECK(d.apply(Polynomial::one(Q)).is_zero());
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(d.apply(ypow(Q, n)) == ypow(Q, 1) * derivative(ypow(Q, n)));
}

TEST_CASE("pi base cases and degenerate indices") {
    MapSpec sigma = MapSpec::identity(Q);
    MapSpec delta = ddy(Q);
    Polynomial p = ypow(Q, 3) + ypow(Q, 1).scaled(rq(2));
    CHECK(pi(0, 0, sigma, delta, p) == p);
    CHECK(pi(-1, 2, sigma, delta, p).is_zero());
    CHECK(pi(3, 2, sigma, delta, p).is_zero());
}

TEST_CASE("pi(1,3) is the three-word sum") {
    Ring pq = Ring::parameters({"q"});
    Scalar q = Scalar::of(ParamPoly::generator(pq.params(), "q"));
    MapSpec sigma = scale_endo(q);
    MapSpec delta = MapSpec::derivation(Polynomial::one(pq), sigma);
    Polynomial p = ypow(pq, 4);
    Polynomial expected = MapSpec::compose({sigma, delta, delta}).apply(p) +
                          MapSpec::compose({delta, sigma, delta}).apply(p) +
                          MapSpec::compose({delta, delta, sigma}).apply(p);
    CHECK(pi(1, 3, sigma, delta, p) == expected);
}

TEST_CASE("single-word enumerations") {
    Ring pq = Ring::parameters({"q"});
    Scalar q = Scalar::of(ParamPoly::generator(pq.params(), "q"));
    MapSpec sigma = scale_endo(q);
    MapSpec delta = MapSpec::derivation(Polynomial::one(pq), sigma);
    Polynomial p = ypow(pq, 3);
    CHECK(pi_enumerated(2, 2, sigma, delta, p) == sigma.apply(sigma.apply(p)));
    CHECK(pi_enumerated(0, 2, sigma, delta, p) == delta.apply(delta.apply(p)));
}

TEST_CASE("pi agrees with enumeration oracle") {
    struct Pair {
        MapSpec sigma, delta;
    };
    Ring pq = Ring::parameters({"q"});
    Scalar q = Scalar::of(ParamPoly::generator(pq.params(), "q"));
    std::vector<Pair> pairs;
    pairs.push_back({MapSpec::identity(Q), ddy(Q)});        // differential
    pairs.push_back({MapSpec::identity(Q), y_ddy(Q)});      // enveloping
    pairs.push_back({scale_endo(q), MapSpec::zero(pq)});    // skew
    for (const auto& pr : pairs) {
        const Ring& ring = pr.sigma.ring();
        for (std::size_t m = 0; m <= 6; ++m)
            for (long long i = 0; i <= static_cast<long long>(m); ++i)
                for (std::size_t d = 0; d <= 5; ++d) {
                    Polynomial p = ypow(ring, d);
                    CHECK(pi(i, m, pr.sigma, pr.delta, p) ==
                          pi_enumerated(i, m, pr.sigma, pr.delta, p));
                }
    }
}

TEST_CASE("pi first-letter recurrence against the oracle") {
    MapSpec sigma = MapSpec::identity(Q);
    MapSpec delta = y_ddy(Q);
    for (std::size_t m = 1; m <= 5; ++m)
        for (long long i = 0; i <= static_cast<long long>(m); ++i)
            for (std::size_t d = 0; d <= 4; ++d) {
                Polynomial p = ypow(Q, d);
                Polynomial rec = delta.apply(pi_enumerated(i, m - 1, sigma, delta, p)) +
                                 sigma.apply(pi_enumerated(i - 1, m - 1, sigma, delta, p));
                CHECK(pi(i, m, sigma, delta, p) == rec);
            }
}

TEST_CASE("sigma = delta collapses to binomial multiples") {
    MapSpec d = ddy(Q);
    for (std::size_t m = 0; m <= 5; ++m)
        for (long long i = 0; i <= static_cast<long long>(m); ++i) {
            Polynomial p = ypow(Q, 5);
            Polynomial expected = d.iterate(m, p).scaled(
                Scalar::from_bigint(Q, binomial(m, static_cast<std::size_t>(i))));
            CHECK(pi(i, m, d, d, p) == expected);
        }
}

TEST_CASE("map linearity on random inputs") {
    SampleGen gen(77);
    std::vector<MapSpec> maps{ddy(Q), y_ddy(Q), shift_endo(Q, rq(5)),
                              MapSpec::scale(rq(3), ddy(Q)),
                              MapSpec::sum({MapSpec::identity(Q), ddy(Q)})};
    for (const auto& f : maps) {
        for (int trial = 0; trial < 15; ++trial) {
            Polynomial p = random_poly_in(gen, Q, 4);
            Polynomial q = random_poly_in(gen, Q, 4);
            Scalar c = random_scalar_in(gen, Q);
            CHECK(f.apply(p + q) == f.apply(p) + f.apply(q));
            CHECK(f.apply(p.scaled(c)) == f.apply(p).scaled(c));
        }
    }
}

TEST_CASE("check_endomorphism") {
    Ring pq = Ring::parameters({"q"});
    Scalar q = Scalar::of(ParamPoly::generator(pq.params(), "q"));
    CHECK(check_endomorphism(scale_endo(q), 4).pass);
    CHECK(check_endomorphism(shift_endo(Q, rq(1)), 4).pass);

    Report bad = check_endomorphism(ddy(Q), 4);
    CHECK(!bad.pass);
    CHECK(bad.counterexample.has_value());
    // (Y, Y) witnesses the failure: (Y^2)' = 2Y != 1 = Y' * Y'
    MapSpec d = ddy(Q);
    CHECK(d.apply(ypow(Q, 1) * ypow(Q, 1)) != d.apply(ypow(Q, 1)) * d.apply(ypow(Q, 1)));
}

TEST_CASE("check_sigma_derivation") {
    CHECK(check_sigma_derivation(ddy(Q), MapSpec::identity(Q), 4).pass);
    CHECK(check_sigma_derivation(y_ddy(Q), MapSpec::identity(Q), 4).pass);
    // d/dY is not a sigma-derivation for sigma(Y) = qY with q != 1
    MapSpec sigma2 = scale_endo(rq(2));
    Report bad = check_sigma_derivation(ddy(Q), sigma2, 3);
    CHECK(!bad.pass);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->inputs == "(a, b) = (Y, Y)");
}

TEST_CASE("check_commute") {
    CHECK(check_commute(shift_endo(Q, rq(7)), ddy(Q), 5).pass);
    Ring pkq = Ring::parameters({"k", "q"});
    Scalar k = Scalar::of(ParamPoly::generator(pkq.params(), "k"));
    Scalar q = Scalar::of(ParamPoly::generator(pkq.params(), "q"));
    CHECK(check_commute(scale_endo(k), scale_endo(q), 5).pass);
    MapSpec quad = MapSpec::endo(ypow(Q, 2) + ypow(Q, 1));
    CHECK(!check_commute(quad, ddy(Q), 3).pass);
}

TEST_CASE("extensional map agreement") {
    MapSpec a = MapSpec::sum({ddy(Q), ddy(Q)});
    MapSpec b = MapSpec::scale(rq(2), ddy(Q));
    CHECK(maps_agree_up_to(a, b, 8));
    CHECK(!maps_agree_up_to(a, ddy(Q), 8));
}
