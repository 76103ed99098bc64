#include "homore/catalog.hpp"

#include <chrono>

namespace homore {

namespace {

OreContext star_context(MapSpec sigma, MapSpec delta, MapSpec alpha) {
    return OreContext(std::move(sigma), std::move(delta), std::move(alpha), MulMode::Star);
}

Report relation_report(const std::string& relation, const OrePoly& lhs, const OrePoly& rhs) {
    auto start = std::chrono::steady_clock::now();
    Report r = lhs == rhs
                   ? Report::passed("commutation-relation", "exact")
                   : Report::failed("commutation-relation", "exact",
                                    Counterexample{relation, lhs.to_string(), rhs.to_string()});
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

}  // namespace

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::QuantumPlane:
            return "quantum_plane";
        case FamilyKind::Enveloping:
            return "enveloping";
        case FamilyKind::Weyl:
            return "weyl";
    }
    return "?";
}

FamilySpec make_quantum_plane(const Scalar& q, const Scalar& k) {
    q.require_same_ring(k, "make_quantum_plane");
    if (q.is_zero() || k.is_zero())
        throw std::invalid_argument("quantum plane requires nonzero q and k");
    const Ring& ring = q.ring();
    MapSpec sigma = MapSpec::endo(Polynomial::monomial(q, 1));
    MapSpec delta = MapSpec::zero(ring);
    MapSpec alpha = MapSpec::endo(Polynomial::monomial(k, 1));
    return FamilySpec{FamilyKind::QuantumPlane, k, q,
                      star_context(std::move(sigma), std::move(delta), std::move(alpha)),
                      "X*Y = k*q*(Y*X)"};
}

FamilySpec make_enveloping(const Scalar& k) {
    if (k.is_zero()) throw std::invalid_argument("enveloping family requires nonzero k");
    const Ring& ring = k.ring();
    MapSpec sigma = MapSpec::identity(ring);
    // delta = Y d/dY: delta(Y) = Y with identity twist
    MapSpec delta = MapSpec::derivation(Polynomial::y(ring), MapSpec::identity(ring));
    MapSpec alpha = MapSpec::endo(Polynomial::monomial(k, 1));
    return FamilySpec{FamilyKind::Enveloping, k, Scalar::one(ring),
                      star_context(std::move(sigma), std::move(delta), std::move(alpha)),
                      "X*Y - Y*X = k*Y"};
}

FamilySpec make_weyl(const Scalar& k) {
    const Ring& ring = k.ring();
    MapSpec sigma = MapSpec::identity(ring);
    MapSpec delta = MapSpec::derivation(Polynomial::one(ring), MapSpec::identity(ring));
    // alpha_k(Y) = Y + k
    Polynomial image = Polynomial::y(ring) + Polynomial::constant(k);
    MapSpec alpha = MapSpec::endo(std::move(image));
    return FamilySpec{FamilyKind::Weyl, k, Scalar::one(ring),
                      star_context(std::move(sigma), std::move(delta), std::move(alpha)),
                      "X*Y - Y*X = 1"};
}

FamilySpec symbolic_quantum_plane() {
    Ring ring = Ring::parameters({"k", "q"});
    Scalar k = Scalar::of(ParamPoly::generator(ring.params(), "k"));
    Scalar q = Scalar::of(ParamPoly::generator(ring.params(), "q"));
    return make_quantum_plane(q, k);
}

FamilySpec symbolic_enveloping() {
    Ring ring = Ring::parameters({"k"});
    return make_enveloping(Scalar::of(ParamPoly::generator(ring.params(), "k")));
}

FamilySpec symbolic_weyl() {
    Ring ring = Ring::parameters({"k"});
    return make_weyl(Scalar::of(ParamPoly::generator(ring.params(), "k")));
}

Report check_commutation_relation(const FamilySpec& family) {
    const Ring& ring = family.ctx.ring();
    OrePoly x = OrePoly::x(ring);
    OrePoly y = OrePoly::y(ring);
    OrePoly xy = mul(family.ctx, x, y);
    OrePoly yx = mul(family.ctx, y, x);
    switch (family.kind) {
        case FamilyKind::QuantumPlane:
            return relation_report(family.relation, xy, yx.scaled(family.k * family.q));
        case FamilyKind::Enveloping:
            return relation_report(family.relation, xy - yx,
                                   OrePoly::y(ring).scaled(family.k));
        case FamilyKind::Weyl:
            return relation_report(family.relation, xy - yx, OrePoly::one(ring));
    }
    throw std::logic_error("unreachable");
}

OreContext with_mode(const OreContext& ctx, MulMode mode) {
    if (ctx.twist_is_homogeneous())
        return OreContext(ctx.sigma(), ctx.delta(), ctx.alpha(), mode);
    return OreContext(ctx.sigma(), ctx.delta(), ctx.twist_table(), mode);
}

ClassifierVerdict endomorphism_classifier(const FamilySpec& family,
                                          const Polynomial& candidate_alpha_image,
                                          std::size_t deg_y) {
    MapSpec candidate = MapSpec::endo(candidate_alpha_image);
    Report sr = check_commute(candidate, family.ctx.sigma(), deg_y);
    sr.property = "commutes-with-sigma";
    Report dr = check_commute(candidate, family.ctx.delta(), deg_y);
    dr.property = "commutes-with-delta";
    return ClassifierVerdict{sr.pass && dr.pass, std::move(sr), std::move(dr)};
}

ReductionTrace simplicity_reduce(const Rational& k, const OrePoly& p, std::size_t max_steps) {
    if (p.ring() != Ring::rationals())
        throw std::invalid_argument(
            "simplicity reduction needs a field of characteristic zero; use rational "
            "coefficients");
    if (p.is_zero()) throw std::invalid_argument("cannot reduce the zero element");

    FamilySpec weyl = make_weyl(Scalar::of(k));
    const OreContext& ctx = weyl.ctx;
    const Ring& ring = ctx.ring();
    OrePoly x = OrePoly::x(ring);
    OrePoly y = OrePoly::y(ring);

    ReductionTrace trace(ring);
    trace.start = p;
    OrePoly cur = p;
    auto guard = [&] {
        if (trace.steps.size() >= max_steps)
            throw std::runtime_error("simplicity reduction exceeded max_steps");
    };

    // [X, .] until every coefficient is scalar; drops max coefficient degree
    // by one each time, so this runs at most max_i deg(p_i) times
    while (true) {
        auto d = cur.max_coeff_degree();
        if (!d || *d == 0) break;
        guard();
        cur = commutator(ctx, x, cur);
        trace.steps.push_back({ReductionStep::Kind::CommutatorWithX, cur});
        ++trace.x_steps;
    }
    // [., Y] until X-degree 0
    while (cur.x_degree() && *cur.x_degree() > 0) {
        guard();
        cur = commutator(ctx, cur, y);
        trace.steps.push_back({ReductionStep::Kind::CommutatorWithY, cur});
        ++trace.y_steps;
    }
    if (cur.is_zero()) throw std::logic_error("reduction collapsed to zero from nonzero input");

    // cur = a X^0 with a a nonzero scalar; a^{-1} * (a) = alpha(1) = 1
    Scalar a = cur.coeff(0).coeff(0);
    guard();
    cur = star_mul(ctx, OrePoly::from_poly(Polynomial::constant(a.inverse())), cur);
    trace.steps.push_back({ReductionStep::Kind::ScaleToOne, cur});
    trace.final_element = cur;

    // regeneration: 1 * sum p_i(Y - k) X^i = p
    Polynomial shift_back = Polynomial::y(ring) - Polynomial::constant(Scalar::of(k));
    OrePoly preimage(ring);
    for (const auto& [i, pi_coeff] : p.terms())
        preimage.add_term(i, substitute(pi_coeff, shift_back));
    trace.regeneration_preimage = preimage;
    trace.regeneration_product = star_mul(ctx, OrePoly::one(ring), preimage);
    trace.regeneration_ok = trace.regeneration_product == p;
    return trace;
}

}  // namespace homore
