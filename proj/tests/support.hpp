#pragma once

#include "homore/polynomial.hpp"
#include "homore/rng.hpp"

namespace homore::test {

inline Scalar rq(long long num, long long den = 1) {
    return Scalar::of(Rational(BigInt(num), BigInt(den)));
}

inline Polynomial ypow(const Ring& ring, std::size_t d) {
    return Polynomial::monomial(Scalar::one(ring), d);
}

inline Scalar random_scalar_in(SampleGen& gen, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rational:
            return Scalar::of(Rational(BigInt(gen.range(-6, 6)), BigInt(gen.range(1, 4))));
        case RingKind::Integer:
            return Scalar::of_integer(BigInt(gen.range(-6, 6)));
        case RingKind::IntMod:
            return Scalar::from_int(ring,
                                    gen.range(0, static_cast<std::int64_t>(ring.modulus()) - 1));
        case RingKind::ParamPoly: {
            ParamPoly p = ParamPoly::constant(ring.params(), Rational(gen.range(-3, 3)));
            for (const auto& name : *ring.params()) {
                if (gen.below(2) == 0) continue;
                p = p + ParamPoly::generator(ring.params(), name) *
                            ParamPoly::constant(ring.params(), Rational(gen.range(-2, 2)));
            }
            return Scalar::of(p);
        }
    }
    throw std::logic_error("unreachable");
}

inline Polynomial random_poly_in(SampleGen& gen, const Ring& ring, std::size_t max_deg) {
    std::vector<Scalar> cs;
    for (std::size_t i = 0; i <= max_deg; ++i) cs.push_back(random_scalar_in(gen, ring));
    return Polynomial(ring, std::move(cs));
}

}  // namespace homore::test
