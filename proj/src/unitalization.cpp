#include "homore/unitalization.hpp"

#include <chrono>

namespace homore {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    Report done(Report r) const {
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
        return r;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Scalar random_scalar(SampleGen& gen, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rational: {
            long long num = gen.range(-4, 4);
            long long den = gen.range(1, 3);
            return Scalar::of(Rational(BigInt(num), BigInt(den)));
        }
        case RingKind::Integer:
            return Scalar::of_integer(BigInt(gen.range(-4, 4)));
        case RingKind::IntMod:
            return Scalar::from_int(ring, gen.range(0, static_cast<std::int64_t>(
                                                            ring.modulus() - 1)));
        case RingKind::ParamPoly: {
            // small affine combination of the parameters
            ParamPoly p = ParamPoly::constant(ring.params(), Rational(gen.range(-3, 3)));
            for (std::size_t i = 0; i < ring.params()->size(); ++i) {
                if (gen.below(2) == 0) continue;
                ParamPoly g = ParamPoly::generator(ring.params(), (*ring.params())[i]);
                ParamPoly c = ParamPoly::constant(ring.params(), Rational(gen.range(-2, 2)));
                p = p + g * c;
            }
            return Scalar::of(p);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

OrePoly random_ore_poly(SampleGen& gen, const Ring& ring, std::size_t deg_x, std::size_t deg_y) {
    OrePoly r(ring);
    for (std::size_t m = 0; m <= deg_x; ++m) {
        std::vector<Scalar> cs;
        cs.reserve(deg_y + 1);
        for (std::size_t d = 0; d <= deg_y; ++d) cs.push_back(random_scalar(gen, ring));
        r.add_term(m, Polynomial(ring, std::move(cs)));
    }
    return r;
}

BulletAlgebra::BulletAlgebra(OreContext context, Ring base_ring)
    : ctx(std::move(context)), base(std::move(base_ring)) {
    bool ok = base == ctx.ring() || base.kind() == RingKind::Integer ||
              (base.kind() == RingKind::IntMod && ctx.ring() == base);
    if (!ok)
        throw ring_mismatch_error(
            "unitalization base must be the algebra's scalar ring, Z, or the matching Z_n");
}

UnitalizedElement unital_zero(const BulletAlgebra& u) {
    return {OrePoly::zero(u.ctx.ring()), Scalar::zero(u.base)};
}

UnitalizedElement unital_one(const BulletAlgebra& u) {
    return {OrePoly::zero(u.ctx.ring()), Scalar::one(u.base)};
}

OrePoly base_action(const BulletAlgebra& u, const Scalar& r, const OrePoly& m) {
    if (r.ring() != u.base) throw ring_mismatch_error("scalar is not in the base ring");
    if (u.base == m.ring()) return m.scaled(r);
    if (u.base.kind() == RingKind::Integer)
        return m.scaled(Scalar::from_bigint(m.ring(), r.integer()));
    // IntMod base over matching IntMod algebra is covered by the first branch
    throw ring_mismatch_error("base ring cannot act on this algebra");
}

UnitalizedElement bullet_mul(const BulletAlgebra& u, const UnitalizedElement& x,
                             const UnitalizedElement& y) {
    OrePoly twisted_x = twist_apply(u.ctx, x.m);
    OrePoly twisted_y = twist_apply(u.ctx, y.m);
    OrePoly m = mul(u.ctx, x.m, y.m) + base_action(u, x.r, twisted_y) +
                base_action(u, y.r, twisted_x);
    return {std::move(m), x.r * y.r};
}

UnitalizedElement bullet_add(const BulletAlgebra&, const UnitalizedElement& x,
                             const UnitalizedElement& y) {
    return {x.m + y.m, x.r + y.r};
}

UnitalizedElement beta_alpha(const BulletAlgebra& u, const UnitalizedElement& x) {
    return {twist_apply(u.ctx, x.m), x.r};
}

std::uint64_t characteristic(const Ring& ring) { return ring.characteristic(); }

std::uint64_t characteristic(const BulletAlgebra& u) { return u.base.characteristic(); }

namespace {

std::vector<UnitalizedElement> basis_elements(const BulletAlgebra& u, std::size_t deg_x,
                                              std::size_t deg_y) {
    std::vector<UnitalizedElement> out;
    const Ring& ring = u.ctx.ring();
    for (std::size_t m = 0; m <= deg_x; ++m)
        for (std::size_t d = 0; d <= deg_y; ++d)
            out.push_back({OrePoly::monomial(Polynomial::monomial(Scalar::one(ring), d), m),
                           Scalar::zero(u.base)});
    out.push_back(unital_one(u));
    return out;
}

std::vector<UnitalizedElement> random_elements(const BulletAlgebra& u, std::size_t deg_x,
                                               std::size_t deg_y, std::size_t count,
                                               std::uint64_t seed) {
    std::vector<UnitalizedElement> out;
    SampleGen gen(seed);
    for (std::size_t i = 0; i < count; ++i) {
        OrePoly m = random_ore_poly(gen, u.ctx.ring(), deg_x, deg_y);
        Scalar r = random_scalar(gen, u.base);
        out.push_back({std::move(m), std::move(r)});
    }
    return out;
}

std::string bounds_str(std::size_t deg_x, std::size_t deg_y) {
    return "degX=" + std::to_string(deg_x) + " degY=" + std::to_string(deg_y);
}

}  // namespace

std::vector<UnitalizedElement> unital_samples(const BulletAlgebra& u, std::size_t deg_x,
                                              std::size_t deg_y, std::size_t extra,
                                              std::uint64_t seed) {
    std::vector<UnitalizedElement> out = basis_elements(u, deg_x, deg_y);
    auto randoms = random_elements(u, deg_x, deg_y, extra, seed);
    out.insert(out.end(), randoms.begin(), randoms.end());
    return out;
}

std::vector<Report> check_unitalization(const BulletAlgebra& u, std::size_t deg_x,
                                        std::size_t deg_y, std::size_t extra_samples,
                                        std::uint64_t seed) {
    std::string bounds = bounds_str(deg_x, deg_y) + " extra=" + std::to_string(extra_samples);
    auto basis = basis_elements(u, deg_x, deg_y);
    auto randoms = random_elements(u, deg_x, deg_y, extra_samples, seed);
    std::vector<UnitalizedElement> pool = basis;
    pool.insert(pool.end(), randoms.begin(), randoms.end());
    UnitalizedElement e = unital_one(u);
    std::vector<Report> out;

    {
        Timer timer;
        Report r = Report::passed("weak-unit-(0,1)", bounds);
        for (const auto& x : pool) {
            UnitalizedElement want = beta_alpha(u, x);
            UnitalizedElement left = bullet_mul(u, e, x);
            UnitalizedElement right = bullet_mul(u, x, e);
            if (left != want || right != want) {
                r = Report::failed("weak-unit-(0,1)", bounds,
                                   Counterexample{"x = " + x.to_string(),
                                                  left.to_string() + " / " + right.to_string(),
                                                  want.to_string()});
                break;
            }
        }
        r.seed = seed;
        out.push_back(timer.done(std::move(r)));
    }
    {
        Timer timer;
        Report r = Report::passed("bullet-hom-associativity", bounds);
        // exact on the module basis (the identity is trilinear), then on
        // seeded dense triples as an index-bookkeeping guard
        std::vector<std::array<const UnitalizedElement*, 3>> triples;
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) triples.push_back({&x, &y, &z});
        for (std::size_t i = 0; i + 2 < randoms.size(); ++i)
            triples.push_back({&randoms[i], &randoms[i + 1], &randoms[i + 2]});
        for (auto [x, y, z] : triples) {
            UnitalizedElement lhs = bullet_mul(u, beta_alpha(u, *x), bullet_mul(u, *y, *z));
            UnitalizedElement rhs = bullet_mul(u, bullet_mul(u, *x, *y), beta_alpha(u, *z));
            if (lhs != rhs) {
                r = Report::failed("bullet-hom-associativity", bounds,
                                   Counterexample{"(x, y, z) = (" + x->to_string() + ", " +
                                                      y->to_string() + ", " + z->to_string() +
                                                      ")",
                                                  lhs.to_string(), rhs.to_string()});
                break;
            }
        }
        r.seed = seed;
        out.push_back(timer.done(std::move(r)));
    }
    {
        Timer timer;
        Report r = Report::passed("beta-multiplicative", bounds);
        for (const auto& x : pool) {
            for (const auto& y : pool) {
                UnitalizedElement lhs = beta_alpha(u, bullet_mul(u, x, y));
                UnitalizedElement rhs = bullet_mul(u, beta_alpha(u, x), beta_alpha(u, y));
                if (lhs != rhs) {
                    r = Report::failed("beta-multiplicative", bounds,
                                       Counterexample{"(x, y) = (" + x.to_string() + ", " +
                                                          y.to_string() + ")",
                                                      lhs.to_string(), rhs.to_string()});
                    break;
                }
            }
            if (!r.pass) break;
        }
        r.seed = seed;
        out.push_back(timer.done(std::move(r)));
    }
    {
        Timer timer;
        Report r = Report::passed("bullet-bilinearity", bounds);
        std::vector<Scalar> lambdas{Scalar::from_int(u.base, 0), Scalar::from_int(u.base, 1),
                                    Scalar::from_int(u.base, -1), Scalar::from_int(u.base, 2)};
        auto scale = [&](const Scalar& c, const UnitalizedElement& x) {
            return UnitalizedElement{base_action(u, c, x.m), c * x.r};
        };
        for (std::size_t i = 0; i < pool.size() && r.pass; ++i) {
            const auto& x = pool[i];
            const auto& xp = pool[(i + 1) % pool.size()];
            const auto& y = pool[(i * 7 + 3) % pool.size()];
            UnitalizedElement sum_left = bullet_mul(u, bullet_add(u, x, xp), y);
            UnitalizedElement sum_right =
                bullet_add(u, bullet_mul(u, x, y), bullet_mul(u, xp, y));
            if (sum_left != sum_right) {
                r = Report::failed("bullet-bilinearity", bounds,
                                   Counterexample{"(x + x').y with x = " + x.to_string() +
                                                      ", x' = " + xp.to_string() +
                                                      ", y = " + y.to_string(),
                                                  sum_left.to_string(), sum_right.to_string()});
                break;
            }
            UnitalizedElement sum_left2 = bullet_mul(u, y, bullet_add(u, x, xp));
            UnitalizedElement sum_right2 =
                bullet_add(u, bullet_mul(u, y, x), bullet_mul(u, y, xp));
            if (sum_left2 != sum_right2) {
                r = Report::failed("bullet-bilinearity", bounds,
                                   Counterexample{"y.(x + x') with x = " + x.to_string() +
                                                      ", x' = " + xp.to_string() +
                                                      ", y = " + y.to_string(),
                                                  sum_left2.to_string(),
                                                  sum_right2.to_string()});
                break;
            }
            for (const auto& lam : lambdas) {
                UnitalizedElement lam_left = bullet_mul(u, scale(lam, x), y);
                UnitalizedElement lam_right = scale(lam, bullet_mul(u, x, y));
                if (lam_left != lam_right) {
                    r = Report::failed(
                        "bullet-bilinearity", bounds,
                        Counterexample{"(c.x).y with c = " + lam.to_string() +
                                           ", x = " + x.to_string() + ", y = " + y.to_string(),
                                       lam_left.to_string(), lam_right.to_string()});
                    break;
                }
            }
        }
        r.seed = seed;
        out.push_back(timer.done(std::move(r)));
    }
    return out;
}

Report check_embedding(const BulletAlgebra& u, std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    auto basis = basis_elements(u, deg_x, deg_y);
    auto embed = [&](const OrePoly& m) {
        return UnitalizedElement{m, Scalar::zero(u.base)};
    };
    for (const auto& x : basis) {
        if (!x.r.is_zero()) continue;  // (0,1) is not in the embedded copy
        // intertwining: project(beta(m,0)) = alpha(project(m,0))
        OrePoly via_beta = beta_alpha(u, x).m;
        OrePoly via_alpha = twist_apply(u.ctx, x.m);
        if (via_beta != via_alpha)
            return timer.done(Report::failed("embedding", bounds,
                                             Counterexample{"m = " + x.m.to_string(),
                                                            via_beta.to_string(),
                                                            via_alpha.to_string()}));
        for (const auto& y : basis) {
            if (!y.r.is_zero()) continue;
            UnitalizedElement prod = bullet_mul(u, x, y);
            OrePoly direct = mul(u.ctx, x.m, y.m);
            if (!prod.r.is_zero() || prod.m != direct)
                return timer.done(Report::failed(
                    "embedding", bounds,
                    Counterexample{"(m, m') = (" + x.m.to_string() + ", " + y.m.to_string() +
                                       ")",
                                   prod.to_string(), embed(direct).to_string()}));
        }
    }
    return timer.done(Report::passed("embedding", bounds));
}

Report check_hom_ideal(const BulletAlgebra& u, std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    auto basis = basis_elements(u, deg_x, deg_y);
    std::vector<Scalar> rs{Scalar::from_int(u.base, 0), Scalar::from_int(u.base, 1),
                           Scalar::from_int(u.base, -1), Scalar::from_int(u.base, 3)};
    for (const auto& mx : basis) {
        for (const auto& r : rs) {
            UnitalizedElement x{mx.m, r};
            for (const auto& my : basis) {
                if (!my.r.is_zero()) continue;
                UnitalizedElement left = bullet_mul(u, x, my);
                UnitalizedElement right = bullet_mul(u, my, x);
                if (!left.r.is_zero() || !right.r.is_zero())
                    return timer.done(Report::failed(
                        "hom-ideal", bounds,
                        Counterexample{"x = " + x.to_string() + ", m' = " + my.m.to_string(),
                                       left.to_string() + " / " + right.to_string(),
                                       "scalar component 0"}));
            }
        }
        if (mx.r.is_zero()) {
            UnitalizedElement b = beta_alpha(u, mx);
            if (!b.r.is_zero())
                return timer.done(Report::failed(
                    "hom-ideal", bounds,
                    Counterexample{"beta(m, 0) with m = " + mx.m.to_string(), b.to_string(),
                                   "scalar component 0"}));
        }
    }
    return timer.done(Report::passed("hom-ideal", bounds));
}

Report check_characteristic_propagation(const BulletAlgebra& u, std::size_t deg_x,
                                        std::size_t deg_y, std::size_t extra_samples,
                                        std::uint64_t seed) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y) + " extra=" + std::to_string(extra_samples);
    std::uint64_t n = characteristic(u);
    if (n == 0)
        throw std::invalid_argument(
            "characteristic propagation needs a positive-characteristic base ring");
    auto pool = unital_samples(u, deg_x, deg_y, extra_samples, seed);
    for (const auto& x : pool) {
        UnitalizedElement acc = unital_zero(u);
        for (std::uint64_t i = 0; i < n; ++i) acc = bullet_add(u, acc, x);
        if (acc != unital_zero(u)) {
            Report r = Report::failed("characteristic-propagation", bounds,
                                      Counterexample{"x = " + x.to_string(), acc.to_string(),
                                                     unital_zero(u).to_string()});
            r.seed = seed;
            return timer.done(std::move(r));
        }
    }
    Report r = Report::passed("characteristic-propagation", bounds);
    r.seed = seed;
    return timer.done(std::move(r));
}

}  // namespace homore
