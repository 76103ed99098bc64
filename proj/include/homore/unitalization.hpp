#pragma once

#include <vector>

#include "homore/ore.hpp"
#include "homore/report.hpp"
#include "homore/rng.hpp"

namespace homore {

// The weak unitalization M (+) R of a multiplicative hom-associative algebra
// M, with bullet product
//   (m1, r1) . (m2, r2) = (m1 m2 + r1 alpha(m2) + r2 alpha(m1), r1 r2)
// and twist beta_alpha(m, r) = (alpha(m), r). The algebra M is anything the
// library exposes through an OreContext (the coefficient ring itself at
// X-degree 0, or a full Ore extension); the base ring R is the context's
// scalar ring, Z, or Z_n matching the algebra's characteristic.
struct BulletAlgebra {
    OreContext ctx;  // multiplication and twist of M
    Ring base;       // ring of the adjoined scalar component

    BulletAlgebra(OreContext context, Ring base_ring);
};

struct UnitalizedElement {
    OrePoly m;
    Scalar r;

    bool operator==(const UnitalizedElement& o) const { return m == o.m && r == o.r; }
    bool operator!=(const UnitalizedElement& o) const { return !(*this == o); }
    std::string to_string() const { return "(" + m.to_string() + ", " + r.to_string() + ")"; }
};

UnitalizedElement unital_zero(const BulletAlgebra& u);
// the weak unit (0, 1)
UnitalizedElement unital_one(const BulletAlgebra& u);

// r.m for r in the base ring: plain scaling when the base is the algebra's
// scalar ring, integer action for Z, residue action for Z_n.
OrePoly base_action(const BulletAlgebra& u, const Scalar& r, const OrePoly& m);

UnitalizedElement bullet_mul(const BulletAlgebra& u, const UnitalizedElement& x,
                             const UnitalizedElement& y);
UnitalizedElement bullet_add(const BulletAlgebra& u, const UnitalizedElement& x,
                             const UnitalizedElement& y);
UnitalizedElement beta_alpha(const BulletAlgebra& u, const UnitalizedElement& x);

// 0 for M(+)Z and base rings of characteristic zero, n for M(+)Z_n.
std::uint64_t characteristic(const BulletAlgebra& u);
std::uint64_t characteristic(const Ring& ring);

// Sample pool: all monomials within the bounds plus `extra` seeded dense
// elements, paired with a few base-ring scalars.
std::vector<UnitalizedElement> unital_samples(const BulletAlgebra& u, std::size_t deg_x,
                                              std::size_t deg_y, std::size_t extra,
                                              std::uint64_t seed);

// Reports: (0,1) is a weak unit; hom-associativity of the bullet product with
// beta_alpha; multiplicativity of beta_alpha; bilinearity of the bullet
// product over the base ring.
std::vector<Report> check_unitalization(const BulletAlgebra& u, std::size_t deg_x,
                                        std::size_t deg_y, std::size_t extra_samples,
                                        std::uint64_t seed);

// The projection M (+) 0 -> M is a bijective homomorphism intertwining the
// twists.
Report check_embedding(const BulletAlgebra& u, std::size_t deg_x, std::size_t deg_y);

// (m, r).(m', 0) and (m', 0).(m, r) stay in M (+) 0, and beta_alpha maps
// M (+) 0 into itself.
Report check_hom_ideal(const BulletAlgebra& u, std::size_t deg_x, std::size_t deg_y);

// For Z_n bases: n.x = 0 for every sample.
Report check_characteristic_propagation(const BulletAlgebra& u, std::size_t deg_x,
                                        std::size_t deg_y, std::size_t extra_samples,
                                        std::uint64_t seed);

// Seeded dense random elements of the ore algebra (shared by tests and CLI).
OrePoly random_ore_poly(SampleGen& gen, const Ring& ring, std::size_t deg_x, std::size_t deg_y);

}  // namespace homore
