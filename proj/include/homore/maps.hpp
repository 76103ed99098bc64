#pragma once

#include <memory>
#include <vector>

#include "homore/polynomial.hpp"
#include "homore/report.hpp"

namespace homore {

// Finite description of an additive, scalar-linear map on R = K[Y].
//
// Variants:
//   identity, zero
//   endo(image_of_Y, image_of_one)   Y^n -> image_of_Y^n, 1 -> image_of_one
//   derivation(image_of_Y, twist)    twisted Leibniz recursion
//                                    d(Y^n) = twist(Y)*d(Y^(n-1)) + d(Y)*Y^(n-1), d(1) = 0
//   scale(c, inner), sum(fs), compose(fs)
//
// compose({f, g}) evaluates as f o g (rightmost applied first). Values are
// immutable and cheap to copy; evaluation is pure.
class MapSpec {
public:
    static MapSpec identity(const Ring& ring);
    static MapSpec zero(const Ring& ring);
    static MapSpec endo(Polynomial image_of_y);  // unital: image_of_one = 1
    static MapSpec endo(Polynomial image_of_y, Scalar image_of_one);
    static MapSpec derivation(Polynomial image_of_y, MapSpec twist);
    static MapSpec scale(Scalar c, MapSpec inner);
    static MapSpec sum(std::vector<MapSpec> parts);
    static MapSpec compose(std::vector<MapSpec> parts);

    const Ring& ring() const;

    Polynomial apply(const Polynomial& p) const;
    Polynomial apply_power_of_y(std::size_t n) const;  // image of the monomial Y^n

    // n-fold self-composition applied to p
    Polynomial iterate(std::size_t n, Polynomial p) const;

private:
    struct Node;
    explicit MapSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Extensional comparison on the monomial basis 1, Y, ..., Y^deg_y.
// MapSpec trees have many equivalent shapes, so there is no operator==.
bool maps_agree_up_to(const MapSpec& f, const MapSpec& g, std::size_t deg_y);

// pi_{i}^{m}: sum of all C(m,i) interleaved compositions of i copies of sigma
// and m-i copies of delta; identically zero for i < 0 or i > m. Computed by
// the first-letter recurrence pi_i^m = delta o pi_i^(m-1) + sigma o pi_(i-1)^(m-1).
Polynomial pi(long long i, std::size_t m, const MapSpec& sigma, const MapSpec& delta,
              const Polynomial& p);

// All rows pi_i^j(p) for 0 <= i <= j <= m in one dynamic program; row j is the
// vector [pi_0^j(p), ..., pi_j^j(p)]. Shared by the Ore product so each
// coefficient's table is computed once per multiplication.
std::vector<std::vector<Polynomial>> pi_table(std::size_t m, const MapSpec& sigma,
                                              const MapSpec& delta, const Polynomial& p);

// Brute-force oracle: explicit enumeration of all C(m,i) composition words.
Polynomial pi_enumerated(long long i, std::size_t m, const MapSpec& sigma,
                         const MapSpec& delta, const Polynomial& p);

// Degree-bounded structural checks over the monomial basis of K[Y]. The bound
// is mandatory: K[Y] is infinite-dimensional and the verification contract is
// explicitly truncated.
Report check_endomorphism(const MapSpec& f, std::size_t deg_y);
Report check_sigma_derivation(const MapSpec& delta, const MapSpec& sigma, std::size_t deg_y);
Report check_commute(const MapSpec& f, const MapSpec& g, std::size_t deg_y);

}  // namespace homore
