#pragma once

#include <map>
#include <optional>
#include <variant>

#include "homore/maps.hpp"

namespace homore {

// Element of R[X; sigma, delta]: finitely supported family of coefficient
// polynomials indexed by X-degree. No zero coefficient is stored; the zero
// element has empty support and reports its X-degree as nullopt.
class OrePoly {
public:
    explicit OrePoly(Ring ring) : ring_(std::move(ring)) {}

    static OrePoly zero(const Ring& ring) { return OrePoly(ring); }
    static OrePoly monomial(Polynomial coeff, std::size_t x_degree);
    static OrePoly from_poly(Polynomial p) { return monomial(std::move(p), 0); }
    static OrePoly one(const Ring& ring) { return from_poly(Polynomial::one(ring)); }
    static OrePoly x(const Ring& ring) { return monomial(Polynomial::one(ring), 1); }
    static OrePoly y(const Ring& ring) { return from_poly(Polynomial::y(ring)); }

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }

    std::optional<std::size_t> x_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }
    // largest Y-degree over all coefficients; nullopt for zero
    std::optional<std::size_t> max_coeff_degree() const;

    Polynomial coeff(std::size_t i) const;
    const std::map<std::size_t, Polynomial>& terms() const { return terms_; }
    void add_term(std::size_t x_degree, const Polynomial& coeff);

    OrePoly operator-() const;
    OrePoly operator+(const OrePoly& o) const;
    OrePoly operator-(const OrePoly& o) const { return *this + (-o); }
    OrePoly scaled(const Scalar& c) const;
    // coefficientwise left multiplication by an element of R (commutative K[Y])
    OrePoly coeff_scaled(const Polynomial& p) const;
    // apply f to every coefficient, degrees kept (homogeneous extension)
    OrePoly map_coeffs(const MapSpec& f) const;

    bool operator==(const OrePoly& o) const;
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Ring ring_;
    std::map<std::size_t, Polynomial> terms_;
};

// Degree-windowed family of additive maps alpha_{i+1,m+1} on R defining a
// general twisting map alpha(a X^m) = sum_i alpha_{i+1,m+1}(a) X^i. Entries
// are stored with the paper's 1-based indices; everything outside the window
// is the zero map.
class TwistTable {
public:
    TwistTable(Ring ring, std::size_t max_i, std::size_t max_m)
        : ring_(std::move(ring)), max_i_(max_i), max_m_(max_m) {}

    const Ring& ring() const { return ring_; }
    std::size_t max_i() const { return max_i_; }
    std::size_t max_m() const { return max_m_; }

    // 0-based: the map alpha_{i+1,m+1}; must lie inside the window
    void set(std::size_t i, std::size_t m, MapSpec f);
    // alpha_{i+1,m+1}(a); zero polynomial outside the window or for unset entries
    Polynomial entry_apply(long long i, long long m, const Polynomial& a) const;

    // I_{p,a}: the largest i with alpha_{i+1,p+1}(a) != 0, or nullopt when all
    // entries annihilate a
    std::optional<std::size_t> support_bound(std::size_t p, const Polynomial& a) const;

    // alpha_{i+1,m+1} = alpha * delta_{i,m}: the table form of a homogeneous twist
    static TwistTable diagonal(const MapSpec& alpha, std::size_t max_i, std::size_t max_m);

private:
    Ring ring_;
    std::size_t max_i_;
    std::size_t max_m_;
    std::map<std::pair<std::size_t, std::size_t>, MapSpec> entries_;
};

enum class MulMode { Plain, Star };

// The data of a (possibly twisted) Ore extension R[X; sigma, delta] together
// with a candidate twisting map and the multiplication mode:
//   Plain: a X^m . b X^n = sum_i (a . pi_i^m(b)) X^(i+n)          (untwisted)
//   Star:  p * q = alpha(p . q), alpha extended homogeneously
// Star mode requires a homogeneous twist. Plain mode ignores the twist for
// multiplication; the twist (homogeneous or table) is what hom-associativity
// checks exercise.
class OreContext {
public:
    OreContext(MapSpec sigma, MapSpec delta, std::variant<MapSpec, TwistTable> twist,
               MulMode mode);

    const Ring& ring() const { return sigma_.ring(); }
    const MapSpec& sigma() const { return sigma_; }
    const MapSpec& delta() const { return delta_; }
    MulMode mode() const { return mode_; }

    bool twist_is_homogeneous() const { return std::holds_alternative<MapSpec>(twist_); }
    const MapSpec& alpha() const;
    const TwistTable& twist_table() const;

    // The coefficient-level product of the algebra: a.b in plain mode,
    // alpha(a.b) in star mode.
    Polynomial coeff_mul(const Polynomial& a, const Polynomial& b) const;

private:
    MapSpec sigma_;
    MapSpec delta_;
    std::variant<MapSpec, TwistTable> twist_;
    MulMode mode_;
};

// The untwisted Ore product a X^m . b X^n = sum_i (a . pi_i^m(b)) X^(i+n),
// extended bilinearly. pi rows are computed once per right-hand coefficient
// and shared across every left-hand term.
OrePoly ore_mul(const OreContext& ctx, const OrePoly& p, const OrePoly& q);

// p * q = alpha(p . q); requires a homogeneous twist.
OrePoly star_mul(const OreContext& ctx, const OrePoly& p, const OrePoly& q);

// The star product in its Ore form, sum_i (a * pi_i^m(b)) X^(i+n); agrees with
// star_mul and serves as its cross-check route.
OrePoly star_mul_ore_form(const OreContext& ctx, const OrePoly& p, const OrePoly& q);

// The context's multiplication: ore_mul in plain mode, star_mul in star mode.
OrePoly mul(const OreContext& ctx, const OrePoly& p, const OrePoly& q);

OrePoly twist_apply_homogeneous(const MapSpec& alpha, const OrePoly& p);
OrePoly twist_apply_table(const TwistTable& table, const OrePoly& p);
OrePoly twist_apply(const OreContext& ctx, const OrePoly& p);

// Closed binomial form a X^n . b = sum_{i<=n} (C(n,i) a delta^(n-i)(b)) X^i,
// valid when sigma is the identity; verified against the touched degrees and
// used as a cross-check oracle for ore_mul.
OrePoly diff_mult(const OreContext& ctx, const Polynomial& a, std::size_t n,
                  const Polynomial& b);

// mul(p, q) - mul(q, p) in the context's multiplication.
OrePoly commutator(const OreContext& ctx, const OrePoly& p, const OrePoly& q);

BigInt binomial(std::size_t n, std::size_t k);

}  // namespace homore
