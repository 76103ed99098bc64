#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homore/rings.hpp"

namespace homore {

// Dense univariate polynomial in Y over an exact scalar ring. The zero
// polynomial is the empty coefficient sequence and reports its degree as
// nullopt; any stored leading coefficient is nonzero.
class Polynomial {
public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
    Polynomial(Ring ring, std::vector<Scalar> coeffs);

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Scalar& c);
    static Polynomial one(const Ring& ring) { return constant(Scalar::one(ring)); }
    static Polynomial y(const Ring& ring) { return monomial(Scalar::one(ring), 1); }
    static Polynomial monomial(const Scalar& c, std::size_t degree);

    const Ring& ring() const { return ring_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    // Coefficient of Y^i; zero beyond the stored degree.
    Scalar coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(ring_);
    }
    Scalar leading_coeff() const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();

    Ring ring_;
    std::vector<Scalar> coeffs_;
};

// Formal derivative d/dY.
Polynomial derivative(const Polynomial& p);

// Ring-homomorphic substitution Y -> image, fixing scalars.
Polynomial substitute(const Polynomial& p, const Polynomial& image);

// Horner evaluation at a scalar point.
Scalar eval(const Polynomial& p, const Scalar& point);

Polynomial pow(const Polynomial& base, std::size_t exponent);

}  // namespace homore
