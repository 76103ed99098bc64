#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homore/errors.hpp"

namespace homore {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact arbitrary-precision rational. Backed by boost cpp_rational, which keeps
// the canonical form (positive denominator, reduced, 0 stored as 0/1).
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigRational& v) : v_(v) {}

    // Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(BigRational(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(BigRational(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(BigRational(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(BigRational(v_ * o.v_)); }
    Rational inverse() const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string to_string() const { return v_.str(); }

private:
    BigRational v_;
};

// Residue ring Z_n with 0 <= residue < n.
class IntMod {
public:
    IntMod(std::uint64_t residue, std::uint64_t modulus);

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; }

    bool is_zero() const { return residue_ == 0; }
    bool is_one() const { return residue_ == 1 % modulus_; }

    IntMod operator-() const { return IntMod(residue_ == 0 ? 0 : modulus_ - residue_, modulus_); }
    IntMod operator+(const IntMod& o) const;
    IntMod operator-(const IntMod& o) const { return *this + (-o); }
    IntMod operator*(const IntMod& o) const;
    IntMod inverse() const;

    bool operator==(const IntMod& o) const;
    bool operator!=(const IntMod& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(residue_); }

private:
    std::uint64_t residue_;
    std::uint64_t modulus_;
};

using ParamList = std::shared_ptr<const std::vector<std::string>>;

// Multivariate polynomial over Q in a fixed list of formal parameters
// (e.g. {k, q}). Exponent vectors always have arity == parameter count;
// zero coefficients are never stored.
class ParamPoly {
public:
    explicit ParamPoly(ParamList params) : params_(std::move(params)) {}

    static ParamPoly constant(ParamList params, const Rational& c);
    // The generator with the given name; throws if not in the list.
    static ParamPoly generator(ParamList params, const std::string& name);

    const ParamList& params() const { return params_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const { return *this + (-o); }
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly inverse() const;  // only nonzero constants are units

    bool operator==(const ParamPoly& o) const;
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    std::string to_string() const;

    const std::map<std::vector<std::uint32_t>, Rational>& terms() const { return terms_; }
    void set_term(const std::vector<std::uint32_t>& exponents, const Rational& c);

private:
    void check_compatible(const ParamPoly& o) const;

    ParamList params_;
    std::map<std::vector<std::uint32_t>, Rational> terms_;
};

enum class RingKind { Rational, Integer, IntMod, ParamPoly };

// Value descriptor for a coefficient ring; equality decides "same scalar ring".
class Ring {
public:
    static Ring rationals() { return Ring(RingKind::Rational, 0, nullptr); }
    static Ring integers() { return Ring(RingKind::Integer, 0, nullptr); }
    static Ring integers_mod(std::uint64_t n);
    static Ring parameters(std::vector<std::string> names);
    static Ring parameters(ParamList params) {
        return Ring(RingKind::ParamPoly, 0, std::move(params));
    }

    RingKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    const ParamList& params() const { return params_; }

    // 0 for Q, Z and parameter polynomials; n for Z_n.
    std::uint64_t characteristic() const {
        return kind_ == RingKind::IntMod ? modulus_ : 0;
    }
    bool is_field_of_characteristic_zero() const { return kind_ == RingKind::Rational; }

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Ring(RingKind kind, std::uint64_t modulus, ParamList params)
        : kind_(kind), modulus_(modulus), params_(std::move(params)) {}

    RingKind kind_;
    std::uint64_t modulus_;
    ParamList params_;
};

// Tagged exact scalar; all arithmetic demands matching rings.
class Scalar {
public:
    Scalar() : ring_(Ring::rationals()), rational_(0) {}

    static Scalar zero(const Ring& ring) { return from_int(ring, 0); }
    static Scalar one(const Ring& ring) { return from_int(ring, 1); }
    static Scalar from_int(const Ring& ring, long long n) { return from_bigint(ring, BigInt(n)); }
    static Scalar from_bigint(const Ring& ring, const BigInt& n);
    static Scalar of(Rational r);
    static Scalar of_integer(BigInt n);
    static Scalar of(IntMod r);
    static Scalar of(ParamPoly p);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const Rational& rational() const { return rational_; }
    const BigInt& integer() const { return integer_; }
    const IntMod& intmod() const;
    const ParamPoly& parampoly() const;

    std::string to_string() const;
    // True when to_string() needs parentheses inside a product (sums, fractions,
    // leading minus).
    bool needs_parens_in_product() const;

    void require_same_ring(const Scalar& o, const char* op) const;

private:
    Ring ring_;
    Rational rational_{0};
    BigInt integer_{0};
    std::shared_ptr<const IntMod> intmod_;
    std::shared_ptr<const ParamPoly> parampoly_;
};

}  // namespace homore
