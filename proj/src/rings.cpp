#include "homore/rings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace homore {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw not_invertible_error("rational with zero denominator");
    v_ = BigRational(num, den);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) throw not_invertible_error("division by zero rational");
    return Rational(BigRational(1) / v_);
}

IntMod::IntMod(std::uint64_t residue, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("IntMod modulus must be positive");
    residue_ = residue % modulus;
}

IntMod IntMod::operator+(const IntMod& o) const {
    if (modulus_ != o.modulus_) throw ring_mismatch_error("IntMod modulus mismatch in +");
    // moduli fit in 32 bits by construction in Ring::integers_mod
    return IntMod((residue_ + o.residue_) % modulus_, modulus_);
}

IntMod IntMod::operator*(const IntMod& o) const {
    if (modulus_ != o.modulus_) throw ring_mismatch_error("IntMod modulus mismatch in *");
    using u128 = unsigned __int128;
    return IntMod(static_cast<std::uint64_t>((u128(residue_) * u128(o.residue_)) % modulus_),
                  modulus_);
}

IntMod IntMod::inverse() const {
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus_);
    std::int64_t new_r = static_cast<std::int64_t>(residue_);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw not_invertible_error(std::to_string(residue_) + " is not a unit mod " +
                                   std::to_string(modulus_));
    if (t < 0) t += static_cast<std::int64_t>(modulus_);
    return IntMod(static_cast<std::uint64_t>(t), modulus_);
}

bool IntMod::operator==(const IntMod& o) const {
    if (modulus_ != o.modulus_) throw ring_mismatch_error("IntMod modulus mismatch in ==");
    return residue_ == o.residue_;
}

ParamPoly ParamPoly::constant(ParamList params, const Rational& c) {
    ParamPoly p(std::move(params));
    if (!c.is_zero()) p.terms_[std::vector<std::uint32_t>(p.params_->size(), 0)] = c;
    return p;
}

ParamPoly ParamPoly::generator(ParamList params, const std::string& name) {
    auto it = std::find(params->begin(), params->end(), name);
    if (it == params->end())
        throw std::invalid_argument("unknown parameter '" + name + "'");
    ParamPoly p(params);
    std::vector<std::uint32_t> e(params->size(), 0);
    e[static_cast<std::size_t>(it - params->begin())] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("ParamPoly is not constant");
    return terms_.begin()->second;
}

void ParamPoly::check_compatible(const ParamPoly& o) const {
    if (params_ == o.params_) return;
    if (*params_ != *o.params_)
        throw ring_mismatch_error("parameter lists differ: mixing arities is an error");
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(params_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    check_compatible(o);
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    check_compatible(o);
    ParamPoly r(params_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<std::uint32_t> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_[e] = c;
            } else {
                it->second = it->second + ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

ParamPoly ParamPoly::inverse() const {
    if (!is_constant() || is_zero())
        throw not_invertible_error("only nonzero constants are invertible parameter polynomials");
    return constant(params_, constant_value().inverse());
}

bool ParamPoly::operator==(const ParamPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

void ParamPoly::set_term(const std::vector<std::uint32_t>& exponents, const Rational& c) {
    if (exponents.size() != params_->size())
        throw ring_mismatch_error("exponent arity differs from parameter list length");
    if (c.is_zero())
        terms_.erase(exponents);
    else
        terms_[exponents] = c;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    // highest exponent vector first, matching polynomial display convention
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c;
        if (first) {
            if (c < Rational(0)) {
                out << "-";
                mag = -c;
            }
        } else {
            if (c < Rational(0)) {
                out << " - ";
                mag = -c;
            } else {
                out << " + ";
            }
        }
        first = false;
        bool any_param = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x != 0; });
        bool coeff_shown = !mag.is_one() || !any_param;
        if (coeff_shown) out << mag.to_string();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << (*params_)[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

Ring Ring::integers_mod(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (n > (std::uint64_t(1) << 32))
        throw std::invalid_argument("modulus too large");
    return Ring(RingKind::IntMod, n, nullptr);
}

Ring Ring::parameters(std::vector<std::string> names) {
    return Ring(RingKind::ParamPoly, 0,
                std::make_shared<const std::vector<std::string>>(std::move(names)));
}

bool Ring::operator==(const Ring& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case RingKind::IntMod:
            return modulus_ == o.modulus_;
        case RingKind::ParamPoly:
            return params_ == o.params_ || *params_ == *o.params_;
        default:
            return true;
    }
}

std::string Ring::to_string() const {
    switch (kind_) {
        case RingKind::Rational:
            return "Q";
        case RingKind::Integer:
            return "Z";
        case RingKind::IntMod:
            return "Z_" + std::to_string(modulus_);
        case RingKind::ParamPoly: {
            std::string s = "Q[";
            for (std::size_t i = 0; i < params_->size(); ++i) {
                if (i) s += ",";
                s += (*params_)[i];
            }
            return s + "]";
        }
    }
    return "?";
}

Scalar Scalar::from_bigint(const Ring& ring, const BigInt& n) {
    switch (ring.kind()) {
        case RingKind::Rational:
            return of(Rational(n));
        case RingKind::Integer:
            return of_integer(n);
        case RingKind::IntMod: {
            BigInt m = n % BigInt(ring.modulus());
            if (m < 0) m += BigInt(ring.modulus());
            return of(IntMod(m.convert_to<std::uint64_t>(), ring.modulus()));
        }
        case RingKind::ParamPoly:
            return of(ParamPoly::constant(ring.params(), Rational(n)));
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::of(Rational r) {
    Scalar s;
    s.ring_ = Ring::rationals();
    s.rational_ = std::move(r);
    return s;
}

Scalar Scalar::of_integer(BigInt n) {
    Scalar s;
    s.ring_ = Ring::integers();
    s.integer_ = std::move(n);
    return s;
}

Scalar Scalar::of(IntMod r) {
    Scalar s;
    s.ring_ = Ring::integers_mod(r.modulus());
    s.intmod_ = std::make_shared<const IntMod>(std::move(r));
    return s;
}

Scalar Scalar::of(ParamPoly p) {
    Scalar s;
    s.parampoly_ = std::make_shared<const ParamPoly>(std::move(p));
    s.ring_ = Ring::parameters(s.parampoly_->params());
    return s;
}

const IntMod& Scalar::intmod() const {
    if (!intmod_) throw std::logic_error("scalar is not an IntMod");
    return *intmod_;
}

const ParamPoly& Scalar::parampoly() const {
    if (!parampoly_) throw std::logic_error("scalar is not a ParamPoly");
    return *parampoly_;
}

void Scalar::require_same_ring(const Scalar& o, const char* op) const {
    if (ring_ != o.ring_)
        throw ring_mismatch_error(std::string("ring mismatch in ") + op + ": " +
                                  ring_.to_string() + " vs " + o.ring_.to_string());
}

bool Scalar::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Rational:
            return rational_.is_zero();
        case RingKind::Integer:
            return integer_ == 0;
        case RingKind::IntMod:
            return intmod_->is_zero();
        case RingKind::ParamPoly:
            return parampoly_->is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Rational:
            return rational_.is_one();
        case RingKind::Integer:
            return integer_ == 1;
        case RingKind::IntMod:
            return intmod_->is_one();
        case RingKind::ParamPoly:
            return parampoly_->is_one();
    }
    return false;
}

Scalar Scalar::operator-() const {
    switch (ring_.kind()) {
        case RingKind::Rational:
            return of(-rational_);
        case RingKind::Integer:
            return of_integer(-integer_);
        case RingKind::IntMod:
            return of(-*intmod_);
        case RingKind::ParamPoly:
            return of(-*parampoly_);
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_ring(o, "+");
    switch (ring_.kind()) {
        case RingKind::Rational:
            return of(rational_ + o.rational_);
        case RingKind::Integer:
            return of_integer(integer_ + o.integer_);
        case RingKind::IntMod:
            return of(*intmod_ + *o.intmod_);
        case RingKind::ParamPoly:
            return of(*parampoly_ + *o.parampoly_);
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_ring(o, "*");
    switch (ring_.kind()) {
        case RingKind::Rational:
            return of(rational_ * o.rational_);
        case RingKind::Integer:
            return of_integer(integer_ * o.integer_);
        case RingKind::IntMod:
            return of(*intmod_ * *o.intmod_);
        case RingKind::ParamPoly:
            return of(*parampoly_ * *o.parampoly_);
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::inverse() const {
    switch (ring_.kind()) {
        case RingKind::Rational:
            return of(rational_.inverse());
        case RingKind::Integer:
            if (integer_ == 1 || integer_ == -1) return *this;
            throw not_invertible_error("integer is not a unit");
        case RingKind::IntMod:
            return of(intmod_->inverse());
        case RingKind::ParamPoly:
            return of(parampoly_->inverse());
    }
    throw std::logic_error("unreachable");
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_ring(o, "==");
    switch (ring_.kind()) {
        case RingKind::Rational:
            return rational_ == o.rational_;
        case RingKind::Integer:
            return integer_ == o.integer_;
        case RingKind::IntMod:
            return *intmod_ == *o.intmod_;
        case RingKind::ParamPoly:
            return *parampoly_ == *o.parampoly_;
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (ring_.kind()) {
        case RingKind::Rational:
            return rational_.to_string();
        case RingKind::Integer:
            return integer_.str();
        case RingKind::IntMod:
            return intmod_->to_string();
        case RingKind::ParamPoly:
            return parampoly_->to_string();
    }
    return "?";
}

bool Scalar::needs_parens_in_product() const {
    switch (ring_.kind()) {
        case RingKind::Rational:
            return rational_ < Rational(0) || !rational_.is_integer();
        case RingKind::Integer:
            return integer_ < 0;
        case RingKind::IntMod:
            return false;
        case RingKind::ParamPoly: {
            if (parampoly_->terms().size() > 1) return true;
            if (parampoly_->is_zero()) return false;
            const Rational& c = parampoly_->terms().begin()->second;
            return c < Rational(0) || !c.is_integer();
        }
    }
    return false;
}

}  // namespace homore
