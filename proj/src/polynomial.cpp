#include "homore/polynomial.hpp"

#include <sstream>

namespace homore {

Polynomial::Polynomial(Ring ring, std::vector<Scalar> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.ring() != ring_)
            throw ring_mismatch_error("coefficient ring differs from polynomial ring");
    normalize();
}

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial p(c.ring());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
    Polynomial p(c.ring());
    if (c.is_zero()) return p;
    p.coeffs_.assign(degree, Scalar::zero(c.ring()));
    p.coeffs_.push_back(c);
    return p;
}

Scalar Polynomial::leading_coeff() const {
    if (coeffs_.empty()) return Scalar::zero(ring_);
    return coeffs_.back();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (ring_ != o.ring_) throw ring_mismatch_error("polynomial ring mismatch in +");
    Polynomial r(ring_);
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(coeff(i) + o.coeff(i));
    r.normalize();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (ring_ != o.ring_) throw ring_mismatch_error("polynomial ring mismatch in *");
    Polynomial r(ring_);
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(ring_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (ring_ != c.ring()) throw ring_mismatch_error("scalar ring mismatch in scale");
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(a * c);
    r.normalize();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_) throw ring_mismatch_error("polynomial ring mismatch in ==");
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        Scalar c = coeffs_[idx];
        if (c.is_zero()) continue;
        bool multi =
            c.ring().kind() == RingKind::ParamPoly && c.parampoly().terms().size() > 1;
        bool minus = false;
        if (!multi) {
            std::string cs = c.to_string();
            if (!cs.empty() && cs[0] == '-') {
                minus = true;
                c = -c;
            }
        }
        if (first)
            out << (minus ? "-" : "");
        else
            out << (minus ? " - " : " + ");
        first = false;
        std::string cs = c.to_string();
        if (idx == 0) {
            out << (multi && coeffs_.size() > 1 ? "(" + cs + ")" : cs);
            continue;
        }
        if (multi)
            out << "(" << cs << ")*";
        else if (!c.is_one())
            out << cs << "*";
        out << "Y";
        if (idx > 1) out << "^" << idx;
    }
    return out.str();
}

Polynomial derivative(const Polynomial& p) {
    Polynomial r(p.ring());
    auto deg = p.degree();
    if (!deg || *deg == 0) return r;
    std::vector<Scalar> cs;
    cs.reserve(*deg);
    for (std::size_t i = 1; i <= *deg; ++i)
        cs.push_back(p.coeff(i) * Scalar::from_int(p.ring(), static_cast<long long>(i)));
    return Polynomial(p.ring(), std::move(cs));
}

Polynomial substitute(const Polynomial& p, const Polynomial& image) {
    if (p.ring() != image.ring()) throw ring_mismatch_error("ring mismatch in substitute");
    // Horner in the image polynomial
    Polynomial acc(p.ring());
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;)
        acc = acc * image + Polynomial::constant(p.coeff(idx));
    return acc;
}

Scalar eval(const Polynomial& p, const Scalar& point) {
    if (p.ring() != point.ring()) throw ring_mismatch_error("ring mismatch in eval");
    Scalar acc = Scalar::zero(p.ring());
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;) acc = acc * point + p.coeff(idx);
    return acc;
}

Polynomial pow(const Polynomial& base, std::size_t exponent) {
    Polynomial acc = Polynomial::one(base.ring());
    for (std::size_t i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

}  // namespace homore
