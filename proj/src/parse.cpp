#include "homore/parse.hpp"

#include <cctype>

namespace homore {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

    OrePoly run() {
        OrePoly result = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return result;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    OrePoly expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        OrePoly acc = term();
        if (negate) acc = -acc;
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            OrePoly t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    OrePoly term() {
        std::size_t factor_pos = pos_;
        OrePoly acc = factor();
        while (peek() == '*') {
            ++pos_;
            skip_ws();
            factor_pos = pos_;
            OrePoly f = factor();
            acc = combine(acc, f, factor_pos);
        }
        return acc;
    }

    // coefficient-major formal product: an X-free left side multiplies into
    // every coefficient; once X has appeared only constants may follow
    OrePoly combine(const OrePoly& left, const OrePoly& right, std::size_t at) {
        bool left_x_free = !left.x_degree() || *left.x_degree() == 0;
        if (left_x_free) return right.coeff_scaled(left.coeff(0));
        bool right_const = right.is_zero() ||
                           (*right.x_degree() == 0 && right.coeff(0).is_constant());
        if (right_const) return left.coeff_scaled(right.coeff(0));
        throw parse_error(at, "the X part must come last in a term");
    }

    OrePoly factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error(pos_, "expected factor");
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            OrePoly inner = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw parse_error(pos_, "unclosed '(' opened at offset " + std::to_string(open));
            ++pos_;
            return inner;
        }
        if (c == 'Y' || c == 'X') {
            ++pos_;
            std::size_t e = exponent();
            if (c == 'Y')
                return OrePoly::from_poly(Polynomial::monomial(Scalar::one(ring_), e));
            return OrePoly::monomial(Polynomial::one(ring_), e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parameter();
        throw parse_error(pos_, std::string("unexpected character '") + c + "'");
    }

    std::size_t exponent() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw parse_error(pos_, "expected exponent digits after '^'");
        return static_cast<std::size_t>(std::stoull(text_.substr(start, pos_ - start)));
    }

    BigInt digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw parse_error(pos_, "expected digits");
        return BigInt(text_.substr(start, pos_ - start));
    }

    OrePoly number() {
        std::size_t at = pos_;
        BigInt num = digits();
        BigInt den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t dpos = pos_;
            den = digits();
            if (den == 0) throw parse_error(dpos, "zero denominator");
        }
        return OrePoly::from_poly(Polynomial::constant(fraction(num, den, at)));
    }

    Scalar fraction(const BigInt& num, const BigInt& den, std::size_t at) {
        switch (ring_.kind()) {
            case RingKind::Rational:
                return Scalar::of(Rational(num, den));
            case RingKind::ParamPoly:
                return Scalar::of(ParamPoly::constant(ring_.params(), Rational(num, den)));
            case RingKind::Integer: {
                if (num % den != 0)
                    throw parse_error(at, "fraction is not an integer");
                return Scalar::of_integer(num / den);
            }
            case RingKind::IntMod: {
                Scalar n = Scalar::from_bigint(ring_, num);
                Scalar d = Scalar::from_bigint(ring_, den);
                try {
                    return n * d.inverse();
                } catch (const not_invertible_error&) {
                    throw parse_error(at, "denominator is not a unit mod " +
                                              std::to_string(ring_.modulus()));
                }
            }
        }
        throw std::logic_error("unreachable");
    }

    OrePoly parameter() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (ring_.kind() != RingKind::ParamPoly)
            throw parse_error(start, "parameter '" + name + "' is not valid over " +
                                         ring_.to_string());
        const auto& names = *ring_.params();
        bool known = false;
        for (const auto& n : names) known = known || n == name;
        if (!known) throw parse_error(start, "unknown parameter '" + name + "'");
        std::size_t e = exponent();
        ParamPoly g = ParamPoly::generator(ring_.params(), name);
        ParamPoly acc = ParamPoly::constant(ring_.params(), Rational(1));
        for (std::size_t i = 0; i < e; ++i) acc = acc * g;
        return OrePoly::from_poly(Polynomial::constant(Scalar::of(acc)));
    }

    const std::string& text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

OrePoly parse_ore_poly(const std::string& text, const Ring& ring) {
    return Parser(text, ring).run();
}

}  // namespace homore
