#include "homore/ore.hpp"

#include <sstream>

namespace homore {

OrePoly OrePoly::monomial(Polynomial coeff, std::size_t x_degree) {
    OrePoly r(coeff.ring());
    if (!coeff.is_zero()) r.terms_.emplace(x_degree, std::move(coeff));
    return r;
}

std::optional<std::size_t> OrePoly::max_coeff_degree() const {
    std::optional<std::size_t> best;
    for (const auto& [m, c] : terms_) {
        auto d = c.degree();
        if (d && (!best || *d > *best)) best = *d;
    }
    return best;
}

Polynomial OrePoly::coeff(std::size_t i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Polynomial::zero(ring_) : it->second;
}

void OrePoly::add_term(std::size_t x_degree, const Polynomial& coeff) {
    if (coeff.ring() != ring_) throw ring_mismatch_error("coefficient ring mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(x_degree);
    if (it == terms_.end()) {
        terms_.emplace(x_degree, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

OrePoly OrePoly::operator-() const {
    OrePoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    if (ring_ != o.ring_) throw ring_mismatch_error("ore polynomial ring mismatch in +");
    OrePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

OrePoly OrePoly::scaled(const Scalar& c) const {
    OrePoly r(ring_);
    for (const auto& [m, p] : terms_) r.add_term(m, p.scaled(c));
    return r;
}

OrePoly OrePoly::coeff_scaled(const Polynomial& p) const {
    OrePoly r(ring_);
    for (const auto& [m, c] : terms_) r.add_term(m, p * c);
    return r;
}

OrePoly OrePoly::map_coeffs(const MapSpec& f) const {
    OrePoly r(ring_);
    for (const auto& [m, c] : terms_) r.add_term(m, f.apply(c));
    return r;
}

bool OrePoly::operator==(const OrePoly& o) const {
    if (ring_ != o.ring_) throw ring_mismatch_error("ore polynomial ring mismatch in ==");
    return terms_ == o.terms_;
}

std::string OrePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::size_t m = it->first;
        Polynomial c = it->second;
        // A coefficient renders as a single product chain when it has exactly
        // one nonzero Y-term, except a degree-0 multi-term parameter scalar
        // (e.g. k + 1), whose rendering is a sum with no enclosing parens.
        std::size_t nonzero = 0;
        std::size_t only_deg = 0;
        for (std::size_t d = 0; d < c.coeffs().size(); ++d)
            if (!c.coeff(d).is_zero()) {
                ++nonzero;
                only_deg = d;
            }
        bool chain = nonzero == 1;
        if (chain && only_deg == 0 && ring_.kind() == RingKind::ParamPoly &&
            c.coeff(0).parampoly().terms().size() > 1)
            chain = false;
        bool minus = false;
        if (chain) {
            std::string probe = c.to_string();
            if (!probe.empty() && probe[0] == '-') {
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
        if (m == 0) {
            if (!chain && cs[0] == '-')
                out << "(" << cs << ")";
            else
                out << cs;
            continue;
        }
        if (!chain)
            out << "(" << cs << ")*";
        else if (!c.is_one())
            out << cs << "*";
        out << "X";
        if (m > 1) out << "^" << m;
    }
    return out.str();
}

void TwistTable::set(std::size_t i, std::size_t m, MapSpec f) {
    if (i > max_i_ || m > max_m_)
        throw window_exceeded_error("twist table entry outside window");
    if (f.ring() != ring_) throw ring_mismatch_error("twist table entry ring mismatch");
    entries_.insert_or_assign({i + 1, m + 1}, std::move(f));
}

Polynomial TwistTable::entry_apply(long long i, long long m, const Polynomial& a) const {
    if (i < 0 || m < 0 || static_cast<std::size_t>(i) > max_i_ ||
        static_cast<std::size_t>(m) > max_m_)
        return Polynomial::zero(ring_);
    auto it = entries_.find({static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(m) + 1});
    if (it == entries_.end()) return Polynomial::zero(ring_);
    return it->second.apply(a);
}

std::optional<std::size_t> TwistTable::support_bound(std::size_t p, const Polynomial& a) const {
    if (p > max_m_) return std::nullopt;
    for (std::size_t i = max_i_ + 1; i-- > 0;) {
        if (!entry_apply(static_cast<long long>(i), static_cast<long long>(p), a).is_zero())
            return i;
    }
    return std::nullopt;
}

TwistTable TwistTable::diagonal(const MapSpec& alpha, std::size_t max_i, std::size_t max_m) {
    TwistTable t(alpha.ring(), max_i, max_m);
    for (std::size_t d = 0; d <= std::min(max_i, max_m); ++d) t.set(d, d, alpha);
    return t;
}

OreContext::OreContext(MapSpec sigma, MapSpec delta, std::variant<MapSpec, TwistTable> twist,
                       MulMode mode)
    : sigma_(std::move(sigma)), delta_(std::move(delta)), twist_(std::move(twist)), mode_(mode) {
    if (sigma_.ring() != delta_.ring())
        throw ring_mismatch_error("sigma and delta ring mismatch");
    if (mode_ == MulMode::Star && !twist_is_homogeneous())
        throw std::invalid_argument("star mode requires a homogeneous twist");
    const Ring& twist_ring = twist_is_homogeneous()
                                 ? std::get<MapSpec>(twist_).ring()
                                 : std::get<TwistTable>(twist_).ring();
    if (twist_ring != sigma_.ring()) throw ring_mismatch_error("twist ring mismatch");
}

const MapSpec& OreContext::alpha() const {
    if (!twist_is_homogeneous())
        throw std::invalid_argument("context twist is a table, not a homogeneous map");
    return std::get<MapSpec>(twist_);
}

const TwistTable& OreContext::twist_table() const {
    if (twist_is_homogeneous())
        throw std::invalid_argument("context twist is homogeneous, not a table");
    return std::get<TwistTable>(twist_);
}

Polynomial OreContext::coeff_mul(const Polynomial& a, const Polynomial& b) const {
    Polynomial prod = a * b;
    return mode_ == MulMode::Plain ? prod : alpha().apply(prod);
}

namespace {

// Shared expansion of a X^m . b X^n = sum_i prod(a, pi_i^m(b)) X^(i+n).
template <typename Prod>
OrePoly expand_ore_product(const OreContext& ctx, const OrePoly& p, const OrePoly& q,
                           Prod&& prod) {
    if (p.ring() != q.ring() || p.ring() != ctx.ring())
        throw ring_mismatch_error("ore product ring mismatch");
    OrePoly result(p.ring());
    if (p.is_zero() || q.is_zero()) return result;
    std::size_t max_m = *p.x_degree();
    for (const auto& [n, b] : q.terms()) {
        auto rows = pi_table(max_m, ctx.sigma(), ctx.delta(), b);
        for (const auto& [m, a] : p.terms()) {
            for (std::size_t i = 0; i <= m; ++i) {
                result.add_term(i + n, prod(a, rows[m][i]));
            }
        }
    }
    return result;
}

}  // namespace

OrePoly ore_mul(const OreContext& ctx, const OrePoly& p, const OrePoly& q) {
    return expand_ore_product(ctx, p, q,
                              [](const Polynomial& a, const Polynomial& b) { return a * b; });
}

OrePoly star_mul(const OreContext& ctx, const OrePoly& p, const OrePoly& q) {
    return twist_apply_homogeneous(ctx.alpha(), ore_mul(ctx, p, q));
}

OrePoly star_mul_ore_form(const OreContext& ctx, const OrePoly& p, const OrePoly& q) {
    const MapSpec& alpha = ctx.alpha();
    return expand_ore_product(ctx, p, q, [&](const Polynomial& a, const Polynomial& b) {
        return alpha.apply(a * b);
    });
}

OrePoly mul(const OreContext& ctx, const OrePoly& p, const OrePoly& q) {
    return ctx.mode() == MulMode::Plain ? ore_mul(ctx, p, q) : star_mul(ctx, p, q);
}

OrePoly twist_apply_homogeneous(const MapSpec& alpha, const OrePoly& p) {
    return p.map_coeffs(alpha);
}

OrePoly twist_apply_table(const TwistTable& table, const OrePoly& p) {
    OrePoly r(p.ring());
    for (const auto& [m, a] : p.terms()) {
        if (m > table.max_m())
            throw window_exceeded_error("X-degree " + std::to_string(m) +
                                        " exceeds twist table window (max_m=" +
                                        std::to_string(table.max_m()) + ")");
        for (std::size_t i = 0; i <= table.max_i(); ++i)
            r.add_term(i, table.entry_apply(static_cast<long long>(i),
                                            static_cast<long long>(m), a));
    }
    return r;
}

OrePoly twist_apply(const OreContext& ctx, const OrePoly& p) {
    return ctx.twist_is_homogeneous() ? twist_apply_homogeneous(ctx.alpha(), p)
                                      : twist_apply_table(ctx.twist_table(), p);
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        r *= BigInt(n - k + j);
        r /= BigInt(j);
    }
    return r;
}

OrePoly diff_mult(const OreContext& ctx, const Polynomial& a, std::size_t n,
                  const Polynomial& b) {
    // delta powers first; then check sigma = id on every degree the formula touches
    std::vector<Polynomial> dpow{b};
    for (std::size_t j = 1; j <= n; ++j) dpow.push_back(ctx.delta().apply(dpow.back()));
    std::size_t touched = 0;
    for (const auto& d : dpow)
        if (auto deg = d.degree()) touched = std::max(touched, *deg);
    if (auto deg = a.degree()) touched = std::max(touched, *deg);
    if (!maps_agree_up_to(ctx.sigma(), MapSpec::identity(ctx.ring()), touched))
        throw std::invalid_argument("diff_mult requires sigma = id");
    OrePoly r(ctx.ring());
    for (std::size_t i = 0; i <= n; ++i) {
        Scalar c = Scalar::from_bigint(ctx.ring(), binomial(n, i));
        r.add_term(i, (a * dpow[n - i]).scaled(c));
    }
    return r;
}

OrePoly commutator(const OreContext& ctx, const OrePoly& p, const OrePoly& q) {
    return mul(ctx, p, q) - mul(ctx, q, p);
}

}  // namespace homore
