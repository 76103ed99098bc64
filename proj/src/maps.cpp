#include "homore/maps.hpp"

#include <chrono>

namespace homore {

namespace {

enum class MapKind { Identity, Zero, Endo, Derivation, Scale, Sum, Compose };

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

struct MapSpec::Node {
    MapKind kind;
    Ring ring;
    Polynomial image_y;   // endo / derivation
    Scalar image_one;     // endo
    Scalar factor;        // scale
    std::vector<MapSpec> parts;  // sum / compose / scale(inner) / derivation(twist)

    explicit Node(MapKind k, Ring r)
        : kind(k),
          ring(r),
          image_y(Polynomial::zero(r)),
          image_one(Scalar::zero(r)),
          factor(Scalar::zero(r)) {}
};

MapSpec MapSpec::identity(const Ring& ring) {
    return MapSpec(std::make_shared<Node>(MapKind::Identity, ring));
}

MapSpec MapSpec::zero(const Ring& ring) {
    return MapSpec(std::make_shared<Node>(MapKind::Zero, ring));
}

MapSpec MapSpec::endo(Polynomial image_of_y) {
    Scalar one = Scalar::one(image_of_y.ring());
    return endo(std::move(image_of_y), one);
}

MapSpec MapSpec::endo(Polynomial image_of_y, Scalar image_of_one) {
    auto n = std::make_shared<Node>(MapKind::Endo, image_of_y.ring());
    if (image_of_one.ring() != image_of_y.ring())
        throw ring_mismatch_error("endo image rings differ");
    n->image_y = std::move(image_of_y);
    n->image_one = std::move(image_of_one);
    return MapSpec(std::move(n));
}

MapSpec MapSpec::derivation(Polynomial image_of_y, MapSpec twist) {
    auto n = std::make_shared<Node>(MapKind::Derivation, image_of_y.ring());
    if (twist.ring() != image_of_y.ring())
        throw ring_mismatch_error("derivation twist ring differs");
    n->image_y = std::move(image_of_y);
    n->parts.push_back(std::move(twist));
    return MapSpec(std::move(n));
}

MapSpec MapSpec::scale(Scalar c, MapSpec inner) {
    auto n = std::make_shared<Node>(MapKind::Scale, c.ring());
    if (inner.ring() != c.ring()) throw ring_mismatch_error("scale ring differs");
    n->factor = std::move(c);
    n->parts.push_back(std::move(inner));
    return MapSpec(std::move(n));
}

MapSpec MapSpec::sum(std::vector<MapSpec> parts) {
    if (parts.empty()) throw std::invalid_argument("sum of no maps");
    auto n = std::make_shared<Node>(MapKind::Sum, parts.front().ring());
    for (const auto& p : parts)
        if (p.ring() != n->ring) throw ring_mismatch_error("sum ring differs");
    n->parts = std::move(parts);
    return MapSpec(std::move(n));
}

MapSpec MapSpec::compose(std::vector<MapSpec> parts) {
    if (parts.empty()) throw std::invalid_argument("composition of no maps");
    auto n = std::make_shared<Node>(MapKind::Compose, parts.front().ring());
    for (const auto& p : parts)
        if (p.ring() != n->ring) throw ring_mismatch_error("compose ring differs");
    n->parts = std::move(parts);
    return MapSpec(std::move(n));
}

const Ring& MapSpec::ring() const { return node_->ring; }

Polynomial MapSpec::apply_power_of_y(std::size_t n) const {
    return apply(Polynomial::monomial(Scalar::one(ring()), n));
}

Polynomial MapSpec::apply(const Polynomial& p) const {
    const Node& n = *node_;
    if (p.ring() != n.ring) throw ring_mismatch_error("ring mismatch in map application");
    switch (n.kind) {
        case MapKind::Identity:
            return p;
        case MapKind::Zero:
            return Polynomial::zero(n.ring);
        case MapKind::Endo: {
            // Horner over image_y, constant term routed through image_one
            Polynomial acc = Polynomial::zero(n.ring);
            auto deg = p.degree();
            if (!deg) return acc;
            for (std::size_t idx = *deg; idx >= 1; --idx) {
                acc = (acc + Polynomial::constant(p.coeff(idx))) * n.image_y;
            }
            return acc + Polynomial::constant(p.coeff(0) * n.image_one);
        }
        case MapKind::Derivation: {
            // d(Y^j) = twist(Y)*d(Y^(j-1)) + d(Y)*Y^(j-1), extended linearly
            auto deg = p.degree();
            Polynomial acc = Polynomial::zero(n.ring);
            if (!deg || *deg == 0) return acc;
            const MapSpec& twist = n.parts[0];
            Polynomial twist_y = twist.apply(Polynomial::y(n.ring));
            Polynomial d_yj = Polynomial::zero(n.ring);  // d(Y^0)
            Polynomial yj = Polynomial::one(n.ring);     // Y^0
            for (std::size_t j = 1; j <= *deg; ++j) {
                d_yj = twist_y * d_yj + n.image_y * yj;
                yj = yj * Polynomial::y(n.ring);
                acc = acc + d_yj.scaled(p.coeff(j));
            }
            return acc;
        }
        case MapKind::Scale:
            return n.parts[0].apply(p).scaled(n.factor);
        case MapKind::Sum: {
            Polynomial acc = Polynomial::zero(n.ring);
            for (const auto& f : n.parts) acc = acc + f.apply(p);
            return acc;
        }
        case MapKind::Compose: {
            Polynomial acc = p;
            for (std::size_t idx = n.parts.size(); idx-- > 0;) acc = n.parts[idx].apply(acc);
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

Polynomial MapSpec::iterate(std::size_t n, Polynomial p) const {
    for (std::size_t i = 0; i < n; ++i) p = apply(p);
    return p;
}

bool maps_agree_up_to(const MapSpec& f, const MapSpec& g, std::size_t deg_y) {
    for (std::size_t n = 0; n <= deg_y; ++n)
        if (f.apply_power_of_y(n) != g.apply_power_of_y(n)) return false;
    return true;
}

std::vector<std::vector<Polynomial>> pi_table(std::size_t m, const MapSpec& sigma,
                                              const MapSpec& delta, const Polynomial& p) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(m + 1);
    rows.push_back({p});
    for (std::size_t j = 1; j <= m; ++j) {
        std::vector<Polynomial> row;
        row.reserve(j + 1);
        for (std::size_t i = 0; i <= j; ++i) {
            Polynomial term = Polynomial::zero(p.ring());
            if (i <= j - 1) term = term + delta.apply(rows[j - 1][i]);
            if (i >= 1) term = term + sigma.apply(rows[j - 1][i - 1]);
            row.push_back(std::move(term));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Polynomial pi(long long i, std::size_t m, const MapSpec& sigma, const MapSpec& delta,
              const Polynomial& p) {
    if (i < 0 || static_cast<std::size_t>(i) > m) return Polynomial::zero(p.ring());
    return pi_table(m, sigma, delta, p)[m][static_cast<std::size_t>(i)];
}

Polynomial pi_enumerated(long long i, std::size_t m, const MapSpec& sigma,
                         const MapSpec& delta, const Polynomial& p) {
    if (i < 0 || static_cast<std::size_t>(i) > m) return Polynomial::zero(p.ring());
    if (m >= 63) throw std::invalid_argument("pi_enumerated word length too large");
    Polynomial acc = Polynomial::zero(p.ring());
    const auto want = static_cast<unsigned>(i);
    for (std::uint64_t word = 0; word < (std::uint64_t(1) << m); ++word) {
        if (static_cast<unsigned>(__builtin_popcountll(word)) != want) continue;
        Polynomial v = p;
        for (std::size_t pos = 0; pos < m; ++pos)
            v = ((word >> pos) & 1) ? sigma.apply(v) : delta.apply(v);
        acc = acc + v;
    }
    return acc;
}

Report check_endomorphism(const MapSpec& f, std::size_t deg_y) {
    auto start = std::chrono::steady_clock::now();
    std::string bounds = "degY=" + std::to_string(deg_y);
    const Ring& ring = f.ring();
    for (std::size_t a = 0; a <= deg_y; ++a) {
        Polynomial pa = Polynomial::monomial(Scalar::one(ring), a);
        Polynomial fa = f.apply(pa);
        for (std::size_t b = 0; b <= deg_y; ++b) {
            Polynomial pb = Polynomial::monomial(Scalar::one(ring), b);
            Polynomial lhs = f.apply(pa * pb);
            Polynomial rhs = fa * f.apply(pb);
            if (lhs != rhs) {
                Report r = Report::failed(
                    "endomorphism", bounds,
                    Counterexample{"(p, q) = (" + pa.to_string() + ", " + pb.to_string() + ")",
                                   lhs.to_string(), rhs.to_string()});
                r.millis = elapsed_ms(start);
                return r;
            }
        }
    }
    Polynomial f1 = f.apply(Polynomial::one(ring));
    if (f1 != Polynomial::one(ring)) {
        Report r = Report::failed("endomorphism", bounds,
                                  Counterexample{"f(1)", f1.to_string(), "1"});
        r.millis = elapsed_ms(start);
        return r;
    }
    Report r = Report::passed("endomorphism", bounds);
    r.millis = elapsed_ms(start);
    return r;
}

Report check_sigma_derivation(const MapSpec& delta, const MapSpec& sigma, std::size_t deg_y) {
    auto start = std::chrono::steady_clock::now();
    std::string bounds = "degY=" + std::to_string(deg_y);
    const Ring& ring = delta.ring();
    for (std::size_t a = 0; a <= deg_y; ++a) {
        Polynomial pa = Polynomial::monomial(Scalar::one(ring), a);
        for (std::size_t b = 0; b <= deg_y; ++b) {
            Polynomial pb = Polynomial::monomial(Scalar::one(ring), b);
            Polynomial lhs = delta.apply(pa * pb);
            Polynomial rhs = sigma.apply(pa) * delta.apply(pb) + delta.apply(pa) * pb;
            if (lhs != rhs) {
                Report r = Report::failed(
                    "sigma-derivation", bounds,
                    Counterexample{"(a, b) = (" + pa.to_string() + ", " + pb.to_string() + ")",
                                   lhs.to_string(), rhs.to_string()});
                r.millis = elapsed_ms(start);
                return r;
            }
        }
    }
    Report r = Report::passed("sigma-derivation", bounds);
    r.millis = elapsed_ms(start);
    return r;
}

Report check_commute(const MapSpec& f, const MapSpec& g, std::size_t deg_y) {
    auto start = std::chrono::steady_clock::now();
    std::string bounds = "degY=" + std::to_string(deg_y);
    for (std::size_t a = 0; a <= deg_y; ++a) {
        Polynomial pa = Polynomial::monomial(Scalar::one(f.ring()), a);
        Polynomial lhs = f.apply(g.apply(pa));
        Polynomial rhs = g.apply(f.apply(pa));
        if (lhs != rhs) {
            Report r = Report::failed("commute", bounds,
                                      Counterexample{"p = " + pa.to_string(), lhs.to_string(),
                                                     rhs.to_string()});
            r.millis = elapsed_ms(start);
            return r;
        }
    }
    Report r = Report::passed("commute", bounds);
    r.millis = elapsed_ms(start);
    return r;
}

}  // namespace homore
