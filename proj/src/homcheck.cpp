#include "homore/homcheck.hpp"

#include <array>
#include <chrono>

#include "homore/parallel.hpp"

namespace homore {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }
    Report done(Report r) const {
        r.millis = ms();
        return r;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Polynomial ymon(const Ring& ring, std::size_t d) {
    return Polynomial::monomial(Scalar::one(ring), d);
}

// Monomial Y^a X^m; grid index runs X-degree-major so the lexicographic
// input order for counterexample tie-breaking is (X-degree, Y-degree).
OrePoly grid_monomial(const Ring& ring, std::size_t idx, std::size_t deg_y) {
    std::size_t m = idx / (deg_y + 1);
    std::size_t a = idx % (deg_y + 1);
    return OrePoly::monomial(ymon(ring, a), m);
}

std::string bounds_str(std::size_t deg_x, std::size_t deg_y) {
    return "degX=" + std::to_string(deg_x) + " degY=" + std::to_string(deg_y);
}

std::string triple_str(const OrePoly& a, const OrePoly& b, const OrePoly& c) {
    return "(a, b, c) = (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

}  // namespace

SidePair hom_associativity_sides(const OreContext& ctx, const OrePoly& a, const OrePoly& b,
                                 const OrePoly& c) {
    OrePoly lhs = mul(ctx, twist_apply(ctx, a), mul(ctx, b, c));
    OrePoly rhs = mul(ctx, mul(ctx, a, b), twist_apply(ctx, c));
    return {std::move(lhs), std::move(rhs)};
}

Report check_hom_associativity(const OreContext& ctx, std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    if (!ctx.twist_is_homogeneous() && ctx.twist_table().max_m() < deg_x)
        throw window_exceeded_error("twist table window does not cover degX");
    const Ring& ring = ctx.ring();
    std::size_t monomials = (deg_x + 1) * (deg_y + 1);
    std::size_t total = monomials * monomials * monomials;
    auto nth = [&](std::size_t i) { return grid_monomial(ring, i, deg_y); };
    auto passes = [&](std::size_t idx) {
        OrePoly a = nth(idx / (monomials * monomials));
        OrePoly b = nth((idx / monomials) % monomials);
        OrePoly c = nth(idx % monomials);
        SidePair s = hom_associativity_sides(ctx, a, b, c);
        return s.lhs == s.rhs;
    };
    auto fail = first_fail_index(total, passes);
    if (!fail) return timer.done(Report::passed("hom-associativity", bounds));
    OrePoly a = nth(*fail / (monomials * monomials));
    OrePoly b = nth((*fail / monomials) % monomials);
    OrePoly c = nth(*fail % monomials);
    SidePair s = hom_associativity_sides(ctx, a, b, c);
    return timer.done(Report::failed(
        "hom-associativity", bounds,
        Counterexample{triple_str(a, b, c), s.lhs.to_string(), s.rhs.to_string()}));
}

namespace {

// Both sides of the master condition at fixed (a, b, c, m, n, p), indexed by
// the output degree k. All pi rows are computed once and reused across k.
struct GeneralSides {
    std::vector<Polynomial> lhs;
    std::vector<Polynomial> rhs;
};

GeneralSides general_condition_sides(const OreContext& base, const TwistTable& table,
                                     const Polynomial& a, const Polynomial& b,
                                     const Polynomial& c, std::size_t m, std::size_t n,
                                     std::size_t p) {
    const MapSpec& sg = base.sigma();
    const MapSpec& dl = base.delta();
    const Ring& ring = base.ring();
    std::size_t maxi = table.max_i();
    std::size_t kmax = maxi + n + std::max(m, p);

    auto tc = pi_table(n, sg, dl, c);
    std::vector<std::vector<std::vector<Polynomial>>> u(n + 1);
    for (std::size_t d = 0; d <= n; ++d)
        u[d] = pi_table(maxi, sg, dl, base.coeff_mul(b, tc[n][d]));

    auto wb = pi_table(m, sg, dl, b);
    std::vector<Polynomial> aw;
    aw.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) aw.push_back(base.coeff_mul(a, wb[m][i]));
    std::vector<std::vector<std::vector<Polynomial>>> zt(maxi + 1);
    for (std::size_t j = 0; j <= maxi; ++j)
        zt[j] = pi_table(m + n, sg, dl,
                         table.entry_apply(static_cast<long long>(j),
                                           static_cast<long long>(p), c));

    GeneralSides sides;
    for (std::size_t k = 0; k <= kmax; ++k) {
        Polynomial lhs = Polynomial::zero(ring);
        for (std::size_t j = p; j <= p + n && j <= k; ++j) {
            std::size_t d = j - p;
            for (std::size_t i = k - j; i <= maxi; ++i) {
                Polynomial left =
                    table.entry_apply(static_cast<long long>(i), static_cast<long long>(m), a);
                if (left.is_zero()) continue;
                lhs = lhs + base.coeff_mul(left, u[d][i][k - j]);
            }
        }
        Polynomial rhs = Polynomial::zero(ring);
        for (std::size_t j = 0; j <= maxi && j <= k; ++j) {
            for (std::size_t i = 0; i <= m; ++i) {
                if (k - j > i + n) continue;
                rhs = rhs + base.coeff_mul(aw[i], zt[j][i + n][k - j]);
            }
        }
        sides.lhs.push_back(std::move(lhs));
        sides.rhs.push_back(std::move(rhs));
    }
    return sides;
}

}  // namespace

Report check_general_condition(const OreContext& base, const TwistTable& table,
                               std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y) + " window=(" +
                         std::to_string(table.max_i()) + "," + std::to_string(table.max_m()) +
                         ")";
    if (table.max_m() < deg_x)
        throw window_exceeded_error("table window max_m < degX: exponents up to " +
                                    std::to_string(deg_x) + " are reachable");
    const Ring& ring = base.ring();
    std::size_t y = deg_y + 1, x = deg_x + 1;
    std::size_t total = y * y * y * x * x * x;
    auto decode = [&](std::size_t idx) {
        std::array<std::size_t, 6> v{};  // ia ib ic m n p
        v[5] = idx % x;
        idx /= x;
        v[4] = idx % x;
        idx /= x;
        v[3] = idx % x;
        idx /= x;
        v[2] = idx % y;
        idx /= y;
        v[1] = idx % y;
        idx /= y;
        v[0] = idx;
        return v;
    };
    auto passes = [&](std::size_t idx) {
        auto v = decode(idx);
        GeneralSides s = general_condition_sides(base, table, ymon(ring, v[0]), ymon(ring, v[1]),
                                                 ymon(ring, v[2]), v[3], v[4], v[5]);
        for (std::size_t k = 0; k < s.lhs.size(); ++k)
            if (s.lhs[k] != s.rhs[k]) return false;
        return true;
    };
    auto fail = first_fail_index(total, passes);
    if (!fail) return timer.done(Report::passed("general-condition", bounds));
    auto v = decode(*fail);
    GeneralSides s = general_condition_sides(base, table, ymon(ring, v[0]), ymon(ring, v[1]),
                                             ymon(ring, v[2]), v[3], v[4], v[5]);
    for (std::size_t k = 0; k < s.lhs.size(); ++k) {
        if (s.lhs[k] != s.rhs[k]) {
            std::string inputs = "(a, b, c) = (Y^" + std::to_string(v[0]) + ", Y^" +
                                 std::to_string(v[1]) + ", Y^" + std::to_string(v[2]) +
                                 "), (k, m, n, p) = (" + std::to_string(k) + ", " +
                                 std::to_string(v[3]) + ", " + std::to_string(v[4]) + ", " +
                                 std::to_string(v[5]) + ")";
            return timer.done(Report::failed(
                "general-condition", bounds,
                Counterexample{inputs, s.lhs[k].to_string(), s.rhs[k].to_string()}));
        }
    }
    throw std::logic_error("general-condition: failing index without failing degree");
}

Report check_hom_associativity_with_table(const OreContext& base, const TwistTable& table,
                                          std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    if (table.max_m() < deg_x)
        throw window_exceeded_error("table window max_m < degX");
    const Ring& ring = base.ring();
    std::size_t monomials = (deg_x + 1) * (deg_y + 1);
    std::size_t total = monomials * monomials * monomials;
    // mirror the context but force the table as the algebra twist; the
    // multiplication itself stays the context's Eq.-(2) product over its
    // coefficient ring
    auto algebra_mul = [&](const OrePoly& l, const OrePoly& r) {
        return base.mode() == MulMode::Star ? star_mul_ore_form(base, l, r)
                                            : ore_mul(base, l, r);
    };
    auto sides = [&](const OrePoly& a, const OrePoly& b, const OrePoly& c) {
        OrePoly lhs = algebra_mul(twist_apply_table(table, a), algebra_mul(b, c));
        OrePoly rhs = algebra_mul(algebra_mul(a, b), twist_apply_table(table, c));
        return SidePair{std::move(lhs), std::move(rhs)};
    };
    auto nth = [&](std::size_t i) { return grid_monomial(ring, i, deg_y); };
    auto passes = [&](std::size_t idx) {
        SidePair s = sides(nth(idx / (monomials * monomials)),
                           nth((idx / monomials) % monomials), nth(idx % monomials));
        return s.lhs == s.rhs;
    };
    auto fail = first_fail_index(total, passes);
    if (!fail) return timer.done(Report::passed("hom-associativity-table", bounds));
    OrePoly a = nth(*fail / (monomials * monomials));
    OrePoly b = nth((*fail / monomials) % monomials);
    OrePoly c = nth(*fail % monomials);
    SidePair s = sides(a, b, c);
    return timer.done(Report::failed(
        "hom-associativity-table", bounds,
        Counterexample{triple_str(a, b, c), s.lhs.to_string(), s.rhs.to_string()}));
}

std::vector<Report> check_necessary_conditions(const OreContext& base, const TwistTable& table,
                                               std::size_t deg_y) {
    const MapSpec& sg = base.sigma();
    const MapSpec& dl = base.delta();
    const Ring& ring = base.ring();
    std::size_t maxi = table.max_i();
    std::size_t maxp = table.max_m();
    std::string bounds = "degY=" + std::to_string(deg_y) + " window=(" + std::to_string(maxi) +
                         "," + std::to_string(maxp) + ")";

    auto entry = [&](long long i, long long p, const Polynomial& v) {
        return table.entry_apply(i, p, v);
    };
    // sum_{i=max(0,lo)}^{I_{pi,a}} alpha_{i+1,pi+1}(a) . pi_{lo}^i(arg)
    auto lhs_sum = [&](std::size_t pi_index, const Polynomial& a, long long lo,
                       const Polynomial& arg) {
        Polynomial acc = Polynomial::zero(ring);
        auto bound = table.support_bound(pi_index, a);
        // pi with a negative index vanishes identically; no support, no terms
        if (lo < 0 || !bound) return acc;
        auto rows = pi_table(*bound, sg, dl, arg);
        for (std::size_t i = static_cast<std::size_t>(lo); i <= *bound; ++i) {
            Polynomial left = entry(static_cast<long long>(i), static_cast<long long>(pi_index), a);
            if (left.is_zero()) continue;
            acc = acc + base.coeff_mul(left, rows[i][static_cast<std::size_t>(lo)]);
        }
        return acc;
    };

    std::vector<Report> out;
    struct Fail {
        std::string inputs, lhs, rhs;
    };

    // eq4 at all (a,b,c,k,p); then eq5's two equalities and eq6 on the same
    // grid; finally the two boundary assertions
    auto run_grid = [&](const std::string& name, auto&& kernel, bool sweep_k) {
        Timer timer;
        std::optional<Fail> first;
        for (std::size_t p = 0; p <= maxp && !first; ++p) {
            std::size_t khi = sweep_k ? maxi + 1 : 0;
            for (std::size_t k = 0; k <= khi && !first; ++k)
                for (std::size_t ia = 0; ia <= deg_y && !first; ++ia)
                    for (std::size_t ib = 0; ib <= deg_y && !first; ++ib)
                        for (std::size_t ic = 0; ic <= deg_y && !first; ++ic) {
                            Polynomial a = ymon(ring, ia), b = ymon(ring, ib),
                                       c = ymon(ring, ic);
                            auto sides = kernel(a, b, c, static_cast<long long>(k),
                                                static_cast<long long>(p));
                            if (sides.first != sides.second) {
                                std::string inputs = "(a, b, c) = (Y^" + std::to_string(ia) +
                                                     ", Y^" + std::to_string(ib) + ", Y^" +
                                                     std::to_string(ic) + ")" +
                                                     (sweep_k ? ", k=" + std::to_string(k) : "") +
                                                     ", p=" + std::to_string(p);
                                first = Fail{inputs, sides.first.to_string(),
                                             sides.second.to_string()};
                            }
                        }
        }
        if (first)
            out.push_back(timer.done(Report::failed(
                name, bounds, Counterexample{first->inputs, first->lhs, first->rhs})));
        else
            out.push_back(timer.done(Report::passed(name, bounds)));
    };

    run_grid(
        "eq4",
        [&](const Polynomial& a, const Polynomial& b, const Polynomial& c, long long k,
            long long p) {
            Polynomial lhs = lhs_sum(0, a, k - p, base.coeff_mul(b, c));
            Polynomial rhs = base.coeff_mul(base.coeff_mul(a, b), entry(k, p, c));
            return std::pair{lhs, rhs};
        },
        true);

    run_grid(
        "eq5-first",
        [&](const Polynomial& a, const Polynomial& b, const Polynomial& c, long long k,
            long long p) {
            Polynomial lhs = lhs_sum(0, a, k - p - 1, base.coeff_mul(b, sg.apply(c))) +
                             lhs_sum(0, a, k - p, base.coeff_mul(b, dl.apply(c)));
            Polynomial rhs = base.coeff_mul(
                base.coeff_mul(a, b), dl.apply(entry(k, p, c)) + sg.apply(entry(k - 1, p, c)));
            return std::pair{lhs, rhs};
        },
        true);

    run_grid(
        "eq5-second",
        [&](const Polynomial& a, const Polynomial& b, const Polynomial& c, long long k,
            long long p) {
            Polynomial lhs = base.coeff_mul(
                base.coeff_mul(a, b), dl.apply(entry(k, p, c)) + sg.apply(entry(k - 1, p, c)));
            Polynomial rhs = base.coeff_mul(
                base.coeff_mul(a, b), entry(k, p, dl.apply(c)) + entry(k - 1, p, sg.apply(c)));
            return std::pair{lhs, rhs};
        },
        true);

    run_grid(
        "eq6",
        [&](const Polynomial& a, const Polynomial& b, const Polynomial& c, long long k,
            long long p) {
            Polynomial lhs = lhs_sum(1, a, k - p, base.coeff_mul(b, c));
            Polynomial rhs =
                base.coeff_mul(base.coeff_mul(a, sg.apply(b)),
                               dl.apply(entry(k, p, c)) + sg.apply(entry(k - 1, p, c))) +
                base.coeff_mul(base.coeff_mul(a, dl.apply(b)), entry(k, p, c));
            return std::pair{lhs, rhs};
        },
        true);

    // assertion1: with I = max(I_{p,c}, I_{p,delta(c)}),
    // (a.b).sigma(alpha_{I+1,p+1}(c)) = (a.b).alpha_{I+1,p+1}(sigma(c))
    run_grid(
        "assertion1",
        [&](const Polynomial& a, const Polynomial& b, const Polynomial& c, long long,
            long long p) {
            auto i1 = table.support_bound(static_cast<std::size_t>(p), c);
            auto i2 = table.support_bound(static_cast<std::size_t>(p), dl.apply(c));
            std::optional<std::size_t> big;
            if (i1) big = i1;
            if (i2 && (!big || *i2 > *big)) big = i2;
            Polynomial ab = base.coeff_mul(a, b);
            if (!big) {
                Polynomial z = Polynomial::zero(ring);
                return std::pair{z, z};
            }
            long long cap = static_cast<long long>(*big);
            Polynomial lhs = base.coeff_mul(ab, sg.apply(entry(cap, p, c)));
            Polynomial rhs = base.coeff_mul(ab, entry(cap, p, sg.apply(c)));
            return std::pair{lhs, rhs};
        },
        false);

    // assertion2: (a.b).delta(alpha_{1,p+1}(c)) = (a.b).alpha_{1,p+1}(delta(c));
    // equal to (a.b).alpha_{j+1,j+1}(delta(c)) for every j when p = 0, and to 0
    // when p != 0
    {
        Timer timer;
        std::optional<Fail> first;
        for (std::size_t p = 0; p <= maxp && !first; ++p)
            for (std::size_t ia = 0; ia <= deg_y && !first; ++ia)
                for (std::size_t ib = 0; ib <= deg_y && !first; ++ib)
                    for (std::size_t ic = 0; ic <= deg_y && !first; ++ic) {
                        Polynomial a = ymon(ring, ia), b = ymon(ring, ib), c = ymon(ring, ic);
                        Polynomial ab = base.coeff_mul(a, b);
                        Polynomial lhs =
                            base.coeff_mul(ab, dl.apply(entry(0, static_cast<long long>(p), c)));
                        Polynomial mid =
                            base.coeff_mul(ab, entry(0, static_cast<long long>(p), dl.apply(c)));
                        auto record = [&](const Polynomial& l, const Polynomial& r,
                                          const std::string& what) {
                            first = Fail{"(a, b, c) = (Y^" + std::to_string(ia) + ", Y^" +
                                             std::to_string(ib) + ", Y^" + std::to_string(ic) +
                                             "), p=" + std::to_string(p) + " [" + what + "]",
                                         l.to_string(), r.to_string()};
                        };
                        if (lhs != mid) {
                            record(lhs, mid, "first equality");
                            break;
                        }
                        if (p == 0) {
                            for (std::size_t j = 0; j <= std::min(maxi, maxp); ++j) {
                                Polynomial alt = base.coeff_mul(
                                    ab, entry(static_cast<long long>(j),
                                              static_cast<long long>(j), dl.apply(c)));
                                if (mid != alt) {
                                    record(mid, alt, "j=" + std::to_string(j));
                                    break;
                                }
                            }
                        } else if (!mid.is_zero()) {
                            record(mid, Polynomial::zero(ring), "p!=0 forces 0");
                        }
                    }
        if (first)
            out.push_back(timer.done(Report::failed(
                "assertion2", bounds, Counterexample{first->inputs, first->lhs, first->rhs})));
        else
            out.push_back(timer.done(Report::passed("assertion2", bounds)));
    }

    return out;
}

std::vector<Report> check_homogeneous_corollaries(const OreContext& base, std::size_t deg_y) {
    const MapSpec& sg = base.sigma();
    const MapSpec& dl = base.delta();
    const MapSpec& al = base.alpha();
    const Ring& ring = base.ring();
    std::string bounds = "degY=" + std::to_string(deg_y);
    std::vector<Report> out;

    auto run = [&](const std::string& name, auto&& kernel) {
        Timer timer;
        for (std::size_t ia = 0; ia <= deg_y; ++ia)
            for (std::size_t ib = 0; ib <= deg_y; ++ib)
                for (std::size_t ic = 0; ic <= deg_y; ++ic) {
                    Polynomial a = ymon(ring, ia), b = ymon(ring, ib), c = ymon(ring, ic);
                    auto sides = kernel(a, b, c);
                    if (sides.first != sides.second) {
                        out.push_back(timer.done(Report::failed(
                            name, bounds,
                            Counterexample{"(a, b, c) = (Y^" + std::to_string(ia) + ", Y^" +
                                               std::to_string(ib) + ", Y^" + std::to_string(ic) +
                                               ")",
                                           sides.first.to_string(), sides.second.to_string()})));
                        return;
                    }
                }
        out.push_back(timer.done(Report::passed(name, bounds)));
    };

    run("eq7-delta-twist-commute", [&](const Polynomial& a, const Polynomial& b,
                                       const Polynomial& c) {
        Polynomial ab = base.coeff_mul(a, b);
        return std::pair{base.coeff_mul(ab, dl.apply(al.apply(c))),
                         base.coeff_mul(ab, al.apply(dl.apply(c)))};
    });
    run("eq8-sigma-twist-commute", [&](const Polynomial& a, const Polynomial& b,
                                       const Polynomial& c) {
        Polynomial ab = base.coeff_mul(a, b);
        return std::pair{base.coeff_mul(ab, sg.apply(al.apply(c))),
                         base.coeff_mul(ab, al.apply(sg.apply(c)))};
    });
    run("eq9-twisted-leibniz", [&](const Polynomial& a, const Polynomial& b,
                                   const Polynomial& c) {
        Polynomial aa = al.apply(a);
        return std::pair{base.coeff_mul(aa, dl.apply(base.coeff_mul(b, c))),
                         base.coeff_mul(aa, base.coeff_mul(dl.apply(b), c) +
                                                base.coeff_mul(sg.apply(b), dl.apply(c)))};
    });
    run("eq10-sigma-multiplicative", [&](const Polynomial& a, const Polynomial& b,
                                         const Polynomial& c) {
        Polynomial aa = al.apply(a);
        return std::pair{base.coeff_mul(aa, sg.apply(base.coeff_mul(b, c))),
                         base.coeff_mul(aa, base.coeff_mul(sg.apply(b), sg.apply(c)))};
    });
    return out;
}

Report check_pi_sum_condition(const OreContext& base, std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    const MapSpec& sg = base.sigma();
    const MapSpec& dl = base.delta();
    const MapSpec& al = base.alpha();
    const Ring& ring = base.ring();

    std::size_t y = deg_y + 1, x = deg_x + 1;
    std::size_t total = y * y * y * x * x;
    auto decode = [&](std::size_t idx) {
        std::array<std::size_t, 5> v{};  // ia ib ic m n
        v[4] = idx % x;
        idx /= x;
        v[3] = idx % x;
        idx /= x;
        v[2] = idx % y;
        idx /= y;
        v[1] = idx % y;
        idx /= y;
        v[0] = idx;
        return v;
    };
    // both sides at fixed everything, for all l in [0, m+n]
    auto sides_for = [&](std::size_t ia, std::size_t ib, std::size_t ic, std::size_t m,
                         std::size_t n) {
        Polynomial a = ymon(ring, ia), b = ymon(ring, ib), c = ymon(ring, ic);
        Polynomial alpha_a = al.apply(a);
        auto tc = pi_table(n, sg, dl, c);
        std::vector<std::vector<std::vector<Polynomial>>> u(n + 1);
        for (std::size_t d = 0; d <= n; ++d)
            u[d] = pi_table(m, sg, dl, base.coeff_mul(b, tc[n][d]));
        auto wb = pi_table(m, sg, dl, b);
        auto za = pi_table(m + n, sg, dl, al.apply(c));
        GeneralSides sides;
        for (std::size_t l = 0; l <= m + n; ++l) {
            Polynomial lhs = Polynomial::zero(ring);
            for (std::size_t i = 0; i <= m && i <= l; ++i) {
                if (l - i > n) continue;
                lhs = lhs + base.coeff_mul(alpha_a, u[l - i][m][i]);
            }
            Polynomial rhs = Polynomial::zero(ring);
            for (std::size_t i = 0; i <= m; ++i) {
                if (l > i + n) continue;
                rhs = rhs + base.coeff_mul(base.coeff_mul(a, wb[m][i]), za[i + n][l]);
            }
            sides.lhs.push_back(std::move(lhs));
            sides.rhs.push_back(std::move(rhs));
        }
        return sides;
    };
    auto passes = [&](std::size_t idx) {
        auto v = decode(idx);
        GeneralSides s = sides_for(v[0], v[1], v[2], v[3], v[4]);
        for (std::size_t l = 0; l < s.lhs.size(); ++l)
            if (s.lhs[l] != s.rhs[l]) return false;
        return true;
    };
    auto fail = first_fail_index(total, passes);
    if (!fail) return timer.done(Report::passed("pi-sum-condition", bounds));
    auto v = decode(*fail);
    GeneralSides s = sides_for(v[0], v[1], v[2], v[3], v[4]);
    for (std::size_t l = 0; l < s.lhs.size(); ++l) {
        if (s.lhs[l] != s.rhs[l]) {
            return timer.done(Report::failed(
                "pi-sum-condition", bounds,
                Counterexample{"(a, b, c) = (Y^" + std::to_string(v[0]) + ", Y^" +
                                   std::to_string(v[1]) + ", Y^" + std::to_string(v[2]) +
                                   "), (l, m, n) = (" + std::to_string(l) + ", " +
                                   std::to_string(v[3]) + ", " + std::to_string(v[4]) + ")",
                               s.lhs[l].to_string(), s.rhs[l].to_string()}));
        }
    }
    throw std::logic_error("pi-sum-condition: failing index without failing degree");
}

Report check_endo_extension(const MapSpec& gamma, const OreContext& ctx, std::size_t deg_x,
                            std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    Report pre = check_endomorphism(gamma, deg_y);
    if (!pre.pass)
        throw std::invalid_argument("check_endo_extension: gamma is not an endomorphism on R (" +
                                    pre.counterexample->inputs + ")");
    const MapSpec& sg = ctx.sigma();
    const MapSpec& dl = ctx.delta();
    const Ring& ring = ctx.ring();
    for (std::size_t ia = 0; ia <= deg_y; ++ia) {
        Polynomial ga = gamma.apply(ymon(ring, ia));
        for (std::size_t ib = 0; ib <= deg_y; ++ib) {
            Polynomial b = ymon(ring, ib);
            auto rows_gb = pi_table(deg_x, sg, dl, gamma.apply(b));
            auto rows_b = pi_table(deg_x, sg, dl, b);
            for (std::size_t m = 0; m <= deg_x; ++m)
                for (std::size_t i = 0; i <= m; ++i) {
                    Polynomial lhs = ctx.coeff_mul(ga, rows_gb[m][i]);
                    Polynomial rhs = ctx.coeff_mul(ga, gamma.apply(rows_b[m][i]));
                    if (lhs != rhs)
                        return timer.done(Report::failed(
                            "endo-extension", bounds,
                            Counterexample{"(a, b, i, m) = (Y^" + std::to_string(ia) + ", Y^" +
                                               std::to_string(ib) + ", " + std::to_string(i) +
                                               ", " + std::to_string(m) + ")",
                                           lhs.to_string(), rhs.to_string()}));
                }
        }
    }
    // cross-check: homogeneous extension is multiplicative for the untwisted
    // Ore product on monomials
    std::size_t monomials = (deg_x + 1) * (deg_y + 1);
    for (std::size_t i = 0; i < monomials; ++i) {
        OrePoly p = grid_monomial(ring, i, deg_y);
        OrePoly gp = p.map_coeffs(gamma);
        for (std::size_t j = 0; j < monomials; ++j) {
            OrePoly q = grid_monomial(ring, j, deg_y);
            OrePoly lhs = ore_mul(ctx, p, q).map_coeffs(gamma);
            OrePoly rhs = ore_mul(ctx, gp, q.map_coeffs(gamma));
            if (lhs != rhs)
                return timer.done(Report::failed(
                    "endo-extension", bounds,
                    Counterexample{"(p, q) = (" + p.to_string() + ", " + q.to_string() + ")",
                                   lhs.to_string(), rhs.to_string()}));
        }
    }
    return timer.done(Report::passed("endo-extension", bounds));
}

Report check_weak_unit(const OreContext& ctx, const OrePoly& candidate, std::size_t deg_x,
                       std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    const Ring& ring = ctx.ring();
    std::size_t monomials = (deg_x + 1) * (deg_y + 1);
    for (std::size_t i = 0; i < monomials; ++i) {
        OrePoly p = grid_monomial(ring, i, deg_y);
        OrePoly want = twist_apply(ctx, p);
        OrePoly left = mul(ctx, candidate, p);
        if (left != want)
            return timer.done(
                Report::failed("weak-unit", bounds,
                               Counterexample{"e.p with p = " + p.to_string(), left.to_string(),
                                              want.to_string()}));
        OrePoly right = mul(ctx, p, candidate);
        if (right != want)
            return timer.done(
                Report::failed("weak-unit", bounds,
                               Counterexample{"p.e with p = " + p.to_string(), right.to_string(),
                                              want.to_string()}));
    }
    return timer.done(Report::passed("weak-unit", bounds));
}

std::vector<Report> check_weak_unit_lemma(const OreContext& ctx, const OrePoly& e,
                                          std::size_t deg_x, std::size_t deg_y,
                                          const std::vector<OrePoly>& extra_samples) {
    const Ring& ring = ctx.ring();
    const MapSpec& dl = ctx.delta();
    const MapSpec& al = ctx.alpha();
    std::string bounds = bounds_str(deg_x, deg_y);

    // preconditions: sigma = id, alpha commutes with delta, e in R a weak unit of R
    std::size_t probe = deg_y + deg_x + 2;
    if (!maps_agree_up_to(ctx.sigma(), MapSpec::identity(ring), probe))
        throw std::invalid_argument("weak-unit lemma requires sigma = id");
    if (!check_commute(al, dl, probe).pass)
        throw std::invalid_argument("weak-unit lemma requires alpha to commute with delta");
    if (!e.is_zero() && e.x_degree() != std::optional<std::size_t>(0))
        throw std::invalid_argument("weak-unit lemma requires e in the coefficient ring");
    Polynomial e0 = e.coeff(0);
    for (std::size_t t = 0; t <= probe; ++t) {
        Polynomial yt = ymon(ring, t);
        Polynomial want = al.apply(yt);
        if (ctx.coeff_mul(e0, yt) != want || ctx.coeff_mul(yt, e0) != want)
            throw std::invalid_argument("weak-unit lemma: e is not a weak unit of R");
    }

    std::vector<Report> out;
    {
        Timer timer;
        Report r = Report::passed("lemma-i-delta-powers-annihilate", bounds);
        Polynomial dne = e0;
        for (std::size_t n = 1; n <= std::max<std::size_t>(deg_x, 1) && r.pass; ++n) {
            dne = dl.apply(dne);
            for (std::size_t t = 0; t <= deg_y; ++t) {
                Polynomial a = ymon(ring, t);
                Polynomial left = ctx.coeff_mul(a, dne);
                Polynomial right = ctx.coeff_mul(dne, a);
                if (!left.is_zero() || !right.is_zero()) {
                    r = Report::failed("lemma-i-delta-powers-annihilate", bounds,
                                       Counterexample{"a = Y^" + std::to_string(t) +
                                                          ", n = " + std::to_string(n),
                                                      left.to_string(), right.to_string()});
                    break;
                }
            }
        }
        out.push_back(timer.done(std::move(r)));
    }
    {
        Report r = check_weak_unit(ctx, e, deg_x, deg_y);
        r.property = "lemma-ii-weak-unit-of-extension";
        out.push_back(std::move(r));
    }
    {
        Timer timer;
        OrePoly ex = OrePoly::monomial(e0, 1);
        auto rhs_of = [&](const OrePoly& q) {
            OrePoly r(ring);
            for (const auto& [i, qi] : q.terms()) r.add_term(i, al.apply(dl.apply(qi)));
            return r;
        };
        std::vector<OrePoly> samples;
        std::size_t monomials = (deg_x + 1) * (deg_y + 1);
        for (std::size_t i = 0; i < monomials; ++i)
            samples.push_back(grid_monomial(ring, i, deg_y));
        samples.insert(samples.end(), extra_samples.begin(), extra_samples.end());
        Report r = Report::passed("lemma-iii-commutator-formula", bounds);
        for (const auto& q : samples) {
            OrePoly lhs = commutator(ctx, ex, q);
            OrePoly rhs = rhs_of(q);
            if (lhs != rhs) {
                r = Report::failed("lemma-iii-commutator-formula", bounds,
                                   Counterexample{"q = " + q.to_string(), lhs.to_string(),
                                                  rhs.to_string()});
                break;
            }
        }
        out.push_back(timer.done(std::move(r)));
    }
    return out;
}

Report check_multiplicative_from_fixed_unit(const OreContext& ctx, const OrePoly& e,
                                            std::size_t deg_x, std::size_t deg_y) {
    Timer timer;
    std::string bounds = bounds_str(deg_x, deg_y);
    Report pre = check_weak_unit(ctx, e, deg_x, deg_y);
    if (!pre.pass)
        throw std::invalid_argument("check_multiplicative_from_fixed_unit: e is not a weak unit");
    if (twist_apply(ctx, e) != e)
        throw std::invalid_argument("check_multiplicative_from_fixed_unit: twist does not fix e");
    const Ring& ring = ctx.ring();
    std::size_t monomials = (deg_x + 1) * (deg_y + 1);
    for (std::size_t i = 0; i < monomials; ++i) {
        OrePoly p = grid_monomial(ring, i, deg_y);
        for (std::size_t j = 0; j < monomials; ++j) {
            OrePoly q = grid_monomial(ring, j, deg_y);
            OrePoly lhs = twist_apply(ctx, mul(ctx, p, q));
            OrePoly rhs = mul(ctx, twist_apply(ctx, p), twist_apply(ctx, q));
            if (lhs != rhs)
                return timer.done(Report::failed(
                    "multiplicative-twist", bounds,
                    Counterexample{"(p, q) = (" + p.to_string() + ", " + q.to_string() + ")",
                                   lhs.to_string(), rhs.to_string()}));
        }
    }
    return timer.done(Report::passed("multiplicative-twist", bounds));
}

}  // namespace homore
