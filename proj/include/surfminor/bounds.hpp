#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "certify.hpp"
#include "graph_io.hpp"

namespace surfminor::bounds {

// Owning MPFR value.
class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    // Decimal text rounded in the given direction.
    std::string str(mpfr_rnd_t rnd, int digits = 40) const {
        char* buf = nullptr;
        const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : rnd == MPFR_RNDU ? "%.*RUe" : "%.*RNe";
        mpfr_asprintf(&buf, fmt, digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding on every operation.
struct Interval {
    Real lo, hi;

    explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

    static Interval exact(long v, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_si(r.lo.get(), v, MPFR_RNDD);
        mpfr_set_si(r.hi.get(), v, MPFR_RNDU);
        return r;
    }

    // Enclosure of log2(x) for an integer x ≥ 1.
    static Interval log2_of(const mpz_class& x, mpfr_prec_t prec) {
        if (x < 1) throw Error("log2 of a non-positive integer");
        Interval r(prec);
        Real t(prec);
        mpfr_set_z(t.get(), x.get_mpz_t(), MPFR_RNDD);
        mpfr_log2(r.lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_z(t.get(), x.get_mpz_t(), MPFR_RNDU);
        mpfr_log2(r.hi.get(), t.get(), MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return lo.precision(); }

    Interval operator+(const Interval& b) const {
        Interval r(precision());
        mpfr_add(r.lo.get(), lo.get(), b.lo.get(), MPFR_RNDD);
        mpfr_add(r.hi.get(), hi.get(), b.hi.get(), MPFR_RNDU);
        return r;
    }
    Interval operator-(const Interval& b) const {
        Interval r(precision());
        mpfr_sub(r.lo.get(), lo.get(), b.hi.get(), MPFR_RNDD);
        mpfr_sub(r.hi.get(), hi.get(), b.lo.get(), MPFR_RNDU);
        return r;
    }
    // Product with an integer k ≥ 0.
    Interval scaled(const mpz_class& k) const {
        if (k < 0) throw Error("interval scale by a negative integer");
        Interval r(precision());
        mpfr_mul_z(r.lo.get(), lo.get(), k.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi.get(), hi.get(), k.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    Interval halved() const {
        Interval r(precision());
        mpfr_div_2ui(r.lo.get(), lo.get(), 1, MPFR_RNDD);
        mpfr_div_2ui(r.hi.get(), hi.get(), 1, MPFR_RNDU);
        return r;
    }
    // Widen the lower end by an amount at most c.
    Interval lowered_by(const Real& c) const {
        Interval r = *this;
        mpfr_sub(r.lo.get(), lo.get(), c.get(), MPFR_RNDD);
        return r;
    }
    Interval raised_by(const Real& c) const {
        Interval r = *this;
        mpfr_add(r.hi.get(), hi.get(), c.get(), MPFR_RNDU);
        return r;
    }

    Real width() const {
        Real w(precision());
        mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
        return w;
    }
    bool contains(mpfr_srcptr x) const { return mpfr_lessequal_p(lo.get(), x) && mpfr_lessequal_p(x, hi.get()); }
    bool overlaps(const Interval& b) const { return mpfr_lessequal_p(lo.get(), b.hi.get()) && mpfr_lessequal_p(b.lo.get(), hi.get()); }
    double mid() const { return (lo.to_double() + hi.to_double()) / 2; }
};

// Upper bound on −log2(1 − 2^−v) for v ≥ 1, namely 2^(1−v).
inline Real log_one_minus_slack(const Real& v) {
    if (mpfr_cmp_ui(v.get(), 1) < 0) throw Error("slack bound needs an exponent of at least 1");
    Real e(v.precision()), c(v.precision());
    mpfr_ui_sub(e.get(), 1, v.get(), MPFR_RNDU);
    mpfr_exp2(c.get(), e.get(), MPFR_RNDU);
    return c;
}

// a < b, a ≥ b, or undecided, for the values enclosed by two intervals.
inline std::optional<bool> certainly_less(const Interval& a, const Interval& b) {
    if (mpfr_less_p(a.hi.get(), b.lo.get())) return true;
    if (mpfr_greaterequal_p(a.lo.get(), b.hi.get())) return false;
    return std::nullopt;
}

struct FloorLog {
    std::optional<mpz_class> value;  // empty when the floor stayed ambiguous
    Interval range;                  // enclosure of log_b(x)
    mpfr_prec_t precision = 0;       // precision of the last evaluation
};

// floor(log_b x) for b = num/den > 1 and an integer x ≥ 1, as ln x / ln b
// under interval arithmetic; precision doubles until both ends of the
// enclosure share a floor.
inline FloorLog floor_log(const mpz_class& x, long num, long den, mpfr_prec_t start = 256, mpfr_prec_t max = 1 << 16) {
    if (x < 1) throw Error("floor_log needs x ≥ 1");
    if (den <= 0 || num <= den) throw Error("floor_log needs a base above 1");
    for (mpfr_prec_t prec = start;; prec *= 2) {
        Real t(prec), lnx_lo(prec), lnx_hi(prec), lnb_lo(prec), lnb_hi(prec);
        mpfr_set_z(t.get(), x.get_mpz_t(), MPFR_RNDD);
        mpfr_log(lnx_lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_z(t.get(), x.get_mpz_t(), MPFR_RNDU);
        mpfr_log(lnx_hi.get(), t.get(), MPFR_RNDU);
        // ln b = log1p((num − den)/den)
        mpfr_set_si(t.get(), num - den, MPFR_RNDN);
        mpfr_div_si(t.get(), t.get(), den, MPFR_RNDD);
        mpfr_log1p(lnb_lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_si(t.get(), num - den, MPFR_RNDN);
        mpfr_div_si(t.get(), t.get(), den, MPFR_RNDU);
        mpfr_log1p(lnb_hi.get(), t.get(), MPFR_RNDU);
        FloorLog r{std::nullopt, Interval(prec), prec};
        mpfr_div(r.range.lo.get(), lnx_lo.get(), lnb_hi.get(), MPFR_RNDD);
        mpfr_div(r.range.hi.get(), lnx_hi.get(), lnb_lo.get(), MPFR_RNDU);
        mpz_class a, b;
        mpfr_get_z(a.get_mpz_t(), r.range.lo.get(), MPFR_RNDD);
        mpfr_get_z(b.get_mpz_t(), r.range.hi.get(), MPFR_RNDD);
        if (a == b) {
            r.value = a;
            return r;
        }
        if (prec * 2 > max) return r;
    }
}

inline mpz_class certified_floor_log(const mpz_class& x, long num, long den, mpfr_prec_t start = 256) {
    auto r = floor_log(x, num, den, start);
    if (!r.value)
        throw Error("floor of log_" + std::to_string(num) + "/" + std::to_string(den) + "(" + x.get_str() + ") undecided: log lies in [" +
                    r.range.lo.str(MPFR_RNDD) + ", " + r.range.hi.str(MPFR_RNDU) + "]");
    return *r.value;
}

struct BoundValue {
    std::string name;
    std::string formula;
    std::optional<mpq_class> exact;
    Interval log2;

    BoundValue(std::string n, std::string f, mpfr_prec_t prec) : name(std::move(n)), formula(std::move(f)), log2(prec) {}
};

inline BoundValue exact_value(std::string name, std::string formula, const mpz_class& v, mpfr_prec_t prec) {
    BoundValue b(std::move(name), std::move(formula), prec);
    b.exact = mpq_class(v);
    b.log2 = Interval::log2_of(v, prec);
    return b;
}

inline BoundValue log_value(std::string name, std::string formula, Interval l) {
    BoundValue b(std::move(name), std::move(formula), l.precision());
    b.log2 = std::move(l);
    return b;
}

struct Constants {
    int g = 0;
    mpfr_prec_t precision = 256;
    mpq_class q{9073, 9072};
    mpz_class m, m_prime, T, A, m_tilde, Q, binomial_sum;
    mpz_class f_radicand;  // 2A(2m̃+1)^4 m̃^3, so f(g,1) = 4·sqrt(f_radicand)
    Interval log2_f_base{256};
    std::vector<BoundValue> table;  // q, m, T, m′, A, m̃, Δ, P, Q, R, U in that order

    const BoundValue& operator[](const std::string& name) const {
        for (const auto& b : table)
            if (b.name == name) return b;
        throw Error("no bound value named " + name);
    }
};

inline Constants constants(int g, mpfr_prec_t prec = 256) {
    if (g < 0) throw Error("bound constants need g ≥ 0");
    Constants c;
    c.g = g;
    c.precision = prec;
    const mpz_class gz = g;
    c.m = 2 * (certified_floor_log(3 * gz + 4, 9073, 9072, prec) + 2);
    c.T = 264 * (gz + 2) * (c.m + 1) - 1;
    const mpz_class mm = 3 * (4 * c.m * c.m * (3 * gz + 3) + 1);
    c.m_prime = certified_floor_log(mm, 4, 3, prec);
    const mpz_class n = (c.T + 1) * c.m_prime;
    c.A = 6 * (certified_floor_log(3 * (3 * n + 1), 4, 3, prec) * (12 * c.m + 8) + 3);
    c.m_tilde = 2 * (certified_floor_log(60 * c.A + 180, 9073, 9072, prec) + 2);
    const mpz_class& mt = c.m_tilde;
    const mpz_class mt1 = 2 * mt + 1;
    c.f_radicand = 2 * c.A * mt1 * mt1 * mt1 * mt1 * mt * mt * mt;
    // log2(4 sqrt(X)) = 2 + log2(X)/2
    c.log2_f_base = Interval::exact(2, prec) + Interval::log2_of(c.f_radicand, prec).halved();
    Interval log2_delta = c.log2_f_base.scaled(mt * mt);
    // log2 P = log2 Δ + log2(Δ^{2m̃} − 1) − log2(Δ − 1) + log2 A
    Interval top = log2_delta.scaled(2 * mt);
    top = top.lowered_by(log_one_minus_slack(top.lo));
    Interval below = log2_delta.lowered_by(log_one_minus_slack(log2_delta.lo));
    Interval log2_p = log2_delta + top - below + Interval::log2_of(c.A, prec);
    c.Q = 3 * (4 * c.m * c.m * (3 * gz + 3) + 1) * 3 * (n + gz) * 2 * c.m * (3 * gz + 3);
    c.binomial_sum = 0;
    for (unsigned long a = 0; a <= 3; ++a) {
        mpz_class b;
        mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), a);
        c.binomial_sum += b;
    }
    Interval log2_r = Interval::log2_of(3 * (3 * n + 1), prec) + Interval::log2_of(c.binomial_sum, prec) + Interval::log2_of(5, prec) -
                      Interval::log2_of(6, prec) + Interval::log2_of(c.A, prec) + log2_p;
    Interval log2_u = Interval::log2_of(c.Q, prec) + log2_r;

    BoundValue q("q", "q = 9073/9072", prec);
    q.exact = c.q;
    q.log2 = Interval::log2_of(9073, prec) - Interval::log2_of(9072, prec);
    c.table.push_back(std::move(q));
    c.table.push_back(exact_value("m", "m = 2(floor(log_q(3g+4)) + 2)", c.m, prec));
    c.table.push_back(exact_value("T", "T = 264(g+2)(m+1) - 1", c.T, prec));
    c.table.push_back(exact_value("m'", "m' = floor(log_{4/3}(3(4m^2(3g+3)+1)))", c.m_prime, prec));
    c.table.push_back(exact_value("A", "A = 6(floor(log_{4/3}(3(3(T+1)m'+1)))(12m+8) + 3)", c.A, prec));
    c.table.push_back(exact_value("m~", "m~ = 2(floor(log_q(60A+180)) + 2)", c.m_tilde, prec));
    c.table.push_back(log_value("Delta", "Delta = (4 sqrt(2A(2m~+1)^4 m~^3))^(m~^2)", log2_delta));
    c.table.push_back(log_value("P", "P = Delta(Delta^(2m~) - 1)/(Delta - 1) * A", log2_p));
    c.table.push_back(exact_value("Q", "Q = 3(4m^2(3g+3)+1) * 3((T+1)m'+g) * 2m(3g+3)", c.Q, prec));
    c.table.push_back(log_value("R", "R = 3(3(T+1)m'+1) * sum_{a=0..3} C((T+1)m', a) * (5/6) A P", log2_r));
    c.table.push_back(log_value("U", "U = Q * R", log2_u));
    return c;
}

// f(g,i) = (4 sqrt(2A(2m~+1)^4 m~^3))^(i^2). Exact when the value is an
// integer of fewer than exact_cap_bits bits.
inline BoundValue f_of(const Constants& c, long i, long exact_cap_bits = 0) {
    if (i < 0) throw Error("f(g,i) needs i ≥ 0");
    const mpz_class e = mpz_class(i) * i;
    BoundValue b = log_value("f", "f(g,i) = (4 sqrt(2A(2m~+1)^4 m~^3))^(i^2)", c.log2_f_base.scaled(e));
    if (i == 0) {
        b.exact = 1;
        return b;
    }
    if (mpfr_cmp_si(b.log2.hi.get(), exact_cap_bits) >= 0) return b;
    mpz_class root;
    bool square = mpz_perfect_square_p(c.f_radicand.get_mpz_t()) != 0;
    if (square) mpz_sqrt(root.get_mpz_t(), c.f_radicand.get_mpz_t());
    if (e % 2 != 0 && !square) return b;
    mpz_class v;
    if (square) {
        mpz_pow_ui(v.get_mpz_t(), mpz_class(4 * root).get_mpz_t(), e.get_ui());
    } else {
        mpz_class a, x;
        mpz_ui_pow_ui(a.get_mpz_t(), 4, e.get_ui());
        mpz_pow_ui(x.get_mpz_t(), c.f_radicand.get_mpz_t(), e.get_ui() / 2);
        v = a * x;
    }
    b.exact = mpq_class(v);
    return b;
}

inline BoundValue f_of(int g, long i, long exact_cap_bits = 0) { return f_of(constants(g), i, exact_cap_bits); }

struct ReportRow {
    int g = 0;
    Interval log2_u{256};
    std::optional<Interval> slope;        // Δlog2 U / Δlog2 g from the previous row
    std::optional<bool> increasing;       // U(previous) < U(g), when decided
};

// log2 U(g) along an increasing list, with finite-difference slopes in log g.
inline std::vector<ReportRow> asymptotic_report(const std::vector<int>& gs, mpfr_prec_t prec = 256) {
    for (std::size_t i = 1; i < gs.size(); ++i)
        if (gs[i] <= gs[i - 1]) throw Error("asymptotic_report needs an increasing genus list");
    std::vector<ReportRow> rows;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        ReportRow r;
        r.g = gs[i];
        r.log2_u = constants(gs[i], prec)["U"].log2;
        if (i > 0) {
            const ReportRow& p = rows.back();
            r.increasing = certainly_less(p.log2_u, r.log2_u);
            if (p.g > 0) {
                Interval du = r.log2_u - p.log2_u;
                Interval dg = Interval::log2_of(r.g, prec) - Interval::log2_of(p.g, prec);
                Interval s(prec);
                // du may straddle zero; dg > 0
                mpfr_div(s.lo.get(), du.lo.get(), mpfr_sgn(du.lo.get()) >= 0 ? dg.hi.get() : dg.lo.get(), MPFR_RNDD);
                mpfr_div(s.hi.get(), du.hi.get(), mpfr_sgn(du.hi.get()) >= 0 ? dg.lo.get() : dg.hi.get(), MPFR_RNDU);
                r.slope = s;
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

// U as a bound function for the transfer check; values are cached per g.
inline BoundFunction u_bound_function(mpfr_prec_t prec = 256) {
    auto cache = std::make_shared<std::map<int, Interval>>();
    auto u = [cache, prec](int g) -> const Interval& {
        auto it = cache->find(g);
        if (it == cache->end()) it = cache->emplace(g, constants(g, prec)["U"].log2).first;
        return it->second;
    };
    BoundFunction f;
    f.le = [u](int a, int b) -> std::optional<bool> {
        if (a == b) return true;
        auto less = certainly_less(u(b), u(a));
        if (!less) return std::nullopt;
        return !*less;
    };
    // log2(U(a) + U(b)) lies in [max lo, max hi + 1]
    f.sum_le = [u, prec](int a, int b, int c) -> std::optional<bool> {
        const Interval &ua = u(a), &ub = u(b), &uc = u(c);
        Real top(prec);
        mpfr_max(top.get(), ua.hi.get(), ub.hi.get(), MPFR_RNDU);
        mpfr_add_ui(top.get(), top.get(), 1, MPFR_RNDU);
        if (mpfr_lessequal_p(top.get(), uc.lo.get())) return true;
        if (mpfr_greater_p(ua.lo.get(), uc.hi.get()) || mpfr_greater_p(ub.lo.get(), uc.hi.get())) return false;
        return std::nullopt;
    };
    return f;
}

inline json bound_value_to_json(const BoundValue& b, int digits = 40) {
    json j;
    j["name"] = b.name;
    j["formula"] = b.formula;
    j["exact"] = b.exact ? json(b.exact->get_str()) : json(nullptr);
    j["log2"] = {b.log2.lo.str(MPFR_RNDD, digits), b.log2.hi.str(MPFR_RNDU, digits)};
    return j;
}

inline json constants_to_json(const Constants& c) {
    json j;
    j["g"] = c.g;
    j["precision_bits"] = c.precision;
    j["values"] = json::array();
    for (const auto& b : c.table) j["values"].push_back(bound_value_to_json(b));
    return j;
}

}  // namespace surfminor::bounds
