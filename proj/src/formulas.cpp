#include "qqueens/formulas.hpp"

#include <sstream>

namespace qq {

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

void check_piece(int h, int k) { (void)PartialQueenSpec::make(h, k); }

// The closed forms also hold for (0,0), the piece without moves, which the
// tables list as C(n^2, q).
void check_hk(int h, int k) {
    if (h < 0 || h > 2 || k < 0 || k > 2) throw InvalidArgument("h and k must lie in {0,1,2}");
}

void check_q(long q, long min_q, const char* what) {
    if (q < min_q)
        throw InvalidArgument(std::string(what) + " needs q >= " + std::to_string(min_q));
}

Polynomial P(const Rational& c) { return Polynomial::constant(c); }

// c * n^e, where e may be computed from q.  A nonzero coefficient on a
// negative power means a formula was mis-specified for this q.
void add_term(Polynomial& p, const Rational& c, long e) {
    if (c == 0) return;
    if (e < 0) throw Error("nonzero coefficient on n^" + std::to_string(e));
    p += Polynomial::monomial(c, static_cast<int>(e));
}

}  // namespace

Rational factorial(long m) {
    if (m < 0) throw InvalidArgument("factorial of a negative number");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(f);
}

Rational falling(long x, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) r *= Rational(x - i);
    return r;
}

Polynomial falling_poly(long shift, int j) {
    Polynomial p = P(1);
    for (int i = 0; i < j; ++i) p *= Polynomial({R(-shift - i), R(1)});
    return p;
}

// ------------------------------------------------------------------ gammas

Rational GammaExpr::evaluate(long q) const {
    check_q(q, factorial_offset, "gamma");
    return numerator(Rational(q)) / (denominator_constant * factorial(q - factorial_offset));
}

Polynomial GammaExpr::normalized() const { return numerator * Rational(1 / denominator_constant); }

std::string GammaExpr::str() const {
    std::ostringstream os;
    os << "(" << numerator.str("q") << ")/(" << to_string(denominator_constant) << "*(q-" << factorial_offset << ")!)";
    return os.str();
}

namespace {

// Bracket pieces shared by the gamma formulas and the lemmas.
Rational slope_weight(int h, int k) { return R(3 * h + 2 * k, 6); }
long b_term(int h, int k) { return 4 * h + 2 * k + 8 * h * k + 12 * delta(h, 2) + 5 * delta(k, 2); }

GammaExpr gamma3_from_brackets(int h, int k, const Rational& c2, const Rational& c1) {
    const Rational a = slope_weight(h, k);
    Polynomial body = falling_poly(2, 4) * Rational(a * a * a);
    body += falling_poly(2, 3) * R((3 * h + 2 * k) * b_term(h, k), 12);
    body += falling_poly(2, 2) * Rational(c2 / 20);
    body += falling_poly(2, 1) * c1;
    body += P(R(k));
    return GammaExpr{3, body * R(-1, 6), 1, 2};
}

}  // namespace

GammaExpr gamma_expr(int i, int h, int k) {
    check_hk(h, k);
    const int dh = delta(h, 2), dk = delta(k, 2);
    const Rational a = slope_weight(h, k);
    switch (i) {
        case 1:
            return GammaExpr{1, P(-a), 1, 2};
        case 2: {
            Polynomial body = falling_poly(2, 2) * Rational(a * a);
            body += falling_poly(2, 1) * R(b_term(h, k), 6);
            body += P(R(h + k - 1));
            return GammaExpr{2, body * R(1, 2), 1, 2};
        }
        case 3: {
            // Coefficients re-derived from the per-type codimension-3 counts;
            // they reproduce the coefficient table for all nine pieces.
            const Rational c2 = R(30 * h * h + 20 * k * k - 8 * k + 257 * h * k + 40 * (8 * k + 9) * dh +
                                  4 * (51 * h + 26) * dk);
            const Rational c1 =
                R(6 * h * (h - 1) + 10 * k * h + 4 * k * (k - 1) + 4 * k * dh) + R(5 * h * dk, 2);
            return gamma3_from_brackets(h, k, c2, c1);
        }
        default:
            throw InvalidArgument("gamma_expr covers i = 1, 2, 3");
    }
}

GammaExpr gamma3_expr_as_printed(int h, int k) {
    check_hk(h, k);
    const int dh = delta(h, 2), dk = delta(k, 2);
    const Rational c2 = R(30 * h * h + 20 * k * k - 8 * k + 257 * h * k + 160 * (2 * k + 3) * dh +
                          68 * (3 * h + 2) * dk);
    const Rational c1 = R(6 * h * (h - 1) + 10 * k * h + 4 * k * (k - 1) + 8 * k * dh + 5 * h * dk);
    return gamma3_from_brackets(h, k, c2, c1);
}

Rational gamma1(int h, int k, long q) {
    check_q(q, 2, "gamma1");
    return gamma_expr(1, h, k).evaluate(q);
}

Rational gamma2(int h, int k, long q) {
    check_q(q, 2, "gamma2");
    return gamma_expr(2, h, k).evaluate(q);
}

Rational gamma3(int h, int k, long q) {
    check_q(q, 2, "gamma3");
    return gamma_expr(3, h, k).evaluate(q);
}

Rational gamma3_as_printed(int h, int k, long q) {
    check_q(q, 2, "gamma3");
    return gamma3_expr_as_printed(h, k).evaluate(q);
}

GammaExpr table1_entry(int i, int h, int k) {
    check_piece(h, k);
    auto poly = [](std::initializer_list<long> c_high_to_low) {
        std::vector<Rational> v;
        for (long c : c_high_to_low) v.insert(v.begin(), Rational(c));
        return Polynomial(std::move(v));
    };
    if (i == 2) {
        const int idx = 3 * h + k;
        Polynomial num;
        switch (idx) {
            case 1: num = poly({4, -8, 0}); break;        // (0,1)
            case 2: num = poly({16, -26, 24}); break;     // (0,2)
            case 3: num = poly({9, -21, 6}); break;       // (1,0)
            case 4: num = poly({25, -41, 18}); break;     // (1,1)
            case 5: num = poly({49, -71, 18}); break;     // (1,2)
            case 6: num = poly({36, -60, 12}); break;     // (2,0)
            case 7: num = poly({64, -92, 0}); break;      // (2,1)
            case 8: num = poly({100, -134, -24}); break;  // (2,2)
        }
        return GammaExpr{2, num, 72, 2};
    }
    if (i == 3) {
        switch (3 * h + k) {
            case 1: return GammaExpr{3, -poly({5, -25, 31, -5, 141}), 810, 2};
            case 2: return GammaExpr{3, -poly({40, -155, 329, -220, -6}), 810, 2};
            case 3: return GammaExpr{3, -(poly({1, -1, 0}) * poly({1, -2}) * poly({1, -3})), 48, 2};
            case 4: return GammaExpr{3, -poly({625, -2450, 3821, -2380, 156}), 6480, 2};
            case 5: return GammaExpr{3, -poly({1715, -5740, 6799, -3470, 384}), 6480, 2};
            case 6: return GammaExpr{3, -(poly({1, -2, 1, 0}) * poly({1, -2})), 6, 2};
            case 7: return GammaExpr{3, -poly({640, -2120, 1781, -505, 876}), 1620, 2};
            case 8: return GammaExpr{3, -poly({1250, -3775, 1999, 190, 2364}), 1620, 2};
        }
    }
    throw InvalidArgument("the coefficient table has gamma2 and gamma3 only");
}

Rational gamma_leading_term(int h, int k, int i) {
    if (i < 0) throw InvalidArgument("i must be nonnegative");
    Rational base = -slope_weight(h, k);
    Rational r = 1;
    for (int j = 0; j < i; ++j) r *= base;
    return r / factorial(i);
}

Rational gamma5_periodic(int h, int k, long q) {
    check_hk(h, k);
    check_q(q, 3, "gamma5_periodic");
    return -R(h * delta(k, 2), 8) / factorial(q - 3);
}

Rational gamma5_periodic_from_lemma(int h, int k, long q) { return -gamma5_periodic(h, k, q); }

Rational gamma6_periodic(int h, int k, long q) {
    check_hk(h, k);
    check_q(q, 4, "gamma6_periodic");
    return -R(delta(k, 2), 8) / factorial(q - 3);
}

// ------------------------------------------------------- two and three pieces

Polynomial u2_closed(int h, int k) {
    check_hk(h, k);
    return Polynomial({0, R(-k, 6), R(h + k - 1, 2), R(-(3 * h + 2 * k), 6), R(1, 2)});
}

QuasiPolynomial u3_closed(int h, int k) {
    check_hk(h, k);
    const int dh = delta(h, 2), dk = delta(k, 2);
    const Rational a = slope_weight(h, k);
    const int m = h + k - 1;
    Polynomial c({
        R(dk, 8),
        -(R(m * k, 3) + R(k * dh, 3) + R(11 * h * dk, 24)),
        R(m * m * (h + k + 2), 6) + R(h * k, 3) + R(k, 6) + R(dk, 3),
        -(R(m * (3 * h + 2 * k), 3) + R(k, 6) + R(2 * k * dh, 3) + R(5 * h * dk, 12)),
        a + R(h * (k + 1) + (h + 1) * k, 3) - R(1, 2) + R(dh) + R(5 * dk, 12),
        -a,
        R(1, 6),
    });
    // (-1)^n (delta_{k2}/8)(h n - 1)
    Polynomial alt({R(-dk, 8), R(h * dk, 8)});
    return QuasiPolynomial::from_split(c, alt);
}

QuasiPolynomial table2_row(int h, int k) {
    check_hk(h, k);
    auto p = [](std::initializer_list<Rational> low_to_high) { return Polynomial(low_to_high); };
    switch (3 * h + k) {
        case 1: return QuasiPolynomial(p({0, 0, R(1, 6), R(-1, 6), R(1, 6), R(-1, 3), R(1, 6)}));
        case 2:
            return QuasiPolynomial::from_split(p({R(1, 8), R(-2, 3), R(4, 3), R(-5, 3), R(5, 4), R(-2, 3), R(1, 6)}),
                                               p({R(-1, 8)}));
        case 3: return QuasiPolynomial(p({0, 0, 0, 0, R(1, 3), R(-1, 2), R(1, 6)}));
        case 4: return QuasiPolynomial(p({0, R(-1, 3), R(7, 6), R(-11, 6), R(5, 3), R(-5, 6), R(1, 6)}));
        case 5:
            return QuasiPolynomial::from_split(
                p({R(1, 8), R(-43, 24), R(14, 3), R(-65, 12), R(41, 12), R(-7, 6), R(1, 6)}),
                p({R(-1, 8), R(1, 8)}));
        case 6: return QuasiPolynomial(p({0, 0, R(2, 3), R(-2), R(13, 6), R(-1), R(1, 6)}));
        case 7: return QuasiPolynomial(p({0, R(-1), R(25, 6), R(-37, 6), R(25, 6), R(-4, 3), R(1, 6)}));
        case 8:
            return QuasiPolynomial::from_split(
                p({R(1, 8), R(-43, 12), R(11), R(-25, 2), R(79, 12), R(-5, 3), R(1, 6)}),
                p({R(-1, 8), R(1, 4)}));
    }
    return QuasiPolynomial(p({0, 0, R(1, 3), 0, R(-1, 2), 0, R(1, 6)}));
}

// ------------------------------------------------------------------- lines

namespace {

bool orthogonal(Move s) { return (s.c() == 1 && s.d() == 0) || (s.c() == 0 && s.d() == 1); }
bool diagonal(Move s) { return s.c() == 1 && (s.d() == 1 || s.d() == -1); }

}  // namespace

Polynomial alpha_closed(Move slope) {
    if (orthogonal(slope)) return Polynomial::monomial(1, 3);
    if (diagonal(slope)) return Polynomial({0, R(1, 3), 0, R(2, 3)});
    throw InvalidArgument("closed form known only for slopes 0, infinity, +1, -1; got " + slope.str());
}

QuasiPolynomial beta_closed(Move slope) {
    if (orthogonal(slope)) return QuasiPolynomial(Polynomial::monomial(1, 4));
    if (diagonal(slope)) return QuasiPolynomial(Polynomial({0, 0, R(1, 2), 0, R(1, 2)}));
    throw InvalidArgument("closed form known only for slopes 0, infinity, +1, -1; got " + slope.str());
}

BigInt types3_conjecture(long m) {
    if (m < 1) throw InvalidArgument("need at least one move");
    const BigInt mm = m;
    const BigInt num = mm * (mm * mm + 3 * mm - 1);
    if (num % 3 != 0) throw Error("m(m^2+3m-1) not divisible by 3");
    return num / 3;
}

int table3_types(int h, int k) {
    check_piece(h, k);
    static constexpr int table[3][3] = {{0, 1, 6}, {1, 6, 17}, {6, 17, 36}};
    return table[h][k];
}

// ------------------------------------------------------ codim contributions

QuasiPolynomial codim_contribution(int h, int k, long q, int nu) {
    check_hk(h, k);
    check_q(q, 2, "codim_contribution");
    const int dh = delta(h, 2), dk = delta(k, 2);
    const Rational a = slope_weight(h, k);
    const long e = 2 * q;
    auto ff = [q](int j) { return falling(q, j); };
    Polynomial c, alt;
    switch (nu) {
        case 0:
            add_term(c, 1, e);
            break;
        case 1:
            add_term(c, -ff(2) * a, e - 1);
            add_term(c, -ff(2) * R(k, 6), e - 3);
            break;
        case 2:
            add_term(c, ff(4) * R(1, 2) * a * a + ff(3) * R(b_term(h, k), 12) + ff(2) * R(h + k - 1, 2), e - 2);
            add_term(c, ff(4) * R(k * (3 * h + 2 * k), 36) + ff(3) * R(k * (2 * h + 1) + 2 * dk, 6), e - 4);
            add_term(c, ff(4) * R(k * k, 72) + ff(3) * R(dk, 8), e - 6);
            add_term(alt, -ff(3) * R(dk, 8), e - 6);
            break;
        case 3: {
            const long s = 3 * h + 2 * k;
            // printed with an overall minus sign
            add_term(c,
                     ff(3) * R(12 * h * (h - 1) + 20 * k * h + 8 * k * (k - 1) + 8 * k * dh + 5 * h * dk, 12) +
                         ff(4) * R(30 * h * h + 20 * k * k - 8 * k + 257 * h * k + 160 * (2 * k + 3) * dh +
                                       68 * (3 * h + 2) * dk,
                                   120) +
                         ff(5) * R(s * b_term(h, k), 72) + ff(6) * R(s * s * s, 1296),
                     e - 3);
            add_term(c,
                     ff(3) * R(8 * k * (h + k - 1) + 8 * k * dh + 11 * h * dk, 24) +
                         ff(4) * R(k * (31 * h + k + 1) + 32 * k * dh + (34 * h + 24) * dk, 24) +
                         ff(5) * R(2 * k * (6 * h * h + 8 * h * k + 5 * h + 3 * k) + 12 * k * dh + (12 * h + 13 * k) * dk,
                                   72) +
                         ff(6) * R(k * s * s, 432),
                     e - 5);
            add_term(c,
                     ff(4) * R(2 * k * (4 * h - 1) + (61 * h + 76) * dk, 120) +
                         ff(5) * R(4 * (2 * h + 1) * k * k + (14 * k + 9 * h) * dk, 144) +
                         ff(6) * R(k * k * s, 432),
                     e - 7);
            add_term(c, ff(5) * R(k * dk, 48) + ff(6) * R(k * k * k, 1296), e - 9);
            add_term(alt, -ff(3) * R(h * dk, 8), e - 5);
            add_term(alt, -(ff(4) * R((h + 2) * dk, 4) + ff(5) * R(s * dk, 48)), e - 7);
            add_term(alt, -ff(5) * R(k * dk, 48), e - 9);
            c *= Rational(-1);
            alt *= Rational(-1);
            break;
        }
        default:
            throw InvalidArgument("codimension must be 0, 1, 2 or 3");
    }
    const Rational inv = 1 / factorial(q);
    return QuasiPolynomial::from_split(c * inv, alt * inv);
}

}  // namespace qq
