#pragma once

// Closed forms for partial queens Q^{hk}: the high-order coefficients
// gamma_i of u(q;n), the complete two- and three-piece counts, line counts,
// and the per-codimension contributions to q!*u(q;n).
//
// Where two printed routes exist for the same quantity (an equation and a
// table), both are here and tests compare them.

#include <string>

#include "qqueens/core.hpp"
#include "qqueens/numeric.hpp"
#include "qqueens/quasipoly.hpp"

namespace qq {

inline int delta(int a, int b) noexcept { return a == b ? 1 : 0; }

Rational factorial(long m);
/// (x)_j = x(x-1)...(x-j+1); zero for integers 0 <= x < j.
Rational falling(long x, int j);
/// (q - shift)_j as a polynomial in q.
Polynomial falling_poly(long shift, int j);

/// numerator(q) / (denominator_constant * (q - factorial_offset)!).
struct GammaExpr {
    int index = 0;
    Polynomial numerator;
    Rational denominator_constant = 1;
    int factorial_offset = 2;

    Rational evaluate(long q) const;
    /// numerator / denominator_constant, the form compared across routes.
    Polynomial normalized() const;
    bool equivalent(const GammaExpr& o) const {
        return factorial_offset == o.factorial_offset && normalized() == o.normalized();
    }
    std::string str() const;
};

// gamma_i(h,k,q), the coefficient of n^{2q-i} in u(q;n), for q >= 2.
Rational gamma1(int h, int k, long q);
Rational gamma2(int h, int k, long q);
/// Agrees with the coefficient table.  The bracket coefficients of (q-2)_2 and
/// (q-2) differ from the printed equation; see gamma3_as_printed.
Rational gamma3(int h, int k, long q);
Rational gamma3_as_printed(int h, int k, long q);

/// Symbolic form of gamma1..gamma3 built from the equations.
GammaExpr gamma_expr(int i, int h, int k);
GammaExpr gamma3_expr_as_printed(int h, int k);
/// Transcribed coefficient table, i in {2,3}; (h,k) = (0,0) has no entry.
GammaExpr table1_entry(int i, int h, int k);

/// Coefficient of q^{2i} in q! * gamma_i: (-(3h+2k)/6)^i / i!.
Rational gamma_leading_term(int h, int k, int i);

/// Coefficient of (-1)^n in gamma5, as stated in the coefficient theorem:
/// -h*delta_{k2} / (8 (q-3)!), q >= 3.
Rational gamma5_periodic(int h, int k, long q);
/// Same quantity read off the codimension-3 lemma and the three-piece table:
/// +h*delta_{k2} / (8 (q-3)!).  The two differ in sign.
Rational gamma5_periodic_from_lemma(int h, int k, long q);
/// Coefficient of (-1)^n in gamma6: -delta_{k2} / (8 (q-3)!), q >= 4.
Rational gamma6_periodic(int h, int k, long q);

// The closed forms below accept (h,k) = (0,0), the moveless piece, for
// which u(q;n) = C(n^2, q).  The transcribed tables have no (0,0) entry
// except the three-piece table.

/// u(2;n) = n^4/2 - (3h+2k)/6 n^3 + (h+k-1)/2 n^2 - k/6 n.
Polynomial u2_closed(int h, int k);
/// General three-piece formula; period 2 exactly when k = 2.
QuasiPolynomial u3_closed(int h, int k);
/// The three-piece table, transcribed row by row.
QuasiPolynomial table2_row(int h, int k);

/// alpha^{d/c}(n) and beta^{d/c}(n) for the orthogonal and diagonal slopes.
Polynomial alpha_closed(Move slope);
QuasiPolynomial beta_closed(Move slope);

/// m(m^2+3m-1)/3.
BigInt types3_conjecture(long m);
/// Combinatorial type counts for three partial queens, transcribed.
int table3_types(int h, int k);

/// Contribution of all subspaces of codimension nu in {0,1,2,3} to u(q;n),
/// i.e. already divided by q!, as printed.  q >= 2.
QuasiPolynomial codim_contribution(int h, int k, long q, int nu);

}  // namespace qq
