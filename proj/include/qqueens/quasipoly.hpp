#pragma once

// Polynomials and quasipolynomials in one variable n over exact rationals,
// interpolation of integer sequences, and period detection.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qqueens/error.hpp"
#include "qqueens/numeric.hpp"

namespace qq {

/// Coefficients indexed by power; never has a trailing zero, so the zero
/// polynomial is the empty list and has degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int power);
    /// The identity x.
    static Polynomial variable() { return monomial(1, 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * Rational(-1); }

    /// p(x) -> p(x + shift) style substitution: returns p(a*x + b).
    Polynomial substitute_affine(const Rational& a, const Rational& b) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial&) const = default;

    /// Human-readable, highest power first, e.g. "1/2*n^4 - 5/3*n^3".
    std::string str(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// n^i coefficient of a period-1 or period-2 quasipolynomial written as
/// constant + alternating*(-1)^n.
struct CoeffDecomposition {
    int power = 0;
    Rational constant_part;
    Rational alternating_part;
    bool operator==(const CoeffDecomposition&) const = default;
};

/// constituents[r] applies to n = r (mod period).  The degree bound is the
/// claimed maximum degree; the period is not necessarily minimal.
class QuasiPolynomial {
public:
    QuasiPolynomial() : QuasiPolynomial(Polynomial{}) {}
    explicit QuasiPolynomial(Polynomial p);
    QuasiPolynomial(std::vector<Polynomial> constituents, std::optional<int> degree_bound = {});

    /// constant + (-1)^n * alternating.  Period 1 when alternating is zero.
    static QuasiPolynomial from_split(const Polynomial& constant, const Polynomial& alternating);

    int period() const noexcept { return static_cast<int>(cons_.size()); }
    int degree() const noexcept { return degree_; }
    const Polynomial& constituent(int r) const { return cons_.at(static_cast<std::size_t>(r)); }
    const std::vector<Polynomial>& constituents() const noexcept { return cons_; }

    /// Residue is taken in {0,...,p-1}, so -1 selects constituent p-1.
    static int residue(long n, int period) noexcept;
    Rational operator()(long n) const;
    Rational evaluate(long n) const { return (*this)(n); }

    /// Rewrites with period p, a multiple of the current period.
    QuasiPolynomial with_period(int p) const;
    /// Smallest period that describes the same function.
    QuasiPolynomial reduced() const;

    /// Decomposition of the n^i coefficient.  Throws for period > 2.
    CoeffDecomposition coefficient(int i) const;
    /// n^i coefficient of each constituent, in residue order.
    std::vector<Rational> coefficient_by_residue(int i) const;

    QuasiPolynomial& operator+=(const QuasiPolynomial& o);
    QuasiPolynomial& operator-=(const QuasiPolynomial& o);
    QuasiPolynomial& operator*=(const QuasiPolynomial& o);
    QuasiPolynomial& operator*=(const Rational& s);
    friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial& b) { return a += b; }
    friend QuasiPolynomial operator-(QuasiPolynomial a, const QuasiPolynomial& b) { return a -= b; }
    friend QuasiPolynomial operator*(QuasiPolynomial a, const QuasiPolynomial& b) { return a *= b; }
    friend QuasiPolynomial operator*(QuasiPolynomial a, const Rational& s) { return a *= s; }
    friend QuasiPolynomial operator*(const Rational& s, QuasiPolynomial a) { return a *= s; }

    /// Same function (periods may differ).
    bool same_function(const QuasiPolynomial& o) const;
    bool operator==(const QuasiPolynomial& o) const { return same_function(o); }

    /// "constant_poly + (-1)^n*(alternating_poly)" for period <= 2, otherwise
    /// one line per residue.
    std::string str(const std::string& var = "n") const;

private:
    std::vector<Polynomial> cons_;
    int degree_ = -1;
};

Rational eval_at_minus_one(const QuasiPolynomial& qp);

/// Lagrange interpolation through (x_i, y_i); x_i distinct.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

struct Sample {
    long n = 0;
    BigInt value;
};

class FitError : public Error {
public:
    enum class Kind { Inconsistent, InsufficientSamples, NoPeriod };
    FitError(Kind kind, std::string what, std::optional<long> failing_n = {})
        : Error(std::move(what)), kind_(kind), failing_n_(failing_n) {}
    Kind kind() const noexcept { return kind_; }
    std::optional<long> failing_n() const noexcept { return failing_n_; }

private:
    Kind kind_;
    std::optional<long> failing_n_;
};

/// Exact quasipolynomial of degree <= d and period p through every sample.
/// Each residue class needs d+2 samples: d+1 are interpolated (smallest
/// positive n first; n <= 0 only as a last resort) and the rest validate.
QuasiPolynomial fit(const std::vector<Sample>& samples, int degree, int period);

struct PeriodFit {
    int period = 1;
    QuasiPolynomial qp;
};

/// Smallest p in [1, max_period] for which fit succeeds.  The sample set must
/// satisfy fit's precondition for max_period.
PeriodFit detect_period(const std::vector<Sample>& samples, int degree, int max_period);

/// Like fit, but the coefficients of n^shared_from .. n^degree are the same
/// in every constituent, so far fewer samples are needed when only the low
/// coefficients are periodic.  Solves one exact linear system; throws
/// FitError if it is inconsistent with any sample or underdetermined.
QuasiPolynomial fit_shared(const std::vector<Sample>& samples, int degree, int period, int shared_from);

// {"period":p,"degree":d,"constituents":[["num/den",...],...]}, constant term first.
nlohmann::json to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasipoly_from_json(const nlohmann::json& j);

}  // namespace qq
