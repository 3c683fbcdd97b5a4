#include "qqueens/quasipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qq {

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw InvalidArgument("not an exact fraction: '" + s + "'");
    r.canonicalize();
    return r;
}

BigInt parse_bigint(const std::string& s) {
    BigInt z;
    if (s.empty() || z.set_str(s, 10) != 0)
        throw InvalidArgument("not a decimal integer: '" + s + "'");
    return z;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
    if (power < 0) throw InvalidArgument("negative power in monomial");
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::substitute_affine(const Rational& a, const Rational& b) const {
    const Polynomial inner({b, a});
    Polynomial r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
    return r;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------- QuasiPolynomial

QuasiPolynomial::QuasiPolynomial(Polynomial p) : QuasiPolynomial(std::vector<Polynomial>{std::move(p)}) {}

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> constituents, std::optional<int> degree_bound)
    : cons_(std::move(constituents)) {
    if (cons_.empty()) throw InvalidArgument("a quasipolynomial needs at least one constituent");
    int d = -1;
    for (const auto& p : cons_) d = std::max(d, p.degree());
    if (degree_bound) {
        if (*degree_bound < d)
            throw InvalidArgument("constituent exceeds the claimed degree bound");
        d = *degree_bound;
    }
    degree_ = d;
}

QuasiPolynomial QuasiPolynomial::from_split(const Polynomial& constant, const Polynomial& alternating) {
    if (alternating.is_zero()) return QuasiPolynomial(constant);
    // even n: c + a, odd n: c - a
    return QuasiPolynomial({constant + alternating, constant - alternating});
}

int QuasiPolynomial::residue(long n, int period) noexcept {
    const long r = n % period;
    return static_cast<int>(r < 0 ? r + period : r);
}

Rational QuasiPolynomial::operator()(long n) const {
    return cons_[static_cast<std::size_t>(residue(n, period()))](Rational(n));
}

QuasiPolynomial QuasiPolynomial::with_period(int p) const {
    if (p < 1 || p % period() != 0)
        throw InvalidArgument("new period must be a multiple of the current one");
    std::vector<Polynomial> v;
    v.reserve(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) v.push_back(cons_[static_cast<std::size_t>(r % period())]);
    return QuasiPolynomial(std::move(v), degree_);
}

QuasiPolynomial QuasiPolynomial::reduced() const {
    const int p = period();
    for (int d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (int r = 0; r < p && ok; ++r) ok = cons_[static_cast<std::size_t>(r)] == cons_[static_cast<std::size_t>(r % d)];
        if (ok) {
            std::vector<Polynomial> v(cons_.begin(), cons_.begin() + d);
            return QuasiPolynomial(std::move(v), degree_);
        }
    }
    return *this;
}

CoeffDecomposition QuasiPolynomial::coefficient(int i) const {
    if (period() > 2)
        throw InvalidArgument("(-1)^n decomposition needs period 1 or 2; use coefficient_by_residue");
    CoeffDecomposition out;
    out.power = i;
    if (period() == 1) {
        out.constant_part = cons_[0].coeff(i);
        out.alternating_part = 0;
    } else {
        const Rational even = cons_[0].coeff(i);
        const Rational odd = cons_[1].coeff(i);
        out.constant_part = (even + odd) / 2;
        out.alternating_part = (even - odd) / 2;
    }
    return out;
}

std::vector<Rational> QuasiPolynomial::coefficient_by_residue(int i) const {
    std::vector<Rational> v;
    for (const auto& p : cons_) v.push_back(p.coeff(i));
    return v;
}

namespace {

int lcm_period(int a, int b) { return std::lcm(a, b); }

template <typename Op>
QuasiPolynomial combine(const QuasiPolynomial& a, const QuasiPolynomial& b, Op op, int degree) {
    const int p = lcm_period(a.period(), b.period());
    std::vector<Polynomial> v;
    for (int r = 0; r < p; ++r) v.push_back(op(a.constituent(r % a.period()), b.constituent(r % b.period())));
    int d = degree;
    for (const auto& c : v) d = std::max(d, c.degree());
    return QuasiPolynomial(std::move(v), d);
}

}  // namespace

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
    *this = combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x + y; },
                    std::max(degree_, o.degree_));
    return *this;
}

QuasiPolynomial& QuasiPolynomial::operator-=(const QuasiPolynomial& o) {
    *this = combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x - y; },
                    std::max(degree_, o.degree_));
    return *this;
}

QuasiPolynomial& QuasiPolynomial::operator*=(const QuasiPolynomial& o) {
    const int d = (degree_ < 0 || o.degree_ < 0) ? -1 : degree_ + o.degree_;
    *this = combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x * y; }, d);
    return *this;
}

QuasiPolynomial& QuasiPolynomial::operator*=(const Rational& s) {
    for (auto& p : cons_) p *= s;
    return *this;
}

bool QuasiPolynomial::same_function(const QuasiPolynomial& o) const {
    const int p = lcm_period(period(), o.period());
    for (int r = 0; r < p; ++r)
        if (constituent(r % period()) != o.constituent(r % o.period())) return false;
    return true;
}

std::string QuasiPolynomial::str(const std::string& var) const {
    const QuasiPolynomial red = reduced();
    if (red.period() == 1) return red.cons_[0].str(var);
    if (red.period() == 2) {
        Polynomial c, a;
        for (int i = 0; i <= red.degree(); ++i) {
            const auto dec = red.coefficient(i);
            c += Polynomial::monomial(dec.constant_part, i);
            a += Polynomial::monomial(dec.alternating_part, i);
        }
        return c.str(var) + " + (-1)^" + var + "*(" + a.str(var) + ")";
    }
    std::ostringstream os;
    for (int r = 0; r < red.period(); ++r) {
        if (r) os << "; ";
        os << var << "=" << r << " mod " << red.period() << ": " << red.cons_[static_cast<std::size_t>(r)].str(var);
    }
    return os.str();
}

Rational eval_at_minus_one(const QuasiPolynomial& qp) { return qp(-1); }

// ------------------------------------------------------------- interpolation

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            const Rational diff = points[i].first - points[j].first;
            if (diff == 0) throw InvalidArgument("interpolation nodes must be distinct");
            basis *= Polynomial({-points[j].first, Rational(1)});
            denom *= diff;
        }
        result += basis * Rational(points[i].second / denom);
    }
    return result;
}

QuasiPolynomial fit(const std::vector<Sample>& samples, int degree, int period) {
    if (degree < 0 || period < 1) throw InvalidArgument("fit needs degree >= 0 and period >= 1");

    std::map<long, BigInt> by_n;
    for (const auto& s : samples) {
        auto [it, inserted] = by_n.emplace(s.n, s.value);
        if (!inserted && it->second != s.value)
            throw FitError(FitError::Kind::Inconsistent,
                           "conflicting samples at n=" + std::to_string(s.n), s.n);
    }

    const auto need = static_cast<std::size_t>(degree) + 2;
    std::vector<Polynomial> cons;
    for (int r = 0; r < period; ++r) {
        std::vector<long> ns;
        for (const auto& [n, v] : by_n)
            if (QuasiPolynomial::residue(n, period) == r) ns.push_back(n);
        if (ns.size() < need)
            throw FitError(FitError::Kind::InsufficientSamples,
                           "residue " + std::to_string(r) + " mod " + std::to_string(period) + " has " +
                               std::to_string(ns.size()) + " samples, need " + std::to_string(need));
        // interpolate on positive n first; n <= 0 is validation unless needed
        std::stable_partition(ns.begin(), ns.end(), [](long n) { return n > 0; });
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(degree); ++i)
            pts.emplace_back(Rational(ns[i]), Rational(by_n.at(ns[i])));
        cons.push_back(interpolate(pts));
    }

    QuasiPolynomial qp(std::move(cons), degree);
    for (const auto& [n, v] : by_n)
        if (qp(n) != Rational(v))
            throw FitError(FitError::Kind::Inconsistent,
                           "degree " + std::to_string(degree) + ", period " + std::to_string(period) +
                               " does not reproduce the sample at n=" + std::to_string(n),
                           n);
    return qp;
}

PeriodFit detect_period(const std::vector<Sample>& samples, int degree, int max_period) {
    if (max_period < 1) throw InvalidArgument("max_period must be >= 1");
    // checks the precondition up front so a short sample list fails loudly
    {
        std::map<long, int> seen;
        for (const auto& s : samples) seen[s.n] = 0;
        std::vector<int> per_class(static_cast<std::size_t>(max_period), 0);
        for (const auto& [n, unused] : seen) ++per_class[static_cast<std::size_t>(QuasiPolynomial::residue(n, max_period))];
        for (int c : per_class)
            if (c < degree + 2)
                throw FitError(FitError::Kind::InsufficientSamples,
                               "not enough samples to test period " + std::to_string(max_period));
    }
    for (int p = 1; p <= max_period; ++p) {
        try {
            return PeriodFit{p, fit(samples, degree, p)};
        } catch (const FitError& e) {
            if (e.kind() != FitError::Kind::Inconsistent) throw;
        }
    }
    throw FitError(FitError::Kind::NoPeriod,
                   "no period <= " + std::to_string(max_period) + " fits with degree " + std::to_string(degree));
}

QuasiPolynomial fit_shared(const std::vector<Sample>& samples, int degree, int period, int shared_from) {
    if (degree < 0 || period < 1 || shared_from < 0 || shared_from > degree + 1)
        throw InvalidArgument("fit_shared needs degree >= 0, period >= 1, 0 <= shared_from <= degree+1");
    std::map<long, BigInt> by_n;
    for (const auto& s : samples) {
        auto [it, inserted] = by_n.emplace(s.n, s.value);
        if (!inserted && it->second != s.value)
            throw FitError(FitError::Kind::Inconsistent, "conflicting samples at n=" + std::to_string(s.n), s.n);
    }
    // unknowns: shared coefficients, then per residue the low coefficients
    const int shared = degree + 1 - shared_from;
    const int unknowns = shared + period * shared_from;
    auto column = [&](int power, int residue) {
        return power >= shared_from ? power - shared_from : shared + residue * shared_from + power;
    };
    std::vector<std::vector<Rational>> rows;
    std::vector<long> row_n;
    for (const auto& [n, v] : by_n) {
        std::vector<Rational> row(static_cast<std::size_t>(unknowns) + 1, 0);
        const int r = QuasiPolynomial::residue(n, period);
        Rational pw = 1;
        for (int d = 0; d <= degree; ++d, pw *= n) row[static_cast<std::size_t>(column(d, r))] = pw;
        row.back() = Rational(v);
        rows.push_back(std::move(row));
        row_n.push_back(n);
    }
    // Gauss-Jordan elimination
    std::size_t rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < unknowns && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        std::swap(row_n[p], row_n[rank]);
        const Rational inv = 1 / rows[rank][static_cast<std::size_t>(c)];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][static_cast<std::size_t>(c)] == 0) continue;
            const Rational f = rows[i][static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i].back() != 0)
            throw FitError(FitError::Kind::Inconsistent,
                           "degree " + std::to_string(degree) + ", period " + std::to_string(period) +
                               " with shared coefficients from n^" + std::to_string(shared_from) +
                               " is inconsistent with the samples");
    if (static_cast<int>(rank) < unknowns || rows.size() <= rank)
        throw FitError(FitError::Kind::InsufficientSamples,
                       std::to_string(rows.size()) + " samples for " + std::to_string(unknowns) +
                           " unknowns; need at least one more than the unknowns");
    std::vector<Rational> sol(static_cast<std::size_t>(unknowns));
    for (std::size_t i = 0; i < rank; ++i) sol[static_cast<std::size_t>(pivot_col[i])] = rows[i].back();

    std::vector<Polynomial> cons;
    for (int r = 0; r < period; ++r) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (int d = 0; d <= degree; ++d) c[static_cast<std::size_t>(d)] = sol[static_cast<std::size_t>(column(d, r))];
        cons.emplace_back(std::move(c));
    }
    return QuasiPolynomial(std::move(cons), degree);
}

// ---------------------------------------------------------------------- JSON

nlohmann::json to_json(const QuasiPolynomial& qp) {
    nlohmann::json cons = nlohmann::json::array();
    for (const auto& p : qp.constituents()) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i <= std::max(qp.degree(), 0); ++i) row.push_back(to_string(p.coeff(i)));
        cons.push_back(row);
    }
    return {{"period", qp.period()}, {"degree", qp.degree()}, {"constituents", cons}};
}

QuasiPolynomial quasipoly_from_json(const nlohmann::json& j) {
    try {
        const int period = j.at("period").get<int>();
        const int degree = j.at("degree").get<int>();
        const auto& cons = j.at("constituents");
        if (!cons.is_array() || static_cast<int>(cons.size()) != period)
            throw InvalidArgument("constituent count does not match period");
        std::vector<Polynomial> v;
        for (const auto& row : cons) {
            std::vector<Rational> c;
            for (const auto& e : row) c.push_back(parse_rational(e.get<std::string>()));
            v.emplace_back(std::move(c));
        }
        return QuasiPolynomial(std::move(v), degree);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed quasipolynomial JSON: ") + e.what());
    }
}

}  // namespace qq
