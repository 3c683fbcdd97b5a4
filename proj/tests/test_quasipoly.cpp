#include <doctest.h>

#include <random>

#include "qqueens/quasipoly.hpp"

using namespace qq;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

// Integer-valued constituents: integer coefficients only.
Polynomial random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> u(-9, 9);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(u(rng));
    if (c.back() == 0) c.back() = 1;
    return Polynomial(c);
}

std::vector<Sample> sample(const QuasiPolynomial& qp, long lo, long hi) {
    std::vector<Sample> s;
    for (long n = lo; n <= hi; ++n) {
        const Rational v = qp(n);
        REQUIRE(v.get_den() == 1);
        s.push_back({n, v.get_num()});
    }
    return s;
}

}  // namespace

TEST_SUITE("quasipoly") {
    TEST_CASE("polynomial basics") {
        const Polynomial p{1, 2, 3};  // 3n^2 + 2n + 1
        CHECK(p.degree() == 2);
        CHECK(p(R(2)) == 17);
        CHECK(p.coeff(5) == 0);
        CHECK(Polynomial{0, 0, 0}.is_zero());
        CHECK(Polynomial{0, 0, 0}.degree() == -1);
        CHECK((p - p).is_zero());
        CHECK(p * Polynomial{-1, 1} == Polynomial{-1, -1, -1, 3});
        CHECK(p.pow(2)(R(1)) == 36);
        CHECK(p.substitute_affine(2, 1)(R(1)) == p(R(3)));
        CHECK(p.str() == "3*n^2 + 2*n + 1");
        CHECK(Polynomial{R(-1, 2), 0, 1}.str("q") == "q^2 - 1/2");
        CHECK(Polynomial{}.str() == "0");
    }

    TEST_CASE("interpolation through points") {
        const Polynomial p{R(1, 3), R(-5, 2), 0, R(7, 4)};
        std::vector<std::pair<Rational, Rational>> pts;
        for (int x = -1; x <= 2; ++x) pts.emplace_back(R(x), p(R(x)));
        CHECK(interpolate(pts) == p);
    }

    TEST_CASE("residues are taken in 0..p-1") {
        CHECK(QuasiPolynomial::residue(-1, 2) == 1);
        CHECK(QuasiPolynomial::residue(-4, 3) == 2);
        CHECK(QuasiPolynomial::residue(7, 1) == 0);
    }

    TEST_CASE("split form and coefficient decomposition") {
        // n/2 + (-1)^n/2 ... evaluated at both parities
        const auto qp = QuasiPolynomial::from_split(Polynomial{R(1, 8), 0, 1}, Polynomial{R(-1, 8), R(1, 4)});
        CHECK(qp.period() == 2);
        CHECK(qp(2) == R(1, 8) + 4 - R(1, 8) + R(1, 2));
        CHECK(qp(3) == R(1, 8) + 9 + R(1, 8) - R(3, 4));
        const auto c1 = qp.coefficient(1);
        CHECK(c1.constant_part == 0);
        CHECK(c1.alternating_part == R(1, 4));
        CHECK(qp.coefficient(0).alternating_part == R(-1, 8));
        CHECK(QuasiPolynomial::from_split(Polynomial{1}, Polynomial{}).period() == 1);
    }

    TEST_CASE("evaluation at -1 uses the odd constituent") {
        const auto qp = QuasiPolynomial::from_split(Polynomial{0, 1}, Polynomial{1});
        CHECK(eval_at_minus_one(qp) == -2);
    }

    TEST_CASE("period arithmetic") {
        const QuasiPolynomial a({Polynomial{1}, Polynomial{2}});
        const QuasiPolynomial b({Polynomial{0}, Polynomial{0}, Polynomial{3}});
        const auto s = a + b;
        CHECK(s.period() == 6);
        for (long n = -6; n <= 12; ++n) CHECK(s(n) == a(n) + b(n));
        CHECK(a.with_period(4).reduced().period() == 2);
        CHECK(QuasiPolynomial({Polynomial{5}, Polynomial{5}}).reduced().period() == 1);
        CHECK(a.with_period(4) == a);
        CHECK_THROWS(a.with_period(3));
        CHECK_THROWS(b.coefficient(0));
        CHECK(b.coefficient_by_residue(0) == std::vector<Rational>{0, 0, 3});
    }

    TEST_CASE("property: fit recovers random quasipolynomials") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> deg(0, 6), per(1, 4);
        for (int t = 0; t < 60; ++t) {
            const int d = deg(rng), p = per(rng);
            std::vector<Polynomial> cons;
            for (int r = 0; r < p; ++r) cons.push_back(random_poly(rng, d));
            const QuasiPolynomial qp(cons);
            const auto samples = sample(qp, 1, p * (d + 2));
            const auto got = fit(samples, d, p);
            CHECK(got == qp);
            const auto det = detect_period(samples, d, p);
            CHECK(det.qp == qp);
            CHECK(det.period <= p);
            CHECK(det.qp.reduced().period() == det.period);
        }
    }

    TEST_CASE("detect_period returns the smallest period") {
        const auto qp = QuasiPolynomial::from_split(Polynomial{0, 0, 1}, Polynomial{1});
        const auto s = sample(qp, 1, 3 * 4);
        CHECK(detect_period(s, 2, 3).period == 2);
        const auto poly = QuasiPolynomial(Polynomial{1, 1, 1});
        CHECK(detect_period(sample(poly, 1, 12), 2, 3).period == 1);
    }

    TEST_CASE("fit errors") {
        const auto qp = QuasiPolynomial(Polynomial{0, 0, 0, 1});
        auto s = sample(qp, 1, 6);
        // too few samples for degree 3 with validation
        CHECK_THROWS_AS(fit(sample(qp, 1, 4), 3, 1), FitError);
        try {
            (void)fit(sample(qp, 1, 4), 3, 1);
        } catch (const FitError& e) {
            CHECK(e.kind() == FitError::Kind::InsufficientSamples);
        }
        s[5].value += 1;  // n = 6 now off the cubic
        try {
            (void)fit(s, 3, 1);
            FAIL("expected an inconsistent fit");
        } catch (const FitError& e) {
            CHECK(e.kind() == FitError::Kind::Inconsistent);
            REQUIRE(e.failing_n().has_value());
            CHECK(*e.failing_n() == 6);
        }
        // a degree-2 fit of a cubic fails for every period
        try {
            (void)detect_period(sample(qp, 1, 16), 2, 2);
            FAIL("expected no period");
        } catch (const FitError& e) {
            CHECK(e.kind() == FitError::Kind::NoPeriod);
        }
    }

    TEST_CASE("json round trip") {
        const auto qp = QuasiPolynomial::from_split(Polynomial{R(1, 8), R(-43, 24), 0, 1}, Polynomial{R(-1, 8)});
        const auto j = to_json(qp);
        CHECK(quasipoly_from_json(j) == qp);
        CHECK(j.at("period") == 2);
        CHECK_THROWS(quasipoly_from_json(nlohmann::json::parse(R"({"period":2})")));
    }

    TEST_CASE("str shows the alternating part") {
        const auto qp = QuasiPolynomial::from_split(Polynomial{0, 0, 1}, Polynomial{R(-1, 8)});
        CHECK(qp.str() == "n^2 + (-1)^n*(-1/8)");
        CHECK(QuasiPolynomial(Polynomial{0, 1}).str() == "n");
    }
}

TEST_SUITE("quasipoly") {
    TEST_CASE("property: shared-top fit recovers quasipolynomials with periodic low terms") {
        std::mt19937 rng(32);
        std::uniform_int_distribution<int> deg(2, 7), per(2, 6);
        for (int t = 0; t < 30; ++t) {
            const int d = deg(rng), p = per(rng);
            std::uniform_int_distribution<int> cut(1, d);
            const int from = cut(rng);
            const Polynomial top = random_poly(rng, d);
            std::vector<Polynomial> cons;
            for (int r = 0; r < p; ++r) {
                Polynomial c = top;
                const Polynomial low = random_poly(rng, from - 1);
                for (int i = 0; i < from; ++i) c += Polynomial::monomial(low.coeff(i) - top.coeff(i), i);
                cons.push_back(c);
            }
            const QuasiPolynomial qp(cons);
            const int unknowns = d + 1 - from + p * from;
            const auto s = sample(qp, 1, unknowns + p + 2);
            CHECK(fit_shared(s, d, p, from) == qp);
        }
    }

    TEST_CASE("shared-top fit errors") {
        const auto qp = QuasiPolynomial::from_split(Polynomial{0, 0, 1}, Polynomial{0, 1});
        const auto s = sample(qp, 1, 12);
        CHECK(fit_shared(s, 2, 2, 2) == qp);
        CHECK_THROWS_AS(fit_shared(s, 2, 2, 1), FitError);  // n^1 is periodic
        CHECK_THROWS_AS(fit_shared(sample(qp, 1, 4), 2, 2, 2), FitError);
        CHECK_THROWS_AS(fit_shared(s, 2, 2, 5), InvalidArgument);
    }
}
