#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qqueens/audit.hpp"
#include "qqueens/formulas.hpp"

using namespace qq;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

template <class F>
void each_piece(F f) {
    for (int h = 0; h <= 2; ++h)
        for (int k = 0; k <= 2; ++k)
            if (h + k >= 1) f(h, k);
}

}  // namespace

TEST_SUITE("audit") {
    TEST_CASE("catalog has 17 types and unique case names") {
        const auto types = catalog_types();
        CHECK(types.size() == 17);
        std::set<std::string> names;
        for (const auto& c : case_catalog()) {
            CHECK(names.insert(c.name()).second);
            CHECK(c.codim >= 1);
            CHECK(c.kappa >= 2);
        }
        CHECK(names.count("U3b^2.DD") == 1);
        CHECK(names.count("U4c^3.DDD") == 1);
        CHECK_THROWS_AS(find_case("U9^9"), InvalidArgument);
    }

    TEST_CASE("Moebius values") {
        CHECK(find_case("U2^1").moebius(2, 2) == -1);
        CHECK(find_case("U2^2").moebius(2, 1) == 2);
        CHECK(find_case("U3a^2").moebius(1, 1) == 2);
        CHECK(find_case("U4a^3").moebius(1, 0) == -6);
        CHECK(find_case("U4b^3.DD").moebius(0, 2) == -2);
        CHECK(find_case("U4*^3").moebius(2, 2) == -3);
        CHECK(find_case("U3b^3").moebius(2, 2) == -6);
        each_piece([](int h, int k) { CHECK((find_case("U3^4").moebius(h, k) == 0) == (h + k == 1)); });
    }

    TEST_CASE("named closed forms") {
        const auto& u22 = find_case("U2^2");
        REQUIRE(u22.family(2, 2).size() == 1);
        CHECK(std::holds_alternative<Equal>(u22.family(2, 2)[0].constraints()[0]));
        CHECK(u22.closed_form(2, 2) == QuasiPolynomial(Polynomial::monomial(1, 2)));
        CHECK(find_case("U4a^3").closed_form(1, 0) == QuasiPolynomial(Polynomial::monomial(1, 5)));
    }

    TEST_CASE("closed-form degree is at most 2*kappa - codim") {
        for (const auto& c : case_catalog())
            each_piece([&](int h, int k) {
                if (c.applies(h, k)) CHECK(c.closed_form(h, k).degree() <= 2 * c.kappa - c.codim);
            });
    }

    TEST_CASE("case audits against nested-loop enumeration") {
        // U3b^2.DD at n=3: 9^3 tuples, checked one by one
        const auto& dd = find_case("U3b^2.DD");
        long brute = 0;
        for (const auto& p : dd.family(0, 2)) brute += oracle::count_pattern(p, 3);
        CHECK(brute == 37);
        const auto a = audit_case(dd, 0, 2, 3);
        CHECK(a.brute == 37);
        CHECK(a.closed == 37);
        CHECK(a.match);

        const auto& ddd = find_case("U4c^3.DDD");
        long b4 = 0;
        for (const auto& p : ddd.family(2, 2)) b4 += oracle::count_pattern(p, 2);
        CHECK(b4 == 24);
        CHECK(audit_case(ddd, 2, 2, 2).closed == 24);

        const auto u22 = audit_case(find_case("U2^2"), 1, 1, 5);
        CHECK(u22.brute == 25);
        CHECK(u22.match);
    }

    TEST_CASE("property: every case family agrees with nested loops on small boards") {
        for (const auto& c : case_catalog())
            each_piece([&](int h, int k) {
                if (!c.applies(h, k) || c.kappa > 4) return;
                const int n_hi = c.kappa == 4 ? 2 : 3;
                for (int n = 1; n <= n_hi; ++n) {
                    long brute = 0;
                    for (const auto& p : c.family(h, k)) brute += oracle::count_pattern(p, n);
                    CHECK_MESSAGE(audit_case(c, h, k, n).brute == brute, c.name());
                }
            });
    }

    TEST_CASE("every case matches its closed form for n up to 10") {
        for (const auto& a : audit_all(10, 2)) CHECK_MESSAGE(a.match, a.name, " h=", a.h, " k=", a.k, " n=", a.n);
    }

    TEST_CASE("inapplicable cases are rejected") {
        CHECK_THROWS_AS(audit_case(find_case("U3b^2.DD"), 2, 1, 3), InvalidArgument);
        CHECK_THROWS_AS(audit_case(find_case("U4b^3.VH"), 1, 2, 3), InvalidArgument);
        CHECK_THROWS_AS(audit_case(find_case("U2^1"), 1, 1, 0), InvalidArgument);
    }

    TEST_CASE("triangle lattice points") {
        CHECK(triangle_points(0) == 0);
        CHECK(triangle_points(2) == 2);
        CHECK(triangle_points(3) == 4);
        for (long n = 2; n <= 30; ++n) CHECK(2 * (triangle_points(n) + triangle_points(n - 2)) == n * n + n % 2);
        // direct count of lattice points 1 <= i <= j with i + j <= n + 1
        for (long n = 1; n <= 20; ++n) {
            long cnt = 0;
            for (long i = 1; i <= n + 1; ++i)
                for (long j = i; i + j <= n + 1; ++j) ++cnt;
            CHECK(triangle_points(n) == cnt);
        }
        CHECK_THROWS_AS(triangle_points(-1), InvalidArgument);
    }

    TEST_CASE("assembly equals q! times the oracle") {
        each_piece([](int h, int k) {
            const auto m = partial_queen(h, k);
            for (int q = 1; q <= 3; ++q)
                for (int n = 1; n <= 6; ++n)
                    CHECK(assemble_labelled_count(h, k, q, n) == count_labelled(m, q, n));
        });
        CHECK(assemble_labelled_count(2, 2, 2, 3) == 16);
        CHECK(assemble_labelled_count(1, 2, 1, 7) == 49);
        CHECK(assemble_labelled_count(0, 2, 3, 4) == BigInt(6) * count_unlabelled(partial_queen(0, 2), 3, 4));
        CHECK_THROWS_AS(assemble_labelled_count(2, 2, 4, 3), InvalidArgument);
    }

    TEST_CASE("closed-form assembly reproduces the two- and three-piece formulas") {
        each_piece([](int h, int k) {
            CHECK(assemble_closed(h, k, 2) * R(1, 2) == QuasiPolynomial(u2_closed(h, k)));
            CHECK(assemble_closed(h, k, 3) * R(1, 6) == u3_closed(h, k));
            CHECK(assemble_closed(h, k, 1) == QuasiPolynomial(Polynomial::monomial(1, 2)));
        });
    }

    TEST_CASE("gamma from the catalog") {
        CHECK(gamma_from_audit(1, 1, 3, 2).constant_part == R(5, 3));
        CHECK(gamma_from_audit(2, 2, 2, 1).constant_part == R(-5, 3));
        for (long q = 2; q <= 6; ++q) CHECK(gamma_from_audit(1, 2, q, 0).constant_part == 1 / factorial(q));
        each_piece([](int h, int k) {
            for (long q = 2; q <= 8; ++q) {
                CHECK(gamma_from_audit(h, k, q, 1).constant_part == gamma1(h, k, q));
                CHECK(gamma_from_audit(h, k, q, 2).constant_part == gamma2(h, k, q));
                CHECK(gamma_from_audit(h, k, q, 3).constant_part == gamma3(h, k, q));
                CHECK(gamma_from_audit(h, k, q, 3).alternating_part == 0);
            }
        });
        CHECK_THROWS_AS(gamma_from_audit(1, 1, 3, 4), InvalidArgument);
    }
}
