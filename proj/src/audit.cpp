#include "qqueens/audit.hpp"

#include <atomic>
#include <map>
#include <thread>

#include "qqueens/formulas.hpp"

namespace qq {

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

const Move H = Move::make(1, 0);
const Move V = Move::make(0, 1);
const Move D1 = Move::make(1, 1);
const Move D2 = Move::make(1, -1);

std::vector<Move> orth(int h) { return h == 2 ? std::vector<Move>{H, V} : h == 1 ? std::vector<Move>{H} : std::vector<Move>{}; }
std::vector<Move> diag(int k) { return k == 2 ? std::vector<Move>{D1, D2} : k == 1 ? std::vector<Move>{D1} : std::vector<Move>{}; }
std::vector<Move> all(int h, int k) {
    auto m = orth(h);
    for (Move d : diag(k)) m.push_back(d);
    return m;
}
Move other(Move s) {
    if (s == H) return V;
    if (s == V) return H;
    return s == D1 ? D2 : D1;
}

Collinear C(int i, int j, Move s) { return Collinear{i, j, s}; }

using Family = std::vector<ConstraintPattern>;

// Closed-form building blocks in n.
QuasiPolynomial qp(std::initializer_list<Rational> low_to_high) { return QuasiPolynomial(Polynomial(low_to_high)); }
QuasiPolynomial nto(int e) { return QuasiPolynomial(Polynomial::monomial(1, e)); }
QuasiPolynomial alpha_d() { return qp({0, R(1, 3), 0, R(2, 3)}); }
// Coincidence count of the two diagonals through a square, summed.
QuasiPolynomial dd() {
    return QuasiPolynomial::from_split(Polynomial({R(1, 8), 0, R(1, 3), 0, R(5, 12)}), Polynomial({R(-1, 8)}));
}
QuasiPolynomial sum_alpha(int h, int k) { return R(h) * nto(3) + R(k) * alpha_d(); }
QuasiPolynomial sum_beta(int h, int k) { return R(h) * nto(4) + R(k) * qp({0, 0, R(1, 2), 0, R(1, 2)}); }
QuasiPolynomial dhd_path() { return qp({0, R(2, 15), 0, R(5, 12), 0, R(9, 20)}); }
QuasiPolynomial u3b2_total(int h, int k) {
    return R(delta(h, 2)) * nto(4) + R(h * k) * qp({0, 0, R(1, 3), 0, R(2, 3)}) + R(delta(k, 2)) * dd();
}

Family u3b2_family(int h, int k) {
    Family f;
    if (h == 2) f.emplace_back(3, std::vector<Constraint>{C(1, 2, H), C(2, 3, V)});
    for (Move d : diag(k))
        for (Move o : orth(h)) f.emplace_back(3, std::vector<Constraint>{C(1, 2, d), C(2, 3, o)});
    if (k == 2) f.emplace_back(3, std::vector<Constraint>{C(1, 2, D1), C(2, 3, D2)});
    return f;
}

auto always = [](int, int) { return true; };
auto mu_const(long v) {
    return [v](int, int) { return v; };
}
auto mult(int j, long div) {
    return [j, div](long q) -> Rational { return falling(q, j) / Rational(div); };
}
auto binom(int j) { return mult(j, static_cast<long>(factorial(j).get_num().get_si())); }

std::vector<SubspaceCase> build_catalog() {
    std::vector<SubspaceCase> cat;
    auto add = [&](SubspaceCase c) { cat.push_back(std::move(c)); };

    // ---- codimension 1
    add({"U2^1", "", 1, 2, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k)) f.emplace_back(2, std::vector<Constraint>{C(1, 2, s)});
             return f;
         },
         sum_alpha, mu_const(-1), binom(2), "one hyperplane per slope and pair"});

    // ---- codimension 2
    add({"U2^2", "", 2, 2, always,
         [](int, int) { return Family{ConstraintPattern(2, {Equal{1, 2}})}; },
         [](int, int) { return nto(2); },
         [](int h, int k) { return static_cast<long>(h + k - 1); }, binom(2),
         "coincident pair; the hyperplanes of all slopes meet here"});
    add({"U3a^2", "", 2, 3, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k)) f.emplace_back(3, std::vector<Constraint>{C(1, 2, s), C(2, 3, s)});
             return f;
         },
         sum_beta, mu_const(2), binom(3), "three pieces on one line"});
    add({"U3b^2", "VH", 2, 3, [](int h, int) { return h == 2; },
         [](int, int) { return Family{ConstraintPattern(3, {C(1, 2, H), C(2, 3, V)})}; },
         [](int, int) { return nto(4); }, mu_const(1), mult(3, 1),
         "middle piece on two lines; one pattern per unordered slope pair"});
    add({"U3b^2", "DV", 2, 3, [](int h, int k) { return h >= 1 && k >= 1; },
         [](int h, int k) {
             Family f;
             for (Move d : diag(k))
                 for (Move o : orth(h)) f.emplace_back(3, std::vector<Constraint>{C(1, 2, d), C(2, 3, o)});
             return f;
         },
         [](int h, int k) { return R(h * k) * qp({0, 0, R(1, 3), 0, R(2, 3)}); }, mu_const(1), mult(3, 1), ""});
    add({"U3b^2", "DD", 2, 3, [](int, int k) { return k == 2; },
         [](int, int) { return Family{ConstraintPattern(3, {C(1, 2, D1), C(2, 3, D2)})}; },
         [](int, int) { return dd(); }, mu_const(1), mult(3, 1),
         "the two diagonals through a square meet the board in a rotated triangle"});
    add({"U4*^2", "", 2, 4, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k))
                 for (Move t : all(h, k)) f.emplace_back(4, std::vector<Constraint>{C(1, 2, s), C(3, 4, t)});
             return f;
         },
         [](int h, int k) { return sum_alpha(h, k) * sum_alpha(h, k); }, mu_const(1), mult(4, 8),
         "two disjoint attacking pairs"});

    // ---- codimension 3
    add({"U3a^3", "T1", 3, 3, [](int h, int k) { return h == 2 && k >= 1; },
         [](int, int k) {
             Family f;
             for (Move d : diag(k)) {
                 f.emplace_back(3, std::vector<Constraint>{C(1, 2, d), C(1, 3, H), C(2, 3, V)});
                 f.emplace_back(3, std::vector<Constraint>{C(1, 2, d), C(1, 3, V), C(2, 3, H)});
             }
             return f;
         },
         [](int, int k) { return R(2 * k) * alpha_d(); }, mu_const(-1), mult(3, 2),
         "triangle with orthogonal legs and a diagonal side, both orientations"});
    add({"U3a^3", "T2", 3, 3, [](int h, int k) { return k == 2 && h >= 1; },
         [](int h, int) {
             Family f;
             for (Move o : orth(h)) {
                 f.emplace_back(3, std::vector<Constraint>{C(1, 2, o), C(1, 3, D1), C(2, 3, D2)});
                 f.emplace_back(3, std::vector<Constraint>{C(1, 2, o), C(1, 3, D2), C(2, 3, D1)});
             }
             return f;
         },
         [](int h, int) {
             return R(h) * QuasiPolynomial::from_split(Polynomial({0, R(11, 12), 0, R(5, 6)}),
                                                       Polynomial({0, R(-1, 4)}));
         },
         mu_const(-1), mult(3, 2),
         "triangle with diagonal legs; the apex ranges over T(n) + T(n-2) lattice points"});
    add({"U3b^3", "", 3, 3, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k)) f.emplace_back(3, std::vector<Constraint>{Equal{1, 2}, C(2, 3, s)});
             return f;
         },
         sum_alpha, [](int h, int k) { return -2L * (h + k - 1); }, mult(3, 2),
         "coincident pair attacked by a third piece"});
    add({"U4a^3", "", 3, 4, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k))
                 f.emplace_back(4, std::vector<Constraint>{C(1, 2, s), C(2, 3, s), C(3, 4, s)});
             return f;
         },
         [](int h, int k) { return R(h) * nto(5) + R(k) * qp({0, R(-1, 15), 0, R(10, 15), 0, R(6, 15)}); },
         mu_const(-6), binom(4), "four on one line; the subspace lies in six hyperplanes"});

    auto chain = [](Move a, Move b, Move c) {
        return ConstraintPattern(4, {C(1, 2, a), C(2, 3, b), C(3, 4, c)});
    };
    const char* u4b_note = "three on a line, a fourth on another line through an end; mu = -2 "
                           "(the printed heading for this value names U3b^3)";
    add({"U4b^3", "VH", 3, 4, [](int h, int) { return h == 2; },
         [chain](int, int) { return Family{chain(H, H, V), chain(V, V, H)}; },
         [](int, int) { return R(2) * nto(5); }, mu_const(-2), mult(4, 2), u4b_note});
    add({"U4b^3", "DV", 3, 4, [](int h, int k) { return h >= 1 && k >= 1; },
         [chain](int h, int k) {
             Family f;
             for (Move d : diag(k))
                 for (Move o : orth(h)) {
                     f.push_back(chain(d, d, o));
                     f.push_back(chain(o, o, d));
                 }
             return f;
         },
         [](int h, int k) { return R(h * k) * qp({0, 0, 0, R(5, 6), 0, R(7, 6)}); }, mu_const(-2), mult(4, 2),
         u4b_note});
    add({"U4b^3", "DD", 3, 4, [](int, int k) { return k == 2; },
         [chain](int, int) { return Family{chain(D1, D1, D2), chain(D2, D2, D1)}; },
         [](int, int) {
             return QuasiPolynomial::from_split(Polynomial({0, R(7, 30), 0, R(2, 3), 0, R(3, 5)}),
                                                Polynomial({0, R(-1, 2)}));
         },
         mu_const(-2), mult(4, 2), "two isomorphic subspaces combined"});

    add({"U4c^3", "VHV", 3, 4, [](int h, int) { return h == 2; },
         [chain](int, int) { return Family{chain(V, H, V), chain(H, V, H)}; },
         [](int, int) { return R(2) * nto(5); }, mu_const(-1), mult(4, 2), "path whose outer edges share a slope"});
    add({"U4c^3", "DHD", 3, 4, [](int h, int k) { return h >= 1 && k >= 1; },
         [chain](int h, int k) {
             Family f;
             for (Move d : diag(k))
                 for (Move o : orth(h)) f.push_back(chain(d, o, d));
             return f;
         },
         [](int h, int k) { return R(h * k) * dhd_path(); }, mu_const(-1), mult(4, 2), ""});
    add({"U4c^3", "HDH", 3, 4, [](int h, int k) { return h >= 1 && k >= 1; },
         [chain](int h, int k) {
             Family f;
             for (Move d : diag(k))
                 for (Move o : orth(h)) f.push_back(chain(o, d, o));
             return f;
         },
         [](int h, int k) { return R(h * k) * qp({0, 0, 0, R(1, 3), 0, R(2, 3)}); }, mu_const(-1), mult(4, 2),
         ""});
    add({"U4c^3", "DDD", 3, 4, [](int, int k) { return k == 2; },
         [chain](int, int) { return Family{chain(D1, D2, D1), chain(D2, D1, D2)}; },
         [](int, int) { return qp({0, R(4, 5), 0, R(2, 3), 0, R(8, 15)}); }, mu_const(-1), mult(4, 2), ""});

    add({"U4d^3", "HDV", 3, 4, [](int h, int k) { return h == 2 && k >= 1; },
         [chain](int, int k) {
             Family f;
             for (Move d : diag(k)) f.push_back(chain(H, d, V));
             return f;
         },
         [](int, int k) { return R(k) * nto(2) * alpha_d(); }, mu_const(-1), mult(4, 1),
         "path with three slopes; one pattern per middle slope and unordered outer pair"});
    add({"U4d^3", "DHD", 3, 4, [](int h, int k) { return k == 2 && h >= 1; },
         [chain](int h, int) {
             Family f;
             for (Move o : orth(h)) f.push_back(chain(D1, o, D2));
             return f;
         },
         [](int h, int) { return R(h) * dhd_path(); }, mu_const(-1), mult(4, 1), ""});
    add({"U4d^3", "VHD", 3, 4, [](int h, int k) { return h == 2 && k >= 1; },
         [chain](int, int k) {
             Family f;
             for (Move o : {H, V})
                 for (Move d : diag(k)) f.push_back(chain(other(o), o, d));
             return f;
         },
         [](int, int k) { return R(2 * k) * nto(2) * alpha_d(); }, mu_const(-1), mult(4, 1), ""});
    add({"U4d^3", "DDV", 3, 4, [](int h, int k) { return k == 2 && h >= 1; },
         [chain](int h, int) {
             Family f;
             for (Move d : {D1, D2})
                 for (Move o : orth(h)) f.push_back(chain(other(d), d, o));
             return f;
         },
         [](int h, int) { return R(2 * h) * nto(1) * dd(); }, mu_const(-1), mult(4, 1), ""});

    auto star = [](Move a, Move b, Move c) {
        return ConstraintPattern(4, {C(1, 2, a), C(1, 3, b), C(1, 4, c)});
    };
    add({"U4e^3", "DDH", 3, 4, [](int h, int k) { return k == 2 && h >= 1; },
         [star](int h, int) {
             Family f;
             for (Move o : orth(h)) f.push_back(star(D1, D2, o));
             return f;
         },
         [](int h, int) { return R(h) * nto(1) * dd(); }, mu_const(-1), mult(4, 1),
         "three lines through one piece; one pattern per set of three slopes"});
    add({"U4e^3", "HVD", 3, 4, [](int h, int k) { return h == 2 && k >= 1; },
         [star](int, int k) {
             Family f;
             for (Move d : diag(k)) f.push_back(star(H, V, d));
             return f;
         },
         [](int, int k) { return R(k) * nto(2) * alpha_d(); }, mu_const(-1), mult(4, 1), ""});

    add({"U4*^3", "", 3, 4, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k)) f.emplace_back(4, std::vector<Constraint>{C(1, 2, s), Equal{3, 4}});
             return f;
         },
         [](int h, int k) { return sum_alpha(h, k) * nto(2); },
         [](int h, int k) { return static_cast<long>(1 - (h + k)); }, mult(4, 4),
         "attacking pair beside a coincident pair"});
    add({"U5*a^3", "", 3, 5, always,
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k))
                 for (Move t : all(h, k))
                     f.emplace_back(5, std::vector<Constraint>{C(1, 2, s), C(2, 3, s), C(4, 5, t)});
             return f;
         },
         [](int h, int k) { return sum_beta(h, k) * sum_alpha(h, k); }, mu_const(-2), mult(5, 12),
         "collinear triple beside an attacking pair"});
    add({"U5*b^3", "", 3, 5, [](int h, int k) { return h + k >= 2; },
         [](int h, int k) {
             Family f;
             for (Move s : all(h, k))
                 for (const auto& p : u3b2_family(h, k)) {
                     std::vector<Constraint> cs{C(1, 2, s)};
                     for (const auto& c : p.constraints()) {
                         const auto& col = std::get<Collinear>(c);
                         cs.push_back(C(col.i + 2, col.j + 2, col.slope));
                     }
                     f.emplace_back(5, std::move(cs));
                 }
             return f;
         },
         [](int h, int k) { return sum_alpha(h, k) * u3b2_total(h, k); }, mu_const(-1), mult(5, 2),
         "bent triple beside an attacking pair"});
    add({"U6*^3", "", 3, 6, always,
         [](int h, int k) {
             Family f;
             const auto m = all(h, k);
             for (Move s : m)
                 for (Move t : m)
                     for (Move u : m)
                         f.emplace_back(6, std::vector<Constraint>{C(1, 2, s), C(3, 4, t), C(5, 6, u)});
             return f;
         },
         [](int h, int k) {
             const auto a = sum_alpha(h, k);
             return a * a * a;
         },
         mu_const(-1), mult(6, 48), "three disjoint attacking pairs"});

    // ---- codimension 4, needed for three pieces
    add({"U3^4", "", 4, 3, always,
         [](int, int) { return Family{ConstraintPattern(3, {Equal{1, 2}, Equal{2, 3}})}; },
         [](int, int) { return nto(2); },
         [](int h, int k) {
             const long m = h + k;
             return (m - 1) * (m - 1) * (m + 2);
         },
         binom(3), "three coincident pieces; mu vanishes for a single move"});
    return cat;
}

// (0,0) is allowed: with no slopes only the coincidence types survive, and
// the sum gives (n^2)_q.
void check_piece(int h, int k) {
    if (h < 0 || h > 2 || k < 0 || k > 2) throw InvalidArgument("h and k must lie in {0,1,2}");
}

}  // namespace

const std::vector<SubspaceCase>& case_catalog() {
    static const std::vector<SubspaceCase> cat = build_catalog();
    return cat;
}

std::vector<std::string> catalog_types() {
    std::vector<std::string> out;
    for (const auto& c : case_catalog())
        if (out.empty() || out.back() != c.type) out.push_back(c.type);
    return out;
}

const SubspaceCase& find_case(const std::string& name) {
    for (const auto& c : case_catalog())
        if (c.name() == name) return c;
    throw InvalidArgument("unknown subspace case: " + name);
}

CaseAudit audit_case(const SubspaceCase& c, int h, int k, int n) {
    check_piece(h, k);
    if (!c.applies(h, k))
        throw InvalidArgument(c.name() + " does not apply to (" + std::to_string(h) + "," + std::to_string(k) + ")");
    if (n < 1) throw InvalidArgument("audit needs n >= 1");
    CaseAudit a{c.name(), h, k, n, 0, 0, false};
    for (const auto& p : c.family(h, k)) a.brute += count_pattern(p, n);
    a.closed = c.closed_form(h, k)(n);
    a.match = Rational(a.brute) == a.closed;
    return a;
}

std::vector<CaseAudit> audit_all(int n_max, unsigned threads) {
    struct Task {
        const SubspaceCase* c;
        int h, k;
    };
    std::vector<Task> tasks;
    for (const auto& c : case_catalog())
        for (int h = 0; h <= 2; ++h)
            for (int k = 0; k <= 2; ++k)
                if (h + k >= 1 && c.applies(h, k)) tasks.push_back({&c, h, k});

    std::vector<std::vector<CaseAudit>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
            for (int n = 1; n <= n_max; ++n)
                results[t].push_back(audit_case(*tasks[t].c, tasks[t].h, tasks[t].k, n));
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<CaseAudit> out;
    for (auto& r : results)
        for (auto& a : r) out.push_back(std::move(a));
    return out;
}

BigInt triangle_points(long n) {
    if (n < 0) throw InvalidArgument("triangle_points needs n >= 0");
    const BigInt nn = n;
    return (nn * nn + 2 * nn + (n % 2)) / 4;
}

BigInt assemble_labelled_count(int h, int k, int q, int n) {
    check_piece(h, k);
    if (q < 1 || q > 3) throw InvalidArgument("assembly from the catalog is complete only for q in {1,2,3}");
    if (n < 0) throw InvalidArgument("board size must be nonnegative");
    BigInt nn = n, total;
    mpz_pow_ui(total.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(2 * q));
    Rational sum = total;
    for (const auto& c : case_catalog()) {
        if (c.kappa > q || !c.applies(h, k)) continue;
        const Rational w = c.multiplicity(q) * Rational(c.moebius(h, k));
        if (w == 0) continue;
        BigInt brute = 0;
        for (const auto& p : c.family(h, k)) brute += count_pattern(p, n);
        BigInt free;
        mpz_pow_ui(free.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(2 * (q - c.kappa)));
        sum += w * Rational(brute * free);
    }
    if (sum.get_den() != 1) throw Error("assembled count is not an integer");
    return sum.get_num();
}

QuasiPolynomial assemble_closed(int h, int k, int q) {
    check_piece(h, k);
    if (q < 1) throw InvalidArgument("q must be positive");
    QuasiPolynomial sum(Polynomial::monomial(1, 2 * q));
    for (const auto& c : case_catalog()) {
        if (c.kappa > q || !c.applies(h, k)) continue;
        const Rational w = c.multiplicity(q) * Rational(c.moebius(h, k));
        if (w == 0) continue;
        sum += w * c.closed_form(h, k) * QuasiPolynomial(Polynomial::monomial(1, 2 * (q - c.kappa)));
    }
    return sum;
}

QuasiPolynomial catalog_codim_total(int h, int k, long q, int nu) {
    check_piece(h, k);
    if (q < 1) throw InvalidArgument("q must be positive");
    if (nu < 0 || nu > 3) throw InvalidArgument("catalog is complete only for codimension <= 3");
    const Rational inv = 1 / factorial(q);
    if (nu == 0) return QuasiPolynomial(Polynomial::monomial(inv, static_cast<int>(2 * q)));
    QuasiPolynomial sum;
    for (const auto& c : case_catalog()) {
        if (c.codim != nu || c.kappa > q || !c.applies(h, k)) continue;
        const Rational w = c.multiplicity(q) * Rational(c.moebius(h, k)) * inv;
        if (w == 0) continue;
        sum += w * c.closed_form(h, k) *
               QuasiPolynomial(Polynomial::monomial(1, static_cast<int>(2 * (q - c.kappa))));
    }
    return sum;
}

CoeffDecomposition gamma_from_audit(int h, int k, long q, int i) {
    if (i < 0 || i > 3) throw InvalidArgument("gamma_from_audit covers i = 0..3");
    if (q < 2) throw InvalidArgument("gamma_from_audit needs q >= 2");
    QuasiPolynomial sum;
    for (int nu = 0; nu <= 3; ++nu) sum += catalog_codim_total(h, k, q, nu);
    return sum.coefficient(static_cast<int>(2 * q - i));
}

nlohmann::json to_json(const CaseAudit& a) {
    return {{"case", a.name}, {"h", a.h},           {"k", a.k},
            {"n", a.n},       {"brute", to_string(a.brute)}, {"closed", to_string(a.closed)},
            {"match", a.match}};
}

}  // namespace qq
