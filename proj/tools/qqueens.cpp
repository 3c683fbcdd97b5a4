// Command-line front end: oracle counts, fits, formula-bank checks, the
// subspace audit and type counts.  All numbers are printed exactly.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

#include "qqueens/audit.hpp"
#include "qqueens/cache.hpp"
#include "qqueens/core.hpp"
#include "qqueens/enumerator.hpp"
#include "qqueens/formulas.hpp"
#include "qqueens/quasipoly.hpp"
#include "qqueens/verify.hpp"

using namespace qq;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string piece;
    std::string moves;
    int q = 2;
    std::string n_range;
    int period_max = 2;
    int shared_from = -1;
    std::uint64_t budget = SearchOptions{}.node_limit;
    std::string cache;
    std::string format = "text";
    std::string scope = "all";
    int n_max = 8;
    bool n_max_given = false;
};

struct Range {
    int lo, hi;
};

Range parse_range(const std::string& s) {
    static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InvalidArgument("expected --n LO..HI or --n N, got '" + s + "'");
    const int lo = std::stoi(m[1]);
    const int hi = m[2].matched ? std::stoi(m[2]) : lo;
    if (lo > hi) throw InvalidArgument("empty n range " + s);
    return {lo, hi};
}

struct Piece {
    MoveSet moves;
    std::optional<PartialQueenSpec> spec;
    std::string label;
};

Piece parse_piece(const RunConfig& c) {
    if (!c.piece.empty() && !c.moves.empty()) throw InvalidArgument("give --piece or --moves, not both");
    if (!c.moves.empty()) {
        MoveSet m = parse_moveset(c.moves);
        return {m, std::nullopt, m.json()};
    }
    if (c.piece.empty()) throw InvalidArgument("a piece is required: --piece h,k or --moves JSON");
    static const std::regex re(R"(^\s*(\d)\s*,\s*(\d)\s*$)");
    std::smatch m;
    if (!std::regex_match(c.piece, m, re)) throw InvalidArgument("expected --piece h,k, got '" + c.piece + "'");
    const auto spec = PartialQueenSpec::make(std::stoi(m[1]), std::stoi(m[2]));
    return {partial_queen(spec), spec, "Q^{" + std::to_string(spec.h) + std::to_string(spec.k) + "}"};
}

std::unique_ptr<CountCache> open_cache(const RunConfig& c) {
    if (c.cache.empty()) return nullptr;
    return std::make_unique<CountCache>(c.cache, [](const std::string& w) { std::cerr << "warning: " << w << "\n"; });
}

SearchOptions search(const RunConfig& c) { return SearchOptions{c.budget}; }

// A table rendered in any output format.  JSON output is an array of objects
// unless a command builds its own document.
struct Table {
    std::vector<std::string> head;
    std::vector<std::vector<std::string>> rows;

    void print(const std::string& fmt, std::ostream& os) const {
        if (fmt == "json") {
            json arr = json::array();
            for (const auto& r : rows) {
                json o = json::object();
                for (std::size_t i = 0; i < head.size(); ++i) o[head[i]] = r[i];
                arr.push_back(std::move(o));
            }
            os << arr.dump(2) << "\n";
        } else if (fmt == "csv") {
            auto cell = [](const std::string& s) {
                if (s.find_first_of(",\"\n") == std::string::npos) return s;
                std::string e = "\"";
                for (char ch : s) e += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                return e + "\"";
            };
            for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << cell(head[i]);
            os << "\n";
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
                os << "\n";
            }
        } else if (fmt == "latex") {
            os << "\\begin{tabular}{" << std::string(head.size(), 'l') << "}\n";
            for (std::size_t i = 0; i < head.size(); ++i) os << (i ? " & " : "") << head[i];
            os << " \\\\\n\\hline\n";
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " & " : "") << "$" << r[i] << "$";
                os << " \\\\\n";
            }
            os << "\\end{tabular}\n";
        } else {
            std::vector<std::size_t> w(head.size());
            for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
            for (const auto& r : rows)
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
            auto line = [&](const std::vector<std::string>& r) {
                for (std::size_t i = 0; i < r.size(); ++i) {
                    os << r[i];
                    if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
                }
                os << "\n";
            };
            line(head);
            for (const auto& r : rows) line(r);
        }
    }
};

// --------------------------------------------------------------- commands

int cmd_count(const RunConfig& c) {
    const Piece p = parse_piece(c);
    if (c.n_range.empty()) throw InvalidArgument("count needs --n");
    const Range r = parse_range(c.n_range);
    auto cache = open_cache(c);
    Table t{{"piece", "q", "n", "count"}, {}};
    int status = 0;
    std::vector<CountRecord> recs;
    try {
        recs = sequence(p.moves, c.q, r.lo, r.hi, cache.get(), search(c));
    } catch (const BudgetExceeded& e) {
        recs = e.completed();
        std::cerr << "error: " << e.what() << "; output is partial\n";
        status = 3;
    }
    for (const auto& rec : recs)
        t.rows.push_back({p.label, std::to_string(c.q), std::to_string(rec.n), to_string(rec.count)});
    if (status) t.rows.push_back({p.label, std::to_string(c.q), "partial", "budget exceeded"});
    t.print(c.format, std::cout);
    return status;
}

int cmd_fit(const RunConfig& c) {
    const Piece p = parse_piece(c);
    const int degree = 2 * c.q;
    const Range r = c.n_range.empty() ? Range{1, samples_needed(degree, c.period_max) + 1} : parse_range(c.n_range);
    auto cache = open_cache(c);
    std::vector<Sample> samples;
    try {
        samples = oracle_samples(p.moves, c.q, r.lo, r.hi, cache.get(), search(c));
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    PeriodFit pf;
    try {
        if (c.shared_from < 0) {
            pf = detect_period(samples, degree, c.period_max);
        } else {
            for (int p = 1;; ++p) {
                try {
                    pf = {p, fit_shared(samples, degree, p, c.shared_from)};
                    break;
                } catch (const FitError&) {
                    if (p >= c.period_max) throw;
                }
            }
        }
    } catch (const FitError& e) {
        std::cerr << "error: " << e.what();
        if (e.failing_n()) std::cerr << " (first failing n = " << *e.failing_n() << ")";
        std::cerr << "\n";
        return 2;
    }
    // Samples beyond the unknowns of the linear system validate the fit.
    const int unknowns = c.shared_from < 0 || c.shared_from > degree
                             ? pf.period * (degree + 1)
                             : degree + 1 - c.shared_from + pf.period * c.shared_from;
    const int surplus = static_cast<int>(samples.size()) - unknowns;
    const std::string status = "all " + std::to_string(samples.size()) + " samples reproduced, " +
                               std::to_string(surplus) + " beyond interpolation";
    if (c.format == "json") {
        json j{{"piece", p.label},        {"q", c.q},
               {"n_lo", r.lo},            {"n_hi", r.hi},
               {"period", pf.period},     {"quasipolynomial", to_json(pf.qp)},
               {"text", pf.qp.str()},     {"validation", status}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    Table t{{"power", "coefficient", "alternating"}, {}};
    if (pf.period <= 2) {
        for (int i = degree; i >= 0; --i) {
            const auto d = pf.qp.coefficient(i);
            t.rows.push_back({std::to_string(i), to_string(d.constant_part), to_string(d.alternating_part)});
        }
    } else {
        t.head = {"power", "residue", "coefficient"};
        for (int i = degree; i >= 0; --i) {
            const auto by = pf.qp.coefficient_by_residue(i);
            for (std::size_t res = 0; res < by.size(); ++res)
                t.rows.push_back({std::to_string(i), std::to_string(res), to_string(by[res])});
        }
    }
    if (c.format == "text") {
        std::cout << "piece " << p.label << ", q=" << c.q << ", n=" << r.lo << ".." << r.hi << "\n"
                  << "period " << pf.period << "\n"
                  << "u(q;n) = " << pf.qp.str() << "\n"
                  << "validation: " << status << "\n\n";
    }
    t.print(c.format, std::cout);
    return 0;
}

int cmd_verify(const RunConfig& c) {
    auto cache = open_cache(c);
    VerifyOptions o;
    o.n_max = c.n_max;
    o.cache = cache.get();
    o.search = search(c);
    const auto checks = run_verify(c.scope, o);
    const bool ok = all_passed(checks);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& ch : checks) arr.push_back(to_json(ch));
        std::cout << json{{"scope", c.scope}, {"passed", ok}, {"checks", arr}}.dump(2) << "\n";
    } else {
        Table t{{"status", "claim", "locus", "detail"}, {}};
        int failed = 0;
        for (const auto& ch : checks) {
            const std::string st = ch.informational ? (ch.passed ? "info" : "note") : (ch.passed ? "pass" : "FAIL");
            if (!ch.informational && !ch.passed) ++failed;
            t.rows.push_back({st, ch.claim, ch.locus, ch.detail});
        }
        t.print(c.format, std::cout);
        if (c.format == "text")
            std::cout << "\n" << checks.size() << " checks, " << failed << " failed\n";
    }
    return ok ? 0 : 1;
}

int cmd_audit(const RunConfig& c) {
    const int n_max = c.n_max_given ? c.n_max : 10;
    const auto res = audit_all(n_max);
    bool ok = true;
    for (const auto& a : res) ok = ok && a.match;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& a : res) arr.push_back(to_json(a));
        std::cout << arr.dump(2) << "\n";
    } else {
        Table t{{"case", "h", "k", "n", "brute", "closed", "match"}, {}};
        for (const auto& a : res)
            t.rows.push_back({a.name, std::to_string(a.h), std::to_string(a.k), std::to_string(a.n),
                              to_string(a.brute), to_string(a.closed), a.match ? "yes" : "NO"});
        t.print(c.format, std::cout);
    }
    return ok ? 0 : 1;
}

int cmd_types(const RunConfig& c) {
    auto cache = open_cache(c);
    const bool explicit_piece = !c.piece.empty() || !c.moves.empty();
    Table t{{"piece", "q", "moves", "period", "u(q;-1)", "expected", "conjecture", "status"}, {}};
    bool ok = true;
    auto row = [&](const Piece& p, int q, int period_max, int n_hi, bool exploratory) {
        const auto pf = fit_oracle(p.moves, q, n_hi, period_max, cache.get(), search(c));
        const Rational v = eval_at_minus_one(pf.qp);
        const long m = static_cast<long>(p.moves.size());
        std::string expected = "-";
        std::string status = exploratory ? "exploratory" : "pass";
        std::optional<BigInt> want;
        if (q == 2) want = m;
        if (q == 3 && p.spec) want = table3_types(p.spec->h, p.spec->k);
        if (want) {
            expected = to_string(*want);
            if (v != Rational(*want)) {
                status = exploratory ? "exploratory, differs" : "FAIL";
                if (!exploratory) ok = false;
            }
        }
        const std::string conj = q == 3 ? to_string(types3_conjecture(m)) : "-";
        if (exploratory && q == 3) status += Rational(types3_conjecture(m)) == v ? ", agrees" : ", differs";
        t.rows.push_back({p.label, std::to_string(q), std::to_string(m),
                          std::to_string(pf.period) + "/" + std::to_string(period_max), to_string(v), expected, conj,
                          status});
    };
    if (explicit_piece) {
        const Piece p = parse_piece(c);
        const int degree = 2 * c.q;
        if (p.spec) {
            row(p, c.q, c.period_max, samples_needed(degree, c.period_max) + 1, false);
        } else {
            // General riders may have long periods; the bound is what the
            // sample range can support.
            const int n_hi = c.n_range.empty() ? 40 : parse_range(c.n_range).hi;
            const int bound = std::min(c.period_max < 12 ? 12 : c.period_max, n_hi / (degree + 2));
            if (bound < 1) throw InvalidArgument("n range too short for degree " + std::to_string(degree));
            row(p, c.q, bound, n_hi, true);
        }
    } else {
        for (int h = 0; h <= 2; ++h)
            for (int k = 0; k <= 2; ++k) {
                if (h + k == 0) continue;
                const auto spec = PartialQueenSpec::make(h, k);
                const Piece p{partial_queen(spec), spec, "Q^{" + std::to_string(h) + std::to_string(k) + "}"};
                row(p, c.q, 2, samples_needed(2 * c.q, 2) + 1, false);
            }
    }
    t.print(c.format, std::cout);
    return ok ? 0 : 1;
}

int cmd_formulas(const RunConfig& c) {
    const Piece p = parse_piece(c);
    if (!p.spec) throw InvalidArgument("formulas are known only for partial queens; use --piece h,k");
    const int h = p.spec->h, k = p.spec->k;
    Table t{{"quantity", "value"}, {}};
    for (int i = 1; i <= 3; ++i) t.rows.push_back({"gamma" + std::to_string(i), gamma_expr(i, h, k).str()});
    for (int i = 2; i <= 3; ++i)
        t.rows.push_back({"gamma" + std::to_string(i) + " table", table1_entry(i, h, k).str()});
    t.rows.push_back({"gamma3 printed equation", gamma3_expr_as_printed(h, k).str()});
    if (c.q >= 2)
        for (int i = 1; i <= 3; ++i) {
            const Rational g = i == 1 ? gamma1(h, k, c.q) : i == 2 ? gamma2(h, k, c.q) : gamma3(h, k, c.q);
            t.rows.push_back({"gamma" + std::to_string(i) + " at q=" + std::to_string(c.q), to_string(g)});
        }
    t.rows.push_back({"u(2;n)", u2_closed(h, k).str()});
    t.rows.push_back({"u(3;n)", u3_closed(h, k).str()});
    t.rows.push_back({"u(2;-1)", std::to_string(h + k)});
    t.rows.push_back({"u(3;-1)", to_string(eval_at_minus_one(u3_closed(h, k)))});
    t.print(c.format, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts and counting quasipolynomials for nonattacking partial queens"};
    app.require_subcommand(1);
    RunConfig c;
    if (const char* env = std::getenv(kCacheEnvVar)) c.cache = env;

    auto piece_opts = [&](CLI::App* s) {
        auto* pc = s->add_option("--piece", c.piece, "Partial queen h,k with h,k in {0,1,2}");
        auto* mv = s->add_option("--moves", c.moves, "Explicit basic moves as JSON, e.g. [[1,0],[1,2]]");
        pc->excludes(mv);
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--cache", c.cache, std::string("Count cache file (env ") + kCacheEnvVar + ")");
        s->add_option("--budget", c.budget, "Node limit per count")->capture_default_str();
        s->add_option("--format", c.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "latex", "text"}))
            ->capture_default_str();
    };

    auto* count = app.add_subcommand("count", "Oracle counts u(q;n) over a range of n");
    piece_opts(count);
    count->add_option("--q", c.q, "Number of pieces")->capture_default_str()->check(CLI::Range(1, 64));
    count->add_option("--n", c.n_range, "Board sizes LO..HI or N")->required();
    common(count);

    auto* fit = app.add_subcommand("fit", "Fit the counting quasipolynomial to oracle counts");
    piece_opts(fit);
    fit->add_option("--q", c.q, "Number of pieces")->capture_default_str()->check(CLI::Range(1, 64));
    fit->add_option("--n", c.n_range, "Board sizes LO..HI (default 1..period_max*(2q+2)+1)");
    fit->add_option("--period-max", c.period_max, "Largest period tried")->capture_default_str()->check(
        CLI::PositiveNumber);
    fit->add_option("--shared-from", c.shared_from,
                    "Force the coefficients of n^D and above to be equal in every constituent")
        ->check(CLI::NonNegativeNumber);
    common(fit);

    auto* verify = app.add_subcommand("verify", "Check the formula bank against the oracle and itself");
    verify->add_option("--scope", c.scope, "Which checks to run")
        ->check(CLI::IsMember(verify_scopes()))
        ->capture_default_str();
    verify->add_option("--n-max", c.n_max, "Largest board size used by oracle comparisons")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    common(verify);

    auto* audit = app.add_subcommand("audit", "Compare every subspace case's closed form with brute counts");
    audit->add_option("--n-max", c.n_max, "Largest board size (default 10)")->check(CLI::PositiveNumber);
    audit->add_option("--report", c.format, "Same as --format")->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    audit->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex", "text"}));

    auto* types = app.add_subcommand("types", "Combinatorial type counts u(q;-1)");
    piece_opts(types);
    types->add_option("--q", c.q, "Number of pieces")->capture_default_str()->check(CLI::Range(2, 3));
    types->add_option("--n", c.n_range, "Sample range for an explicit move list (default 1..40)");
    types->add_option("--period-max", c.period_max, "Largest period tried; at least 12 for explicit move lists")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    common(types);

    auto* formulas = app.add_subcommand("formulas", "Print the closed forms for a partial queen");
    piece_opts(formulas);
    formulas->add_option("--q", c.q, "Evaluate the gamma coefficients at this q")->capture_default_str();
    formulas->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));

    CLI11_PARSE(app, argc, argv);
    c.n_max_given = audit->count("--n-max") > 0;
    if (*types && types->count("--q") == 0) c.q = 3;

    try {
        if (*count) return cmd_count(c);
        if (*fit) return cmd_fit(c);
        if (*verify) return cmd_verify(c);
        if (*audit) return cmd_audit(c);
        if (*types) return cmd_types(c);
        if (*formulas) return cmd_formulas(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
