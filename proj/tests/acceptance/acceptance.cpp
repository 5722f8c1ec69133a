// Acceptance suite. Usage: newton_mv_acceptance [criterion...]
// With no arguments every criterion runs. One line per criterion:
//   [PASS] AC3 worked example: ...
// Exit status is 0 iff every selected criterion passed.

#include "convert.hpp"
#include "oracles.hpp"

#include <newton_mv/newton_mv.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace newton_mv;
using namespace nmv_test;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Small generator kept local so the acceptance binary does not depend on gtest.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    SupportSet support(std::size_t dim, std::size_t max_points, long lo, long hi)
    {
        const auto k = static_cast<std::size_t>(integer(1, static_cast<long>(max_points)));
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Integer> c;
            for (std::size_t d = 0; d < dim; ++d)
                c.emplace_back(integer(lo, hi));
            pts.emplace_back(std::move(c));
        }
        return SupportSet(dim, std::move(pts));
    }

    SupportSet support(std::size_t dim, std::size_t max_points, long max_coord)
    {
        return support(dim, max_points, -max_coord, max_coord);
    }

    Polytope polytope(std::size_t dim, std::size_t max_points, long max_coord)
    {
        return convex_hull(support(dim, max_points, max_coord));
    }

private:
    std::mt19937_64 rng_;
};

// Every normalized mixed volume seen by any criterion, for AC11.
struct IntegralityLedger {
    long checked = 0;
    std::vector<std::string> bad;

    void record(const Rational& normalized, const std::string& where)
    {
        ++checked;
        if (!is_integer(normalized) || normalized < 0)
            bad.push_back(where + ": " + to_string(normalized));
    }
    void record(const Integer& normalized, const std::string& where) { record(Rational(normalized), where); }
} ledger;

Integer bk(const std::vector<SupportSet>& s, const char* where)
{
    const Integer v = bk_count(s);
    ledger.record(v, where);
    return v;
}

MixedVolumeResult mv(const std::vector<Polytope>& b, const char* where)
{
    const MixedVolumeResult r = mixed_volume(b);
    if (r.normalized)
        ledger.record(*r.normalized, where);
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
}

void fail(Outcome& o, const std::string& why)
{
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

Outcome ac1()
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    Draw d(101);
    int passed = 0;
    for (int i = 0; i < 50; ++i) {
        const SupportSet a = d.support(1, 6, 5);
        const std::vector<SupportSet> s{a};
        const auto report = verify_bk(s, 10);
        ledger.record(report.predicted, "AC1");
        if (report.predicted != oracle::segment_length(to_pt1(a)))
            fail(o, "predicted " + report.predicted.get_str() + " != max - min for " + a.str());
        else if (report.verdict != Verdict::pass)
            fail(o, "verdict " + to_string(report.verdict) + " for " + a.str());
        else
            ++passed;
    }
    const double t = seconds_since(start);
    if (t >= 5.0)
        fail(o, "runtime " + fmt_seconds(t) + " exceeds 5 s");
    if (o.pass)
        o.detail = std::to_string(passed) + "/50 supports pass, predicted = max - min, " + fmt_seconds(t);
    return o;
}

Outcome ac2()
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    Draw d(202);
    int passed = 0, exact_trials = 0, total_trials = 0;
    for (int i = 0; i < 25; ++i) {
        const std::vector<SupportSet> s{d.support(2, 6, 3), d.support(2, 6, 3)};
        const auto report = verify_bk(s, 10);
        ledger.record(report.predicted, "AC2");
        bool above = false;
        for (const auto& t : report.trials)
            above = above || Integer(t.observed) > report.predicted;
        exact_trials += report.matches;
        total_trials += static_cast<int>(report.trials.size());
        const long shoelace = oracle::normalized_mixed_area(to_pt2(s[0]), to_pt2(s[1]));
        if (report.predicted != shoelace)
            fail(o, "predicted " + report.predicted.get_str() + " but shoelace oracle gives "
                        + std::to_string(shoelace) + " for " + s[0].str() + ", " + s[1].str());
        else if (above)
            fail(o, "a trial exceeded the bound for " + s[0].str() + ", " + s[1].str());
        else if (report.verdict != Verdict::pass)
            fail(o, "verdict " + to_string(report.verdict) + " (" + std::to_string(report.matches) + "/10) for "
                        + s[0].str() + ", " + s[1].str());
        else
            ++passed;
    }
    const double t = seconds_since(start);
    if (t >= 120.0)
        fail(o, "runtime " + fmt_seconds(t) + " exceeds 120 s");
    if (o.pass)
        o.detail = std::to_string(passed) + "/25 pairs pass, " + std::to_string(exact_trials) + "/"
                   + std::to_string(total_trials) + " trials exact, none above the bound, " + fmt_seconds(t);
    return o;
}

Outcome ac3()
{
    Outcome o;
    const std::vector<SupportSet> s{SupportSet{{0, 0}, {1, 0}, {0, 1}}, SupportSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    const Integer count = bk(s, "AC3");
    const auto report = verify_bk(s, 20);
    if (count != 2)
        fail(o, "bk_count = " + count.get_str());
    else if (report.matches != 20)
        fail(o, "oracle matched " + std::to_string(report.matches) + "/20");
    if (o.pass)
        o.detail = "bk_count = 2, oracle 20/20 trials";
    return o;
}

Outcome ac4()
{
    Outcome o;
    Draw d(404);
    int checked = 0;
    auto check = [&](std::size_t n, const Polytope& p, const Rational& reference) {
        const Rational diag = mv(std::vector<Polytope>(n, p), "AC4").value;
        const Rational vol = volume(p);
        if (diag != vol)
            fail(o, "V(P,...,P) = " + to_string(diag) + " != Vol = " + to_string(vol) + " for " + p.str());
        else if (vol != reference)
            fail(o, "Vol = " + to_string(vol) + " but oracle gives " + to_string(reference) + " for " + p.str());
        else
            ++checked;
    };
    for (int i = 0; i < 100; ++i) {
        const SupportSet a = d.support(2, 6, 3);
        check(2, convex_hull(a), Rational(oracle::double_area(to_pt2(a))) / 2);
    }
    for (int i = 0; i < 50; ++i) {
        const SupportSet a = d.support(3, 6, 2);
        check(3, convex_hull(a), Rational(oracle::six_volume3(to_pt3(a))) / 6);
    }
    if (o.pass)
        o.detail = std::to_string(checked) + "/150 diagonal values equal the volume (100 in R^2, 50 in R^3)";
    return o;
}

Outcome ac5()
{
    Outcome o;
    Draw d(505);
    int additive = 0, powers = 0;
    for (int i = 0; i < 100; ++i) {
        const SupportSet a1 = d.support(2, 5, 3), a2 = d.support(2, 5, 3), b = d.support(2, 5, 3);
        const Integer lhs = bk({product(a1, a2), b}, "AC5");
        const Integer rhs = bk({a1, b}, "AC5") + bk({a2, b}, "AC5");
        if (lhs != rhs)
            fail(o, "[A'A'', B] = " + lhs.get_str() + " != " + rhs.get_str() + " for " + a1.str() + ", " + a2.str()
                        + ", " + b.str());
        else
            ++additive;
        const Integer base = bk({a1, b}, "AC5");
        for (unsigned k : {2u, 3u}) {
            const Integer powered = bk({power(a1, k), b}, "AC5");
            if (powered != k * base)
                fail(o, "power rule k = " + std::to_string(k) + ": " + powered.get_str() + " != "
                            + Integer(k * base).get_str() + " for " + a1.str() + ", " + b.str());
            else
                ++powers;
        }
    }
    if (o.pass)
        o.detail = std::to_string(additive) + "/100 additive, " + std::to_string(powers) + "/200 power-rule checks";
    return o;
}

Outcome ac6()
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    Draw d(606);
    int held = 0;
    for (int i = 0; i < 200; ++i) {
        const std::vector<Polytope> b{d.polytope(3, 6, 3), d.polytope(3, 6, 3), d.polytope(3, 6, 3)};
        const auto check = check_alexandrov_fenchel(b);
        mv(b, "AC6");
        if (!check.holds)
            fail(o, "V^2 = " + to_string(check.lhs) + " < " + to_string(check.rhs) + " for " + b[0].str() + ", "
                        + b[1].str() + ", " + b[2].str());
        else
            ++held;
    }
    const double t = seconds_since(start);
    if (t >= 60.0)
        fail(o, "runtime " + fmt_seconds(t) + " exceeds 60 s");
    if (o.pass)
        o.detail = std::to_string(held) + "/200 triples hold exactly, " + fmt_seconds(t);
    return o;
}

Outcome ac7()
{
    Outcome o;
    Draw d(707);
    constexpr long double kTol = 1e-12L;
    int held = 0, equal = 0;
    for (int i = 0; i < 100; ++i) {
        const Polytope a = d.polytope(2, 6, 3), b = d.polytope(2, 6, 3);
        const auto r = check_brunn_minkowski(a, b, {});
        // Independent floating check of the same inequality.
        const long double slack = r.rhs - r.lhs;
        if (!r.holds || slack < -kTol * std::max(r.lhs, r.rhs))
            fail(o, "F(A) + F(B) = " + std::to_string(static_cast<double>(r.lhs)) + " > F(A + B) = "
                        + std::to_string(static_cast<double>(r.rhs)) + " for " + a.str() + ", " + b.str());
        else
            ++held;

        const Polytope h = translate(scale(a, d.integer(1, 4)), LatticePoint{d.integer(-3, 3), d.integer(-3, 3)});
        const auto e = check_brunn_minkowski(a, h, {});
        if (!e.holds || std::fabs(e.lhs - e.rhs) > kTol * std::max(e.lhs, e.rhs))
            fail(o, "homothetic pair not equal within 1e-12 for " + a.str() + ", " + h.str());
        else
            ++equal;
    }
    if (o.pass)
        o.detail = std::to_string(held) + "/100 pairs hold, " + std::to_string(equal)
                   + "/100 homothetic pairs equal within 1e-12";
    return o;
}

Outcome ac8()
{
    Outcome o;
    Draw d(808);
    int unchanged = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = static_cast<std::size_t>(2 + i % 2);
        std::vector<SupportSet> s;
        for (std::size_t k = 0; k < n; ++k)
            s.push_back(d.support(n, 5, 2));
        const Integer before = bk(s, "AC8");
        bool same = true;
        for (std::size_t k = 0; k < n; ++k) {
            auto completed = s;
            completed[k] = completion(s[k]);
            const Integer after = bk(completed, "AC8");
            if (after != before) {
                same = false;
                fail(o, "completing argument " + std::to_string(k) + " of " + s[k].str() + " changed "
                            + before.get_str() + " to " + after.get_str());
            }
        }
        unchanged += same;
    }
    if (o.pass)
        o.detail = std::to_string(unchanged) + "/50 instances unchanged under completion of each argument";
    return o;
}

Outcome ac9()
{
    Outcome o;
    Draw d(909);
    int consistent = 0, verified = 0;
    for (int i = 0; i < 50; ++i) {
        std::vector<VirtualSupport> vs;
        std::vector<VirtualPolytope> bodies;
        for (int k = 0; k < 2; ++k) {
            vs.emplace_back(d.support(2, 4, 0, 2), d.support(2, 4, 0, 2));
            bodies.push_back(virtual_newton_polytope(vs.back().numer, vs.back().denom));
        }
        const IndexReport index = virtual_index(vs);
        for (const auto& [mask, term] : index.terms)
            ledger.record(term.count, "AC9 term");
        const Rational expected = 2 * mixed_volume_virtual(bodies);
        const std::string where = vs[0].numer.str() + "/" + vs[0].denom.str() + ", " + vs[1].numer.str() + "/"
                                  + vs[1].denom.str();
        if (Rational(index.predicted) != expected) {
            fail(o, "index " + index.predicted.get_str() + " != 2V = " + to_string(expected) + " for " + where);
            continue;
        }
        ++consistent;
        if (i < 10) {
            OracleConfig config;
            config.seed = 0xacc9000ULL + static_cast<std::uint64_t>(i);
            const auto report = verify_virtual_index(vs, 10, config);
            if (report.verdict != Verdict::pass)
                fail(o, "empirical " + report.empirical.get_str() + " vs predicted " + report.predicted.get_str()
                            + ", verdict " + to_string(report.verdict) + " for " + where);
            else
                ++verified;
        }
    }
    if (o.pass)
        o.detail = std::to_string(consistent) + "/50 exact, " + std::to_string(verified) + "/10 confirmed by the oracle";
    return o;
}

Outcome ac10()
{
    Outcome o;
    Draw d(1010);
    int positive = 0, negative = 0;
    for (int i = 0; i < 200; ++i) {
        const Polytope p = d.polytope(2, 6, 3), r = d.polytope(2, 6, 3);
        Polytope q = p;
        if (i % 2 == 1) {
            while (q == p)
                q = d.polytope(2, 6, 3);
        }
        const bool sums_equal = minkowski_sum(p, r) == minkowski_sum(q, r);
        if (sums_equal != (p == q)) {
            fail(o, std::string(sums_equal ? "P + R == Q + R with P != Q" : "P == Q but sums differ") + " for P = "
                        + p.str() + ", Q = " + q.str() + ", R = " + r.str());
        } else if (p == q) {
            ++positive;
        } else {
            ++negative;
        }
    }
    if (o.pass)
        o.detail = std::to_string(positive) + " positive and " + std::to_string(negative) + " negative cases hold";
    return o;
}

Outcome ac11()
{
    // Own sweep across dimensions, plus whatever earlier criteria recorded.
    Draw d(1111);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = static_cast<std::size_t>(1 + i % 4);
        std::vector<Polytope> b;
        for (std::size_t k = 0; k < n; ++k)
            b.push_back(d.polytope(n, 5, n >= 4 ? 1 : 2));
        try {
            mv(b, "AC11 sweep");
        } catch (const std::logic_error& e) {
            ledger.bad.push_back(e.what());
        }
    }
    Outcome o;
    if (!ledger.bad.empty())
        fail(o, std::to_string(ledger.bad.size()) + " bad values, first: " + ledger.bad.front());
    else
        o.detail = std::to_string(ledger.checked) + " normalized values, all nonnegative integers";
    return o;
}

struct Criterion {
    const char* label;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"Kushnirenko n=1", ac1},
    {"Bernstein n=2", ac2},
    {"worked example", ac3},
    {"diagonal law", ac4},
    {"multilinearity and power rule", ac5},
    {"Alexandrov-Fenchel", ac6},
    {"generalized Brunn-Minkowski", ac7},
    {"completion invariance", ac8},
    {"rational BK consistency", ac9},
    {"cancellation", ac10},
    {"integrality", ac11},
};

} // namespace

int main(int argc, char** argv)
{
    constexpr int count = static_cast<int>(std::size(kCriteria));
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long k = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || k < 1 || k > count) {
            std::cerr << "usage: " << argv[0] << " [criterion 1.." << count << "]...\n";
            return 2;
        }
        selected.push_back(static_cast<int>(k));
    }
    if (selected.empty())
        for (int k = 1; k <= count; ++k)
            selected.push_back(k);

    bool all = true;
    for (int k : selected) {
        const Criterion& c = kCriteria[k - 1];
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " AC" << k << " " << c.label << ": " << o.detail << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
