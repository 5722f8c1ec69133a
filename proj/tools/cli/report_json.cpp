#include "report_json.hpp"

#include <cmath>
#include <limits>

namespace newton_mv::cli {

nlohmann::json rational_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const nlohmann::json& j) { return parse_rational(j.get<std::string>()); }

nlohmann::json integer_json(const Integer& z) { return z.get_str(); }

Integer integer_from_json(const nlohmann::json& j)
{
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q))
        throw InvalidArgument("expected an integer, got " + to_string(q));
    return q.get_num();
}

nlohmann::json vertices_json(const Polytope& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : p.vertices())
        out.push_back(v);
    return out;
}

nlohmann::json points_json(const SupportSet& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : s.points())
        out.push_back(p);
    return out;
}

} // namespace newton_mv::cli

namespace newton_mv {

using cli::integer_from_json;
using cli::integer_json;
using cli::rational_from_json;
using cli::rational_json;

namespace {

nlohmann::json separation_json(double d)
{
    return std::isfinite(d) ? nlohmann::json(d) : nlohmann::json(nullptr);
}

double separation_from_json(const nlohmann::json& j)
{
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

} // namespace

void to_json(nlohmann::json& j, const LatticePoint& p)
{
    j = nlohmann::json::array();
    for (const auto& c : p.coords()) {
        if (c.fits_slong_p())
            j.push_back(c.get_si());
        else
            j.push_back(c.get_str());
    }
}

void from_json(const nlohmann::json& j, LatticePoint& p)
{
    std::vector<Integer> coords;
    for (const auto& c : j)
        coords.push_back(c.is_string() ? integer_from_json(c) : Integer(c.get<long>()));
    p = LatticePoint(std::move(coords));
}

void to_json(nlohmann::json& j, const RationalPoint& p)
{
    j = nlohmann::json::array();
    for (const auto& c : p.coords())
        j.push_back(rational_json(c));
}

void from_json(const nlohmann::json& j, RationalPoint& p)
{
    std::vector<Rational> coords;
    for (const auto& c : j)
        coords.push_back(rational_from_json(c));
    p = RationalPoint(std::move(coords));
}

void to_json(nlohmann::json& j, const MixedVolumeResult& r)
{
    j = {{"value", rational_json(r.value)}, {"normalized", nullptr}};
    if (r.normalized)
        j["normalized"] = integer_json(*r.normalized);
}

void from_json(const nlohmann::json& j, MixedVolumeResult& r)
{
    r.value = rational_from_json(j.at("value"));
    r.normalized.reset();
    if (!j.at("normalized").is_null())
        r.normalized = integer_from_json(j.at("normalized"));
}

void to_json(nlohmann::json& j, const IndexTerm& t) { j = {{"count", integer_json(t.count)}, {"sign", t.sign}}; }

void from_json(const nlohmann::json& j, IndexTerm& t)
{
    t.count = integer_from_json(j.at("count"));
    t.sign = j.at("sign").get<int>();
}

void to_json(nlohmann::json& j, const IndexReport& r)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, term] : r.terms) {
        nlohmann::json t = term;
        t["mask"] = mask;
        terms.push_back(std::move(t));
    }
    j = {{"predicted", integer_json(r.predicted)}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, IndexReport& r)
{
    r.predicted = integer_from_json(j.at("predicted"));
    r.terms.clear();
    for (const auto& t : j.at("terms"))
        r.terms[t.at("mask").get<unsigned>()] = t.get<IndexTerm>();
}

void to_json(nlohmann::json& j, const TrialRecord& t)
{
    j = {{"seed", t.seed},
         {"observed", t.observed},
         {"resamples", t.resamples},
         {"max_residual", t.max_residual},
         {"min_separation", separation_json(t.min_separation)},
         {"inconclusive", t.inconclusive},
         {"diagnostic", t.diagnostic}};
}

void from_json(const nlohmann::json& j, TrialRecord& t)
{
    t.seed = j.at("seed").get<std::uint64_t>();
    t.observed = j.at("observed").get<int>();
    t.resamples = j.at("resamples").get<int>();
    t.max_residual = j.at("max_residual").get<double>();
    t.min_separation = separation_from_json(j.at("min_separation"));
    t.inconclusive = j.at("inconclusive").get<bool>();
    t.diagnostic = j.at("diagnostic").get<std::string>();
}

void to_json(nlohmann::json& j, const VerificationReport& r)
{
    j = {{"predicted", integer_json(r.predicted)},
         {"matches", r.matches},
         {"verdict", to_string(r.verdict)},
         {"trials", r.trials}};
}

void from_json(const nlohmann::json& j, VerificationReport& r)
{
    r.predicted = integer_from_json(j.at("predicted"));
    r.matches = j.at("matches").get<int>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.trials = j.at("trials").get<std::vector<TrialRecord>>();
}

void to_json(nlohmann::json& j, const TermVerification& t)
{
    j = {{"sign", t.sign}, {"empirical", integer_json(t.empirical)}, {"report", t.report}};
}

void from_json(const nlohmann::json& j, TermVerification& t)
{
    t.sign = j.at("sign").get<int>();
    t.empirical = integer_from_json(j.at("empirical"));
    t.report = j.at("report").get<VerificationReport>();
}

void to_json(nlohmann::json& j, const VirtualVerificationReport& r)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, term] : r.terms) {
        nlohmann::json t = term;
        t["mask"] = mask;
        terms.push_back(std::move(t));
    }
    j = {{"predicted", integer_json(r.predicted)},
         {"empirical", integer_json(r.empirical)},
         {"verdict", to_string(r.verdict)},
         {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, VirtualVerificationReport& r)
{
    r.predicted = integer_from_json(j.at("predicted"));
    r.empirical = integer_from_json(j.at("empirical"));
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.terms.clear();
    for (const auto& t : j.at("terms"))
        r.terms[t.at("mask").get<unsigned>()] = t.get<TermVerification>();
}

} // namespace newton_mv
