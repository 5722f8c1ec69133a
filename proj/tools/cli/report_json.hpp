#pragma once

// JSON encoding of library results. Exact numbers travel as strings: rationals
// as "p/q", integers as decimal digits. Infinite separations become null.

#include <newton_mv/mixed_volume.hpp>
#include <newton_mv/sparse_solver.hpp>
#include <newton_mv/support_semigroup.hpp>

#include <nlohmann/json.hpp>

namespace newton_mv {

void to_json(nlohmann::json& j, const LatticePoint& p);
void from_json(const nlohmann::json& j, LatticePoint& p);

void to_json(nlohmann::json& j, const RationalPoint& p);
void from_json(const nlohmann::json& j, RationalPoint& p);

void to_json(nlohmann::json& j, const MixedVolumeResult& r);
void from_json(const nlohmann::json& j, MixedVolumeResult& r);

void to_json(nlohmann::json& j, const IndexTerm& t);
void from_json(const nlohmann::json& j, IndexTerm& t);

void to_json(nlohmann::json& j, const IndexReport& r);
void from_json(const nlohmann::json& j, IndexReport& r);

void to_json(nlohmann::json& j, const TrialRecord& t);
void from_json(const nlohmann::json& j, TrialRecord& t);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

void to_json(nlohmann::json& j, const TermVerification& t);
void from_json(const nlohmann::json& j, TermVerification& t);

void to_json(nlohmann::json& j, const VirtualVerificationReport& r);
void from_json(const nlohmann::json& j, VirtualVerificationReport& r);

} // namespace newton_mv

namespace newton_mv::cli {

nlohmann::json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json integer_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json vertices_json(const Polytope& p);
nlohmann::json points_json(const SupportSet& s);

} // namespace newton_mv::cli
