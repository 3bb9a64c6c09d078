#ifndef TANGENCY_REPORT_HPP
#define TANGENCY_REPORT_HPP

#include <string>

#include <json.hpp>

#include "tangency/config.hpp"
#include "tangency/henon.hpp"
#include "tangency/toy_model.hpp"

namespace tangency {

// Decimal text with 17 significant digits; parses back to the same double.
std::string exact_decimal(double x);
double parse_exact_decimal(const nlohmann::json& j);

// Intervals are written as [lo, hi] pairs of exact decimals.
nlohmann::json to_json(const Interval& x);
Interval interval_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntervalVector& v);
nlohmann::json to_json(const IntervalMatrix& m);

nlohmann::json to_json(const HSet& n);
nlohmann::json to_json(const QuadraticForm& q);
nlohmann::json to_json(const CoveringCertificate& c);
nlohmann::json to_json(const ConeCertificate& c);
nlohmann::json to_json(const DefinitenessResult& d);
nlohmann::json to_json(const DiskCertificate& d);
nlohmann::json to_json(const SeedQuality& s);
nlohmann::json to_json(const TangencyCertificate& t);
nlohmann::json to_json(const ToyReport& r);

// Full report: config echo, certificates, timings and the verdict line
// ("VERIFIED" or "INCONCLUSIVE").
nlohmann::json henon_report(const ProofConfig& cfg, const TangencyCertificate& cert);
nlohmann::json toy_report(const ProofConfig& cfg, const ToyReport& r);

void write_report(const nlohmann::json& report, const std::string& path);

}  // namespace tangency

#endif  // TANGENCY_REPORT_HPP
