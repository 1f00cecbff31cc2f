#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nvm/analysis.hpp"
#include "nvm/coupling.hpp"
#include "nvm/ctmc.hpp"
#include "nvm/reversibility.hpp"
#include "nvm/ssm.hpp"

namespace nvm {

/// Doubles in CSV artifacts carry 17 significant digits so they round-trip.
std::string g17(double x);

std::string trajectory_csv(const Trajectory& tr);
std::string coupled_events_csv(const CoupledTrajectory& tr);

/// Rows "t,vertex,p_hat,stderr" per vertex, then one summary row per t with
/// vertex = "max" carrying m_hat.
std::string mcurve_csv(const MCurveEstimate& est);

std::string distribution_csv(const DistributionVector& mu, int n_sites);
std::string curve_csv(const std::vector<double>& times, const std::vector<double>& values,
                      const std::string& value_name);
std::string ssm_csv(const SSMTable& table);
std::string otm_csv(const OtmReport& report);
std::string scaling_csv(const MixingScan& scan);

nlohmann::json to_json(const MixingTimeResult& r);
nlohmann::json to_json(const SSMDecayFit& f);
nlohmann::json to_json(const DecayFit& f);
nlohmann::json to_json(const ReversibilityVerdict& v);
nlohmann::json to_json(const IsingCheckResult& r);
nlohmann::json scan_fit_json(const MixingScan& scan);
nlohmann::json distribution_json(const DistributionVector& mu, int n_sites);

} // namespace nvm
