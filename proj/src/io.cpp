#include "nvm/io.hpp"

#include <cstdio>
#include <sstream>

namespace nvm {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::string out = "time,vertex,new_spin\n";
    for (const auto& e : tr.events) {
        out += g17(e.time);
        out += ',' + std::to_string(e.vertex) + ',' + (e.new_spin ? '1' : '0') + '\n';
    }
    return out;
}

std::string coupled_events_csv(const CoupledTrajectory& tr) {
    std::string out = "time,vertex,x_spin,y_spin\n";
    for (const auto& e : tr.events) {
        out += g17(e.time);
        out += ',' + std::to_string(e.vertex) + ',';
        out += e.x_spin ? '1' : '0';
        out += ',';
        out += e.y_spin ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string mcurve_csv(const MCurveEstimate& est) {
    std::string out = "t,vertex,p_hat,stderr\n";
    for (std::size_t k = 0; k < est.times.size(); ++k) {
        const std::string t = g17(est.times[k]);
        for (std::size_t v = 0; v < est.p_hat[k].size(); ++v)
            out += t + ',' + std::to_string(v) + ',' + g17(est.p_hat[k][v]) + ',' +
                   g17(est.std_error[k][v]) + '\n';
        out += t + ",max," + g17(est.m_hat[k]) + ',' + g17(est.m_std_error[k]) + '\n';
    }
    return out;
}

std::string distribution_csv(const DistributionVector& mu, int n_sites) {
    std::string out = "state,bits,probability\n";
    for (std::size_t s = 0; s < mu.size(); ++s)
        out += std::to_string(s) + ',' +
               Configuration::from_encoding(n_sites, s).to_bit_string() + ',' + g17(mu[s]) + '\n';
    return out;
}

std::string curve_csv(const std::vector<double>& times, const std::vector<double>& values,
                      const std::string& value_name) {
    std::string out = "t," + value_name + '\n';
    for (std::size_t i = 0; i < times.size(); ++i)
        out += g17(times[i]) + ',' + g17(values[i]) + '\n';
    return out;
}

std::string ssm_csv(const SSMTable& table) {
    std::string out = "u_coords,dist,tv\n";
    for (const auto& row : table.rows) {
        std::string coords;
        for (std::size_t i = 0; i < row.u.size(); ++i) {
            if (i) coords += ' ';
            coords += std::to_string(row.u[i]);
        }
        out += coords + ',' + std::to_string(row.dist) + ',' + g17(row.tv) + '\n';
    }
    return out;
}

std::string otm_csv(const OtmReport& report) {
    std::string out = "t,tv,bound,margin\n";
    for (const auto& r : report.rows)
        out += g17(r.t) + ',' + g17(r.tv) + ',' + g17(r.bound) + ',' + g17(r.margin) + '\n';
    return out;
}

std::string scaling_csv(const MixingScan& scan) {
    std::string out = "family,n,delta,epsilon,t_mix,bound,margin\n";
    for (const auto& r : scan.rows) {
        out += std::string(family_name(scan.family)) + ',' + std::to_string(r.n) + ',' +
               g17(scan.delta) + ',' + g17(scan.epsilon) + ',' + g17(r.t_mix) + ',' +
               g17(r.bound) + ',' + g17(r.bound - r.t_mix) + '\n';
    }
    return out;
}

nlohmann::json to_json(const MixingTimeResult& r) {
    return {{"epsilon", r.epsilon},
            {"t_mix", r.t_mix},
            {"worst_state", r.worst_state},
            {"tolerance", {{"time_resolution", r.time_resolution}, {"solver_tol", r.solver_tol}}},
            {"initial_states", r.initial_states}};
}

nlohmann::json to_json(const SSMDecayFit& f) {
    return {{"C_hat", f.C_hat}, {"c_hat", f.c_hat}, {"residual", f.residual}};
}

nlohmann::json to_json(const DecayFit& f) {
    return {{"C_hat", f.C_hat},         {"c_hat", f.c_hat},
            {"residual", f.residual},   {"c_hat_std_error", f.c_hat_std_error},
            {"points_used", f.points_used}, {"source", f.source}};
}

nlohmann::json to_json(const ReversibilityVerdict& v) {
    nlohmann::json j{{"reversible", v.reversible}, {"max_violation", v.max_violation}};
    if (!v.reversible) {
        j["witness"] = v.witness;
        j["witness_forward_product"] = v.witness_forward;
        j["witness_backward_product"] = v.witness_backward;
    }
    return j;
}

nlohmann::json to_json(const IsingCheckResult& r) {
    return {{"max_violation", r.max_violation}, {"beta", r.beta}, {"ok", r.ok}};
}

nlohmann::json scan_fit_json(const MixingScan& scan) {
    return {{"a", scan.fit_a}, {"b", scan.fit_b}, {"residual", scan.fit_residual}};
}

nlohmann::json distribution_json(const DistributionVector& mu, int n_sites) {
    return {{"n", n_sites}, {"probabilities", mu}};
}

} // namespace nvm
