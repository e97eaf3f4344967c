#pragma once

#include "growthlab/certificates.hpp"
#include "growthlab/free_calculus.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/topology.hpp"

#include <string>
#include <vector>

namespace growthlab::io {

/// Columns (exact, in order): n,sphere,gamma,naive,upper. Decimals carry
/// `precision` fractional digits; the n = 0 row leaves naive/upper empty.
std::string growth_csv(const growth::GrowthTable& table,
                       const growth::GrowthEstimate& estimate,
                       int precision = 12);

/// JSON mirror of growth_csv with the same field names. Exact integers and
/// decimals are emitted as strings to keep output byte-stable.
std::string growth_json(const growth::GrowthTable& table,
                        const growth::GrowthEstimate& estimate,
                        int precision = 12);

std::string omega_summary_json(const std::string& group_label,
                               const growth::GrowthTable& table,
                               const growth::GrowthEstimate& estimate,
                               int precision = 12);

/// {v, w, cost, p_verified, injective, omega_lower, gamma_lower_checked}.
std::string certificate_json(const certs::WitnessCertificate& cert,
                             const std::vector<std::string>& generator_names,
                             int precision = 12);

std::string witness_not_found_json();

std::string stabilization_json(const certs::StabilizationReport& report,
                               const std::vector<std::string>& generator_names);

std::string theoretical_bound_json(const certs::TheoreticalBound& bound,
                                   int precision = 12);

std::string crosscheck_json(const certs::MetabelianCrosscheck& report,
                            const std::vector<std::string>& generator_names,
                            int precision = 12);

/// Columns: i,set_size,depth,f_i,equal.
std::string weight_sets_csv(const freecalc::DepthReport& report);

/// Columns: i,conv_radius,gamma_i_m,gamma_lim_m,upper_i_m.
std::string limit_rows_csv(const std::vector<topo::LimitComparisonRow>& rows,
                           int precision = 12);

std::string ball_iso_json(bool isomorphic, int radius);

std::string convergence_json(const std::string& label_a,
                             const std::string& label_b, int radius);

}  // namespace growthlab::io
