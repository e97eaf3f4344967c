#include "growthlab/table_io.hpp"

#include "growthlab/errors.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace growthlab::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json bitstring_json(const certs::BitString& bits) {
  ordered_json arr = ordered_json::array();
  for (auto b : bits) arr.push_back(static_cast<int>(b));
  return arr;
}

}  // namespace

std::string growth_csv(const growth::GrowthTable& table,
                       const growth::GrowthEstimate& estimate,
                       int precision) {
  std::ostringstream out;
  out << "n,sphere,gamma,naive,upper\n";
  for (int n = 0; n <= table.radius; ++n) {
    out << n << ',' << table.spheres[static_cast<std::size_t>(n)] << ','
        << table.gamma[static_cast<std::size_t>(n)] << ',';
    if (n >= 1) {
      out << render_decimal(estimate.naive[static_cast<std::size_t>(n - 1)],
                            precision)
          << ','
          << render_decimal(estimate.upper[static_cast<std::size_t>(n - 1)],
                            precision);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string growth_json(const growth::GrowthTable& table,
                        const growth::GrowthEstimate& estimate,
                        int precision) {
  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= table.radius; ++n) {
    ordered_json row;
    row["n"] = n;
    row["sphere"] = table.spheres[static_cast<std::size_t>(n)].str();
    row["gamma"] = table.gamma[static_cast<std::size_t>(n)].str();
    if (n >= 1) {
      row["naive"] = render_decimal(
          estimate.naive[static_cast<std::size_t>(n - 1)], precision);
      row["upper"] = render_decimal(
          estimate.upper[static_cast<std::size_t>(n - 1)], precision);
    } else {
      row["naive"] = nullptr;
      row["upper"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["radius"] = table.radius;
  doc["rows"] = std::move(rows);
  return dump(doc);
}

std::string omega_summary_json(const std::string& group_label,
                               const growth::GrowthTable& table,
                               const growth::GrowthEstimate& estimate,
                               int precision) {
  ordered_json doc;
  doc["group"] = group_label;
  doc["radius"] = table.radius;
  doc["gamma"] = table.gamma.back().str();
  doc["upper"] = render_decimal(estimate.upper.back(), precision);
  doc["naive"] = render_decimal(estimate.naive.back(), precision);
  doc["entropy_upper"] = render_decimal(estimate.entropy_upper, precision);
  if (estimate.witness_lower) {
    doc["witness_lower"] = render_decimal(*estimate.witness_lower, precision);
  } else {
    doc["witness_lower"] = nullptr;
  }
  return dump(doc);
}

std::string certificate_json(const certs::WitnessCertificate& cert,
                             const std::vector<std::string>& generator_names,
                             int precision) {
  ordered_json doc;
  doc["v"] = render_word(cert.v, generator_names);
  doc["w"] = render_word(cert.w, generator_names);
  doc["cost"] = cert.cost;
  doc["p_verified"] = cert.p_verified;
  doc["injective"] = cert.injective;
  if (cert.injective && cert.cost >= 1) {
    doc["omega_lower"] = render_decimal(cert.omega_lower, precision);
    doc["omega_lower_label"] = "certified-if-free";
    doc["gamma_lower_checked"] = cert.gamma_lower_range();
  } else {
    doc["omega_lower"] = nullptr;
    doc["gamma_lower_checked"] = 0;
    if (cert.collision) {
      doc["collision"] = {{"alpha", bitstring_json(cert.collision->first)},
                          {"beta", bitstring_json(cert.collision->second)}};
    }
  }
  return dump(doc);
}

std::string witness_not_found_json() {
  ordered_json doc;
  doc["found"] = false;
  return dump(doc);
}

std::string stabilization_json(
    const certs::StabilizationReport& report,
    const std::vector<std::string>& generator_names) {
  ordered_json doc;
  doc["v"] = render_word(report.v, generator_names);
  doc["w"] = render_word(report.w, generator_names);
  switch (report.status) {
    case certs::StabilizationReport::Status::kStabilizedAt:
      doc["status"] = "stabilized";
      doc["stabilized_at"] = report.stabilized_level;
      break;
    case certs::StabilizationReport::Status::kNoStabilization:
      doc["status"] = "no-stabilization";
      doc["l_tested"] = report.l_tested;
      break;
    case certs::StabilizationReport::Status::kExactInfinite:
      doc["status"] = "exact-infinite";
      break;
  }
  doc["exact_mode"] = report.exact_mode;
  doc["budget_hit"] = report.budget_hit;
  doc["detail"] = report.detail;
  return dump(doc);
}

std::string theoretical_bound_json(const certs::TheoreticalBound& bound,
                                   int precision) {
  ordered_json doc;
  doc["d"] = bound.d;
  doc["s"] = bound.s;
  doc["alpha"] = bound.alpha.str();
  doc["beta"] = bound.beta.str();
  doc["omega_alpha"] = render_decimal(bound.omega_alpha, precision);
  doc["omega_beta"] = render_decimal(bound.omega_beta, precision);
  return dump(doc);
}

std::string crosscheck_json(const certs::MetabelianCrosscheck& report,
                            const std::vector<std::string>& generator_names,
                            int precision) {
  ordered_json doc;
  if (!report.applicable) {
    doc["status"] = "NOT-APPLICABLE";
    doc["reason"] = report.reason;
    return dump(doc);
  }
  doc["status"] = (report.omega_lower_ok && report.upper_ok &&
                   report.gamma_lower_ok)
                      ? "ok"
                      : "failed";
  doc["threshold"] = render_decimal(report.threshold, precision);
  if (report.best) {
    doc["witness_v"] = render_word(report.best->v, generator_names);
    doc["witness_w"] = render_word(report.best->w, generator_names);
    doc["witness_cost"] = report.best->cost;
    doc["omega_lower"] = render_decimal(report.best->omega_lower, precision);
  } else {
    doc["omega_lower"] = nullptr;
  }
  doc["upper"] = render_decimal(report.estimate.upper.back(), precision);
  doc["omega_lower_ok"] = report.omega_lower_ok;
  doc["upper_ok"] = report.upper_ok;
  doc["gamma_lower_ok"] = report.gamma_lower_ok;
  doc["margin"] = render_decimal(report.margin, precision);
  return dump(doc);
}

std::string weight_sets_csv(const freecalc::DepthReport& report) {
  std::ostringstream out;
  out << "i,set_size,depth,f_i,equal\n";
  for (const auto& row : report.rows) {
    out << row.weight << ',' << row.set_size << ',' << row.depth << ','
        << row.bound << ',' << (row.depth_equals_bound ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string limit_rows_csv(const std::vector<topo::LimitComparisonRow>& rows,
                           int precision) {
  std::ostringstream out;
  out << "i,conv_radius,gamma_i_m,gamma_lim_m,upper_i_m\n";
  for (const auto& row : rows) {
    out << row.index << ',' << row.conv_radius << ',' << row.gamma_i_m << ','
        << row.gamma_lim_m << ',' << render_decimal(row.upper_i_m, precision)
        << '\n';
  }
  return out.str();
}

std::string ball_iso_json(bool isomorphic, int radius) {
  ordered_json doc;
  doc["radius"] = radius;
  doc["isomorphic"] = isomorphic;
  return dump(doc);
}

std::string convergence_json(const std::string& label_a,
                             const std::string& label_b, int radius) {
  ordered_json doc;
  doc["group_a"] = label_a;
  doc["group_b"] = label_b;
  doc["conv_radius"] = radius;
  return dump(doc);
}

}  // namespace growthlab::io
