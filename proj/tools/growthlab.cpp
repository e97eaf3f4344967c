// growthlab CLI: exact growth tables, rate bounds, witness certificates,
// conjugate-stabilization reports and marked-ball comparisons for the
// built-in group realizations.

#include "growthlab/certificates.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/free_calculus.hpp"
#include "growthlab/group_spec.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/realization.hpp"
#include "growthlab/table_io.hpp"
#include "growthlab/topology.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace growthlab;

struct GlobalOptions {
  cli::RunConfig config;
  std::string format = "csv";

  void finalize() {
    if (format == "csv") {
      config.format = cli::RunConfig::Format::Csv;
    } else if (format == "json") {
      config.format = cli::RunConfig::Format::Json;
    } else if (format == "dot") {
      config.format = cli::RunConfig::Format::Dot;
    } else {
      throw SemanticError("unknown output format: " + format);
    }
    config.validate();
  }

  growth::BallOptions ball_options() const {
    return growth::BallOptions{config.element_cap, config.workers};
  }
};

void emit(const GlobalOptions& g, const std::string& content) {
  if (g.config.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(g.config.out_path, std::ios::binary);
  if (!out) {
    throw SemanticError("cannot open output file: " + g.config.out_path);
  }
  out << content;
}

// growth / omega share the enumeration pipeline.
int run_growth(const GlobalOptions& g, const std::string& spec_text,
               int radius, bool summary_only) {
  const cli::GroupSpec spec = cli::parse_spec(spec_text);
  const groups::RealizationPtr r = groups::make_realization(spec);
  const growth::Ball ball = growth::enumerate_ball(r, radius, g.ball_options());
  const growth::GrowthTable table = growth::growth_table(ball);
  growth::GrowthEstimate estimate;
  if (radius >= 1) estimate = growth::omega_bounds(table);

  if (summary_only) {
    if (radius < 1) throw SemanticError("omega needs radius >= 1");
    emit(g, io::omega_summary_json(spec.label, table, estimate,
                                   g.config.precision));
    return kExitOk;
  }
  if (g.config.format == cli::RunConfig::Format::Json) {
    emit(g, io::growth_json(table, estimate, g.config.precision));
  } else if (g.config.format == cli::RunConfig::Format::Csv) {
    emit(g, io::growth_csv(table, estimate, g.config.precision));
  } else {
    throw SemanticError("growth emits csv or json");
  }
  return kExitOk;
}

int run_witness(const GlobalOptions& g, const std::string& spec_text,
                const std::string& v_text, const std::string& w_text,
                int p_max) {
  const cli::GroupSpec spec = cli::parse_spec(spec_text);
  const groups::RealizationPtr r = groups::make_realization(spec);
  const Word v = parse_word(v_text, r->generator_names);
  const Word w = parse_word(w_text, r->generator_names);
  const certs::WitnessCertificate cert =
      certs::verify_witness(r, v, w, p_max, g.config.element_cap);
  emit(g, io::certificate_json(cert, r->generator_names, g.config.precision));
  return cert.injective ? kExitOk : kExitAssertionFailed;
}

int run_witness_search(const GlobalOptions& g, const std::string& spec_text,
                       int max_word_len, int p_max) {
  const cli::GroupSpec spec = cli::parse_spec(spec_text);
  const groups::RealizationPtr r = groups::make_realization(spec);
  const auto cert =
      certs::witness_search(r, max_word_len, p_max, g.config.element_cap);
  if (cert) {
    emit(g,
         io::certificate_json(*cert, r->generator_names, g.config.precision));
  } else {
    emit(g, io::witness_not_found_json());
  }
  return kExitOk;
}

int run_hvw(const GlobalOptions& g, const std::string& spec_text,
            const std::string& v_text, const std::string& w_text, int l_max) {
  const cli::GroupSpec spec = cli::parse_spec(spec_text);
  const groups::RealizationPtr r = groups::make_realization(spec);
  const Word v = parse_word(v_text, r->generator_names);
  const Word w = parse_word(w_text, r->generator_names);
  const certs::StabilizationReport report =
      certs::conjugate_stabilization(r, v, w, l_max, g.config.element_cap);
  emit(g, io::stabilization_json(report, r->generator_names));
  return kExitOk;
}

int run_ball_iso(const GlobalOptions& g, const std::string& spec_a,
                 const std::string& spec_b, int radius) {
  const groups::RealizationPtr ra =
      groups::make_realization(cli::parse_spec(spec_a));
  const groups::RealizationPtr rb =
      groups::make_realization(cli::parse_spec(spec_b));
  if (ra->generator_count != rb->generator_count) {
    throw SemanticError("specs have different marked alphabets");
  }
  const topo::MarkedBall a =
      topo::extract_marked_ball(ra, radius, g.ball_options());
  const topo::MarkedBall b =
      topo::extract_marked_ball(rb, radius, g.ball_options());
  if (g.config.format == cli::RunConfig::Format::Dot) {
    emit(g, topo::to_dot(a, ra->generator_names, "ball_a") +
                topo::to_dot(b, rb->generator_names, "ball_b"));
    return kExitOk;
  }
  emit(g, io::ball_iso_json(topo::balls_isomorphic(a, b), radius));
  return kExitOk;
}

int run_converge(const GlobalOptions& g, const std::string& spec_a,
                 const std::string& spec_b, int max_radius) {
  const cli::GroupSpec a = cli::parse_spec(spec_a);
  const cli::GroupSpec b = cli::parse_spec(spec_b);
  const int radius =
      topo::convergence_radius(a, b, max_radius, g.ball_options());
  emit(g, io::convergence_json(a.label, b.label, radius));
  return kExitOk;
}

int run_lemma71(const GlobalOptions& g, const std::string& limit_text,
                const std::vector<std::string>& member_texts, int m,
                int max_radius) {
  const cli::GroupSpec limit = cli::parse_spec(limit_text);
  std::vector<cli::GroupSpec> members;
  for (const auto& text : member_texts) {
    members.push_back(cli::parse_spec(text));
  }
  const auto rows =
      topo::limit_experiment(limit, members, m, max_radius, g.ball_options());
  emit(g, io::limit_rows_csv(rows, g.config.precision));
  return kExitOk;
}

int run_commutators(const GlobalOptions& g, int k, int n) {
  const freecalc::DepthReport report = freecalc::verify_depth_bound(k, n);
  emit(g, io::weight_sets_csv(report));
  return kExitOk;
}

int run_paper_bound(const GlobalOptions& g, int d) {
  emit(g, io::theoretical_bound_json(certs::theoretical_bound(d),
                                     g.config.precision));
  return kExitOk;
}

int run_crosscheck(const GlobalOptions& g, const std::string& spec_text,
                   int radius, int p_max, int max_word_len) {
  const cli::GroupSpec spec = cli::parse_spec(spec_text);
  const groups::RealizationPtr r = groups::make_realization(spec);
  const certs::MetabelianCrosscheck report = certs::crosscheck_metabelian(
      r, radius, p_max, max_word_len, g.ball_options());
  emit(g, io::crosscheck_json(report, r->generator_names, g.config.precision));
  if (!report.applicable) return kExitOk;
  const bool ok =
      report.omega_lower_ok && report.upper_ok && report.gamma_lower_ok;
  return ok ? kExitOk : kExitAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growthlab: exact growth of finitely generated groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "Config file (same keys as flags; flags win)");

  auto g = std::make_shared<GlobalOptions>();
  app.add_option("--cap", g->config.element_cap,
                 "Element budget for enumerations")
      ->envname("GROWTHLAB_CAP")
      ->capture_default_str();
  app.add_option("--workers", g->config.workers,
                 "Worker threads for ball enumeration")
      ->capture_default_str();
  app.add_option("--precision", g->config.precision,
                 "Fractional digits in emitted decimals (>= 12)")
      ->capture_default_str();
  app.add_option("--format", g->format, "Output format: csv, json or dot")
      ->capture_default_str();
  app.add_option("--out", g->config.out_path,
                 "Output file (default: stdout)");

  std::function<int()> action;

  {
    auto* cmd = app.add_subcommand("growth", "Exact sphere/ball growth table");
    auto spec = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(0);
    cmd->add_option("--group", *spec, "Group spec")->required();
    cmd->add_option("--radius", *radius, "Ball radius")->required();
    cmd->callback([=, &action] {
      action = [=] { return run_growth(*g, *spec, *radius, false); };
    });
  }
  {
    auto* cmd =
        app.add_subcommand("omega", "Growth-rate bound summary at a radius");
    auto spec = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(0);
    cmd->add_option("--group", *spec, "Group spec")->required();
    cmd->add_option("--radius", *radius, "Ball radius")->required();
    cmd->callback([=, &action] {
      action = [=] { return run_growth(*g, *spec, *radius, true); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "witness", "Verify injectivity of an interleaved word family");
    auto spec = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    auto p_max = std::make_shared<int>(8);
    cmd->add_option("--group", *spec, "Group spec")->required();
    cmd->add_option("--v", *v, "Word v (e.g. \"t\" or \"x*y^-1\")")
        ->required();
    cmd->add_option("--w", *w, "Word w")->required();
    cmd->add_option("--p-max", *p_max, "Longest bit sequence tested")
        ->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] { return run_witness(*g, *spec, *v, *w, *p_max); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "witness-search", "Search cheapest verified witness pair");
    auto spec = std::make_shared<std::string>();
    auto max_len = std::make_shared<int>(2);
    auto p_max = std::make_shared<int>(8);
    cmd->add_option("--group", *spec, "Group spec")->required();
    cmd->add_option("--max-word-len", *max_len, "Longest candidate word")
        ->capture_default_str();
    cmd->add_option("--p-max", *p_max, "Longest bit sequence tested")
        ->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] { return run_witness_search(*g, *spec, *max_len, *p_max); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "hvw", "Finite-generation probe for the conjugate subgroup of w by v");
    auto spec = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    auto l_max = std::make_shared<int>(10);
    cmd->add_option("--group", *spec, "Group spec")->required();
    cmd->add_option("--v", *v, "Conjugating word")->required();
    cmd->add_option("--w", *w, "Conjugated word")->required();
    cmd->add_option("--l-max", *l_max, "Largest window tested")
        ->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] { return run_hvw(*g, *spec, *v, *w, *l_max); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "ball-iso", "Labeled rooted isomorphism of two marked balls");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(0);
    cmd->add_option("--group-a", *a, "First group spec")->required();
    cmd->add_option("--group-b", *b, "Second group spec")->required();
    cmd->add_option("--radius", *radius, "Ball radius")->required();
    cmd->callback([=, &action] {
      action = [=] { return run_ball_iso(*g, *a, *b, *radius); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "converge", "Largest radius with isomorphic marked balls");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto max_radius = std::make_shared<int>(6);
    cmd->add_option("--group-a", *a, "First group spec")->required();
    cmd->add_option("--group-b", *b, "Second group spec")->required();
    cmd->add_option("--max-radius", *max_radius, "Largest radius tested")
        ->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] { return run_converge(*g, *a, *b, *max_radius); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "lemma71", "Local-limit experiment against a limit group");
    auto limit = std::make_shared<std::string>();
    auto members = std::make_shared<std::vector<std::string>>();
    auto m = std::make_shared<int>(6);
    auto max_radius = std::make_shared<int>(8);
    cmd->add_option("--limit", *limit, "Limit group spec")->required();
    cmd->add_option("--member", *members, "Member group spec (repeatable)")
        ->required();
    cmd->add_option("--m", *m, "Probe radius for ball counts")
        ->capture_default_str();
    cmd->add_option("--max-radius", *max_radius,
                    "Largest convergence radius tested")
        ->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] {
        return run_lemma71(*g, *limit, *members, *m, *max_radius);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "commutators", "Weighted commutator set sizes and depth bounds");
    auto k = std::make_shared<int>(2);
    auto n = std::make_shared<int>(3);
    cmd->add_option("--k", *k, "Free rank")->capture_default_str();
    cmd->add_option("--n", *n, "Largest weight")->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] { return run_commutators(*g, *k, *n); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "paper-bound", "Theoretical rate bound for nilpotency degree d");
    auto d = std::make_shared<int>(1);
    cmd->add_option("--d", *d, "Nilpotency degree (>= 1)")
        ->capture_default_str();
    cmd->callback(
        [=, &action] { action = [=] { return run_paper_bound(*g, *d); }; });
  }
  {
    auto* cmd = app.add_subcommand(
        "crosscheck-t24",
        "Witness and upper-bound crosscheck on a metabelian realization");
    auto spec = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(8);
    auto p_max = std::make_shared<int>(8);
    auto max_len = std::make_shared<int>(2);
    cmd->add_option("--group", *spec, "Group spec")->required();
    cmd->add_option("--radius", *radius, "Ball radius for the upper bound")
        ->capture_default_str();
    cmd->add_option("--p-max", *p_max, "Longest bit sequence tested")
        ->capture_default_str();
    cmd->add_option("--max-word-len", *max_len, "Longest candidate word")
        ->capture_default_str();
    cmd->callback([=, &action] {
      action = [=] {
        return run_crosscheck(*g, *spec, *radius, *p_max, *max_len);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    g->finalize();
    if (!action) throw SemanticError("no command selected");
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what()
              << "\n";
    return kExitParseError;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
