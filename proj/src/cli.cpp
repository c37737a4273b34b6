#include "maxcorr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "maxcorr/harness.hpp"
#include "maxcorr/io.hpp"
#include "maxcorr/random.hpp"

namespace maxcorr {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "maxcorr 1.0.0 (format 1)";

// Missing or unparseable input files are usage errors (exit 2), as opposed
// to computation failures on well-formed inputs (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_json_file(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

JointDistribution parse_csv_file(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  try {
    return distribution_from_csv(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(path + ": malformed CSV number");
  }
}

void emit(const json& result, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << result.dump(2) << '\n';
  } else {
    write_file(out_path, result.dump(2) + "\n");
  }
}

json vectors_to_json(const std::vector<ComplexMatrix>& vectors) {
  json list = json::array();
  for (const ComplexMatrix& v : vectors) list.push_back(matrix_to_json(v));
  return list;
}

json distribution_to_json(const JointDistribution& dist) {
  json rows = json::array();
  for (int i = 0; i < dist.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < dist.cols(); ++k) row.push_back(dist.p(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json index_list(const std::vector<int>& xs) { return json(xs); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Maximal correlation of bipartite quantum states"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string state_path, channel_path, dist_path, out_path;
  std::uint64_t seed = 42;
  int trials = 200;
  double tol = -1.0;  // negative means "use the module default"
  int restarts = 8;
  int max_iters = 5000;
  int dim_a = 3, dim_b = 3;
  bool with_vectors = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON result to this file");
  };
  const auto add_state = [&](CLI::App* cmd) {
    cmd->add_option("--state", state_path, "bipartite state JSON file")
        ->required();
    add_common(cmd);
  };
  const auto add_dist = [&](CLI::App* cmd) {
    cmd->add_option("--dist", dist_path, "joint distribution CSV file")
        ->required();
    add_common(cmd);
  };
  const auto add_suite = [&](CLI::App* cmd) {
    cmd->add_option("--trials", trials, "number of randomized trials");
    cmd->add_option("--seed", seed, "suite seed");
    add_common(cmd);
  };

  CLI::App* mu_cmd = app.add_subcommand("mu", "maximal correlation of a state");
  add_state(mu_cmd);
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "all Schmidt coefficients");
  add_state(spectrum_cmd);
  spectrum_cmd->add_flag("--vectors", with_vectors,
                         "include operator Schmidt vectors");
  CLI::App* optimizers_cmd =
      app.add_subcommand("optimizers", "observables attaining mu");
  add_state(optimizers_cmd);
  CLI::App* classical_cmd =
      app.add_subcommand("classical-mu", "maximal correlation of a distribution");
  add_dist(classical_cmd);
  CLI::App* binary_cmd =
      app.add_subcommand("binary-exact", "closed-form mu for 2x2 distributions");
  add_dist(binary_cmd);
  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "support-block decomposability");
  add_dist(decompose_cmd);
  decompose_cmd->add_option("--tol", tol, "support threshold");
  CLI::App* common_cmd =
      app.add_subcommand("common-data", "perfectly correlated local measurements");
  add_state(common_cmd);
  common_cmd->add_option("--tol", tol, "witness tolerance");
  CLI::App* dpi_cmd =
      app.add_subcommand("dpi-suite", "data processing property suite");
  add_suite(dpi_cmd);
  dpi_cmd->add_option("--dim-a", dim_a, "largest A dimension");
  dpi_cmd->add_option("--dim-b", dim_b, "largest B dimension");
  CLI::App* tensor_cmd =
      app.add_subcommand("tensor-suite", "tensorization property suite");
  add_suite(tensor_cmd);
  CLI::App* extreme_cmd =
      app.add_subcommand("extreme-suite", "extreme-value property suite");
  add_suite(extreme_cmd);
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-compare", "variational oracle against the spectral route");
  oracle_cmd->add_option("--state", state_path,
                         "compare on this state instead of random ones");
  oracle_cmd->add_option("--trials", trials, "number of random states");
  oracle_cmd->add_option("--seed", seed, "seed");
  oracle_cmd->add_option("--restarts", restarts, "oracle restarts");
  oracle_cmd->add_option("--max-iters", max_iters, "oracle iteration cap");
  add_common(oracle_cmd);
  CLI::App* mi_cmd = app.add_subcommand("mi", "mutual information in bits");
  add_state(mi_cmd);
  CLI::App* apply_cmd =
      app.add_subcommand("apply-channel", "apply a local channel to a state");
  apply_cmd->add_option("--state", state_path, "bipartite state JSON file")
      ->required();
  apply_cmd->add_option("--channel", channel_path, "channel JSON file")
      ->required();
  std::string side_name = "B";
  apply_cmd->add_option("--side", side_name, "register to act on (A or B)")
      ->check(CLI::IsMember({"A", "B"}));
  add_common(apply_cmd);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*mu_cmd) {
      const BipartiteState rho = state_from_json(parse_json_file(state_path));
      emit(json{{"mu", maximal_correlation(rho)}}, out_path, out);
    } else if (*spectrum_cmd) {
      const BipartiteState rho = state_from_json(parse_json_file(state_path));
      const SchmidtSpectrum spectrum = schmidt_spectrum(rho);
      json result{{"coefficients", std::vector<double>(
                                       spectrum.coefficients.begin(),
                                       spectrum.coefficients.end())}};
      if (with_vectors) {
        result["a_vectors"] = vectors_to_json(spectrum.a_vectors);
        result["b_vectors"] = vectors_to_json(spectrum.b_vectors);
      }
      emit(result, out_path, out);
    } else if (*optimizers_cmd) {
      const BipartiteState rho = state_from_json(parse_json_file(state_path));
      const OptimizerPair opt = extract_optimizers(rho);
      emit(json{{"x", matrix_to_json(opt.x_a)},
                {"y", matrix_to_json(opt.y_b)},
                {"value", opt.value},
                {"hermitian", opt.hermitian},
                {"degenerate", opt.degenerate}},
           out_path, out);
    } else if (*classical_cmd) {
      const JointDistribution dist = parse_csv_file(dist_path);
      emit(json{{"mu", classical_maximal_correlation(dist)}}, out_path, out);
    } else if (*binary_cmd) {
      const JointDistribution dist = parse_csv_file(dist_path);
      emit(json{{"mu", binary_mu_exact(dist)}}, out_path, out);
    } else if (*decompose_cmd) {
      const JointDistribution dist = parse_csv_file(dist_path);
      const auto partition =
          find_decomposition(dist, tol < 0.0 ? 1e-12 : tol);
      json result{{"decomposable", partition.has_value()}};
      if (partition) {
        result["partition"] = json{{"rows0", index_list(partition->rows0)},
                                   {"rows1", index_list(partition->rows1)},
                                   {"cols0", index_list(partition->cols0)},
                                   {"cols1", index_list(partition->cols1)}};
      }
      emit(result, out_path, out);
    } else if (*common_cmd) {
      const BipartiteState rho = state_from_json(parse_json_file(state_path));
      const auto witness = common_data_witness(rho, tol < 0.0 ? 1e-6 : tol);
      if (!witness) {
        emit(json{{"witness", "absent"}}, out_path, out);
      } else {
        emit(json{{"witness",
                   json{{"effect_a", matrix_to_json(witness->on_a.effect)},
                        {"effect_b", matrix_to_json(witness->on_b.effect)},
                        {"outcome", distribution_to_json(witness->outcome)}}}},
             out_path, out);
      }
    } else if (*dpi_cmd) {
      emit(report_to_json(run_dpi_suite(trials, dim_a, dim_b, seed)), out_path,
           out);
    } else if (*tensor_cmd) {
      emit(report_to_json(run_tensorization_suite(trials, seed)), out_path,
           out);
    } else if (*extreme_cmd) {
      emit(report_to_json(run_extreme_suite(trials, seed)), out_path, out);
    } else if (*oracle_cmd) {
      if (!state_path.empty()) {
        const BipartiteState rho =
            state_from_json(parse_json_file(state_path));
        const double oracle = oracle_mu(rho, restarts, max_iters, seed);
        const double spectral = maximal_correlation(rho);
        emit(json{{"oracle", oracle},
                  {"spectral", spectral},
                  {"abs_diff", std::abs(oracle - spectral)}},
             out_path, out);
      } else {
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
          std::mt19937_64 rng =
              seeded_rng(seed, static_cast<std::uint64_t>(t));
          const int da = 2 + static_cast<int>(rng() % 2);
          const int db = 2 + static_cast<int>(rng() % 2);
          const int rank = 1 + static_cast<int>(rng() % (da * db));
          const BipartiteState rho = random_bipartite(da, db, rank, rng());
          const double oracle = oracle_mu(rho, restarts, max_iters, rng());
          worst = std::max(worst,
                           std::abs(oracle - maximal_correlation(rho)));
        }
        emit(json{{"trials", trials}, {"max_abs_diff", worst}}, out_path, out);
      }
    } else if (*mi_cmd) {
      const BipartiteState rho = state_from_json(parse_json_file(state_path));
      emit(json{{"mi", mutual_information(rho)}}, out_path, out);
    } else if (*apply_cmd) {
      const BipartiteState rho = state_from_json(parse_json_file(state_path));
      const QuantumChannel channel =
          channel_from_json(parse_json_file(channel_path));
      const Side side = side_name == "A" ? Side::A : Side::B;
      emit(state_to_json(apply_local(channel, rho, side)), out_path, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace maxcorr
