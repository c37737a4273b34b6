#include "maxcorr/io.hpp"

#include <fstream>
#include <sstream>

namespace maxcorr {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::runtime_error("matrix_from_json: expected nonempty array");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::runtime_error("matrix_from_json: ragged rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& entry = row.at(k);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::runtime_error(
            "matrix_from_json: entries must be [re, im] pairs");
      }
      m(i, k) = std::complex<double>(entry.at(0).get<double>(),
                                     entry.at(1).get<double>());
    }
  }
  return m;
}

json state_to_json(const BipartiteState& rho) {
  return json{{"dim_a", rho.dim_a},
              {"dim_b", rho.dim_b},
              {"matrix", matrix_to_json(rho.matrix)}};
}

BipartiteState state_from_json(const json& j) {
  const int dim_a = j.at("dim_a").get<int>();
  const int dim_b = j.at("dim_b").get<int>();
  const double tol = j.value("tol", defaults::atol);
  return validate_density(matrix_from_json(j.at("matrix")), dim_a, dim_b, tol);
}

json channel_to_json(const QuantumChannel& channel) {
  json kraus = json::array();
  for (const ComplexMatrix& k : channel.kraus) {
    kraus.push_back(matrix_to_json(k));
  }
  return json{{"dim_in", channel.dim_in},
              {"dim_out", channel.dim_out},
              {"kraus", std::move(kraus)}};
}

QuantumChannel channel_from_json(const json& j) {
  std::vector<ComplexMatrix> kraus;
  for (const json& k : j.at("kraus")) {
    kraus.push_back(matrix_from_json(k));
  }
  const double tol = j.value("tol", 1e-9);
  QuantumChannel channel = validate_channel(std::move(kraus), tol);
  if (channel.dim_in != j.at("dim_in").get<int>() ||
      channel.dim_out != j.at("dim_out").get<int>()) {
    throw std::runtime_error(
        "channel_from_json: declared dimensions disagree with Kraus shapes");
  }
  return channel;
}

JointDistribution distribution_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(std::stod(cell));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::runtime_error("distribution_from_csv: no rows");
  }
  RealMatrix p(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) {
      throw std::runtime_error("distribution_from_csv: ragged rows");
    }
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          rows[i][k];
    }
  }
  return validate_distribution(p);
}

std::string distribution_to_csv(const JointDistribution& dist) {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < dist.rows(); ++i) {
    for (int k = 0; k < dist.cols(); ++k) {
      if (k) out << ',';
      out << dist.p(i, k);
    }
    out << '\n';
  }
  return out.str();
}

json report_to_json(const SuiteReport& report) {
  json failures = json::array();
  for (const SuiteFailure& f : report.failures) {
    failures.push_back({{"trial", f.trial},
                        {"description", f.description},
                        {"violation", f.violation}});
  }
  json config = json::object();
  for (const auto& [key, value] : report.config) {
    config[key] = value;
  }
  return json{{"suite", report.suite_name}, {"trials", report.trials},
              {"failures", std::move(failures)},
              {"max_violation", report.max_violation},
              {"tolerance", report.tolerance},   {"seed", report.seed},
              {"config", std::move(config)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
}

BipartiteState load_state(const std::string& path) {
  return state_from_json(json::parse(read_file(path)));
}

QuantumChannel load_channel(const std::string& path) {
  return channel_from_json(json::parse(read_file(path)));
}

JointDistribution load_distribution(const std::string& path) {
  return distribution_from_csv(read_file(path));
}

}  // namespace maxcorr
