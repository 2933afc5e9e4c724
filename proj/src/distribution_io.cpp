#include "trialsig/distribution_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trialsig::io {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

contdist::DiscreteDistribution load_distribution_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("distribution CSV: empty input");
  std::string header = trim(line);
  for (char& c : header) c = static_cast<char>(std::tolower(c));
  if (header != "value,mass")
    throw std::runtime_error("distribution CSV: header row 'value,mass' required");
  std::vector<double> values;
  std::vector<double> masses;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("distribution CSV: line " +
                               std::to_string(lineno) + " has no comma");
    try {
      values.push_back(std::stod(t.substr(0, comma)));
      masses.push_back(std::stod(t.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::runtime_error("distribution CSV: bad number on line " +
                               std::to_string(lineno));
    }
  }
  if (values.size() < 1)
    throw std::runtime_error("distribution CSV: no data rows");
  double step = 1.0;
  if (values.size() > 1) {
    step = values[1] - values[0];
    if (!(step > 0.0))
      throw std::runtime_error("distribution CSV: values must increase");
    for (std::size_t i = 1; i < values.size(); ++i) {
      const double d = values[i] - values[i - 1];
      if (std::fabs(d - step) > 1e-9 * std::max(std::fabs(step), 1.0))
        throw std::runtime_error(
            "distribution CSV: grid spacing must be uniform (1e-9 relative)");
    }
  }
  double sum = 0.0;
  for (const double m : masses) {
    if (!(m >= 0.0))
      throw std::runtime_error("distribution CSV: masses must be nonnegative");
    sum += m;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::runtime_error("distribution CSV: masses must sum to 1 within 1e-9");
  for (double& m : masses) m /= sum;
  contdist::DiscreteDistribution dist{values.front(), step, std::move(masses)};
  dist.validate();
  return dist;
}

contdist::DiscreteDistribution load_distribution_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distribution CSV: " + path);
  return load_distribution_csv(in);
}

void save_distribution_csv(std::ostream& out,
                           const contdist::DiscreteDistribution& dist) {
  out << "value,mass\n";
  char buf[64];
  for (std::size_t i = 0; i < dist.mass.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", dist.value_at(i),
                  dist.mass[i]);
    out << buf;
  }
}

}  // namespace trialsig::io
