#include "polariton/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polariton/constants.hpp"

namespace polariton {

namespace {

using constants::kBoltzmannWavenumber;
using constants::kGasConstant;
using constants::kMolarEnergyPerWavenumber;

void check_spectrum(std::span<const double> energies) {
  if (energies.empty()) throw std::invalid_argument("thermo: empty spectrum");
  for (double e : energies) {
    if (!std::isfinite(e)) throw std::invalid_argument("thermo: non-finite energy");
  }
}

void check_temperature(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("thermo: temperature must be positive and finite");
  }
}

struct Moments {
  double q;
  double mean;      // <E - E0>, cm^-1
  double variance;  // cm^-2
};

Moments boltzmann_moments(std::span<const double> energies, double e0, double t) {
  const double beta = 1.0 / (kBoltzmannWavenumber * t);
  double q = 0.0, first = 0.0;
  for (double e : energies) {
    const double w = std::exp(-(e - e0) * beta);
    q += w;
    first += w * (e - e0);
  }
  const double mean = first / q;
  double second = 0.0;
  for (double e : energies) {
    const double d = e - e0 - mean;
    second += std::exp(-(e - e0) * beta) * d * d;
  }
  return {q, mean, second / q};
}

}  // namespace

double partition_function(std::span<const double> energies, double temperature) {
  check_spectrum(energies);
  check_temperature(temperature);
  const double e0 = *std::min_element(energies.begin(), energies.end());
  return boltzmann_moments(energies, e0, temperature).q;
}

ThermoTable thermo_table(std::span<const double> energies, std::span<const double> temperatures) {
  check_spectrum(energies);
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    check_temperature(temperatures[i]);
    if (i > 0 && !(temperatures[i] > temperatures[i - 1])) {
      throw std::invalid_argument("thermo: temperature grid must be strictly ascending");
    }
  }
  const double e0 = *std::min_element(energies.begin(), energies.end());

  ThermoTable table;
  table.temperatures.assign(temperatures.begin(), temperatures.end());
  const std::size_t n = temperatures.size();
  table.q.resize(n);
  table.u.resize(n);
  table.c.resize(n);
  table.s.resize(n);
  table.g.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = temperatures[i];
    const Moments mom = boltzmann_moments(energies, e0, t);
    const double u = kMolarEnergyPerWavenumber * mom.mean;  // J mol^-1
    const double ln_q = std::log(mom.q);
    table.q[i] = mom.q;
    table.u[i] = u / 1000.0;
    table.c[i] = kMolarEnergyPerWavenumber * mom.variance / (kBoltzmannWavenumber * t * t);
    table.s[i] = u / t + kGasConstant * ln_q;
    table.g[i] = -kGasConstant * t * ln_q / 1000.0;
  }
  return table;
}

std::vector<double> temperature_grid(double tmin, double tmax, double step) {
  if (!(tmin > 0.0) || !(step > 0.0) || !(tmax >= tmin)) {
    throw std::invalid_argument("temperature grid: need 0 < tmin <= tmax and step > 0");
  }
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor((tmax - tmin) / step + 1e-9)) + 1;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) grid.push_back(tmin + static_cast<double>(i) * step);
  return grid;
}

ThermoTable difference(const ThermoTable& a, const ThermoTable& baseline) {
  if (a.temperatures != baseline.temperatures) {
    throw std::invalid_argument("thermo difference: temperature grids differ");
  }
  ThermoTable out;
  out.temperatures = a.temperatures;
  auto sub = [](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
  };
  out.q = sub(a.q, baseline.q);
  out.u = sub(a.u, baseline.u);
  out.c = sub(a.c, baseline.c);
  out.s = sub(a.s, baseline.s);
  out.g = sub(a.g, baseline.g);
  return out;
}

std::vector<SectorThermo> sector_thermo_compare(const EnsembleSpec& spec,
                                                std::span<const double> temperatures,
                                                std::span<const Statistics> sectors,
                                                const HamiltonianOptions& hamiltonian,
                                                const ThermoOptions& options) {
  std::vector<Statistics> order{Statistics::None};
  for (Statistics s : sectors) {
    if (std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
  }
  const auto results = run_sectors(spec, order, hamiltonian);
  const auto& none = results.front().spectrum.energies;
  if (none.empty()) throw std::invalid_argument("thermo: empty unprojected spectrum");
  const double none_e0 = none.front();

  std::vector<SectorThermo> out;
  out.reserve(results.size());
  for (const auto& r : results) {
    if (r.spectrum.energies.empty()) {
      throw std::invalid_argument("thermo: the " + std::string(to_string(r.statistics)) +
                                  " sector is empty");
    }
    SectorThermo st;
    st.statistics = r.statistics;
    st.dimension = r.subspace.dim();
    st.ground_energy = r.spectrum.energies.front();
    st.zero_point_shift = st.ground_energy - none_e0;
    st.absolute = thermo_table(r.spectrum.energies, temperatures);
    if (options.include_zero_point) {
      const double offset = kMolarEnergyPerWavenumber * st.zero_point_shift / 1000.0;
      for (auto& v : st.absolute.u) v += offset;
      for (auto& v : st.absolute.g) v += offset;
    }
    out.push_back(std::move(st));
  }
  for (auto& st : out) st.relative = difference(st.absolute, out.front().absolute);
  return out;
}

}  // namespace polariton
