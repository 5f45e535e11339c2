#include "polariton/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace polariton {

namespace {

// For each basis index with nonzero photon number: the (column, amplitude)
// pairs of the subspace columns supported there.
std::vector<std::vector<std::pair<Eigen::Index, double>>> bright_support(
    const SubspaceBasis& subspace) {
  std::vector<std::vector<std::pair<Eigen::Index, double>>> support(subspace.source->size());
  for (std::size_t c = 0; c < subspace.columns.size(); ++c) {
    for (const auto& e : subspace.columns[c]) {
      if (subspace.source->photons(e.index) != 0) {
        support[e.index].emplace_back(static_cast<Eigen::Index>(c), e.value);
      }
    }
  }
  return support;
}

}  // namespace

Eigen::MatrixXd photon_matrix(const SubspaceBasis& subspace) {
  const auto dim = static_cast<Eigen::Index>(subspace.dim());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  const auto support = bright_support(subspace);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k].empty()) continue;
    const double photons = subspace.source->photons(k);
    for (const auto& [a, va] : support[k]) {
      for (const auto& [b, vb] : support[k]) out(a, b) += photons * va * vb;
    }
  }
  return out;
}

BrightnessReport brightness(const SubspaceBasis& subspace) {
  BrightnessReport report;
  report.dim = subspace.dim();
  for (const auto& column : subspace.columns) {
    for (const auto& e : column) {
      report.trace += subspace.source->photons(e.index) * e.value * e.value;
    }
  }
  report.ratio = report.dim == 0 ? 0.0 : report.trace / static_cast<double>(report.dim);
  return report;
}

double photon_expectation(const SubspaceBasis& subspace, const Eigen::VectorXd& coefficients) {
  if (coefficients.size() != static_cast<Eigen::Index>(subspace.dim())) {
    throw std::invalid_argument("photon_expectation: coefficient count does not match subspace");
  }
  if (std::abs(coefficients.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("photon_expectation: state vector is not normalized");
  }
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(subspace.source->size()));
  for (std::size_t c = 0; c < subspace.columns.size(); ++c) {
    for (const auto& e : subspace.columns[c]) {
      psi(static_cast<Eigen::Index>(e.index)) += coefficients(static_cast<Eigen::Index>(c)) * e.value;
    }
  }
  double value = 0.0;
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    value += subspace.source->photons(static_cast<std::size_t>(k)) * psi(k) * psi(k);
  }
  return value;
}

BrightnessClass classify(double photon_expectation, const ClassThresholds& thresholds) {
  if (photon_expectation < thresholds.dark_below) return BrightnessClass::Dark;
  if (photon_expectation > thresholds.photonic_above) return BrightnessClass::Photonic;
  return BrightnessClass::Polaritonic;
}

std::string_view to_string(BrightnessClass c) {
  switch (c) {
    case BrightnessClass::Dark: return "dark";
    case BrightnessClass::Polaritonic: return "polaritonic";
    case BrightnessClass::Photonic: return "photonic";
  }
  return "unknown";
}

}  // namespace polariton
