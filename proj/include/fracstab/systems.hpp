#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracstab/complex.hpp"
#include "fracstab/order.hpp"
#include "fracstab/solver.hpp"
#include "fracstab/stability.hpp"

namespace fracstab {

struct LogisticParams {
  double lambda;
};

struct CoupledParams {
  double lambda;
  double mu;
};

/// f(x) = lambda x (1 - x), f'(x) = lambda - 2 lambda x.
MapSpec logistic_map(const LogisticParams& params);
/// {0, (lambda - 1)/lambda}; the second is omitted when lambda is 0 and
/// coincides with 0 when lambda is 1.
std::vector<ComplexVector> logistic_equilibria(const LogisticParams& params);

/// f1 = lambda x (y + 1) + mu (x^2 + 1) y
/// f2 = lambda y (x + 1) - mu (y + 1)^2 x
MapSpec coupled_map(const CoupledParams& params);
std::vector<ComplexVector> coupled_equilibria(const CoupledParams& params);

/// f(x) = A x.
MapSpec linear_map(const ComplexMatrix& a);

/// Local verdict of an equilibrium through its linearization.
/// Throws NotAnEquilibriumError if ||f(point) - point|| > 1e-8.
StabilityVerdict equilibrium_verdict(const ComplexOrder& order, const MapSpec& map, const ComplexVector& point);

struct SystemEntry {
  std::string name;
  MapSpec map;
  std::vector<ComplexVector> equilibria;
};

using SystemParams = std::map<std::string, Complex>;

/// Registry of built-in systems: "linear" (lambda, complex allowed),
/// "logistic" (lambda) and "coupled2d" (lambda, mu). Throws
/// std::invalid_argument naming the offending parameter for unknown or
/// missing parameters; returns nullopt for unknown system names.
std::optional<SystemEntry> make_system(const std::string& name, const SystemParams& params);

std::vector<std::string> system_names();

}  // namespace fracstab
