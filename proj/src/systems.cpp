#include "fracstab/systems.hpp"

#include <cmath>
#include <stdexcept>

#include "fracstab/errors.hpp"

namespace fracstab {

MapSpec logistic_map(const LogisticParams& params) {
  const double lambda = params.lambda;
  MapSpec spec;
  spec.dimension = 1;
  spec.f = [lambda](const ComplexVector& x) { return ComplexVector{lambda * x[0] * (1.0 - x[0])}; };
  spec.jacobian = [lambda](const ComplexVector& x) {
    ComplexMatrix j(1, 1);
    j(0, 0) = lambda - 2.0 * lambda * x[0];
    return j;
  };
  return spec;
}

std::vector<ComplexVector> logistic_equilibria(const LogisticParams& params) {
  std::vector<ComplexVector> out{{Complex(0.0, 0.0)}};
  if (params.lambda != 0.0) out.push_back({Complex((params.lambda - 1.0) / params.lambda, 0.0)});
  return out;
}

MapSpec coupled_map(const CoupledParams& params) {
  const double lambda = params.lambda;
  const double mu = params.mu;
  MapSpec spec;
  spec.dimension = 2;
  spec.f = [lambda, mu](const ComplexVector& v) {
    const Complex x = v[0];
    const Complex y = v[1];
    return ComplexVector{lambda * x * (y + 1.0) + mu * (x * x + 1.0) * y,
                         lambda * y * (x + 1.0) - mu * (y + 1.0) * (y + 1.0) * x};
  };
  spec.jacobian = [lambda, mu](const ComplexVector& v) {
    const Complex x = v[0];
    const Complex y = v[1];
    ComplexMatrix j(2, 2);
    j(0, 0) = lambda * (y + 1.0) + 2.0 * mu * x * y;
    j(0, 1) = lambda * x + mu * (x * x + 1.0);
    j(1, 0) = lambda * y - mu * (y + 1.0) * (y + 1.0);
    j(1, 1) = lambda * (x + 1.0) - 2.0 * mu * (y + 1.0) * x;
    return j;
  };
  return spec;
}

std::vector<ComplexVector> coupled_equilibria(const CoupledParams&) { return {{Complex(0.0, 0.0), Complex(0.0, 0.0)}}; }

MapSpec linear_map(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("linear_map: matrix is not square");
  MapSpec spec;
  spec.dimension = a.rows();
  spec.f = [a](const ComplexVector& x) { return a * x; };
  spec.jacobian = [a](const ComplexVector&) { return a; };
  return spec;
}

StabilityVerdict equilibrium_verdict(const ComplexOrder& order, const MapSpec& map, const ComplexVector& point) {
  const ComplexVector fx = map.f(point);
  ComplexVector residual(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) residual[i] = fx[i] - point[i];
  const double r = norm2(residual);
  if (!(r <= 1e-8)) throw NotAnEquilibriumError("equilibrium_verdict: ||f(x) - x|| = " + format_real(r));
  return classify_matrix(order, map.jacobian_at(point));
}

namespace {

double real_param(const SystemParams& params, const std::string& system, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("system '" + system + "': missing parameter '" + key + "'");
  if (it->second.imag() != 0.0) {
    throw std::invalid_argument("system '" + system + "': parameter '" + key + "' must be real");
  }
  return it->second.real();
}

void reject_unknown(const SystemParams& params, const std::string& system, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("system '" + system + "': unknown parameter '" + key + "'");
  }
}

}  // namespace

std::optional<SystemEntry> make_system(const std::string& name, const SystemParams& params) {
  if (name == "linear") {
    reject_unknown(params, name, {"lambda"});
    const auto it = params.find("lambda");
    if (it == params.end()) throw std::invalid_argument("system 'linear': missing parameter 'lambda'");
    ComplexMatrix a(1, 1);
    a(0, 0) = it->second;
    return SystemEntry{name, linear_map(a), {{Complex(0.0, 0.0)}}};
  }
  if (name == "logistic") {
    reject_unknown(params, name, {"lambda"});
    const LogisticParams p{real_param(params, name, "lambda")};
    return SystemEntry{name, logistic_map(p), logistic_equilibria(p)};
  }
  if (name == "coupled2d") {
    reject_unknown(params, name, {"lambda", "mu"});
    const CoupledParams p{real_param(params, name, "lambda"), real_param(params, name, "mu")};
    return SystemEntry{name, coupled_map(p), coupled_equilibria(p)};
  }
  return std::nullopt;
}

std::vector<std::string> system_names() { return {"linear", "logistic", "coupled2d"}; }

}  // namespace fracstab
