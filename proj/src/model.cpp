#include "entspec/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entspec/errors.hpp"

namespace entspec {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Case1a: return "Case1a";
    case Region::Case1b: return "Case1b";
    case Region::Case2: return "Case2";
    case Region::CriticalXX: return "CriticalXX";
    case Region::CriticalIsing: return "CriticalIsing";
    case Region::FactorizingLine: return "FactorizingLine";
  }
  return "unknown";
}

ModelPoint classify(double gamma, double h, double eps_crit) {
  ModelPoint p;
  p.gamma = std::abs(gamma);
  p.h = std::abs(h);
  const double g = p.gamma;
  const double f = p.h;
  const double circle = 4.0 * (1.0 - g * g);
  if (std::abs(f - 2.0) <= eps_crit) {
    p.region = Region::CriticalIsing;
  } else if (g <= eps_crit && f < 2.0) {
    p.region = Region::CriticalXX;
  } else if (f < 2.0 && std::abs(f * f - circle) <= eps_crit) {
    p.region = Region::FactorizingLine;
  } else if (f > 2.0) {
    p.region = Region::Case2;
  } else if (f * f > circle) {
    p.region = Region::Case1a;
  } else {
    p.region = Region::Case1b;
  }
  return p;
}

bool is_gapped(const ModelPoint& point) {
  return point.region != Region::CriticalXX && point.region != Region::CriticalIsing;
}

Moduli elliptic_moduli(const ModelPoint& point) {
  const double g = point.gamma;
  const double half_h = 0.5 * point.h;
  Moduli m;
  switch (point.region) {
    case Region::Case2: {
      const double above = (half_h - 1.0) * (half_h + 1.0);
      const double denom = above + g * g;
      m.k = g / std::sqrt(denom);
      m.k_prime = std::sqrt(above / denom);
      break;
    }
    case Region::Case1a:
    case Region::FactorizingLine: {
      const double below = (1.0 - half_h) * (1.0 + half_h);
      m.k = std::sqrt(std::max(0.0, g * g - below)) / g;
      m.k_prime = std::sqrt(below) / g;
      break;
    }
    case Region::Case1b: {
      const double below = (1.0 - half_h) * (1.0 + half_h);
      m.k = std::sqrt(std::max(0.0, below - g * g) / below);
      m.k_prime = g / std::sqrt(below);
      break;
    }
    case Region::CriticalXX:
    case Region::CriticalIsing:
      throw CriticalInputError("elliptic_parameter: point (gamma=" + std::to_string(g) +
                               ", h=" + std::to_string(point.h) + ") lies on a critical line");
  }
  m.k = std::min(m.k, 1.0);
  m.k_prime = std::min(m.k_prime, 1.0);
  return m;
}

double elliptic_parameter(const ModelPoint& point) { return elliptic_moduli(point).k; }

GapInfo gap_info(const ModelPoint& point) {
  const double ising = std::abs(point.h - 2.0);
  GapInfo info{ising, 0.5, 0.0};
  const bool xx_candidate = point.h < 2.0 && point.region != Region::Case1a;
  if (xx_candidate && point.gamma <= ising) {
    info.delta = point.gamma;
    info.central_charge = 1.0;
  }
  info.xi = info.delta > 0.0 ? 1.0 / info.delta : INFINITY;
  return info;
}

}  // namespace entspec
