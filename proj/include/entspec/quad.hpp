#pragma once

// 113-bit floating point for the correlation-matrix oracle, with the Eigen
// traits needed to run the dense eigensolvers on it.

#include <Eigen/Core>
#include <boost/multiprecision/float128.hpp>

namespace entspec {
using Quad = boost::multiprecision::float128;
using QuadMatrix = Eigen::Matrix<Quad, Eigen::Dynamic, Eigen::Dynamic>;
using QuadVector = Eigen::Matrix<Quad, Eigen::Dynamic, 1>;
}  // namespace entspec

namespace Eigen {
template <>
struct NumTraits<entspec::Quad> : GenericNumTraits<entspec::Quad> {
  using Real = entspec::Quad;
  using NonInteger = entspec::Quad;
  using Nested = entspec::Quad;
  using Literal = entspec::Quad;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static entspec::Quad epsilon() { return std::numeric_limits<entspec::Quad>::epsilon(); }
  static entspec::Quad dummy_precision() { return entspec::Quad(1e-30); }
  static entspec::Quad highest() { return (std::numeric_limits<entspec::Quad>::max)(); }
  static entspec::Quad lowest() { return std::numeric_limits<entspec::Quad>::lowest(); }
  static int digits10() { return 33; }
};
}  // namespace Eigen
