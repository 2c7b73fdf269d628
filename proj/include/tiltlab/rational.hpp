#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace tiltlab {

// Exact rational scalar. All arithmetic in the engine happens over this type;
// no floating point anywhere.
using Rat = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = MatrixX<Rat>;
using RatVector = VectorX<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "num/den" form, denominator always spelled out.
inline std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q".
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace tiltlab
