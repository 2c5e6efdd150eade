#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <vector>

namespace cyfano {

// Every quantity in the library is exact: integers are GMP-backed bignums,
// rationals are canonicalized bignum fractions.  No floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Floor division with positive or negative numerator; b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - b * floor_div(a, b); }

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return -floor_div(-num(r), den(r)); }

template <typename Scalar>
bool exactly_equal(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                   const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Scalar>
bool exactly_equal(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& a,
                   const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

template <typename Scalar>
bool lex_less(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& a,
              const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

inline RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

inline RatMatrix to_rat(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = Rat(a(i, j));
  return out;
}

std::string rat_to_string(const Rat& r);  // "p/q", or "p" when q == 1

}  // namespace cyfano
