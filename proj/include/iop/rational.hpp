#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iop {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

/// Parses `-3`, `7`, `1/2`, `-5/10` (reduced on construction).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p/q` or `p` when integral; never a decimal.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
std::string to_string(const RationalVector& v);

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Largest integer <= r.
Integer floor(const Rational& r);
/// Smallest integer >= r.
Integer ceil(const Rational& r);

/// Narrowing to int64; throws std::overflow_error when out of range.
std::int64_t to_int64(const Integer& value);
std::int64_t to_int64(const Rational& value);

inline int sign(const Rational& r) { return r.sign(); }

RationalVector make_vector(std::initializer_list<Rational> entries);
RationalMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows);

/// Lexicographic total order on vectors (shorter first); used for canonical sorting.
bool lex_less(const RationalVector& a, const RationalVector& b);
bool lex_less(const RationalMatrix& a, const RationalMatrix& b);

/// Exact structural equality (sizes and entries).
bool same(const RationalVector& a, const RationalVector& b);
bool same(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace iop
