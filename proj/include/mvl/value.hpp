/* mvlmul: multi-valued multiplier construction and costing
 *
 * Copyright 2026 The mvlmul Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 */

/*!
  \file value.hpp
  \brief Digit values, per-wire value ranges, and digit-vector codecs.

  Every signal in this library is a single digit with an inclusive range
  [0, max_value].  Binary wires use max 1, ternary carries max 2 and
  quaternary digits max 3.  A wire of smaller range may legally drive a
  port of larger range; the converse is a structural error.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mvl
{

/*! \brief Inclusive value range [0, max_value] of a digit signal. */
struct ValueRange
{
  int max_value{1};

  constexpr int num_values() const { return max_value + 1; }
  constexpr bool contains( int v ) const { return v >= 0 && v <= max_value; }

  static constexpr ValueRange binary() { return ValueRange{1}; }
  static constexpr ValueRange ternary() { return ValueRange{2}; }
  static constexpr ValueRange quaternary() { return ValueRange{3}; }

  /*! \brief Widest digit range of a radix: [0, radix - 1]. */
  static constexpr ValueRange of_radix( int radix ) { return ValueRange{radix - 1}; }

  friend constexpr bool operator==( ValueRange a, ValueRange b ) { return a.max_value == b.max_value; }
  friend constexpr bool operator!=( ValueRange a, ValueRange b ) { return !( a == b ); }
};

/*! \brief A digit together with its declared range. */
struct DigitValue
{
  int value{0};
  ValueRange range{};

  bool in_range() const { return range.contains( value ); }
};

/*! \brief Fixed-radix digit string, least-significant digit first. */
struct DigitVector
{
  int radix{2}; //!< 2 or 4
  std::vector<int> digits; //!< digits[0] has weight radix^0

  std::size_t width() const { return digits.size(); }
};

/*! \brief Decompose \p value into \p width base-\p radix digits, LSD first.
 *
 * Throws std::invalid_argument if radix is not 2 or 4, or if the value does
 * not fit in the requested width.
 */
DigitVector to_digits( std::uint64_t value, int radix, std::size_t width );

/*! \brief Recompose a digit vector into an integer.
 *
 * Throws std::invalid_argument on an invalid radix, a digit outside
 * [0, radix-1], or a value exceeding the 64-bit range.
 */
std::uint64_t from_digits( const DigitVector& dv );

/*! \brief Result ranges of a digit-domain addition. */
struct SumRanges
{
  ValueRange sum;
  std::optional<ValueRange> carry; //!< absent when the sum cannot overflow one digit
};

/*! \brief Range of sum and carry digits when adding 1..3 digit signals.
 *
 * The target radix is inferred from the inputs: all-binary inputs add in
 * radix 2, anything wider adds in radix 4.  The sum digit saturates at
 * radix-1; the carry range is floor(max_total / radix), omitted when zero.
 *
 * Examples: [1,1] -> sum max 1, carry max 1; [3,3,2] -> sum max 3, carry
 * max 2; [3,3,1] -> sum max 3, carry max 1 (the cheaper cell class).
 */
SumRanges range_of_sum( std::span<const ValueRange> inputs );

} // namespace mvl
