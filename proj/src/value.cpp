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

#include "mvl/value.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace mvl
{

namespace
{

void check_radix( int radix, const char* who )
{
  if ( radix != 2 && radix != 4 )
  {
    throw std::invalid_argument( std::string( who ) + ": radix must be 2 or 4, got " + std::to_string( radix ) );
  }
}

} // namespace

DigitVector to_digits( std::uint64_t value, int radix, std::size_t width )
{
  check_radix( radix, "to_digits" );
  DigitVector dv;
  dv.radix = radix;
  dv.digits.resize( width );
  std::uint64_t rest = value;
  const std::uint64_t r = static_cast<std::uint64_t>( radix );
  for ( std::size_t i = 0; i < width; ++i )
  {
    dv.digits[i] = static_cast<int>( rest % r );
    rest /= r;
  }
  if ( rest != 0 )
  {
    throw std::invalid_argument( "to_digits: value " + std::to_string( value ) + " does not fit in " +
                                 std::to_string( width ) + " base-" + std::to_string( radix ) + " digits" );
  }
  return dv;
}

std::uint64_t from_digits( const DigitVector& dv )
{
  check_radix( dv.radix, "from_digits" );
  const std::uint64_t r = static_cast<std::uint64_t>( dv.radix );
  std::uint64_t acc = 0;
  for ( std::size_t i = dv.digits.size(); i-- > 0; )
  {
    const int d = dv.digits[i];
    if ( d < 0 || d >= dv.radix )
    {
      throw std::invalid_argument( "from_digits: digit " + std::to_string( d ) + " at position " +
                                   std::to_string( i ) + " outside [0, " + std::to_string( dv.radix - 1 ) + "]" );
    }
    if ( acc > ( std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>( d ) ) / r )
    {
      throw std::invalid_argument( "from_digits: value exceeds 64 bits" );
    }
    acc = acc * r + static_cast<std::uint64_t>( d );
  }
  return acc;
}

SumRanges range_of_sum( std::span<const ValueRange> inputs )
{
  if ( inputs.empty() || inputs.size() > 3 )
  {
    throw std::invalid_argument( "range_of_sum: expects 1 to 3 inputs (3:2 compression), got " +
                                 std::to_string( inputs.size() ) );
  }
  int max_total = 0;
  bool all_binary = true;
  for ( const ValueRange& r : inputs )
  {
    if ( r.max_value < 1 || r.max_value > 3 )
    {
      throw std::invalid_argument( "range_of_sum: input range max " + std::to_string( r.max_value ) +
                                   " outside [1, 3]" );
    }
    max_total += r.max_value;
    all_binary = all_binary && r.max_value == 1;
  }
  const int radix = all_binary ? 2 : 4;
  SumRanges out;
  out.sum = ValueRange{ max_total < radix ? max_total : radix - 1 };
  const int carry_max = max_total / radix;
  if ( carry_max > 0 )
  {
    out.carry = ValueRange{ carry_max };
  }
  return out;
}

} // namespace mvl
