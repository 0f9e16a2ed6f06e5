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

#include "mvl/verify.hpp"

#include <random>
#include <stdexcept>

namespace mvl
{

OperandLayout infer_operands( const Netlist& nl )
{
  OperandLayout layout;
  int max_range = 1;
  std::size_t pos = 0;
  const auto& pis = nl.inputs();
  // operand A digits come first (a0, a1, ...), then operand B (b0, ...)
  while ( pos < pis.size() && pis[pos].name == "a" + std::to_string( pos ) )
  {
    max_range = std::max( max_range, pis[pos].range.max_value );
    ++pos;
  }
  layout.width_a = pos;
  while ( pos < pis.size() && pis[pos].name == "b" + std::to_string( pos - layout.width_a ) )
  {
    max_range = std::max( max_range, pis[pos].range.max_value );
    ++pos;
  }
  layout.width_b = pos - layout.width_a;
  if ( pos != pis.size() || layout.width_a == 0 || layout.width_b == 0 )
  {
    throw std::invalid_argument( "infer_operands: inputs do not form a0..b0.. operand pair" );
  }
  layout.radix = max_range > 1 ? 4 : 2;
  return layout;
}

Oracle multiply_oracle()
{
  return []( std::uint64_t a, std::uint64_t b ) { return a * b; };
}

Oracle add_oracle()
{
  return []( std::uint64_t a, std::uint64_t b ) { return a + b; };
}

void VerificationResult::merge( const VerificationResult& other )
{
  cases_run += other.cases_run;
  cases_failed += other.cases_failed;
  for ( const Counterexample& ce : other.counterexamples )
  {
    if ( counterexamples.size() >= kMaxCounterexamples )
    {
      break;
    }
    counterexamples.push_back( ce );
  }
  if ( max_observed.size() < other.max_observed.size() )
  {
    max_observed.resize( other.max_observed.size(), -1 );
  }
  for ( std::size_t i = 0; i < other.max_observed.size(); ++i )
  {
    max_observed[i] = std::max( max_observed[i], other.max_observed[i] );
  }
  exhaustive = exhaustive && other.exhaustive;
}

namespace
{

std::uint64_t pow_cases( int radix, std::size_t width, bool& overflow )
{
  std::uint64_t total = 1;
  for ( std::size_t i = 0; i < width; ++i )
  {
    if ( total > ( ~0ull ) / static_cast<std::uint64_t>( radix ) )
    {
      overflow = true;
      return 0;
    }
    total *= static_cast<std::uint64_t>( radix );
  }
  return total;
}

struct Runner
{
  const Netlist& nl;
  const OperandLayout& layout;
  const Oracle& oracle;
  VerificationResult result;
  std::vector<int> inputs;

  Runner( const Netlist& n, const OperandLayout& l, const Oracle& o ) : nl( n ), layout( l ), oracle( o )
  {
    result.max_observed.assign( nl.nets().size(), -1 );
    inputs.resize( layout.width_a + layout.width_b );
  }

  void run_case( std::uint64_t a, std::uint64_t b )
  {
    const DigitVector da = to_digits( a, layout.radix, layout.width_a );
    const DigitVector db = to_digits( b, layout.radix, layout.width_b );
    for ( std::size_t i = 0; i < layout.width_a; ++i )
    {
      inputs[i] = da.digits[i];
    }
    for ( std::size_t i = 0; i < layout.width_b; ++i )
    {
      inputs[layout.width_a + i] = db.digits[i];
    }

    const EvalTrace trace = nl.evaluate_trace( inputs );
    for ( std::size_t i = 0; i < trace.values.size(); ++i )
    {
      result.max_observed[i] = std::max( result.max_observed[i], trace.values[i] );
    }

    DigitVector got;
    got.radix = layout.radix;
    got.digits = trace.outputs;
    const std::uint64_t got_value = from_digits( got );
    const std::uint64_t expected = oracle( a, b );
    ++result.cases_run;
    if ( got_value != expected )
    {
      ++result.cases_failed;
      if ( result.counterexamples.size() < kMaxCounterexamples )
      {
        result.counterexamples.push_back( { a, b, expected, got_value } );
      }
    }
  }
};

} // namespace

VerificationResult exhaustive_verify( const Netlist& nl, const OperandLayout& layout, const Oracle& oracle,
                                      std::uint64_t cap )
{
  bool overflow = false;
  const std::uint64_t total_a = pow_cases( layout.radix, layout.width_a, overflow );
  const std::uint64_t total_b = pow_cases( layout.radix, layout.width_b, overflow );
  if ( overflow || ( total_b != 0 && total_a > cap / total_b ) )
  {
    throw std::invalid_argument( "exhaustive_verify: case count exceeds the cap of " + std::to_string( cap ) +
                                 "; use sampled_verify" );
  }

  Runner runner( nl, layout, oracle );
  for ( std::uint64_t a = 0; a < total_a; ++a )
  {
    for ( std::uint64_t b = 0; b < total_b; ++b )
    {
      runner.run_case( a, b );
    }
  }
  runner.result.exhaustive = true;
  return runner.result;
}

VerificationResult sampled_verify( const Netlist& nl, const OperandLayout& layout, const Oracle& oracle,
                                   std::uint64_t trials, std::uint64_t seed )
{
  bool overflow = false;
  const std::uint64_t total_a = pow_cases( layout.radix, layout.width_a, overflow );
  const std::uint64_t total_b = pow_cases( layout.radix, layout.width_b, overflow );
  if ( overflow )
  {
    throw std::invalid_argument( "sampled_verify: operand space exceeds 64 bits" );
  }

  std::mt19937_64 rng( seed );
  std::uniform_int_distribution<std::uint64_t> dist_a( 0, total_a - 1 );
  std::uniform_int_distribution<std::uint64_t> dist_b( 0, total_b - 1 );

  Runner runner( nl, layout, oracle );
  for ( std::uint64_t t = 0; t < trials; ++t )
  {
    const std::uint64_t a = dist_a( rng ); // operand A drawn first, by contract
    const std::uint64_t b = dist_b( rng );
    runner.run_case( a, b );
  }
  runner.result.exhaustive = false;
  return runner.result;
}

RangeAudit audit_ranges( const Netlist& nl, const VerificationResult& result )
{
  RangeAudit audit;
  for ( NetId id = 0; id < nl.nets().size() && id < result.max_observed.size(); ++id )
  {
    const int seen = result.max_observed[id];
    const int declared = nl.nets()[id].range.max_value;
    if ( seen > declared )
    {
      audit.violations.push_back( "net " + std::to_string( id ) + ": observed " + std::to_string( seen ) +
                                  " above declared max " + std::to_string( declared ) );
    }
    else if ( seen >= 0 && seen < declared )
    {
      audit.over_provisioned.push_back( "net " + std::to_string( id ) + ": declared max " +
                                        std::to_string( declared ) + ", observed max " + std::to_string( seen ) );
    }
  }
  return audit;
}

std::string summarize( const VerificationResult& result )
{
  const std::uint64_t passed = result.cases_run - result.cases_failed;
  return std::to_string( passed ) + "/" + std::to_string( result.cases_run ) + " cases passed (" +
         ( result.exhaustive ? "exhaustive" : "sampled" ) + ")";
}

} // namespace mvl
