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
  \file verify.hpp
  \brief Exhaustive and seeded-random functional verification of generated
  netlists against integer oracles, with per-net range auditing.
*/

#pragma once

#include "netlist.hpp"
#include "value.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mvl
{

/*! \brief Two-operand layout of a netlist's primary inputs: operand A digits
 * first, operand B digits second, both LSD first. */
struct OperandLayout
{
  int radix{2};
  std::size_t width_a{0};
  std::size_t width_b{0};
};

//! Infer the layout from input names ("a<k>", "b<k>") and ranges.
OperandLayout infer_operands( const Netlist& nl );

//! value-in, value-out golden function, e.g. multiply_oracle or add_oracle.
using Oracle = std::function<std::uint64_t( std::uint64_t, std::uint64_t )>;

Oracle multiply_oracle();
Oracle add_oracle();

struct Counterexample
{
  std::uint64_t a{0};
  std::uint64_t b{0};
  std::uint64_t expected{0};
  std::uint64_t got{0};
};

struct VerificationResult
{
  std::uint64_t cases_run{0};
  std::uint64_t cases_failed{0};
  std::vector<Counterexample> counterexamples; //!< at most 32 retained
  std::vector<int> max_observed;               //!< per net, -1 if never driven
  bool exhaustive{false};

  bool passed() const { return cases_failed == 0; }
  //! Associative combination of shard results (counterexample cap kept).
  void merge( const VerificationResult& other );
};

inline constexpr std::uint64_t kDefaultExhaustiveCap = 1ull << 24;
inline constexpr std::size_t kMaxCounterexamples = 32;

/*! \brief Run every input pair.
 *
 * Throws std::invalid_argument if the case count exceeds \p cap, with a
 * message directing to sampled_verify.
 */
VerificationResult exhaustive_verify( const Netlist& nl, const OperandLayout& layout,
                                      const Oracle& oracle,
                                      std::uint64_t cap = kDefaultExhaustiveCap );

/*! \brief Run \p trials uniformly random input pairs from a seeded mt19937_64
 * (operand A drawn before operand B each trial); deterministic per seed. */
VerificationResult sampled_verify( const Netlist& nl, const OperandLayout& layout,
                                   const Oracle& oracle, std::uint64_t trials,
                                   std::uint64_t seed );

/*! \brief Range-audit summary over a verification run's max_observed. */
struct RangeAudit
{
  std::vector<std::string> violations;      //!< nets observed above their range (none, by construction)
  std::vector<std::string> over_provisioned; //!< nets whose observed max stayed below the declared max
};

RangeAudit audit_ranges( const Netlist& nl, const VerificationResult& result );

//! One-line human summary ("65536/65536 cases passed (exhaustive)").
std::string summarize( const VerificationResult& result );

} // namespace mvl
