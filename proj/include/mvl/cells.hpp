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
  \file cells.hpp
  \brief The combinational cell library: binary gates, quaternary adders,
  radix converters and threshold inverters.

  Quaternary compressor cells are named by their port widths: Q332 adds two
  quaternary digits and a ternary carry-in, Q331 two quaternary digits and a
  binary carry-in, QH32 a ternary and a quaternary digit, QH31 a quaternary
  and a binary digit.  All of them emit a quaternary sum digit; the carry-out
  range follows from the maximum total (Q332 alone can carry 2).

  Threshold detectors electrically swing rail-to-rail; their outputs are
  modeled as logical 0/1 here (a full-swing high reads as 1).
*/

#pragma once

#include "value.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvl
{

// --- single-cell arithmetic ------------------------------------------------
//
// Each function validates its argument ranges and throws std::domain_error
// naming the offending port.  Pairs are {sum-like, carry-like}.

std::pair<int, int> qmul1( int a, int b );           // a,b in [0,3] -> {a*b mod 4, a*b div 4}
std::pair<int, int> q332( int a, int b, int cin );   // cin in [0,2]
std::pair<int, int> q331( int a, int b, int cin );   // cin in [0,1]
std::pair<int, int> qh32( int a, int b );            // a in [0,2], b in [0,3]
std::pair<int, int> qh31( int a, int b );            // a in [0,3], b in [0,1]
std::pair<int, int> decode_q2b( int q );             // -> {x1, x0}, q = 2*x1 + x0
int encode_b2q( int x1, int x0 );                    // -> q in [0,3]
std::array<int, 3> mvl_inverters( int q );           // {nqi, iqi, pqi}: q<1, q<2, q<3

// --- cell metadata ----------------------------------------------------------

enum class PortDirection
{
  input,
  output
};

struct PortSpec
{
  std::string name;
  PortDirection direction{PortDirection::input};
  ValueRange range{};
};

/*! \brief A combinational cell: ports, truth function, per-scheme costs. */
class Cell
{
public:
  using TruthFn = void ( * )( std::span<const int> in, std::span<int> out );

  Cell( std::string name, std::vector<PortSpec> ports, TruthFn fn );

  const std::string& name() const { return name_; }
  const std::vector<PortSpec>& ports() const { return ports_; }
  std::size_t num_inputs() const { return num_inputs_; }
  std::size_t num_outputs() const { return ports_.size() - num_inputs_; }
  const PortSpec& input_port( std::size_t i ) const { return ports_[i]; }
  const PortSpec& output_port( std::size_t i ) const { return ports_[num_inputs_ + i]; }

  //! scheme name -> transistor cost; empty for cells no scheme prices.
  const std::map<std::string, int>& costs() const { return costs_; }
  void set_cost( const std::string& scheme, int cost ) { costs_[scheme] = cost; }

  //! Raw truth function; inputs must already be port-valid.
  void invoke( std::span<const int> in, std::span<int> out ) const { fn_( in, out ); }

private:
  std::string name_;
  std::vector<PortSpec> ports_; // inputs first, then outputs
  std::size_t num_inputs_{0};
  TruthFn fn_;
  std::map<std::string, int> costs_;
};

/*! \brief Evaluate a cell on one input tuple.
 *
 * Validates arity (std::invalid_argument) and per-port ranges
 * (std::domain_error naming the port); checks outputs against the declared
 * output ranges.
 */
std::vector<int> eval_cell( const Cell& cell, std::span<const int> inputs );

/*! \brief Fully enumerated truth table, one row per input tuple.
 *
 * Rows are lexicographic with the first input port as the most significant
 * position.  Row count is the product of input-port range sizes (16 for
 * QMUL1, 48 for Q332, 32 for Q331, 12 for QH32, 8 for QH31).
 */
struct TruthTable
{
  std::vector<std::string> columns; //!< input names then output names
  std::vector<std::vector<int>> rows;
};

TruthTable enumerate_truth_table( const Cell& cell );

//! CSV rendering of enumerate_truth_table (header + one line per row).
std::string truth_table_csv( const Cell& cell );

/*! \brief Ordered cell collection; iteration order is insertion order. */
class CellLibrary
{
public:
  void add( Cell cell );
  bool contains( const std::string& name ) const;
  const Cell& at( const std::string& name ) const; //!< throws std::invalid_argument
  Cell& at( const std::string& name );
  const std::vector<std::string>& names() const { return order_; }

private:
  std::vector<std::string> order_;
  std::map<std::string, Cell> cells_;
};

/*! \brief The standard library: AND2, XOR2, FA, HA, DEC_Q2B, ENC_B2Q, QMUL1,
 * Q331, Q332, QH32, QH31, NQI, IQI, PQI, with costs attached from
 * standard_schemes().
 */
const CellLibrary& standard_library();

} // namespace mvl
