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

#include "mvl/cells.hpp"

#include "mvl/costing.hpp"

#include <sstream>
#include <stdexcept>

namespace mvl
{

namespace
{

void check( int v, int max, const char* cell, const char* port )
{
  if ( v < 0 || v > max )
  {
    throw std::domain_error( std::string( cell ) + ": port " + port + " value " + std::to_string( v ) +
                             " outside [0, " + std::to_string( max ) + "]" );
  }
}

} // namespace

std::pair<int, int> qmul1( int a, int b )
{
  check( a, 3, "qmul1", "a" );
  check( b, 3, "qmul1", "b" );
  const int p = a * b;
  return { p & 3, p >> 2 };
}

std::pair<int, int> q332( int a, int b, int cin )
{
  check( a, 3, "q332", "a" );
  check( b, 3, "q332", "b" );
  check( cin, 2, "q332", "cin" );
  const int t = a + b + cin;
  return { t & 3, t >> 2 };
}

std::pair<int, int> q331( int a, int b, int cin )
{
  check( a, 3, "q331", "a" );
  check( b, 3, "q331", "b" );
  check( cin, 1, "q331", "cin" );
  const int t = a + b + cin;
  return { t & 3, t >> 2 };
}

std::pair<int, int> qh32( int a, int b )
{
  check( a, 2, "qh32", "a" );
  check( b, 3, "qh32", "b" );
  const int t = a + b;
  return { t & 3, t >> 2 };
}

std::pair<int, int> qh31( int a, int b )
{
  check( a, 3, "qh31", "a" );
  check( b, 1, "qh31", "b" );
  const int t = a + b;
  return { t & 3, t >> 2 };
}

std::pair<int, int> decode_q2b( int q )
{
  check( q, 3, "decode_q2b", "q" );
  return { q >> 1, q & 1 };
}

int encode_b2q( int x1, int x0 )
{
  check( x1, 1, "encode_b2q", "x1" );
  check( x0, 1, "encode_b2q", "x0" );
  return 2 * x1 + x0;
}

std::array<int, 3> mvl_inverters( int q )
{
  check( q, 3, "mvl_inverters", "q" );
  return { q < 1 ? 1 : 0, q < 2 ? 1 : 0, q < 3 ? 1 : 0 };
}

namespace
{

// Truth functions assume port-valid inputs (the netlist evaluator and
// eval_cell guarantee this); the arithmetic helpers above re-validate anyway.

void fn_and2( std::span<const int> in, std::span<int> out ) { out[0] = in[0] & in[1]; }
void fn_xor2( std::span<const int> in, std::span<int> out ) { out[0] = in[0] ^ in[1]; }

void fn_ha( std::span<const int> in, std::span<int> out )
{
  const int t = in[0] + in[1];
  out[0] = t & 1;
  out[1] = t >> 1;
}

void fn_fa( std::span<const int> in, std::span<int> out )
{
  const int t = in[0] + in[1] + in[2];
  out[0] = t & 1;
  out[1] = t >> 1;
}

void fn_qmul1( std::span<const int> in, std::span<int> out )
{
  const auto [qm, qc] = qmul1( in[0], in[1] );
  out[0] = qm;
  out[1] = qc;
}

void fn_q332( std::span<const int> in, std::span<int> out )
{
  const auto [s, c] = q332( in[0], in[1], in[2] );
  out[0] = s;
  out[1] = c;
}

void fn_q331( std::span<const int> in, std::span<int> out )
{
  const auto [s, c] = q331( in[0], in[1], in[2] );
  out[0] = s;
  out[1] = c;
}

void fn_qh32( std::span<const int> in, std::span<int> out )
{
  const auto [s, c] = qh32( in[0], in[1] );
  out[0] = s;
  out[1] = c;
}

void fn_qh31( std::span<const int> in, std::span<int> out )
{
  const auto [s, c] = qh31( in[0], in[1] );
  out[0] = s;
  out[1] = c;
}

void fn_dec( std::span<const int> in, std::span<int> out )
{
  const auto [x1, x0] = decode_q2b( in[0] );
  out[0] = x1;
  out[1] = x0;
}

void fn_enc( std::span<const int> in, std::span<int> out ) { out[0] = encode_b2q( in[0], in[1] ); }

void fn_nqi( std::span<const int> in, std::span<int> out ) { out[0] = mvl_inverters( in[0] )[0]; }
void fn_iqi( std::span<const int> in, std::span<int> out ) { out[0] = mvl_inverters( in[0] )[1]; }
void fn_pqi( std::span<const int> in, std::span<int> out ) { out[0] = mvl_inverters( in[0] )[2]; }

constexpr auto IN = PortDirection::input;
constexpr auto OUT = PortDirection::output;

PortSpec p( const char* name, PortDirection dir, int max ) { return { name, dir, ValueRange{ max } }; }

} // namespace

Cell::Cell( std::string name, std::vector<PortSpec> ports, TruthFn fn )
    : name_( std::move( name ) ), ports_( std::move( ports ) ), fn_( fn )
{
  // ports are listed inputs-first; count them once
  std::size_t n = 0;
  while ( n < ports_.size() && ports_[n].direction == PortDirection::input )
  {
    ++n;
  }
  num_inputs_ = n;
}

std::vector<int> eval_cell( const Cell& cell, std::span<const int> inputs )
{
  if ( inputs.size() != cell.num_inputs() )
  {
    throw std::invalid_argument( cell.name() + ": expects " + std::to_string( cell.num_inputs() ) +
                                 " inputs, got " + std::to_string( inputs.size() ) );
  }
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    const PortSpec& port = cell.input_port( i );
    if ( !port.range.contains( inputs[i] ) )
    {
      throw std::domain_error( cell.name() + ": port " + port.name + " value " + std::to_string( inputs[i] ) +
                               " outside [0, " + std::to_string( port.range.max_value ) + "]" );
    }
  }
  std::vector<int> out( cell.num_outputs() );
  cell.invoke( inputs, out );
  for ( std::size_t i = 0; i < out.size(); ++i )
  {
    const PortSpec& port = cell.output_port( i );
    if ( !port.range.contains( out[i] ) )
    {
      throw std::logic_error( cell.name() + ": output " + port.name + " produced " + std::to_string( out[i] ) +
                              " outside its declared range" );
    }
  }
  return out;
}

TruthTable enumerate_truth_table( const Cell& cell )
{
  TruthTable tt;
  for ( std::size_t i = 0; i < cell.num_inputs(); ++i )
  {
    tt.columns.push_back( cell.input_port( i ).name );
  }
  for ( std::size_t i = 0; i < cell.num_outputs(); ++i )
  {
    tt.columns.push_back( cell.output_port( i ).name );
  }

  std::vector<int> in( cell.num_inputs(), 0 );
  while ( true )
  {
    std::vector<int> row = in;
    const std::vector<int> out = eval_cell( cell, in );
    row.insert( row.end(), out.begin(), out.end() );
    tt.rows.push_back( std::move( row ) );

    // lexicographic increment, first port most significant
    std::size_t i = cell.num_inputs();
    while ( i-- > 0 )
    {
      if ( in[i] < cell.input_port( i ).range.max_value )
      {
        ++in[i];
        break;
      }
      in[i] = 0;
      if ( i == 0 )
      {
        return tt;
      }
    }
    if ( cell.num_inputs() == 0 )
    {
      return tt;
    }
  }
}

std::string truth_table_csv( const Cell& cell )
{
  const TruthTable tt = enumerate_truth_table( cell );
  std::ostringstream os;
  for ( std::size_t i = 0; i < tt.columns.size(); ++i )
  {
    os << ( i ? "," : "" ) << tt.columns[i];
  }
  os << '\n';
  for ( const auto& row : tt.rows )
  {
    for ( std::size_t i = 0; i < row.size(); ++i )
    {
      os << ( i ? "," : "" ) << row[i];
    }
    os << '\n';
  }
  return os.str();
}

void CellLibrary::add( Cell cell )
{
  const std::string name = cell.name();
  if ( cells_.count( name ) )
  {
    throw std::invalid_argument( "CellLibrary: duplicate cell " + name );
  }
  order_.push_back( name );
  cells_.emplace( name, std::move( cell ) );
}

bool CellLibrary::contains( const std::string& name ) const { return cells_.count( name ) != 0; }

const Cell& CellLibrary::at( const std::string& name ) const
{
  const auto it = cells_.find( name );
  if ( it == cells_.end() )
  {
    throw std::invalid_argument( "CellLibrary: unknown cell '" + name + "'" );
  }
  return it->second;
}

Cell& CellLibrary::at( const std::string& name )
{
  return const_cast<Cell&>( static_cast<const CellLibrary&>( *this ).at( name ) );
}

const CellLibrary& standard_library()
{
  static const CellLibrary lib = []() {
    CellLibrary l;
    l.add( Cell( "AND2", { p( "a", IN, 1 ), p( "b", IN, 1 ), p( "y", OUT, 1 ) }, fn_and2 ) );
    l.add( Cell( "XOR2", { p( "a", IN, 1 ), p( "b", IN, 1 ), p( "y", OUT, 1 ) }, fn_xor2 ) );
    l.add( Cell( "FA", { p( "a", IN, 1 ), p( "b", IN, 1 ), p( "cin", IN, 1 ), p( "s", OUT, 1 ), p( "cout", OUT, 1 ) },
                 fn_fa ) );
    l.add( Cell( "HA", { p( "a", IN, 1 ), p( "b", IN, 1 ), p( "s", OUT, 1 ), p( "cout", OUT, 1 ) }, fn_ha ) );
    l.add( Cell( "DEC_Q2B", { p( "q", IN, 3 ), p( "x1", OUT, 1 ), p( "x0", OUT, 1 ) }, fn_dec ) );
    l.add( Cell( "ENC_B2Q", { p( "x1", IN, 1 ), p( "x0", IN, 1 ), p( "q", OUT, 3 ) }, fn_enc ) );
    l.add( Cell( "QMUL1", { p( "a", IN, 3 ), p( "b", IN, 3 ), p( "qm", OUT, 3 ), p( "qc", OUT, 2 ) }, fn_qmul1 ) );
    l.add( Cell( "Q331",
                 { p( "a", IN, 3 ), p( "b", IN, 3 ), p( "cin", IN, 1 ), p( "s", OUT, 3 ), p( "cout", OUT, 1 ) },
                 fn_q331 ) );
    l.add( Cell( "Q332",
                 { p( "a", IN, 3 ), p( "b", IN, 3 ), p( "cin", IN, 2 ), p( "s", OUT, 3 ), p( "cout", OUT, 2 ) },
                 fn_q332 ) );
    l.add( Cell( "QH32", { p( "a", IN, 2 ), p( "b", IN, 3 ), p( "s", OUT, 3 ), p( "cout", OUT, 1 ) }, fn_qh32 ) );
    l.add( Cell( "QH31", { p( "a", IN, 3 ), p( "b", IN, 1 ), p( "s", OUT, 3 ), p( "cout", OUT, 1 ) }, fn_qh31 ) );
    l.add( Cell( "NQI", { p( "q", IN, 3 ), p( "y", OUT, 1 ) }, fn_nqi ) );
    l.add( Cell( "IQI", { p( "q", IN, 3 ), p( "y", OUT, 1 ) }, fn_iqi ) );
    l.add( Cell( "PQI", { p( "q", IN, 3 ), p( "y", OUT, 1 ) }, fn_pqi ) );

    // attach the pinned transistor costs
    for ( const CostScheme& scheme : standard_schemes() )
    {
      for ( const auto& [cell, cost] : scheme.costs )
      {
        l.at( cell ).set_cost( scheme.name, cost );
      }
    }
    return l;
  }();
  return lib;
}

} // namespace mvl
