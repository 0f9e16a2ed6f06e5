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

#include "mvl/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mvl
{

void Columns::ensure( std::size_t c )
{
  if ( cols.size() <= c )
  {
    cols.resize( c + 1 );
  }
}

void Columns::push( std::size_t c, NetId net, ValueRange range, int row )
{
  ensure( c );
  cols[c].push_back( { net, range, next_seq++, row } );
}

std::size_t Columns::max_height() const
{
  std::size_t h = 0;
  for ( const auto& col : cols )
  {
    h = std::max( h, col.size() );
  }
  return h;
}

int ReductionPlan::num_stages() const
{
  int n = 0;
  for ( const ReductionStep& s : steps )
  {
    if ( !s.cpa )
    {
      n = std::max( n, s.stage );
    }
  }
  return n;
}

std::string ReductionPlan::to_text() const
{
  std::ostringstream os;
  os << "radix-" << static_cast<int>( radix ) << ' '
     << ( policy == ReductionPolicy::wallace ? "wallace" : "dadda" ) << " reduction, " << num_stages()
     << " stage(s) + carry propagation\n";
  int cur_stage = 0;
  bool in_cpa = false;
  for ( const ReductionStep& s : steps )
  {
    if ( s.cpa && !in_cpa )
    {
      in_cpa = true;
      os << "carry propagation:\n";
    }
    else if ( !s.cpa && s.stage != cur_stage )
    {
      cur_stage = s.stage;
      os << "stage " << cur_stage << ":\n";
    }
    os << "  col " << s.column << ": " << s.cell << '(';
    for ( std::size_t i = 0; i < s.inputs.size(); ++i )
    {
      os << ( i ? ", " : "" ) << 'n' << s.inputs[i];
    }
    os << ") ->";
    for ( std::size_t i = 0; i < s.outputs.size(); ++i )
    {
      os << ( i ? "," : "" ) << " n" << s.outputs[i];
    }
    os << '\n';
  }
  return os.str();
}

Columns build_partial_products_binary( Netlist& nl, const std::vector<NetId>& a, const std::vector<NetId>& b )
{
  Columns cols;
  for ( std::size_t j = 0; j < b.size(); ++j )
  {
    for ( std::size_t i = 0; i < a.size(); ++i )
    {
      const std::vector<NetId> outs = nl.add_cell( "AND2", { a[i], b[j] } );
      cols.push( i + j, outs[0], ValueRange::binary(), static_cast<int>( j ) );
    }
  }
  return cols;
}

Columns build_partial_products_quaternary( Netlist& nl, const std::vector<NetId>& a, const std::vector<NetId>& b )
{
  Columns cols;
  for ( std::size_t j = 0; j < b.size(); ++j )
  {
    for ( std::size_t i = 0; i < a.size(); ++i )
    {
      const std::vector<NetId> outs = nl.add_cell( "QMUL1", { a[i], b[j] } );
      cols.push( i + j, outs[0], ValueRange::quaternary(), static_cast<int>( 2 * j ) );
      cols.push( i + j + 1, outs[1], ValueRange::ternary(), static_cast<int>( 2 * j + 1 ) );
    }
  }
  return cols;
}

namespace
{

std::vector<WeightedNet> snapshot_columns( const Columns& cols )
{
  std::vector<WeightedNet> s;
  for ( std::size_t c = 0; c < cols.cols.size(); ++c )
  {
    for ( const ColumnWire& w : cols.cols[c] )
    {
      s.push_back( { static_cast<int>( c ), w.net } );
    }
  }
  return s;
}

// --- radix-2 Wallace: classic row-group carry-save over tagged rows --------

using Row = std::map<int, ColumnWire>; // column -> wire

std::vector<WeightedNet> snapshot_rows( const std::vector<Row>& rows )
{
  std::vector<WeightedNet> s;
  for ( const Row& row : rows )
  {
    for ( const auto& [c, w] : row )
    {
      s.push_back( { c, w.net } );
    }
  }
  return s;
}

Columns rows_to_columns( const std::vector<Row>& rows, std::uint64_t next_seq )
{
  Columns out;
  out.next_seq = next_seq;
  for ( const Row& row : rows )
  {
    for ( const auto& [c, w] : row )
    {
      out.ensure( c );
      out.cols[c].push_back( w );
    }
  }
  return out;
}

CompressionResult compress_rows_binary_wallace( Netlist& nl, Columns columns )
{
  CompressionResult res;
  res.plan.radix = Radix::binary;
  res.plan.policy = ReductionPolicy::wallace;
  res.plan.snapshots.push_back( snapshot_columns( columns ) );

  // rebuild rows from the partial-product tags; untagged wires fall back to
  // one row each (ordered after the tagged rows, by column then age)
  std::map<int, Row> tagged;
  std::vector<Row> untagged;
  for ( std::size_t c = 0; c < columns.cols.size(); ++c )
  {
    for ( const ColumnWire& w : columns.cols[c] )
    {
      if ( w.row >= 0 && !tagged[w.row].count( static_cast<int>( c ) ) )
      {
        tagged[w.row].emplace( static_cast<int>( c ), w );
      }
      else
      {
        untagged.push_back( Row{ { static_cast<int>( c ), w } } );
      }
    }
  }
  std::vector<Row> rows;
  for ( auto& [tag, row] : tagged )
  {
    rows.push_back( std::move( row ) );
  }
  for ( Row& row : untagged )
  {
    rows.push_back( std::move( row ) );
  }

  std::uint64_t seq = columns.next_seq;
  int stage = 0;
  while ( rows.size() > 2 )
  {
    ++stage;
    std::vector<Row> next;
    std::size_t g = 0;
    for ( ; g + 3 <= rows.size(); g += 3 )
    {
      Row sum_row, carry_row;
      std::vector<int> cols_present;
      for ( std::size_t k = 0; k < 3; ++k )
      {
        for ( const auto& [c, w] : rows[g + k] )
        {
          if ( !std::count( cols_present.begin(), cols_present.end(), c ) )
          {
            cols_present.push_back( c );
          }
        }
      }
      std::sort( cols_present.begin(), cols_present.end() );
      for ( const int c : cols_present )
      {
        std::vector<ColumnWire> wires;
        for ( std::size_t k = 0; k < 3; ++k )
        {
          const auto it = rows[g + k].find( c );
          if ( it != rows[g + k].end() )
          {
            wires.push_back( it->second );
          }
        }
        if ( wires.size() == 1 )
        {
          sum_row.emplace( c, wires[0] );
          continue;
        }
        std::vector<NetId> ins;
        for ( const ColumnWire& w : wires )
        {
          ins.push_back( w.net );
        }
        const char* cell = wires.size() == 3 ? "FA" : "HA";
        const std::vector<NetId> outs = nl.add_cell( cell, ins );
        res.plan.steps.push_back( { stage, false, c, cell, ins, outs } );
        sum_row.emplace( c, ColumnWire{ outs[0], ValueRange::binary(), seq++, -1 } );
        carry_row.emplace( c + 1, ColumnWire{ outs[1], ValueRange::binary(), seq++, -1 } );
      }
      next.push_back( std::move( sum_row ) );
      next.push_back( std::move( carry_row ) );
    }
    for ( ; g < rows.size(); ++g )
    {
      next.push_back( std::move( rows[g] ) );
    }
    rows = std::move( next );
    res.plan.snapshots.push_back( snapshot_rows( rows ) );
  }

  res.columns = rows_to_columns( rows, seq );
  return res;
}

// --- height-limit column engine (radix-4 Wallace, Dadda both radices) ------

std::vector<int> limit_schedule( std::size_t max_height, ReductionPolicy policy )
{
  if ( policy == ReductionPolicy::wallace )
  {
    return { 3, 2 };
  }
  std::vector<int> lim = { 2 };
  while ( lim.back() < static_cast<int>( max_height ) )
  {
    lim.push_back( lim.back() * 3 / 2 );
  }
  std::vector<int> out;
  for ( std::size_t i = lim.size(); i-- > 0; )
  {
    if ( lim[i] < static_cast<int>( max_height ) )
    {
      out.push_back( lim[i] );
    }
  }
  if ( out.empty() )
  {
    out.push_back( 2 );
  }
  return out;
}

// oldest wire with range max <= max_range, or npos
std::size_t oldest_at_most( const std::vector<ColumnWire>& avail, int max_range )
{
  std::size_t best = avail.size();
  for ( std::size_t i = 0; i < avail.size(); ++i )
  {
    if ( avail[i].range.max_value <= max_range && ( best == avail.size() || avail[i].seq < avail[best].seq ) )
    {
      best = i;
    }
  }
  return best;
}

std::size_t oldest_except( const std::vector<ColumnWire>& avail, std::size_t skip )
{
  std::size_t best = avail.size();
  for ( std::size_t i = 0; i < avail.size(); ++i )
  {
    if ( i != skip && ( best == avail.size() || avail[i].seq < avail[best].seq ) )
    {
      best = i;
    }
  }
  return best;
}

CompressionResult compress_heights( Netlist& nl, Columns columns, Radix radix, ReductionPolicy policy )
{
  CompressionResult res;
  res.plan.radix = radix;
  res.plan.policy = policy;
  res.plan.snapshots.push_back( snapshot_columns( columns ) );

  const bool quat = radix == Radix::quaternary;
  int stage = 0;
  for ( const int d : limit_schedule( columns.max_height(), policy ) )
  {
    ++stage;
    std::vector<std::vector<ColumnWire>> next( columns.cols.size() + 1 );
    std::vector<std::vector<ColumnWire>> carry_in( columns.cols.size() + 2 );
    for ( std::size_t c = 0; c < columns.cols.size(); ++c )
    {
      std::vector<ColumnWire> avail = std::move( columns.cols[c] );
      // same-pass carries from column c-1 arrive here; they are newer than
      // every original wire, so the list stays age-ordered
      for ( const ColumnWire& w : carry_in[c] )
      {
        avail.push_back( w );
      }
      while ( static_cast<int>( avail.size() ) > d )
      {
        std::vector<NetId> ins;
        const char* cell = nullptr;
        std::vector<std::size_t> consumed;
        if ( static_cast<int>( avail.size() ) == d + 1 )
        {
          // one wire too many: a 2-input cell retires exactly one
          if ( !quat )
          {
            const std::size_t x = oldest_except( avail, avail.size() );
            const std::size_t y = oldest_except( avail, x );
            cell = "HA";
            ins = { avail[x].net, avail[y].net };
            consumed = { x, y };
          }
          else
          {
            const std::size_t lo_bin = oldest_at_most( avail, 1 );
            const std::size_t lo_ter = lo_bin < avail.size() ? lo_bin : oldest_at_most( avail, 2 );
            if ( lo_ter == avail.size() )
            {
              // all quaternary: Q331 with a constant-0 carry-in
              const std::size_t x = oldest_except( avail, avail.size() );
              const std::size_t y = oldest_except( avail, x );
              cell = "Q331";
              ins = { avail[x].net, avail[y].net, nl.add_constant( 0, ValueRange::binary() ) };
              consumed = { x, y };
            }
            else if ( lo_bin < avail.size() )
            {
              const std::size_t hi = oldest_except( avail, lo_bin );
              cell = "QH31";
              ins = { avail[hi].net, avail[lo_bin].net };
              consumed = { hi, lo_bin };
            }
            else
            {
              const std::size_t hi = oldest_except( avail, lo_ter );
              cell = "QH32";
              ins = { avail[lo_ter].net, avail[hi].net };
              consumed = { lo_ter, hi };
            }
          }
        }
        else
        {
          // full 3:2 step; the carry-in slot prefers the cheapest wire class
          if ( !quat )
          {
            const std::size_t x = oldest_except( avail, avail.size() );
            const std::size_t y = oldest_except( avail, x );
            std::size_t z = avail.size();
            for ( std::size_t i = 0; i < avail.size(); ++i )
            {
              if ( i != x && i != y && ( z == avail.size() || avail[i].seq < avail[z].seq ) )
              {
                z = i;
              }
            }
            cell = "FA";
            ins = { avail[x].net, avail[y].net, avail[z].net };
            consumed = { x, y, z };
          }
          else
          {
            const std::size_t cin_bin = oldest_at_most( avail, 1 );
            const std::size_t cin = cin_bin < avail.size() ? cin_bin : oldest_at_most( avail, 2 );
            if ( cin == avail.size() )
            {
              const std::size_t x = oldest_except( avail, avail.size() );
              const std::size_t y = oldest_except( avail, x );
              cell = "Q331";
              ins = { avail[x].net, avail[y].net, nl.add_constant( 0, ValueRange::binary() ) };
              consumed = { x, y };
            }
            else
            {
              std::size_t x = avail.size(), y = avail.size();
              for ( std::size_t i = 0; i < avail.size(); ++i )
              {
                if ( i == cin )
                {
                  continue;
                }
                if ( x == avail.size() || avail[i].seq < avail[x].seq )
                {
                  y = x;
                  x = i;
                }
                else if ( y == avail.size() || avail[i].seq < avail[y].seq )
                {
                  y = i;
                }
              }
              cell = cin == cin_bin ? "Q331" : "Q332";
              ins = { avail[x].net, avail[y].net, avail[cin].net };
              consumed = { x, y, cin };
            }
          }
        }

        const std::vector<NetId> outs = nl.add_cell( cell, ins );
        res.plan.steps.push_back( { stage, false, static_cast<int>( c ), cell, ins, outs } );

        std::sort( consumed.begin(), consumed.end(), std::greater<>() );
        for ( const std::size_t i : consumed )
        {
          avail.erase( avail.begin() + static_cast<std::ptrdiff_t>( i ) );
        }
        const ValueRange sum_range = quat ? ValueRange::quaternary() : ValueRange::binary();
        const ValueRange carry_range =
            std::string( cell ) == "Q332" ? ValueRange::ternary() : ValueRange::binary();
        // the sum stays available within this pass; the carry feeds column c+1
        avail.push_back( { outs[0], sum_range, columns.next_seq++, -1 } );
        carry_in[c + 1].push_back( { outs[1], carry_range, columns.next_seq++, -1 } );
      }
      next[c] = std::move( avail );
    }
    next[columns.cols.size()] = std::move( carry_in[columns.cols.size()] );
    while ( !next.empty() && next.back().empty() )
    {
      next.pop_back();
    }
    columns.cols = std::move( next );
    res.plan.snapshots.push_back( snapshot_columns( columns ) );
  }

  res.columns = std::move( columns );
  return res;
}

} // namespace

CompressionResult compress_columns( Netlist& nl, Columns columns, Radix radix, ReductionPolicy policy )
{
  if ( radix == Radix::binary && policy == ReductionPolicy::wallace )
  {
    return compress_rows_binary_wallace( nl, std::move( columns ) );
  }
  return compress_heights( nl, std::move( columns ), radix, policy );
}

std::vector<NetId> build_cpa( Netlist& nl, const Columns& final_columns, Radix radix, std::size_t out_digits,
                              ReductionPlan& plan )
{
  for ( const auto& col : final_columns.cols )
  {
    if ( col.size() > 2 )
    {
      throw std::invalid_argument( "build_cpa: a column still holds " + std::to_string( col.size() ) +
                                   " wires; compress first" );
    }
  }

  const bool quat = radix == Radix::quaternary;
  const int stage = plan.num_stages() + 1;

  // running multiset for the final conservation snapshot: everything the
  // adder has not consumed keeps its weight (dangling wires stay provably 0)
  std::vector<std::vector<NetId>> live( std::max( final_columns.cols.size(), out_digits ) + 2 );
  for ( std::size_t c = 0; c < final_columns.cols.size(); ++c )
  {
    for ( const ColumnWire& w : final_columns.cols[c] )
    {
      live[c].push_back( w.net );
    }
  }

  std::vector<NetId> outputs( out_digits );
  bool has_carry = false;
  ColumnWire carry{};
  for ( std::size_t c = 0; c < out_digits; ++c )
  {
    std::vector<ColumnWire> wires;
    if ( c < final_columns.cols.size() )
    {
      wires = final_columns.cols[c];
    }
    if ( has_carry )
    {
      wires.push_back( carry );
      has_carry = false;
    }

    if ( wires.empty() )
    {
      // padding digit above every operand wire (e.g. the top bit of a 1x1)
      const NetId zero = nl.add_constant( 0, ValueRange::binary() );
      outputs[c] = zero;
      continue;
    }
    if ( wires.size() == 1 )
    {
      outputs[c] = wires[0].net;
      continue;
    }

    const char* cell = nullptr;
    std::vector<NetId> ins;
    if ( wires.size() == 3 )
    {
      cell = quat ? "Q331" : "FA";
      ins = { wires[0].net, wires[1].net, wires[2].net };
    }
    else if ( !quat )
    {
      cell = "HA";
      ins = { wires[0].net, wires[1].net };
    }
    else
    {
      // prefer the wire that fits the narrow port; ties take the newer wire
      const std::size_t lo = wires[1].range.max_value <= wires[0].range.max_value ? 1u : 0u;
      const std::size_t hi = 1 - lo;
      if ( wires[lo].range.max_value <= 1 )
      {
        cell = "QH31";
        ins = { wires[hi].net, wires[lo].net };
      }
      else if ( wires[lo].range.max_value <= 2 )
      {
        cell = "QH32";
        ins = { wires[lo].net, wires[hi].net };
      }
      else
      {
        cell = "Q331";
        ins = { wires[0].net, wires[1].net, nl.add_constant( 0, ValueRange::binary() ) };
      }
    }

    const std::vector<NetId> outs = nl.add_cell( cell, ins );
    plan.steps.push_back( { stage, true, static_cast<int>( c ), cell, ins, outs } );
    for ( const ColumnWire& w : wires )
    {
      auto& lc = live[c];
      lc.erase( std::find( lc.begin(), lc.end(), w.net ) );
    }
    live[c].push_back( outs[0] );
    live[c + 1].push_back( outs[1] );

    outputs[c] = outs[0];
    carry = { outs[1], ValueRange::binary(), 0, -1 }; // every CPA carry-out is binary
    has_carry = true;
  }

  std::vector<WeightedNet> final_snapshot;
  for ( std::size_t c = 0; c < live.size(); ++c )
  {
    for ( const NetId net : live[c] )
    {
      final_snapshot.push_back( { static_cast<int>( c ), net } );
    }
  }
  plan.snapshots.push_back( std::move( final_snapshot ) );
  return outputs;
}

namespace
{

void check_width( std::size_t width, std::size_t max_width )
{
  if ( width < 1 || width > max_width )
  {
    throw std::invalid_argument( "width " + std::to_string( width ) + " outside [1, " +
                                 std::to_string( max_width ) + "]" );
  }
}

std::vector<NetId> add_operand( Netlist& nl, const char* prefix, std::size_t width, ValueRange range )
{
  std::vector<NetId> nets;
  for ( std::size_t i = 0; i < width; ++i )
  {
    nets.push_back( nl.add_input( prefix + std::to_string( i ), range ) );
  }
  return nets;
}

} // namespace

GeneratedCircuit build_binary_multiplier( std::size_t width, ReductionPolicy policy )
{
  check_width( width, 32 );
  Netlist nl;
  const std::vector<NetId> a = add_operand( nl, "a", width, ValueRange::binary() );
  const std::vector<NetId> b = add_operand( nl, "b", width, ValueRange::binary() );
  Columns cols = build_partial_products_binary( nl, a, b );
  CompressionResult cr = compress_columns( nl, std::move( cols ), Radix::binary, policy );
  const std::vector<NetId> outs = build_cpa( nl, cr.columns, Radix::binary, 2 * width, cr.plan );
  for ( const NetId o : outs )
  {
    nl.mark_output( o );
  }
  nl.finalize();
  return { std::move( nl ), std::move( cr.plan ) };
}

GeneratedCircuit build_quaternary_direct( std::size_t width, ReductionPolicy policy )
{
  check_width( width, 16 );
  Netlist nl;
  const std::vector<NetId> a = add_operand( nl, "a", width, ValueRange::quaternary() );
  const std::vector<NetId> b = add_operand( nl, "b", width, ValueRange::quaternary() );
  Columns cols = build_partial_products_quaternary( nl, a, b );
  CompressionResult cr = compress_columns( nl, std::move( cols ), Radix::quaternary, policy );
  const std::vector<NetId> outs = build_cpa( nl, cr.columns, Radix::quaternary, 2 * width, cr.plan );
  for ( const NetId o : outs )
  {
    nl.mark_output( o );
  }
  nl.finalize();
  return { std::move( nl ), std::move( cr.plan ) };
}

GeneratedCircuit build_quaternary_hybrid( std::size_t width, ReductionPolicy policy )
{
  check_width( width, 16 );
  Netlist nl;
  const std::vector<NetId> a = add_operand( nl, "a", width, ValueRange::quaternary() );
  const std::vector<NetId> b = add_operand( nl, "b", width, ValueRange::quaternary() );

  // radix interface in: one decoder per digit, bit k of digit i has weight 2^(2i+k)
  auto decode = [&]( const std::vector<NetId>& digits ) {
    std::vector<NetId> bits( 2 * digits.size() );
    for ( std::size_t i = 0; i < digits.size(); ++i )
    {
      const std::vector<NetId> xs = nl.add_cell( "DEC_Q2B", { digits[i] } );
      bits[2 * i + 1] = xs[0]; // x1
      bits[2 * i] = xs[1];     // x0
    }
    return bits;
  };
  const std::vector<NetId> a_bits = decode( a );
  const std::vector<NetId> b_bits = decode( b );

  Columns cols = build_partial_products_binary( nl, a_bits, b_bits );
  CompressionResult cr = compress_columns( nl, std::move( cols ), Radix::binary, policy );
  const std::vector<NetId> sum_bits = build_cpa( nl, cr.columns, Radix::binary, 4 * width, cr.plan );

  // radix interface out: one encoder per product digit
  for ( std::size_t k = 0; k < 2 * width; ++k )
  {
    const std::vector<NetId> q = nl.add_cell( "ENC_B2Q", { sum_bits[2 * k + 1], sum_bits[2 * k] } );
    nl.mark_output( q[0] );
  }
  nl.finalize();
  return { std::move( nl ), std::move( cr.plan ) };
}

GeneratedCircuit build_ripple_adder_quaternary( std::size_t width )
{
  check_width( width, 31 );
  Netlist nl;
  const std::vector<NetId> a = add_operand( nl, "a", width, ValueRange::quaternary() );
  const std::vector<NetId> b = add_operand( nl, "b", width, ValueRange::quaternary() );

  ReductionPlan plan;
  plan.radix = Radix::quaternary;
  plan.policy = ReductionPolicy::wallace;
  std::vector<WeightedNet> before;
  for ( std::size_t i = 0; i < width; ++i )
  {
    before.push_back( { static_cast<int>( i ), a[i] } );
    before.push_back( { static_cast<int>( i ), b[i] } );
  }
  plan.snapshots.push_back( std::move( before ) );

  // Q331 chain; the first carry-in is the constant-0 rail
  NetId carry = nl.add_constant( 0, ValueRange::binary() );
  std::vector<WeightedNet> after;
  for ( std::size_t i = 0; i < width; ++i )
  {
    const std::vector<NetId> ins = { a[i], b[i], carry };
    const std::vector<NetId> outs = nl.add_cell( "Q331", ins );
    plan.steps.push_back( { 1, true, static_cast<int>( i ), "Q331", ins, outs } );
    nl.mark_output( outs[0] );
    after.push_back( { static_cast<int>( i ), outs[0] } );
    carry = outs[1];
  }
  nl.mark_output( carry );
  after.push_back( { static_cast<int>( width ), carry } );
  plan.snapshots.push_back( std::move( after ) );

  nl.finalize();
  return { std::move( nl ), std::move( plan ) };
}

const std::vector<std::string>& architecture_names()
{
  static const std::vector<std::string> names = {
      "binary-wallace", "binary-dadda", "quat-direct", "quat-hybrid", "quat-ripple-adder",
  };
  return names;
}

GeneratedCircuit build_architecture( const std::string& architecture, std::size_t width, ReductionPolicy policy )
{
  if ( architecture == "binary-wallace" )
  {
    return build_binary_multiplier( width, ReductionPolicy::wallace );
  }
  if ( architecture == "binary-dadda" )
  {
    return build_binary_multiplier( width, ReductionPolicy::dadda );
  }
  if ( architecture == "quat-direct" )
  {
    return build_quaternary_direct( width, policy );
  }
  if ( architecture == "quat-hybrid" )
  {
    return build_quaternary_hybrid( width, policy );
  }
  if ( architecture == "quat-ripple-adder" )
  {
    return build_ripple_adder_quaternary( width );
  }
  throw std::invalid_argument( "unknown architecture '" + architecture + "'" );
}

} // namespace mvl
