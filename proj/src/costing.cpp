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

#include "mvl/costing.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mvl
{

const std::vector<std::string>& canonical_cell_order()
{
  static const std::vector<std::string> order = {
      "AND2", "XOR2", "FA", "HA", "DEC_Q2B", "ENC_B2Q", "QMUL1", "Q331", "Q332", "QH32", "QH31", "NQI", "IQI", "PQI",
  };
  return order;
}

std::string bill_summary( const BillOfCells& bill )
{
  std::ostringstream os;
  bool first = true;
  auto emit = [&]( const std::string& cell, int count ) {
    os << ( first ? "" : " " ) << cell << ':' << count;
    first = false;
  };
  for ( const std::string& cell : canonical_cell_order() )
  {
    const auto it = bill.find( cell );
    if ( it != bill.end() && it->second != 0 )
    {
      emit( cell, it->second );
    }
  }
  // cells outside the canonical order (user-defined) come last, sorted
  for ( const auto& [cell, count] : bill )
  {
    bool canonical = false;
    for ( const std::string& c : canonical_cell_order() )
    {
      if ( c == cell )
      {
        canonical = true;
        break;
      }
    }
    if ( !canonical && count != 0 )
    {
      emit( cell, count );
    }
  }
  return os.str();
}

BillOfCells merge_bills( const BillOfCells& a, const BillOfCells& b )
{
  BillOfCells out = a;
  for ( const auto& [cell, count] : b )
  {
    out[cell] += count;
  }
  return out;
}

CostBreakdown cost_of_bill( const BillOfCells& bill, const CostScheme& scheme )
{
  CostBreakdown out;
  auto add_line = [&]( const std::string& cell, int count ) {
    const auto it = scheme.costs.find( cell );
    if ( it == scheme.costs.end() )
    {
      throw std::invalid_argument( "cost_of_bill: scheme " + scheme.name + " does not price cell " + cell );
    }
    CostLine line;
    line.cell = cell;
    line.count = count;
    line.unit = it->second;
    line.subtotal = static_cast<long long>( count ) * it->second;
    out.total += line.subtotal;
    out.lines.push_back( std::move( line ) );
  };
  for ( const std::string& cell : canonical_cell_order() )
  {
    const auto it = bill.find( cell );
    if ( it != bill.end() && it->second != 0 )
    {
      add_line( cell, it->second );
    }
  }
  for ( const auto& [cell, count] : bill )
  {
    bool canonical = false;
    for ( const std::string& c : canonical_cell_order() )
    {
      if ( c == cell )
      {
        canonical = true;
        break;
      }
    }
    if ( !canonical && count != 0 )
    {
      add_line( cell, count );
    }
  }
  return out;
}

const std::vector<QMul1Block>& qmul1_blocks()
{
  // The 1-digit multiplier decomposes into operand threshold inverters, two
  // product-bit subcircuit groups and an output mux.  The "min" accounting
  // shares the operand inverters across the subcircuits; the "subblock"
  // accounting charges each subblock its own copies.
  static const std::vector<QMul1Block> blocks = {
      { "A-operand inverters", 12, 24 },
      { "B-operand inverters", 10, 20 },
      { "low product subcircuits", 10, 10 },
      { "high product subcircuits", 10, 10 },
      { "output mux", 12, 12 },
  };
  return blocks;
}

int qmul1_cost_min()
{
  static const int v = std::accumulate( qmul1_blocks().begin(), qmul1_blocks().end(), 0,
                                        []( int acc, const QMul1Block& b ) { return acc + b.cost_min; } );
  return v;
}

int qmul1_cost_subblock()
{
  static const int v = std::accumulate( qmul1_blocks().begin(), qmul1_blocks().end(), 0,
                                        []( int acc, const QMul1Block& b ) { return acc + b.cost_subblock; } );
  return v;
}

const std::vector<CostScheme>& standard_schemes()
{
  static const std::vector<CostScheme> schemes = []() {
    std::vector<CostScheme> s;
    s.push_back( { "binary-fa16",
                   "fa16",
                   { { "AND2", 6 }, { "XOR2", 9 }, { "FA", 16 }, { "HA", 16 }, { "DEC_Q2B", 21 }, { "ENC_B2Q", 14 } } } );
    s.push_back( { "binary-fa28",
                   "fa28",
                   { { "AND2", 6 }, { "XOR2", 9 }, { "FA", 28 }, { "HA", 12 }, { "DEC_Q2B", 21 }, { "ENC_B2Q", 14 } } } );
    s.push_back( { "quat-min",
                   "min",
                   { { "QMUL1", qmul1_cost_min() }, { "Q331", 100 }, { "Q332", 154 }, { "QH32", 50 }, { "QH31", 26 } } } );
    s.push_back( { "quat-subblock",
                   "subblock",
                   { { "QMUL1", qmul1_cost_subblock() },
                     { "Q331", 118 },
                     { "Q332", 184 },
                     { "QH32", 54 },
                     { "QH31", 30 } } } );
    return s;
  }();
  return schemes;
}

const CostScheme& scheme_by_name( const std::string& name )
{
  for ( const CostScheme& s : standard_schemes() )
  {
    if ( s.name == name || s.label == name )
    {
      return s;
    }
  }
  throw std::invalid_argument( "unknown cost scheme '" + name + "'" );
}

const std::vector<ReferenceBill>& reference_bills()
{
  static const std::vector<ReferenceBill> bills = []() {
    std::vector<ReferenceBill> b;
    const BillOfCells binary8x8 = { { "AND2", 64 }, { "FA", 47 }, { "HA", 16 } };
    const BillOfCells adders = { { "Q331", 13 }, { "Q332", 9 }, { "QH32", 3 }, { "QH31", 2 } };
    b.push_back( { "binary-8x8", binary8x8 } );
    b.push_back( { "binary-8x8-reduction", { { "FA", 38 }, { "HA", 15 } } } );
    b.push_back( { "binary-8x8-cpa", { { "FA", 9 }, { "HA", 1 } } } );
    b.push_back( { "quat-direct-adders", adders } );
    b.push_back( { "quat-direct-full", merge_bills( adders, { { "QMUL1", 16 } } ) } );
    b.push_back( { "hybrid-4x4", merge_bills( binary8x8, { { "DEC_Q2B", 4 }, { "ENC_B2Q", 4 } } ) } );
    b.push_back( { "hybrid-4x4-full", merge_bills( binary8x8, { { "DEC_Q2B", 8 }, { "ENC_B2Q", 8 } } ) } );
    return b;
  }();
  return bills;
}

const BillOfCells& reference_bill( const std::string& name )
{
  for ( const ReferenceBill& b : reference_bills() )
  {
    if ( b.name == name )
    {
      return b.bill;
    }
  }
  throw std::invalid_argument( "unknown reference bill '" + name + "'" );
}

std::string format_ratio( long long numerator, long long denominator )
{
  if ( denominator <= 0 )
  {
    throw std::invalid_argument( "format_ratio: denominator must be positive" );
  }
  if ( numerator < 0 )
  {
    throw std::invalid_argument( "format_ratio: numerator must be non-negative" );
  }
  // two decimals, truncated toward zero (matches the published ratios)
  const long long scaled = numerator * 100 / denominator;
  std::ostringstream os;
  os << scaled / 100 << '.' << ( scaled / 10 ) % 10 << scaled % 10;
  return os.str();
}

std::string format_percent_delta( long long value, long long reference )
{
  if ( reference <= 0 )
  {
    throw std::invalid_argument( "format_percent_delta: reference must be positive" );
  }
  const long long scaled = ( value - reference ) * 10000 / reference; // hundredths of a percent
  const long long mag = scaled < 0 ? -scaled : scaled;
  std::ostringstream os;
  os << ( scaled < 0 ? '-' : '+' ) << mag / 100 << '.' << ( mag / 10 ) % 10 << mag % 10 << '%';
  return os.str();
}

ComparisonReport compare( const std::vector<ComparisonEntry>& entries, std::vector<std::string> notes )
{
  if ( entries.empty() )
  {
    throw std::invalid_argument( "compare: needs at least one entry (the baseline)" );
  }
  ComparisonReport report;
  report.notes = std::move( notes );
  long long baseline = 0;
  for ( const ComparisonEntry& e : entries )
  {
    const CostScheme& scheme = scheme_by_name( e.scheme );
    ComparisonRow row;
    row.architecture = e.architecture;
    row.scheme_label = scheme.label;
    row.bill = e.bill;
    row.total = cost_of_bill( e.bill, scheme ).total;
    if ( report.rows.empty() )
    {
      baseline = row.total;
    }
    row.ratio_to_baseline = format_ratio( row.total, baseline );
    report.rows.push_back( std::move( row ) );
  }
  return report;
}

std::string ComparisonReport::to_markdown() const
{
  std::ostringstream os;
  os << "| architecture | scheme | total | ratio | bill |\n";
  os << "| --- | --- | ---: | ---: | --- |\n";
  for ( const ComparisonRow& row : rows )
  {
    os << "| " << row.architecture << " | " << row.scheme_label << " | " << row.total << " | "
       << row.ratio_to_baseline << " | " << bill_summary( row.bill ) << " |\n";
  }
  for ( const std::string& note : notes )
  {
    os << "\nnote: " << note << '\n';
  }
  return os.str();
}

std::string ComparisonReport::to_csv() const
{
  std::ostringstream os;
  os << "architecture,scheme,total,ratio,bill\n";
  for ( const ComparisonRow& row : rows )
  {
    os << row.architecture << ',' << row.scheme_label << ',' << row.total << ',' << row.ratio_to_baseline << ','
       << bill_summary( row.bill ) << '\n';
  }
  return os.str();
}

} // namespace mvl
