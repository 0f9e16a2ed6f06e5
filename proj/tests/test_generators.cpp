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
#include "mvl/netlist_json.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>

using namespace mvl;

namespace
{

//! exhaustive product check for small widths via direct netlist evaluation
void check_multiplies( const GeneratedCircuit& gen, std::size_t width, int radix )
{
  const std::uint64_t side = [&] {
    std::uint64_t s = 1;
    for ( std::size_t i = 0; i < width; ++i )
    {
      s *= static_cast<std::uint64_t>( radix );
    }
    return s;
  }();
  REQUIRE( gen.netlist.inputs().size() == 2 * width );
  for ( std::uint64_t a = 0; a < side; ++a )
  {
    for ( std::uint64_t b = 0; b < side; ++b )
    {
      std::vector<int> in;
      const DigitVector da = to_digits( a, radix, width );
      const DigitVector db = to_digits( b, radix, width );
      in.insert( in.end(), da.digits.begin(), da.digits.end() );
      in.insert( in.end(), db.digits.begin(), db.digits.end() );
      const std::vector<int> out = gen.netlist.evaluate( in );
      DigitVector dp;
      dp.radix = radix;
      dp.digits = out;
      if ( from_digits( dp ) != a * b )
      {
        CAPTURE( a );
        CAPTURE( b );
        REQUIRE( from_digits( dp ) == a * b );
      }
    }
  }
}

} // namespace

TEST_CASE( "binary partial products form the expected trapezoid" )
{
  Netlist nl;
  std::vector<NetId> a, b;
  for ( int i = 0; i < 4; ++i )
  {
    a.push_back( nl.add_input( "a" + std::to_string( i ), ValueRange::binary() ) );
  }
  for ( int i = 0; i < 4; ++i )
  {
    b.push_back( nl.add_input( "b" + std::to_string( i ), ValueRange::binary() ) );
  }
  const Columns cols = build_partial_products_binary( nl, a, b );
  REQUIRE( cols.cols.size() == 7 );
  const std::size_t expected[] = { 1, 2, 3, 4, 3, 2, 1 };
  for ( std::size_t c = 0; c < 7; ++c )
  {
    CHECK( cols.cols[c].size() == expected[c] );
  }
  CHECK( nl.bill_of_cells().at( "AND2" ) == 16 );
  CHECK( cols.max_height() == 4 );
}

TEST_CASE( "quaternary partial products interleave product and carry digits" )
{
  Netlist nl;
  std::vector<NetId> a, b;
  for ( int i = 0; i < 2; ++i )
  {
    a.push_back( nl.add_input( "a" + std::to_string( i ), ValueRange::quaternary() ) );
  }
  for ( int i = 0; i < 2; ++i )
  {
    b.push_back( nl.add_input( "b" + std::to_string( i ), ValueRange::quaternary() ) );
  }
  const Columns cols = build_partial_products_quaternary( nl, a, b );
  CHECK( nl.bill_of_cells().at( "QMUL1" ) == 4 );
  REQUIRE( cols.cols.size() >= 4 );
  // weight 0: qm(0,0); weight 1: qm(0,1), qm(1,0), qc(0,0); weight 2: qm(1,1) + 2 carries
  CHECK( cols.cols[0].size() == 1 );
  CHECK( cols.cols[1].size() == 3 );
  CHECK( cols.cols[2].size() == 3 );
  CHECK( cols.cols[3].size() == 1 );
  // carry wires are ternary, product wires quaternary
  CHECK( cols.cols[0][0].range == ValueRange::quaternary() );
  CHECK( cols.cols[3][0].range == ValueRange::ternary() );
}

TEST_CASE( "binary wallace 8x8 census" )
{
  const GeneratedCircuit gen = build_binary_multiplier( 8, ReductionPolicy::wallace );
  const BillOfCells bill = gen.netlist.bill_of_cells();
  CHECK( bill.at( "AND2" ) == 64 );
  CHECK( bill.at( "FA" ) == 47 );
  CHECK( bill.at( "HA" ) == 17 );
  CHECK( bill.size() == 3 );
  CHECK( gen.plan.num_stages() == 4 );
  CHECK( cost_of_bill( bill, scheme_by_name( "binary-fa16" ) ).total == 1408 );
  CHECK( cost_of_bill( bill, scheme_by_name( "binary-fa28" ) ).total == 1904 );
}

TEST_CASE( "binary wallace small-width censuses" )
{
  const BillOfCells b1 = build_binary_multiplier( 1 ).netlist.bill_of_cells();
  CHECK( b1 == BillOfCells{ { "AND2", 1 } } );

  const BillOfCells b2 = build_binary_multiplier( 2 ).netlist.bill_of_cells();
  CHECK( b2 == BillOfCells{ { "AND2", 4 }, { "HA", 2 } } );

  const BillOfCells b4 = build_binary_multiplier( 4 ).netlist.bill_of_cells();
  CHECK( b4 == BillOfCells{ { "AND2", 16 }, { "FA", 8 }, { "HA", 4 } } );
}

TEST_CASE( "binary dadda 8x8 census" )
{
  const GeneratedCircuit gen = build_binary_multiplier( 8, ReductionPolicy::dadda );
  const BillOfCells bill = gen.netlist.bill_of_cells();
  CHECK( bill.at( "AND2" ) == 64 );
  CHECK( bill.at( "FA" ) == 48 );
  CHECK( bill.at( "HA" ) == 8 );
  CHECK( cost_of_bill( bill, scheme_by_name( "binary-fa16" ) ).total == 1280 );
  CHECK( cost_of_bill( bill, scheme_by_name( "binary-fa28" ) ).total == 1824 );
}

TEST_CASE( "quaternary direct censuses" )
{
  const BillOfCells q1 = build_quaternary_direct( 1 ).netlist.bill_of_cells();
  CHECK( q1 == BillOfCells{ { "QMUL1", 1 } } );

  const BillOfCells q2 = build_quaternary_direct( 2 ).netlist.bill_of_cells();
  CHECK( q2 == BillOfCells{ { "QMUL1", 4 }, { "Q331", 4 }, { "QH32", 1 } } );
  CHECK( cost_of_bill( q2, scheme_by_name( "quat-min" ) ).total == 666 );

  const BillOfCells q3 = build_quaternary_direct( 3 ).netlist.bill_of_cells();
  CHECK( q3 == BillOfCells{ { "QMUL1", 9 }, { "Q331", 9 }, { "Q332", 2 }, { "QH31", 1 }, { "QH32", 2 } } );
  CHECK( cost_of_bill( q3, scheme_by_name( "quat-min" ) ).total == 1820 );

  const GeneratedCircuit gen4 = build_quaternary_direct( 4 );
  const BillOfCells q4 = gen4.netlist.bill_of_cells();
  CHECK( q4 == BillOfCells{ { "QMUL1", 16 }, { "Q331", 17 }, { "Q332", 6 }, { "QH31", 1 }, { "QH32", 3 } } );
  CHECK( gen4.plan.num_stages() == 2 ); // wallace radix 4 runs limits {3, 2}

  // adders-only cost sits within 5% of the published counts
  BillOfCells adders = q4;
  adders.erase( "QMUL1" );
  CHECK( cost_of_bill( adders, scheme_by_name( "quat-min" ) ).total == 2800 );
  CHECK( cost_of_bill( adders, scheme_by_name( "quat-subblock" ) ).total == 3302 );
  CHECK( cost_of_bill( q4, scheme_by_name( "quat-min" ) ).total == 3664 );
  CHECK( cost_of_bill( q4, scheme_by_name( "quat-subblock" ) ).total == 4518 );
}

TEST_CASE( "quaternary dadda 4x4 census" )
{
  const BillOfCells q4 = build_quaternary_direct( 4, ReductionPolicy::dadda ).netlist.bill_of_cells();
  CHECK( q4 == BillOfCells{ { "QMUL1", 16 }, { "Q331", 23 }, { "QH31", 1 }, { "QH32", 5 } } );
  CHECK( cost_of_bill( q4, scheme_by_name( "quat-min" ) ).total == 3440 );
}

TEST_CASE( "hybrid 4x4 census" )
{
  const BillOfCells h4 = build_quaternary_hybrid( 4 ).netlist.bill_of_cells();
  CHECK( h4 == BillOfCells{ { "AND2", 64 },
                            { "FA", 47 },
                            { "HA", 17 },
                            { "DEC_Q2B", 8 },
                            { "ENC_B2Q", 8 } } );
  CHECK( cost_of_bill( h4, scheme_by_name( "binary-fa16" ) ).total == 1688 );
  CHECK( cost_of_bill( h4, scheme_by_name( "binary-fa28" ) ).total == 2184 );
}

TEST_CASE( "ripple adder census and behavior" )
{
  const GeneratedCircuit gen = build_ripple_adder_quaternary( 4 );
  CHECK( gen.netlist.bill_of_cells() == BillOfCells{ { "Q331", 4 } } );
  CHECK( gen.netlist.outputs().size() == 5 ); // 4 digits + carry

  // the first carry-in is a constant-0 net
  const std::string text = netlist_to_string( gen.netlist );
  CHECK( text.find( "\"const\": 0" ) != std::string::npos );

  // exhaustive add check
  for ( std::uint64_t a = 0; a < 256; ++a )
  {
    for ( std::uint64_t b = 0; b < 256; ++b )
    {
      std::vector<int> in;
      const DigitVector da = to_digits( a, 4, 4 );
      const DigitVector db = to_digits( b, 4, 4 );
      in.insert( in.end(), da.digits.begin(), da.digits.end() );
      in.insert( in.end(), db.digits.begin(), db.digits.end() );
      DigitVector dp;
      dp.radix = 4;
      dp.digits = gen.netlist.evaluate( in );
      REQUIRE( from_digits( dp ) == a + b );
    }
  }
}

TEST_CASE( "small multipliers are exhaustively correct" )
{
  check_multiplies( build_binary_multiplier( 1 ), 1, 2 );
  check_multiplies( build_binary_multiplier( 2 ), 2, 2 );
  check_multiplies( build_binary_multiplier( 4 ), 4, 2 );
  check_multiplies( build_binary_multiplier( 4, ReductionPolicy::dadda ), 4, 2 );
  check_multiplies( build_quaternary_direct( 1 ), 1, 4 );
  check_multiplies( build_quaternary_direct( 2 ), 2, 4 );
  check_multiplies( build_quaternary_direct( 3 ), 3, 4 );
  check_multiplies( build_quaternary_direct( 2, ReductionPolicy::dadda ), 2, 4 );
  check_multiplies( build_quaternary_hybrid( 1 ), 1, 4 );
  check_multiplies( build_quaternary_hybrid( 2 ), 2, 4 );
}

TEST_CASE( "hybrid and direct agree digit for digit" )
{
  const GeneratedCircuit hybrid = build_quaternary_hybrid( 2 );
  const GeneratedCircuit direct = build_quaternary_direct( 2 );
  for ( int a = 0; a < 16; ++a )
  {
    for ( int b = 0; b < 16; ++b )
    {
      const std::vector<int> in = { a % 4, a / 4, b % 4, b / 4 };
      REQUIRE( hybrid.netlist.evaluate( in ) == direct.netlist.evaluate( in ) );
    }
  }
}

TEST_CASE( "value conservation across plan snapshots" )
{
  // sum of wire * radix^weight is the same in every snapshot
  const GeneratedCircuit gen = build_quaternary_direct( 3 );
  REQUIRE( gen.plan.snapshots.size() >= 2 );
  for ( std::uint64_t a = 0; a < 64; a += 7 )
  {
    for ( std::uint64_t b = 0; b < 64; b += 5 )
    {
      std::vector<int> in;
      const DigitVector da = to_digits( a, 4, 3 );
      const DigitVector db = to_digits( b, 4, 3 );
      in.insert( in.end(), da.digits.begin(), da.digits.end() );
      in.insert( in.end(), db.digits.begin(), db.digits.end() );
      const EvalTrace trace = gen.netlist.evaluate_trace( in );
      for ( const auto& snapshot : gen.plan.snapshots )
      {
        std::uint64_t total = 0;
        for ( const WeightedNet& wn : snapshot )
        {
          std::uint64_t scale = 1;
          for ( int w = 0; w < wn.weight; ++w )
          {
            scale *= 4;
          }
          total += scale * static_cast<std::uint64_t>( trace.values[wn.net] );
        }
        REQUIRE( total == a * b );
      }
    }
  }
}

TEST_CASE( "reduction plans render as text" )
{
  const GeneratedCircuit gen = build_quaternary_direct( 2 );
  const std::string text = gen.plan.to_text();
  CHECK( text.find( "radix-4 wallace reduction" ) != std::string::npos );
  CHECK( text.find( "carry propagation:" ) != std::string::npos );
  CHECK( text.find( "Q331" ) != std::string::npos );
  CHECK( !gen.plan.steps.empty() );

  const GeneratedCircuit adder = build_ripple_adder_quaternary( 2 );
  CHECK( !adder.plan.to_text().empty() );
}

TEST_CASE( "build_cpa rejects unreduced columns" )
{
  Netlist nl;
  Columns cols;
  cols.ensure( 0 );
  for ( int i = 0; i < 3; ++i )
  {
    cols.push( 0, nl.add_input( "x" + std::to_string( i ), ValueRange::binary() ), ValueRange::binary() );
  }
  ReductionPlan plan;
  CHECK_THROWS_AS( build_cpa( nl, cols, Radix::binary, 1, plan ), std::invalid_argument );
}

TEST_CASE( "builders validate their widths" )
{
  CHECK_THROWS_AS( build_binary_multiplier( 0 ), std::invalid_argument );
  CHECK_THROWS_AS( build_binary_multiplier( 33 ), std::invalid_argument );
  CHECK_THROWS_AS( build_quaternary_direct( 0 ), std::invalid_argument );
  CHECK_THROWS_AS( build_quaternary_direct( 17 ), std::invalid_argument );
  CHECK_THROWS_AS( build_quaternary_hybrid( 17 ), std::invalid_argument );
  CHECK_THROWS_AS( build_ripple_adder_quaternary( 0 ), std::invalid_argument );
  CHECK_THROWS_AS( build_architecture( "no-such-arch", 4 ), std::invalid_argument );
}

TEST_CASE( "architecture names drive build_architecture" )
{
  const std::vector<std::string>& names = architecture_names();
  REQUIRE( names == std::vector<std::string>{ "binary-wallace", "binary-dadda", "quat-direct", "quat-hybrid",
                                              "quat-ripple-adder" } );
  for ( const std::string& name : names )
  {
    const GeneratedCircuit gen = build_architecture( name, 2 );
    CHECK( gen.netlist.finalized() );
    CHECK( gen.netlist.validate().empty() );
  }
  // binary-dadda resolves the dadda policy regardless of the argument
  const BillOfCells dadda = build_architecture( "binary-dadda", 8 ).netlist.bill_of_cells();
  CHECK( dadda.at( "HA" ) == 8 );
}

TEST_CASE( "generated netlists pass the structural audit" )
{
  for ( const std::string& name : architecture_names() )
  {
    const GeneratedCircuit gen = build_architecture( name, 4 );
    CHECK( gen.netlist.validate().empty() );
  }
  CHECK( build_binary_multiplier( 8 ).netlist.validate().empty() );
  CHECK( build_quaternary_hybrid( 4 ).netlist.validate().empty() );
}
