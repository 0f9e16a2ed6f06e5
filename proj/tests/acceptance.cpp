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

/*
 * Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
 * FAIL.  Runs standalone (no test framework) so a plain shell invocation is
 * enough to audit a build.
 */

#include "mvl/cells.hpp"
#include "mvl/costing.hpp"
#include "mvl/generators.hpp"
#include "mvl/report.hpp"
#include "mvl/verify.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace mvl;

namespace
{

int failures = 0;

void criterion( const std::string& name, bool pass, const std::string& detail = "" )
{
  std::cout << ( pass ? "PASS" : "FAIL" ) << ": " << name;
  if ( !detail.empty() )
  {
    std::cout << " -- " << detail;
  }
  std::cout << "\n";
  if ( !pass )
  {
    ++failures;
  }
}

VerificationResult verify_exhaustive( const GeneratedCircuit& gen, bool adder )
{
  const OperandLayout layout = infer_operands( gen.netlist );
  return exhaustive_verify( gen.netlist, layout, adder ? add_oracle() : multiply_oracle(),
                            1ull << 26 );
}

//! digit tuple for operand value v, LSD first
std::vector<int> operand_inputs( std::uint64_t a, std::uint64_t b, int radix, std::size_t width )
{
  const DigitVector da = to_digits( a, radix, width );
  const DigitVector db = to_digits( b, radix, width );
  std::vector<int> in( da.digits );
  in.insert( in.end(), db.digits.begin(), db.digits.end() );
  return in;
}

//! every snapshot of the plan must carry the same weighted total
bool conserves( const GeneratedCircuit& gen, int radix, std::size_t width, bool adder,
                std::uint64_t seed, std::string& detail )
{
  std::mt19937_64 rng( seed );
  std::uint64_t side = 1;
  for ( std::size_t i = 0; i < width; ++i )
  {
    side *= static_cast<std::uint64_t>( radix );
  }
  std::uniform_int_distribution<std::uint64_t> dist( 0, side - 1 );
  for ( int t = 0; t < 1000; ++t )
  {
    const std::uint64_t a = dist( rng );
    const std::uint64_t b = dist( rng );
    const std::uint64_t expect = adder ? a + b : a * b;
    const EvalTrace trace = gen.netlist.evaluate_trace( operand_inputs( a, b, radix, width ) );
    // snapshot weights are powers of the plan's radix (the hybrid reduces in
    // a binary core even though its operands are quaternary)
    const std::uint64_t base = static_cast<std::uint64_t>( gen.plan.radix );
    for ( std::size_t s = 0; s < gen.plan.snapshots.size(); ++s )
    {
      std::uint64_t total = 0;
      for ( const WeightedNet& wn : gen.plan.snapshots[s] )
      {
        std::uint64_t scale = 1;
        for ( int w = 0; w < wn.weight; ++w )
        {
          scale *= base;
        }
        total += scale * static_cast<std::uint64_t>( trace.values[wn.net] );
      }
      if ( total != expect )
      {
        std::ostringstream os;
        os << "a=" << a << " b=" << b << " snapshot " << s << " totals " << total << ", expected " << expect;
        detail = os.str();
        return false;
      }
    }
  }
  return true;
}

bool tables_match_oracles( std::string& detail )
{
  const CellLibrary& lib = standard_library();
  const auto fail = [&]( const std::string& what ) {
    detail = what;
    return false;
  };

  const TruthTable mul = enumerate_truth_table( lib.at( "QMUL1" ) );
  if ( mul.rows.size() != 16 )
  {
    return fail( "QMUL1 row count" );
  }
  for ( const auto& row : mul.rows )
  {
    if ( 4 * row[3] + row[2] != row[0] * row[1] )
    {
      return fail( "QMUL1 violates a*b = 4*qc + qm" );
    }
  }

  const struct
  {
    const char* cell;
    std::size_t rows;
  } adders[] = { { "Q332", 48 }, { "Q331", 32 }, { "QH32", 12 }, { "QH31", 8 }, { "FA", 8 }, { "HA", 4 } };
  for ( const auto& [cell, rows] : adders )
  {
    const TruthTable tt = enumerate_truth_table( lib.at( cell ) );
    if ( tt.rows.size() != rows )
    {
      return fail( std::string( cell ) + " row count" );
    }
    const std::size_t n_in = lib.at( cell ).num_inputs();
    for ( const auto& row : tt.rows )
    {
      int in_sum = 0;
      for ( std::size_t i = 0; i < n_in; ++i )
      {
        in_sum += row[i];
      }
      const int radix = lib.at( cell ).output_port( 0 ).range == ValueRange::binary() ? 2 : 4;
      if ( row[n_in] + radix * row[n_in + 1] != in_sum )
      {
        return fail( std::string( cell ) + " is not an exact adder" );
      }
    }
  }

  for ( int q = 0; q < 4; ++q )
  {
    const auto [x1, x0] = decode_q2b( q );
    if ( 2 * x1 + x0 != q || encode_b2q( x1, x0 ) != q )
    {
      return fail( "decoder/encoder mismatch" );
    }
    const auto inv = mvl_inverters( q );
    if ( inv[0] != ( q < 1 ) || inv[1] != ( q < 2 ) || inv[2] != ( q < 3 ) )
    {
      return fail( "threshold inverter mismatch" );
    }
  }
  return true;
}

long long cost( const BillOfCells& bill, const char* scheme )
{
  return cost_of_bill( bill, scheme_by_name( scheme ) ).total;
}

//! |generated - reference| <= 5% of reference
bool within_5pct( long long generated, long long reference )
{
  return 20 * ( generated > reference ? generated - reference : reference - generated ) <= reference;
}

} // namespace

int main()
{
  // --- criterion 1: exhaustive functional equivalence --------------------
  const auto t0 = std::chrono::steady_clock::now();
  const GeneratedCircuit wallace8 = build_binary_multiplier( 8, ReductionPolicy::wallace );
  const VerificationResult r_wallace = verify_exhaustive( wallace8, false );
  const double secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
  {
    std::ostringstream os;
    os << summarize( r_wallace ) << " in " << secs << " s";
    criterion( "1a binary Wallace 8x8: 65536 cases, < 5 s",
               r_wallace.passed() && r_wallace.cases_run == 65536 && secs < 5.0, os.str() );
  }

  const GeneratedCircuit dadda8 = build_binary_multiplier( 8, ReductionPolicy::dadda );
  const VerificationResult r_dadda = verify_exhaustive( dadda8, false );
  criterion( "1b binary Dadda 8x8: 65536 cases", r_dadda.passed() && r_dadda.cases_run == 65536,
             summarize( r_dadda ) );

  const GeneratedCircuit direct4 = build_quaternary_direct( 4 );
  const VerificationResult r_direct = verify_exhaustive( direct4, false );
  criterion( "1c direct quaternary 4x4: 65536 cases", r_direct.passed() && r_direct.cases_run == 65536,
             summarize( r_direct ) );

  const GeneratedCircuit hybrid4 = build_quaternary_hybrid( 4 );
  const VerificationResult r_hybrid = verify_exhaustive( hybrid4, false );
  bool hybrid_agrees = true;
  for ( std::uint64_t a = 0; a < 256 && hybrid_agrees; ++a )
  {
    for ( std::uint64_t b = 0; b < 256; ++b )
    {
      const std::vector<int> in = operand_inputs( a, b, 4, 4 );
      if ( hybrid4.netlist.evaluate( in ) != direct4.netlist.evaluate( in ) )
      {
        hybrid_agrees = false;
        break;
      }
    }
  }
  criterion( "1d hybrid quaternary 4x4: 65536 cases, digit-for-digit equal to direct",
             r_hybrid.passed() && r_hybrid.cases_run == 65536 && hybrid_agrees, summarize( r_hybrid ) );

  const GeneratedCircuit adder4 = build_ripple_adder_quaternary( 4 );
  const VerificationResult r_adder = verify_exhaustive( adder4, true );
  criterion( "1e quaternary ripple adder, 4 digits: 65536 cases",
             r_adder.passed() && r_adder.cases_run == 65536, summarize( r_adder ) );

  // --- criterion 2: cell truth tables vs integer oracles -----------------
  {
    std::string detail;
    const bool ok = tables_match_oracles( detail );
    criterion( "2 cell truth tables match the integer oracles (16/48/32/12/8 rows)", ok, detail );
  }

  // --- criterion 3: pinned tables, integer-exact --------------------------
  criterion( "3a QMUL1 cost 54 (min) / 76 (subblock) from its sub-bill",
             qmul1_cost_min() == 54 && qmul1_cost_subblock() == 76 );

  {
    const BillOfCells pp = { { "AND2", 64 } };
    const BillOfCells red_fa = { { "FA", 38 } };
    const BillOfCells red_ha = { { "HA", 15 } };
    const BillOfCells& cpa = reference_bill( "binary-8x8-cpa" );
    const bool rows_ok = cost( pp, "binary-fa16" ) == 384 && cost( pp, "binary-fa28" ) == 384 &&
                         cost( red_fa, "binary-fa16" ) == 608 && cost( red_fa, "binary-fa28" ) == 1064 &&
                         cost( red_ha, "binary-fa16" ) == 240 && cost( red_ha, "binary-fa28" ) == 180 &&
                         cost( cpa, "binary-fa16" ) == 160 && cost( cpa, "binary-fa28" ) == 264;
    const bool totals_ok = cost( reference_bill( "binary-8x8" ), "binary-fa16" ) == 1392 &&
                           cost( reference_bill( "binary-8x8" ), "binary-fa28" ) == 1892;
    criterion( "3b binary 8x8 rows 384, 608/1064, 240/180, 160/264; totals 1392/1892",
               rows_ok && totals_ok );
  }

  criterion( "3c hybrid 4x4 totals 1532/2032 (published) and 1672/2172 (all digits)",
             cost( reference_bill( "hybrid-4x4" ), "binary-fa16" ) == 1532 &&
                 cost( reference_bill( "hybrid-4x4" ), "binary-fa28" ) == 2032 &&
                 cost( reference_bill( "hybrid-4x4-full" ), "binary-fa16" ) == 1672 &&
                 cost( reference_bill( "hybrid-4x4-full" ), "binary-fa28" ) == 2172 );

  {
    const CostScheme& qmin = scheme_by_name( "quat-min" );
    const CostScheme& qsub = scheme_by_name( "quat-subblock" );
    criterion( "3d quaternary adder costs Q331 100/118, Q332 154/184, QH32 50/54, QH31 26/30",
               qmin.costs.at( "Q331" ) == 100 && qsub.costs.at( "Q331" ) == 118 &&
                   qmin.costs.at( "Q332" ) == 154 && qsub.costs.at( "Q332" ) == 184 &&
                   qmin.costs.at( "QH32" ) == 50 && qsub.costs.at( "QH32" ) == 54 &&
                   qmin.costs.at( "QH31" ) == 26 && qsub.costs.at( "QH31" ) == 30 );
  }

  criterion( "3e direct 4x4 totals: adders 2888/3412, full 3752/4628",
             cost( reference_bill( "quat-direct-adders" ), "quat-min" ) == 2888 &&
                 cost( reference_bill( "quat-direct-adders" ), "quat-subblock" ) == 3412 &&
                 cost( reference_bill( "quat-direct-full" ), "quat-min" ) == 3752 &&
                 cost( reference_bill( "quat-direct-full" ), "quat-subblock" ) == 4628 );

  criterion( "3f ratio 1892/2888 prints as 0.65 and appears in the report",
             format_ratio( 1892, 2888 ) == "0.65" &&
                 reproduction_report_markdown().find( "= 0.65" ) != std::string::npos );

  // --- criterion 4: generator census vs published census ------------------
  {
    const BillOfCells generated = wallace8.netlist.bill_of_cells();
    const BillOfCells& published = reference_bill( "binary-8x8" );
    const bool exact = generated == published;
    const bool close = r_wallace.passed() &&
                       within_5pct( cost( generated, "binary-fa16" ), cost( published, "binary-fa16" ) ) &&
                       within_5pct( cost( generated, "binary-fa28" ), cost( published, "binary-fa28" ) );
    criterion( "4a binary Wallace 8x8 census: exact, or verified within 5% under fa16 and fa28",
               exact || close,
               "generated {" + bill_summary( generated ) + "}, published {" + bill_summary( published ) + "}" );
  }
  {
    BillOfCells generated = direct4.netlist.bill_of_cells();
    generated.erase( "QMUL1" );
    const BillOfCells& published = reference_bill( "quat-direct-adders" );
    const bool exact = generated == published;
    const bool close = r_direct.passed() &&
                       within_5pct( cost( generated, "quat-min" ), cost( published, "quat-min" ) ) &&
                       within_5pct( cost( generated, "quat-subblock" ), cost( published, "quat-subblock" ) );
    criterion( "4b direct 4x4 adder census: exact, or verified within 5% under min and subblock",
               exact || close,
               "generated {" + bill_summary( generated ) + "}, published {" + bill_summary( published ) + "}" );
  }

  // --- criterion 5: standalone invariants ---------------------------------
  {
    bool ok = true;
    std::string detail;
    const struct
    {
      const char* name;
      const GeneratedCircuit& gen;
      int radix;
      std::size_t width;
      bool adder;
    } cases[] = {
        { "binary-wallace", wallace8, 2, 8, false }, { "binary-dadda", dadda8, 2, 8, false },
        { "quat-direct", direct4, 4, 4, false },     { "quat-hybrid", hybrid4, 4, 4, false },
        { "quat-ripple-adder", adder4, 4, 4, true },
    };
    for ( const auto& c : cases )
    {
      std::string why;
      if ( !conserves( c.gen, c.radix, c.width, c.adder, 20260819, why ) )
      {
        ok = false;
        detail = std::string( c.name ) + ": " + why;
        break;
      }
    }
    criterion( "5a value conservation across all stages, 1000 seeded inputs per architecture", ok, detail );
  }
  {
    bool ok = true;
    std::string detail;
    const struct
    {
      const char* name;
      const GeneratedCircuit& gen;
      const VerificationResult& result;
    } audits[] = {
        { "binary-wallace", wallace8, r_wallace }, { "binary-dadda", dadda8, r_dadda },
        { "quat-direct", direct4, r_direct },      { "quat-hybrid", hybrid4, r_hybrid },
        { "quat-ripple-adder", adder4, r_adder },
    };
    for ( const auto& a : audits )
    {
      const RangeAudit audit = audit_ranges( a.gen.netlist, a.result );
      if ( !audit.violations.empty() )
      {
        ok = false;
        detail = std::string( a.name ) + ": " + audit.violations.front();
        break;
      }
    }
    criterion( "5b range audit: zero violations on every exhaustively verified netlist", ok, detail );
  }
  {
    bool linear = true;
    std::mt19937_64 rng( 7 );
    std::uniform_int_distribution<int> count( 0, 30 );
    for ( const CostScheme& scheme : standard_schemes() )
    {
      for ( int trial = 0; trial < 100 && linear; ++trial )
      {
        BillOfCells a, b;
        for ( const auto& [cell, unit] : scheme.costs )
        {
          a[cell] = count( rng );
          b[cell] = count( rng );
        }
        linear = cost_of_bill( merge_bills( a, b ), scheme ).total ==
                 cost_of_bill( a, scheme ).total + cost_of_bill( b, scheme ).total;
      }
    }
    bool dominated = true;
    const CostScheme& qmin = scheme_by_name( "quat-min" );
    const CostScheme& qsub = scheme_by_name( "quat-subblock" );
    for ( const auto& [cell, unit] : qmin.costs )
    {
      dominated = dominated && qsub.costs.at( cell ) >= unit;
    }
    criterion( "5c cost linearity on all schemes; subblock dominates min per cell", linear && dominated );
  }

  std::cout << ( failures == 0 ? "ALL CRITERIA PASSED" : std::to_string( failures ) + " CRITERIA FAILED" )
            << "\n";
  return failures == 0 ? 0 : 1;
}
