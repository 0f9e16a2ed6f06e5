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

#include "mvl/cli.hpp"

#include "mvl/costing.hpp"
#include "mvl/generators.hpp"
#include "mvl/netlist_json.hpp"
#include "mvl/report.hpp"
#include "mvl/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace mvl
{

namespace
{

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsageError = 2;

void write_file( const std::string& path, const std::string& text )
{
  std::ofstream os( path, std::ios::binary );
  if ( !os )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  os << text;
}

ReductionPolicy parse_policy( const std::string& name )
{
  if ( name == "wallace" )
  {
    return ReductionPolicy::wallace;
  }
  if ( name == "dadda" )
  {
    return ReductionPolicy::dadda;
  }
  throw CLI::ValidationError( "--policy", "must be wallace or dadda" );
}

int cmd_build( const std::string& arch, std::size_t width, const std::string& policy_name,
               const std::string& out_path, const std::string& plan_path, const std::string& scheme_name,
               std::ostream& out )
{
  // the binary architectures carry their policy in the name
  if ( !policy_name.empty() && ( arch == "binary-wallace" || arch == "binary-dadda" ) &&
       arch != "binary-" + policy_name )
  {
    throw CLI::ValidationError( "--policy", "conflicts with architecture " + arch );
  }
  const ReductionPolicy policy = parse_policy( policy_name.empty() ? "wallace" : policy_name );

  const GeneratedCircuit gen = build_architecture( arch, width, policy );
  const BillOfCells bill = gen.netlist.bill_of_cells();
  out << arch << " width " << width << ": " << bill_summary( bill ) << "\n";
  if ( !scheme_name.empty() )
  {
    const CostScheme& scheme = scheme_by_name( scheme_name );
    const CostBreakdown breakdown = cost_of_bill( bill, scheme );
    for ( const CostLine& line : breakdown.lines )
    {
      out << "  " << line.cell << " x" << line.count << " @" << line.unit << " = " << line.subtotal << "\n";
    }
    out << "total (" << scheme.name << "): " << breakdown.total << "\n";
  }
  if ( !out_path.empty() )
  {
    save_netlist( gen.netlist, out_path );
    out << "netlist written to " << out_path << "\n";
  }
  if ( !plan_path.empty() )
  {
    write_file( plan_path, gen.plan.to_text() );
    out << "plan written to " << plan_path << "\n";
  }
  return kOk;
}

int cmd_verify( const std::string& path, const std::string& arch, std::uint64_t cap, std::uint64_t trials,
                std::uint64_t seed, std::ostream& out, std::ostream& err )
{
  // a file that fails to parse or validate is a failing subject (exit 1),
  // unlike bad flags or an unreadable path (exit 2)
  std::optional<Netlist> nl;
  try
  {
    nl.emplace( load_netlist( path ) );
  }
  catch ( const std::invalid_argument& e )
  {
    err << "invalid netlist: " << e.what() << "\n";
    return kVerifyFailed;
  }
  catch ( const std::runtime_error& e )
  {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const std::vector<Violation> violations = nl->validate();
  if ( !violations.empty() )
  {
    for ( const Violation& v : violations )
    {
      err << "violation: " << v.where << ": " << v.message << "\n";
    }
    return kVerifyFailed;
  }
  OperandLayout layout;
  try
  {
    layout = infer_operands( *nl );
  }
  catch ( const std::invalid_argument& e )
  {
    err << "invalid netlist: " << e.what() << "\n";
    return kVerifyFailed;
  }
  const Oracle oracle = arch == "quat-ripple-adder" ? add_oracle() : multiply_oracle();

  VerificationResult result;
  if ( trials > 0 )
  {
    result = sampled_verify( *nl, layout, oracle, trials, seed );
  }
  else
  {
    result = exhaustive_verify( *nl, layout, oracle, cap ); // throws above the cap
  }
  out << arch << " " << layout.width_a << "x" << layout.width_b << " (radix " << layout.radix
      << "): " << summarize( result ) << "\n";
  if ( !result.passed() )
  {
    for ( const Counterexample& ce : result.counterexamples )
    {
      err << "counterexample: a=" << ce.a << " b=" << ce.b << " expected=" << ce.expected << " got=" << ce.got
          << "\n";
    }
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_report( const std::string& format, const std::string& out_path, std::ostream& out )
{
  std::string text;
  if ( format == "md" )
  {
    text = reproduction_report_markdown();
  }
  else if ( format == "csv" )
  {
    text = reproduction_report_csv();
  }
  else if ( format == "json" )
  {
    text = reproduction_report_json().dump( 2 ) + "\n";
  }
  else
  {
    throw CLI::ValidationError( "--format", "must be md, csv or json" );
  }
  if ( out_path.empty() )
  {
    out << text;
  }
  else
  {
    write_file( out_path, text );
    out << "report written to " << out_path << "\n";
  }
  return kOk;
}

int cmd_tables( const std::string& dir, std::ostream& out )
{
  std::filesystem::create_directories( dir );
  for ( const std::string& name : standard_library().names() )
  {
    const std::string path = dir + "/" + name + ".csv";
    write_file( path, truth_table_csv( standard_library().at( name ) ) );
  }
  out << standard_library().names().size() << " truth tables written to " << dir << "\n";
  return kOk;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "multi-valued multiplier construction, costing and verification" };
  app.require_subcommand( 1 );

  std::string arch;
  std::size_t width = 4;
  std::string policy;
  std::string out_path;
  std::string plan_path;
  std::string scheme;

  CLI::App* build = app.add_subcommand( "build", "generate a netlist and print its bill of cells" );
  build->add_option( "--arch", arch, "architecture" )
      ->required()
      ->check( CLI::IsMember( architecture_names() ) );
  build->add_option( "--width", width, "operand digits" )->required()->check( CLI::Range( std::size_t{ 1 }, std::size_t{ 32 } ) );
  build->add_option( "--policy", policy, "reduction policy (wallace|dadda)" );
  build->add_option( "--out", out_path, "write the netlist JSON here" );
  build->add_option( "--plan", plan_path, "write the reduction schedule here" );
  build->add_option( "--scheme", scheme, "also print the cost breakdown under this scheme" );

  std::string verify_path;
  std::string verify_arch;
  std::uint64_t cap = kDefaultExhaustiveCap;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;

  CLI::App* verify = app.add_subcommand( "verify", "check a netlist file against its oracle" );
  verify->add_option( "file", verify_path, "netlist JSON file" )->required();
  verify->add_option( "--arch", verify_arch, "architecture (selects the oracle)" )
      ->required()
      ->check( CLI::IsMember( architecture_names() ) );
  verify->add_option( "--cap", cap, "exhaustive case cap" );
  verify->add_option( "--trials", trials, "sampled mode: number of random trials" );
  verify->add_option( "--seed", seed, "sampled mode: RNG seed" );

  std::string format = "md";
  std::string report_out;
  bool reproduce = false;

  CLI::App* report = app.add_subcommand( "report", "reproduce the reference cost tables" );
  report->add_flag( "--reproduce", reproduce, "rebuild the reference tables and comparisons" )->required();
  report->add_option( "--format", format, "md, csv or json" );
  report->add_option( "--out", report_out, "write the report here instead of stdout" );

  std::string tables_dir = "truth_tables";
  CLI::App* tables = app.add_subcommand( "tables", "emit the cell truth tables as CSV files" );
  tables->add_option( "--dir", tables_dir, "output directory" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    if ( e.get_exit_code() == 0 )
    {
      // --help lands here; CLI11 prints via exit(), route it to our stream
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try
  {
    if ( build->parsed() )
    {
      return cmd_build( arch, width, policy, out_path, plan_path, scheme, out );
    }
    if ( verify->parsed() )
    {
      return cmd_verify( verify_path, verify_arch, cap, trials, seed, out, err );
    }
    if ( report->parsed() )
    {
      return cmd_report( format, report_out, out );
    }
    if ( tables->parsed() )
    {
      return cmd_tables( tables_dir, out );
    }
  }
  catch ( const CLI::ValidationError& e )
  {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  catch ( const std::invalid_argument& e )
  {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsageError;
}

} // namespace mvl
