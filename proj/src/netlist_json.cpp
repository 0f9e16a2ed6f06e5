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

#include "mvl/netlist_json.hpp"

#include <fstream>
#include <stdexcept>

namespace mvl
{

using nlohmann::ordered_json;

nlohmann::ordered_json netlist_to_json( const Netlist& nl )
{
  ordered_json j;

  j["inputs"] = ordered_json::array();
  for ( const PrimaryInput& pi : nl.inputs() )
  {
    ordered_json ji;
    ji["name"] = pi.name;
    ji["range"] = pi.range.max_value;
    j["inputs"].push_back( std::move( ji ) );
  }

  j["outputs"] = ordered_json::array();
  for ( const NetId out : nl.outputs() )
  {
    j["outputs"].push_back( out );
  }

  j["instances"] = ordered_json::array();
  for ( const Instance& inst : nl.instances() )
  {
    const Cell& cell = nl.library().at( inst.cell );
    ordered_json ji;
    ji["id"] = inst.id;
    ji["cell"] = inst.cell;
    ordered_json bindings;
    for ( std::size_t i = 0; i < inst.inputs.size(); ++i )
    {
      bindings[cell.input_port( i ).name] = inst.inputs[i];
    }
    for ( std::size_t i = 0; i < inst.outputs.size(); ++i )
    {
      bindings[cell.output_port( i ).name] = inst.outputs[i];
    }
    ji["bindings"] = std::move( bindings );
    j["instances"].push_back( std::move( ji ) );
  }

  j["nets"] = ordered_json::array();
  for ( NetId id = 0; id < nl.nets().size(); ++id )
  {
    const Net& net = nl.nets()[id];
    ordered_json jn;
    jn["id"] = id;
    jn["range"] = net.range.max_value;
    ordered_json driver;
    switch ( net.driver.kind )
    {
    case DriverKind::primary_input:
      driver["input"] = net.driver.index;
      break;
    case DriverKind::instance:
    {
      const Instance& inst = nl.instances()[net.driver.index];
      const Cell& cell = nl.library().at( inst.cell );
      driver["instance"] = net.driver.index;
      driver["port"] = cell.output_port( net.driver.port ).name;
      break;
    }
    case DriverKind::constant:
      driver["const"] = net.driver.value;
      break;
    }
    jn["driver"] = std::move( driver );
    j["nets"].push_back( std::move( jn ) );
  }

  return j;
}

namespace
{

[[noreturn]] void malformed( const std::string& what )
{
  throw std::invalid_argument( "netlist JSON: " + what );
}

NetId net_id_of( const ordered_json& v, const char* where )
{
  if ( !v.is_number_unsigned() )
  {
    malformed( std::string( where ) + " must be an unsigned net id" );
  }
  return v.get<NetId>();
}

ValueRange range_of( const ordered_json& v, const char* where )
{
  if ( !v.is_number_integer() )
  {
    malformed( std::string( where ) + ": range must be an integer" );
  }
  const int max = v.get<int>();
  if ( max < 1 || max > 3 )
  {
    malformed( std::string( where ) + ": range " + std::to_string( max ) + " outside [1, 3]" );
  }
  return ValueRange{ max };
}

} // namespace

Netlist netlist_from_json( const nlohmann::ordered_json& j, const CellLibrary& lib )
{
  if ( !j.is_object() || !j.contains( "inputs" ) || !j.contains( "outputs" ) || !j.contains( "instances" ) ||
       !j.contains( "nets" ) )
  {
    malformed( "expected an object with inputs, outputs, instances, nets" );
  }

  std::vector<Net> nets;
  if ( !j["nets"].is_array() )
  {
    malformed( "nets must be an array" );
  }
  nets.resize( j["nets"].size() );
  std::vector<bool> seen( nets.size(), false );

  std::vector<PrimaryInput> inputs;
  if ( !j["inputs"].is_array() )
  {
    malformed( "inputs must be an array" );
  }
  for ( const auto& ji : j["inputs"] )
  {
    if ( !ji.is_object() || !ji.contains( "name" ) || !ji.contains( "range" ) || !ji["name"].is_string() )
    {
      malformed( "each input needs a name and a range" );
    }
    PrimaryInput pi;
    pi.name = ji["name"].get<std::string>();
    pi.range = range_of( ji["range"], "input" );
    pi.net = 0; // patched below from the nets section
    inputs.push_back( std::move( pi ) );
  }

  std::vector<Instance> instances;
  if ( !j["instances"].is_array() )
  {
    malformed( "instances must be an array" );
  }
  for ( const auto& ji : j["instances"] )
  {
    if ( !ji.is_object() || !ji.contains( "id" ) || !ji.contains( "cell" ) || !ji.contains( "bindings" ) ||
         !ji["cell"].is_string() || !ji["bindings"].is_object() )
    {
      malformed( "each instance needs id, cell and bindings" );
    }
    Instance inst;
    inst.id = static_cast<std::uint32_t>( instances.size() );
    if ( !ji["id"].is_number_unsigned() || ji["id"].get<std::uint32_t>() != inst.id )
    {
      malformed( "instance ids must be dense and in order" );
    }
    inst.cell = ji["cell"].get<std::string>();
    if ( !lib.contains( inst.cell ) )
    {
      malformed( "unknown cell '" + inst.cell + "'" );
    }
    const Cell& cell = lib.at( inst.cell );
    const auto& bindings = ji["bindings"];
    if ( bindings.size() != cell.ports().size() )
    {
      malformed( "instance " + std::to_string( inst.id ) + ": expected " + std::to_string( cell.ports().size() ) +
                 " bindings" );
    }
    for ( std::size_t i = 0; i < cell.num_inputs(); ++i )
    {
      const std::string& port = cell.input_port( i ).name;
      if ( !bindings.contains( port ) )
      {
        malformed( "instance " + std::to_string( inst.id ) + ": missing binding for port " + port );
      }
      inst.inputs.push_back( net_id_of( bindings[port], "binding" ) );
    }
    for ( std::size_t i = 0; i < cell.num_outputs(); ++i )
    {
      const std::string& port = cell.output_port( i ).name;
      if ( !bindings.contains( port ) )
      {
        malformed( "instance " + std::to_string( inst.id ) + ": missing binding for port " + port );
      }
      inst.outputs.push_back( net_id_of( bindings[port], "binding" ) );
    }
    instances.push_back( std::move( inst ) );
  }

  for ( const auto& jn : j["nets"] )
  {
    if ( !jn.is_object() || !jn.contains( "id" ) || !jn.contains( "range" ) || !jn.contains( "driver" ) ||
         !jn["driver"].is_object() )
    {
      malformed( "each net needs id, range and driver" );
    }
    const NetId id = net_id_of( jn["id"], "net id" );
    if ( id >= nets.size() )
    {
      malformed( "net ids must be dense 0..N-1, got " + std::to_string( id ) );
    }
    if ( seen[id] )
    {
      malformed( "duplicate net id " + std::to_string( id ) );
    }
    seen[id] = true;
    Net net;
    net.range = range_of( jn["range"], "net" );
    const auto& jd = jn["driver"];
    if ( jd.contains( "input" ) )
    {
      net.driver.kind = DriverKind::primary_input;
      net.driver.index = jd["input"].get<std::uint32_t>();
      if ( net.driver.index >= inputs.size() )
      {
        malformed( "net " + std::to_string( id ) + ": input driver index out of range" );
      }
      inputs[net.driver.index].net = id;
    }
    else if ( jd.contains( "instance" ) )
    {
      if ( !jd.contains( "port" ) || !jd["port"].is_string() )
      {
        malformed( "net " + std::to_string( id ) + ": instance driver needs a port name" );
      }
      net.driver.kind = DriverKind::instance;
      net.driver.index = jd["instance"].get<std::uint32_t>();
      if ( net.driver.index >= instances.size() )
      {
        malformed( "net " + std::to_string( id ) + ": instance driver index out of range" );
      }
      const Cell& cell = lib.at( instances[net.driver.index].cell );
      const std::string port = jd["port"].get<std::string>();
      bool found = false;
      for ( std::size_t i = 0; i < cell.num_outputs(); ++i )
      {
        if ( cell.output_port( i ).name == port )
        {
          net.driver.port = static_cast<std::uint32_t>( i );
          found = true;
          break;
        }
      }
      if ( !found )
      {
        malformed( "net " + std::to_string( id ) + ": cell " + cell.name() + " has no output port " + port );
      }
    }
    else if ( jd.contains( "const" ) )
    {
      net.driver.kind = DriverKind::constant;
      net.driver.value = jd["const"].get<int>();
    }
    else
    {
      malformed( "net " + std::to_string( id ) + ": driver must be input, instance or const" );
    }
    nets[id] = net;
  }
  for ( NetId id = 0; id < nets.size(); ++id )
  {
    if ( !seen[id] )
    {
      malformed( "missing net id " + std::to_string( id ) );
    }
  }

  std::vector<NetId> outputs;
  if ( !j["outputs"].is_array() )
  {
    malformed( "outputs must be an array" );
  }
  for ( const auto& jo : j["outputs"] )
  {
    outputs.push_back( net_id_of( jo, "output" ) );
  }

  // from_raw re-validates the full invariant set and finalizes
  return Netlist::from_raw( lib, std::move( inputs ), std::move( nets ), std::move( instances ),
                            std::move( outputs ) );
}

std::string netlist_to_string( const Netlist& nl ) { return netlist_to_json( nl ).dump( 2 ) + "\n"; }

Netlist netlist_from_string( const std::string& text, const CellLibrary& lib )
{
  ordered_json j;
  try
  {
    j = ordered_json::parse( text );
  }
  catch ( const nlohmann::json::parse_error& e )
  {
    malformed( std::string( "parse error: " ) + e.what() );
  }
  return netlist_from_json( j, lib );
}

void save_netlist( const Netlist& nl, const std::string& path )
{
  std::ofstream os( path, std::ios::binary );
  if ( !os )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  os << netlist_to_string( nl );
}

Netlist load_netlist( const std::string& path, const CellLibrary& lib )
{
  std::ifstream is( path, std::ios::binary );
  if ( !is )
  {
    throw std::runtime_error( "cannot read " + path );
  }
  std::string text( ( std::istreambuf_iterator<char>( is ) ), std::istreambuf_iterator<char>() );
  return netlist_from_string( text, lib );
}

} // namespace mvl
