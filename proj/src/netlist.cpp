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

#include "mvl/netlist.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvl
{

namespace
{

std::string net_name( NetId id ) { return "net " + std::to_string( id ); }

std::string instance_name( const Instance& inst ) { return "instance " + std::to_string( inst.id ) + " (" + inst.cell + ")"; }

} // namespace

Netlist::Netlist( const CellLibrary& lib ) : lib_( &lib ) {}

void Netlist::require_mutable() const
{
  if ( finalized_ )
  {
    throw std::logic_error( "netlist is finalized and immutable" );
  }
}

NetId Netlist::add_input( const std::string& name, ValueRange range )
{
  require_mutable();
  const NetId id = static_cast<NetId>( nets_.size() );
  NetDriver driver;
  driver.kind = DriverKind::primary_input;
  driver.index = static_cast<std::uint32_t>( inputs_.size() );
  nets_.push_back( { range, driver } );
  inputs_.push_back( { name, range, id } );
  return id;
}

NetId Netlist::add_constant( int value, ValueRange range )
{
  require_mutable();
  if ( !range.contains( value ) )
  {
    throw std::domain_error( "add_constant: value " + std::to_string( value ) + " outside [0, " +
                             std::to_string( range.max_value ) + "]" );
  }
  const auto key = std::make_pair( value, range.max_value );
  const auto it = const_pool_.find( key );
  if ( it != const_pool_.end() )
  {
    return it->second;
  }
  const NetId id = static_cast<NetId>( nets_.size() );
  NetDriver driver;
  driver.kind = DriverKind::constant;
  driver.value = value;
  nets_.push_back( { range, driver } );
  const_pool_.emplace( key, id );
  return id;
}

std::vector<NetId> Netlist::add_cell( const std::string& cell_name, const std::vector<NetId>& inputs )
{
  require_mutable();
  const Cell& cell = lib_->at( cell_name );
  if ( inputs.size() != cell.num_inputs() )
  {
    throw std::invalid_argument( cell_name + ": expects " + std::to_string( cell.num_inputs() ) + " inputs, got " +
                                 std::to_string( inputs.size() ) );
  }
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    if ( inputs[i] >= nets_.size() )
    {
      throw std::invalid_argument( cell_name + ": input port " + cell.input_port( i ).name +
                                   " bound to nonexistent " + net_name( inputs[i] ) );
    }
    const ValueRange net_range = nets_[inputs[i]].range;
    const ValueRange port_range = cell.input_port( i ).range;
    if ( net_range.max_value > port_range.max_value )
    {
      throw std::invalid_argument( cell_name + ": input port " + cell.input_port( i ).name + " (range " +
                                   std::to_string( port_range.max_value ) + ") bound to " + net_name( inputs[i] ) +
                                   " of wider range " + std::to_string( net_range.max_value ) );
    }
  }

  Instance inst;
  inst.id = static_cast<std::uint32_t>( instances_.size() );
  inst.cell = cell_name;
  inst.inputs = inputs;
  for ( std::size_t i = 0; i < cell.num_outputs(); ++i )
  {
    const NetId id = static_cast<NetId>( nets_.size() );
    NetDriver driver;
    driver.kind = DriverKind::instance;
    driver.index = inst.id;
    driver.port = static_cast<std::uint32_t>( i );
    nets_.push_back( { cell.output_port( i ).range, driver } );
    inst.outputs.push_back( id );
  }
  const std::vector<NetId> outs = inst.outputs;
  instances_.push_back( std::move( inst ) );
  return outs;
}

void Netlist::mark_output( NetId net )
{
  require_mutable();
  if ( net >= nets_.size() )
  {
    throw std::invalid_argument( "mark_output: nonexistent " + net_name( net ) );
  }
  outputs_.push_back( net );
}

void Netlist::finalize()
{
  require_mutable();
  // Kahn's algorithm over instance dependencies; builder-produced netlists
  // are acyclic by construction, raw ones may not be.
  const std::size_t n = instances_.size();
  std::vector<std::uint32_t> pending( n, 0 );
  std::vector<std::vector<std::uint32_t>> consumers( n );
  for ( const Instance& inst : instances_ )
  {
    for ( const NetId in : inst.inputs )
    {
      const NetDriver& d = nets_[in].driver;
      if ( d.kind == DriverKind::instance )
      {
        consumers[d.index].push_back( inst.id );
        ++pending[inst.id];
      }
    }
  }
  topo_.clear();
  topo_.reserve( n );
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    if ( pending[i] == 0 )
    {
      topo_.push_back( i );
    }
  }
  for ( std::size_t head = 0; head < topo_.size(); ++head )
  {
    for ( const std::uint32_t next : consumers[topo_[head]] )
    {
      if ( --pending[next] == 0 )
      {
        topo_.push_back( next );
      }
    }
  }
  if ( topo_.size() != n )
  {
    throw std::logic_error( "netlist contains a combinational cycle" );
  }
  finalized_ = true;
}

BillOfCells Netlist::bill_of_cells() const
{
  BillOfCells bill;
  for ( const Instance& inst : instances_ )
  {
    ++bill[inst.cell];
  }
  return bill;
}

std::vector<Violation> Netlist::validate() const
{
  std::vector<Violation> out;
  auto flag = [&]( std::string where, std::string message ) {
    out.push_back( { std::move( where ), std::move( message ) } );
  };

  // each net has exactly one driver, and the declared range matches it
  std::vector<int> driver_count( nets_.size(), 0 );
  for ( const PrimaryInput& pi : inputs_ )
  {
    if ( pi.net >= nets_.size() )
    {
      flag( "input " + pi.name, "bound to nonexistent " + net_name( pi.net ) );
      continue;
    }
    ++driver_count[pi.net];
    if ( nets_[pi.net].range != pi.range )
    {
      flag( net_name( pi.net ), "range differs from its declared input range" );
    }
  }
  for ( const Instance& inst : instances_ )
  {
    if ( !lib_->contains( inst.cell ) )
    {
      flag( instance_name( inst ), "unknown cell" );
      continue;
    }
    const Cell& cell = lib_->at( inst.cell );
    if ( inst.inputs.size() != cell.num_inputs() || inst.outputs.size() != cell.num_outputs() )
    {
      flag( instance_name( inst ), "port count mismatch" );
      continue;
    }
    for ( std::size_t i = 0; i < inst.inputs.size(); ++i )
    {
      const NetId in = inst.inputs[i];
      if ( in >= nets_.size() )
      {
        flag( instance_name( inst ), "input port " + cell.input_port( i ).name + " bound to nonexistent " + net_name( in ) );
        continue;
      }
      if ( nets_[in].range.max_value > cell.input_port( i ).range.max_value )
      {
        flag( instance_name( inst ), "input port " + cell.input_port( i ).name + " (range " +
                                         std::to_string( cell.input_port( i ).range.max_value ) + ") bound to " +
                                         net_name( in ) + " of wider range " +
                                         std::to_string( nets_[in].range.max_value ) );
      }
    }
    for ( std::size_t i = 0; i < inst.outputs.size(); ++i )
    {
      const NetId on = inst.outputs[i];
      if ( on >= nets_.size() )
      {
        flag( instance_name( inst ), "output port " + cell.output_port( i ).name + " bound to nonexistent " + net_name( on ) );
        continue;
      }
      ++driver_count[on];
      const NetDriver& d = nets_[on].driver;
      if ( d.kind != DriverKind::instance || d.index != inst.id || d.port != i )
      {
        flag( net_name( on ), "driver record does not match " + instance_name( inst ) + " port " +
                                  cell.output_port( i ).name );
      }
      if ( nets_[on].range != cell.output_port( i ).range )
      {
        flag( net_name( on ), "range differs from output port " + cell.output_port( i ).name + " of " +
                                  instance_name( inst ) );
      }
    }
  }
  for ( NetId id = 0; id < nets_.size(); ++id )
  {
    const Net& net = nets_[id];
    if ( net.driver.kind == DriverKind::constant )
    {
      ++driver_count[id];
      if ( !net.range.contains( net.driver.value ) )
      {
        flag( net_name( id ), "constant value " + std::to_string( net.driver.value ) + " outside its range" );
      }
    }
    if ( driver_count[id] == 0 )
    {
      flag( net_name( id ), "has no driver" );
    }
    else if ( driver_count[id] > 1 )
    {
      flag( net_name( id ), "has " + std::to_string( driver_count[id] ) + " drivers" );
    }
  }
  for ( const NetId out : outputs_ )
  {
    if ( out >= nets_.size() )
    {
      flag( "outputs", "nonexistent " + net_name( out ) );
    }
  }

  // cycle check (independent of finalize, which refuses cyclic graphs)
  {
    const std::size_t n = instances_.size();
    std::vector<std::uint32_t> pending( n, 0 );
    std::vector<std::vector<std::uint32_t>> consumers( n );
    bool shape_ok = true;
    for ( const Instance& inst : instances_ )
    {
      for ( const NetId in : inst.inputs )
      {
        if ( in >= nets_.size() )
        {
          shape_ok = false;
          break;
        }
        const NetDriver& d = nets_[in].driver;
        if ( d.kind == DriverKind::instance )
        {
          if ( d.index >= n )
          {
            shape_ok = false;
            break;
          }
          consumers[d.index].push_back( inst.id );
          ++pending[inst.id];
        }
      }
    }
    if ( shape_ok && n > 0 )
    {
      std::vector<std::uint32_t> order;
      order.reserve( n );
      for ( std::uint32_t i = 0; i < n; ++i )
      {
        if ( pending[i] == 0 )
        {
          order.push_back( i );
        }
      }
      for ( std::size_t head = 0; head < order.size(); ++head )
      {
        for ( const std::uint32_t next : consumers[order[head]] )
        {
          if ( --pending[next] == 0 )
          {
            order.push_back( next );
          }
        }
      }
      if ( order.size() != n )
      {
        for ( std::uint32_t i = 0; i < n; ++i )
        {
          if ( pending[i] > 0 )
          {
            flag( instance_name( instances_[i] ), "part of a combinational cycle" );
          }
        }
      }
    }
  }
  return out;
}

void Netlist::eval_into( const std::vector<int>& input_values, std::vector<int>& values ) const
{
  if ( !finalized_ )
  {
    throw std::logic_error( "netlist must be finalized before evaluation" );
  }
  if ( input_values.size() != inputs_.size() )
  {
    throw std::invalid_argument( "evaluate: expects " + std::to_string( inputs_.size() ) + " input digits, got " +
                                 std::to_string( input_values.size() ) );
  }
  values.assign( nets_.size(), -1 );
  for ( std::size_t i = 0; i < inputs_.size(); ++i )
  {
    const PrimaryInput& pi = inputs_[i];
    if ( !pi.range.contains( input_values[i] ) )
    {
      throw std::domain_error( "evaluate: input " + pi.name + " value " + std::to_string( input_values[i] ) +
                               " outside [0, " + std::to_string( pi.range.max_value ) + "]" );
    }
    values[pi.net] = input_values[i];
  }
  for ( NetId id = 0; id < nets_.size(); ++id )
  {
    if ( nets_[id].driver.kind == DriverKind::constant )
    {
      values[id] = nets_[id].driver.value;
    }
  }
  int in_buf[4];
  int out_buf[4];
  for ( const std::uint32_t idx : topo_ )
  {
    const Instance& inst = instances_[idx];
    const Cell& cell = lib_->at( inst.cell );
    for ( std::size_t i = 0; i < inst.inputs.size(); ++i )
    {
      in_buf[i] = values[inst.inputs[i]];
    }
    cell.invoke( std::span<const int>( in_buf, inst.inputs.size() ),
                 std::span<int>( out_buf, inst.outputs.size() ) );
    for ( std::size_t i = 0; i < inst.outputs.size(); ++i )
    {
      const NetId on = inst.outputs[i];
      if ( !nets_[on].range.contains( out_buf[i] ) )
      {
        throw std::domain_error( "evaluate: " + net_name( on ) + " value " + std::to_string( out_buf[i] ) +
                                 " outside [0, " + std::to_string( nets_[on].range.max_value ) + "]" );
      }
      values[on] = out_buf[i];
    }
  }
}

std::vector<int> Netlist::evaluate( const std::vector<int>& input_values ) const
{
  std::vector<int> values;
  eval_into( input_values, values );
  std::vector<int> out( outputs_.size() );
  for ( std::size_t i = 0; i < outputs_.size(); ++i )
  {
    out[i] = values[outputs_[i]];
  }
  return out;
}

EvalTrace Netlist::evaluate_trace( const std::vector<int>& input_values ) const
{
  EvalTrace trace;
  eval_into( input_values, trace.values );
  trace.outputs.resize( outputs_.size() );
  for ( std::size_t i = 0; i < outputs_.size(); ++i )
  {
    trace.outputs[i] = trace.values[outputs_[i]];
  }
  return trace;
}

Netlist Netlist::from_raw( const CellLibrary& lib, std::vector<PrimaryInput> inputs, std::vector<Net> nets,
                           std::vector<Instance> instances, std::vector<NetId> outputs )
{
  Netlist nl( lib );
  nl.inputs_ = std::move( inputs );
  nl.nets_ = std::move( nets );
  nl.instances_ = std::move( instances );
  nl.outputs_ = std::move( outputs );
  const std::vector<Violation> violations = nl.validate();
  if ( !violations.empty() )
  {
    throw std::invalid_argument( "invalid netlist: " + violations.front().where + ": " +
                                 violations.front().message );
  }
  nl.finalize();
  return nl;
}

} // namespace mvl
