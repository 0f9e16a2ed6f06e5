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
  \file netlist.hpp
  \brief Single-digit-net DAG of cell instances, with ranged nets, three
  driver kinds (primary input, instance output, constant) and cached
  topological evaluation.

  Invariants enforced by the builder API and re-checked by validate():
   - every net has exactly one driver;
   - a net's range equals its driver's range (output port, input declaration,
     or constant range);
   - a net may only bind to an equal-or-wider input port;
   - the instance graph is acyclic.

  Netlists are immutable once finalized; evaluation never mutates.
*/

#pragma once

#include "cells.hpp"
#include "costing.hpp"
#include "value.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvl
{

using NetId = std::uint32_t;

enum class DriverKind
{
  primary_input,
  instance,
  constant
};

struct NetDriver
{
  DriverKind kind{DriverKind::primary_input};
  std::uint32_t index{0}; //!< input index, or instance id
  std::uint32_t port{0};  //!< output port index within the instance
  int value{0};           //!< constant value
};

struct Net
{
  ValueRange range{};
  NetDriver driver{};
};

struct PrimaryInput
{
  std::string name;
  ValueRange range{};
  NetId net{0};
};

struct Instance
{
  std::uint32_t id{0};
  std::string cell;           //!< cell name in the library
  std::vector<NetId> inputs;  //!< positional, one net per input port
  std::vector<NetId> outputs; //!< positional, one net per output port
};

struct Violation
{
  std::string where;
  std::string message;
};

/*! \brief Full evaluation record: every net's value plus the outputs. */
struct EvalTrace
{
  std::vector<int> values; //!< indexed by NetId
  std::vector<int> outputs;
};

class Netlist
{
public:
  explicit Netlist( const CellLibrary& lib = standard_library() );

  // --- construction (throws std::logic_error once finalized) ---
  NetId add_input( const std::string& name, ValueRange range );
  NetId add_constant( int value, ValueRange range ); //!< deduplicated
  //! Instantiate a cell over existing nets; returns the new output nets.
  std::vector<NetId> add_cell( const std::string& cell, const std::vector<NetId>& inputs );
  void mark_output( NetId net );
  //! Freeze the netlist: computes the evaluation order, rejects cycles.
  void finalize();

  // --- introspection ---
  const CellLibrary& library() const { return *lib_; }
  const std::vector<PrimaryInput>& inputs() const { return inputs_; }
  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<Net>& nets() const { return nets_; }
  const std::vector<NetId>& outputs() const { return outputs_; }
  bool finalized() const { return finalized_; }

  //! Count of instances per cell name.
  BillOfCells bill_of_cells() const;

  /*! \brief Structural audit; empty result means all invariants hold.
   *
   * Reports: unknown cells, arity mismatches, dangling net ids, multiple or
   * missing drivers, range/port incompatibilities, driver/net range
   * mismatches, out-of-range constants, and cycles.
   */
  std::vector<Violation> validate() const;

  /*! \brief Evaluate on one input tuple (one digit per primary input).
   *
   * Throws std::invalid_argument on arity mismatch, std::domain_error naming
   * the input or net on any range violation, std::logic_error if not
   * finalized.  Const and reentrant.
   */
  std::vector<int> evaluate( const std::vector<int>& input_values ) const;

  //! evaluate plus every intermediate net value (for audits and snapshots).
  EvalTrace evaluate_trace( const std::vector<int>& input_values ) const;

  /*! \brief Raw constructor for deserialization and surgery in tests.
   *
   * Performs the same structural validation as validate() and throws
   * std::invalid_argument on the first violation; finalizes on success.
   */
  static Netlist from_raw( const CellLibrary& lib, std::vector<PrimaryInput> inputs,
                           std::vector<Net> nets, std::vector<Instance> instances,
                           std::vector<NetId> outputs );

private:
  void require_mutable() const;
  void eval_into( const std::vector<int>& input_values, std::vector<int>& values ) const;

  const CellLibrary* lib_;
  std::vector<PrimaryInput> inputs_;
  std::vector<Net> nets_;
  std::vector<Instance> instances_;
  std::vector<NetId> outputs_;
  std::vector<std::uint32_t> topo_; //!< instance evaluation order
  std::map<std::pair<int, int>, NetId> const_pool_; //!< (value, max) -> net
  bool finalized_{false};
};

} // namespace mvl
