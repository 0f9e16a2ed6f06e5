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
  \file generators.hpp
  \brief Multiplier and adder netlist generators: partial products, column
  compression (Wallace / Dadda), carry-propagate stages, radix interfaces.

  Column compression works on weighted columns of single-digit wires.  Two
  engines are used:

   - radix 2, Wallace: classic row-group carry-save — partial product rows
     are grouped in triples, each triple is compressed column-wise (3 wires
     -> FA, 2 -> HA, 1 passes), leftover rows pass to the next stage.  Wires
     carry row tags for this; untagged wires degrade to one row each.

   - everything else: height-limit passes over a per-column FIFO.  Wallace
     radix 4 runs two passes with limits {3, 2}; Dadda (both radices) runs
     the classic descending limit schedule (…, 9, 6, 4, 3, 2).  Carries
     minted at column c are available to column c+1 within the same pass,
     and compression sums are re-consumable within their own pass.

  Radix-4 cell selection is range-aware and cost-greedy: the carry-in slot
  takes the oldest binary wire if any (Q331), else the oldest ternary wire
  (Q332), else falls back to Q331 with a constant-0 carry; 2-input steps
  prefer QH31 (oldest binary) over QH32 (oldest ternary).  Remaining operand
  slots take the oldest wires first.

  The carry-propagate stage ripples from the least significant column and
  never instantiates cells above the output width: wires there are provably
  zero and are left dangling, which the value-conservation property checks.
*/

#pragma once

#include "netlist.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvl
{

enum class Radix : int
{
  binary = 2,
  quaternary = 4
};

enum class ReductionPolicy
{
  wallace,
  dadda
};

/*! \brief One wire inside a weighted column. */
struct ColumnWire
{
  NetId net{0};
  ValueRange range{};
  std::uint64_t seq{0}; //!< creation order; FIFO age within a column
  int row{-1};          //!< partial-product row tag; -1 when untagged
};

/*! \brief Weighted columns: cols[c] holds the wires of weight radix^c. */
struct Columns
{
  std::vector<std::vector<ColumnWire>> cols;
  std::uint64_t next_seq{0};

  void ensure( std::size_t c );
  void push( std::size_t c, NetId net, ValueRange range, int row = -1 );
  std::size_t max_height() const;
};

/*! \brief One compression or carry-propagate step, for plan listings. */
struct ReductionStep
{
  int stage{0}; //!< 1-based pass number; carry-propagate steps use the next number
  bool cpa{false};
  int column{0};
  std::string cell;
  std::vector<NetId> inputs;
  std::vector<NetId> outputs;
};

/*! \brief Weighted net snapshot: sum over (value(net) * radix^weight) is
 * invariant across stages for every input assignment. */
struct WeightedNet
{
  int weight{0};
  NetId net{0};
};

struct ReductionPlan
{
  Radix radix{Radix::binary};
  ReductionPolicy policy{ReductionPolicy::wallace};
  std::vector<ReductionStep> steps;
  //! snapshots[0] is the partial-product form; one more per pass; the last
  //! one is taken after carry propagation (outputs plus dangling wires).
  std::vector<std::vector<WeightedNet>> snapshots;

  int num_stages() const; //!< compression passes (excludes carry propagation)
  std::string to_text() const;
};

/*! \brief Multiplier partial products: one AND2 per bit pair. */
Columns build_partial_products_binary( Netlist& nl, const std::vector<NetId>& a,
                                       const std::vector<NetId>& b );

/*! \brief Quaternary partial products: one QMUL1 per digit pair; the product
 * digit lands at weight i+j, the carry digit (range 2) at weight i+j+1. */
Columns build_partial_products_quaternary( Netlist& nl, const std::vector<NetId>& a,
                                           const std::vector<NetId>& b );

struct CompressionResult
{
  Columns columns; //!< height <= 2 everywhere
  ReductionPlan plan;
};

/*! \brief Compress columns until every height is at most 2. */
CompressionResult compress_columns( Netlist& nl, Columns columns, Radix radix,
                                    ReductionPolicy policy );

/*! \brief Ripple the final two rows into \p out_digits product digits.
 *
 * Appends the steps to \p plan and returns the output nets, LSD first.
 * Columns at or above out_digits stay dangling (provably zero).
 */
std::vector<NetId> build_cpa( Netlist& nl, const Columns& final_columns, Radix radix,
                              std::size_t out_digits, ReductionPlan& plan );

/*! \brief A generated circuit with its construction record. */
struct GeneratedCircuit
{
  Netlist netlist;
  ReductionPlan plan;
};

/*! \brief n x n unsigned binary multiplier (inputs a0.., b0..; 2n sum bits). */
GeneratedCircuit build_binary_multiplier( std::size_t width,
                                          ReductionPolicy policy = ReductionPolicy::wallace );

/*! \brief n x n unsigned quaternary multiplier over QMUL1 + quaternary
 * compressors (2n product digits). */
GeneratedCircuit build_quaternary_direct( std::size_t width,
                                          ReductionPolicy policy = ReductionPolicy::wallace );

/*! \brief n-digit quaternary multiplier with a binary core: DEC_Q2B digit
 * decoders, a 2n x 2n binary multiplier, ENC_B2Q digit encoders. */
GeneratedCircuit build_quaternary_hybrid( std::size_t width,
                                          ReductionPolicy policy = ReductionPolicy::wallace );

/*! \brief n-digit quaternary ripple-carry adder: a Q331 chain with the first
 * carry-in tied to constant 0; outputs n sum digits plus the carry. */
GeneratedCircuit build_ripple_adder_quaternary( std::size_t width );

//! Architecture names used by the CLI and the reports.
GeneratedCircuit build_architecture( const std::string& architecture, std::size_t width,
                                     ReductionPolicy policy = ReductionPolicy::wallace );
const std::vector<std::string>& architecture_names();

} // namespace mvl
