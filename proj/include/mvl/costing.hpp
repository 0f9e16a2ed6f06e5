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
  \file costing.hpp
  \brief Bills of cells, transistor-cost schemes, reference bills, comparisons.

  All cost arithmetic is integer; comparison ratios are printed with two
  decimals truncated toward zero so that published ratios reproduce exactly.
*/

#pragma once

#include <map>
#include <string>
#include <vector>

namespace mvl
{

/*! \brief Multiset of cell instances, keyed by cell name. */
using BillOfCells = std::map<std::string, int>;

//! Canonical cell display order used by bill_summary and the reports.
const std::vector<std::string>& canonical_cell_order();

//! Render a bill as "AND2:64 FA:47 HA:16" in canonical cell order.
std::string bill_summary( const BillOfCells& bill );

//! Merge two bills (cell-wise sum).
BillOfCells merge_bills( const BillOfCells& a, const BillOfCells& b );

/*! \brief Named transistor-cost assignment, cell name -> transistors. */
struct CostScheme
{
  std::string name;  //!< full name, e.g. "binary-fa16", "quat-min"
  std::string label; //!< short report label, e.g. "fa16", "min"
  std::map<std::string, int> costs;
};

struct CostLine
{
  std::string cell;
  int count{0};
  int unit{0};
  long long subtotal{0};
};

struct CostBreakdown
{
  std::vector<CostLine> lines; //!< canonical cell order
  long long total{0};
};

/*! \brief Cost a bill under a scheme.
 *
 * Throws std::invalid_argument naming any cell the scheme does not price.
 */
CostBreakdown cost_of_bill( const BillOfCells& bill, const CostScheme& scheme );

/*! \brief The four pinned schemes: binary-fa16, binary-fa28, quat-min,
 * quat-subblock.  The quaternary QMUL1 entries are derived from the
 * per-block sub-bill (see qmul1_blocks), not hand-entered.
 */
const std::vector<CostScheme>& standard_schemes();

//! Look up a scheme by full name or short label; throws std::invalid_argument.
const CostScheme& scheme_by_name( const std::string& name );

/*! \brief Internal block of the 1-digit quaternary multiplier.
 *
 * Two accountings are carried: `cost_min` shares the operand inverters
 * between the product subcircuits, `cost_subblock` charges each subblock its
 * own copies.
 */
struct QMul1Block
{
  std::string block;
  int cost_min{0};
  int cost_subblock{0};
};

const std::vector<QMul1Block>& qmul1_blocks();
int qmul1_cost_min();      //!< sum of block cost_min (54)
int qmul1_cost_subblock(); //!< sum of block cost_subblock (76)

/*! \brief Published reference bill, pinned as data. */
struct ReferenceBill
{
  std::string name;
  BillOfCells bill;
};

/*! \brief The pinned reference bills:
 *  - "binary-8x8": AND2 64, FA 47, HA 16
 *  - "quat-direct-adders": Q331 13, Q332 9, QH32 3, QH31 2
 *  - "quat-direct-full": adders plus QMUL1 16
 *  - "hybrid-4x4": binary core plus 4 decoder/encoder pairs as published
 *  - "hybrid-4x4-full": binary core plus all 8 decoder and 8 encoder blocks
 */
const std::vector<ReferenceBill>& reference_bills();
const BillOfCells& reference_bill( const std::string& name );

/*! \brief One architecture/scheme pair submitted for comparison. */
struct ComparisonEntry
{
  std::string architecture;
  std::string scheme; //!< scheme name or label
  BillOfCells bill;
};

struct ComparisonRow
{
  std::string architecture;
  std::string scheme_label;
  BillOfCells bill;
  long long total{0};
  std::string ratio_to_baseline; //!< two decimals, truncated; baseline row prints "1.00"
};

struct ComparisonReport
{
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;

  std::string to_markdown() const;
  std::string to_csv() const;
};

/*! \brief Cost each entry under its scheme; the first entry is the ratio
 * baseline.  Deterministic: rows keep entry order.
 */
ComparisonReport compare( const std::vector<ComparisonEntry>& entries,
                          std::vector<std::string> notes = {} );

//! Two-decimal ratio, truncated toward zero: 1892/2888 -> "0.65".
std::string format_ratio( long long numerator, long long denominator );

//! Signed percent delta with two decimals, truncated: (1408,1392) -> "+1.14%".
std::string format_percent_delta( long long value, long long reference );

} // namespace mvl
