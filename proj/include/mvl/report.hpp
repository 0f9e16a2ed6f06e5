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
  \file report.hpp
  \brief The transistor-count reproduction report.

  Rebuilds every reference table from the pinned bills and schemes, prints
  the published ratios (two decimals, truncated), annotates the known
  inconsistencies in the source material, and compares the generated
  circuits' bills against the reference bills.  Output is deterministic byte
  for byte.
*/

#pragma once

#include <json.hpp>

#include <string>

namespace mvl
{

std::string reproduction_report_markdown();
std::string reproduction_report_csv();
nlohmann::ordered_json reproduction_report_json();

} // namespace mvl
