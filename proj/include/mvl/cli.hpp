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
  \file cli.hpp
  \brief The mvlmul command line, callable in-process for tests.

  Subcommands: build, verify, report, tables.  Exit codes: 0 success,
  1 verification failure, 2 usage or configuration error.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvl
{

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace mvl
