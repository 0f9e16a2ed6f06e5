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
  \file netlist_json.hpp
  \brief Canonical JSON serialization of netlists.

  Schema (field order is fixed; ids are dense 0..N-1):

  \code{.json}
  {
    "inputs":    [ { "name": "a0", "range": 3 }, ... ],
    "outputs":   [ 4, 5 ],
    "instances": [ { "id": 0, "cell": "HA",
                     "bindings": { "a": 0, "b": 1, "s": 2, "cout": 3 } }, ... ],
    "nets":      [ { "id": 0, "range": 3, "driver": { "input": 0 } },
                   { "id": 2, "range": 3, "driver": { "instance": 0, "port": "s" } },
                   { "id": 7, "range": 1, "driver": { "const": 0 } }, ... ]
  }
  \endcode

  Serialization is canonical, so write(load(write(n))) == write(n) byte for
  byte.  Loading validates structure and rejects malformed documents with
  std::invalid_argument.
*/

#pragma once

#include "netlist.hpp"

#include <json.hpp>

#include <string>

namespace mvl
{

nlohmann::ordered_json netlist_to_json( const Netlist& nl );

Netlist netlist_from_json( const nlohmann::ordered_json& j,
                           const CellLibrary& lib = standard_library() );

//! Canonical text form: 2-space indented JSON plus trailing newline.
std::string netlist_to_string( const Netlist& nl );
Netlist netlist_from_string( const std::string& text,
                             const CellLibrary& lib = standard_library() );

void save_netlist( const Netlist& nl, const std::string& path );
Netlist load_netlist( const std::string& path,
                      const CellLibrary& lib = standard_library() );

} // namespace mvl
