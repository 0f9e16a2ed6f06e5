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

#include <iostream>
#include <vector>

int main( int argc, char** argv )
{
  std::vector<std::string> args;
  for ( int i = 1; i < argc; ++i )
  {
    args.emplace_back( argv[i] );
  }
  return mvl::run_cli( args, std::cout, std::cerr );
}
