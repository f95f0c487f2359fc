// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Text form of RingSpec, as accepted on the command line and in config
// files:
//
//   spec  := name '(' arg (',' arg)* ')'
//   arg   := integer | spec | '[' integer (',' integer)* ']'
//
// Whitespace is ignored. gf(q) with a prime power q expands to gf(p,k)
// with the default modulus.

#ifndef FINRING_PARSE_HPP_
#define FINRING_PARSE_HPP_

#include <string_view>

#include "finring/ring_spec.hpp"

namespace finring {

// ParseError (with position) for malformed text, ArgumentError or
// ConstructionError for well-formed text naming an invalid ring.
RingSpec parse_ring_spec(std::string_view text);

}  // namespace finring

#endif  // FINRING_PARSE_HPP_
