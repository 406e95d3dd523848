// Copyright 2026 The Parity Compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "parity/circuit.hpp"
#include "parity/circuit_io.hpp"
#include "parity/codec.hpp"
#include "parity/compiler.hpp"
#include "parity/error_model.hpp"
#include "parity/fault_propagation.hpp"
#include "parity/layout.hpp"
#include "parity/logical.hpp"
#include "parity/pauli.hpp"
#include "parity/peephole.hpp"
#include "parity/qubit.hpp"
#include "parity/statevector.hpp"
#include "parity/verify.hpp"

namespace parity {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace parity
