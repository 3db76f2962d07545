// Copyright 2026 The spinrep Authors
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

// Umbrella header for the core library (everything but the CLI and the
// JSON/CSV writers, which pull in vendored single-header dependencies).

#include "spinrep/complex_matrix.hpp"
#include "spinrep/coupling.hpp"
#include "spinrep/exact_matrix.hpp"
#include "spinrep/half_int.hpp"
#include "spinrep/lie_algebra.hpp"
#include "spinrep/rational.hpp"
#include "spinrep/spin_rep.hpp"
#include "spinrep/sqrt_rational.hpp"
#include "spinrep/sqrt_sum.hpp"
#include "spinrep/states.hpp"
#include "spinrep/verify.hpp"
