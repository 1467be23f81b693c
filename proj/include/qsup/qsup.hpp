// Copyright 2026 The qsup Authors
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

#ifndef QSUP_QSUP_HPP_
#define QSUP_QSUP_HPP_

#include "qsup/backend.hpp"
#include "qsup/circuit.hpp"
#include "qsup/circuit_io.hpp"
#include "qsup/dense.hpp"
#include "qsup/ensembles.hpp"
#include "qsup/experiments.hpp"
#include "qsup/format.hpp"
#include "qsup/fourier.hpp"
#include "qsup/gridcut.hpp"
#include "qsup/hog.hpp"
#include "qsup/parallel.hpp"
#include "qsup/paths.hpp"
#include "qsup/recursive.hpp"
#include "qsup/rng.hpp"
#include "qsup/statevector.hpp"
#include "qsup/stats.hpp"

#endif  // QSUP_QSUP_HPP_
