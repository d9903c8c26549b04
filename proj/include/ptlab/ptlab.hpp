// Copyright 2026 The ptlab Authors.
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

#ifndef PTLAB_PTLAB_HPP_
#define PTLAB_PTLAB_HPP_

#include "ptlab/analysis.hpp"
#include "ptlab/behaviour.hpp"
#include "ptlab/error.hpp"
#include "ptlab/exactnum.hpp"
#include "ptlab/games.hpp"
#include "ptlab/inflation.hpp"
#include "ptlab/lp.hpp"
#include "ptlab/quantumsim.hpp"
#include "ptlab/strategies.hpp"

#endif  // PTLAB_PTLAB_HPP_
