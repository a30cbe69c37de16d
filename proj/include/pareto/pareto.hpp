// Copyright 2026 The pareto-submod Authors.
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

// Convenience header pulling in the whole library.

#ifndef PARETO_PARETO_HPP
#define PARETO_PARETO_HPP

#include "pareto/baselines.hpp"
#include "pareto/core.hpp"
#include "pareto/cost.hpp"
#include "pareto/frontiers.hpp"
#include "pareto/generators.hpp"
#include "pareto/greedy.hpp"
#include "pareto/grids.hpp"
#include "pareto/instance.hpp"
#include "pareto/io.hpp"
#include "pareto/matrix.hpp"
#include "pareto/oracle.hpp"
#include "pareto/report.hpp"
#include "pareto/rng.hpp"
#include "pareto/runner.hpp"
#include "pareto/utility.hpp"

#endif  // PARETO_PARETO_HPP
