// Copyright 2026 The dagdepth Authors
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

// Umbrella header.

#pragma once

#include "dagdepth/builder.hpp"
#include "dagdepth/dec_format.hpp"
#include "dagdepth/decomposition.hpp"
#include "dagdepth/dg_format.hpp"
#include "dagdepth/digraph.hpp"
#include "dagdepth/dot.hpp"
#include "dagdepth/fragments.hpp"
#include "dagdepth/game.hpp"
#include "dagdepth/generators.hpp"
#include "dagdepth/solver.hpp"
#include "dagdepth/transform.hpp"
