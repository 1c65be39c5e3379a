// Copyright 2026 The pfaffkit Authors
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

#ifndef PFAFF_PFAFF_HPP
#define PFAFF_PFAFF_HPP

#include "pfaff/census.hpp"
#include "pfaff/characterize.hpp"
#include "pfaff/cycles.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/fixtures.hpp"
#include "pfaff/gf2.hpp"
#include "pfaff/graph.hpp"
#include "pfaff/graph_io.hpp"
#include "pfaff/graph_ops.hpp"
#include "pfaff/isomorphism.hpp"
#include "pfaff/matching.hpp"
#include "pfaff/nearbip.hpp"
#include "pfaff/orientation.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/small_set.hpp"
#include "pfaff/verify.hpp"
#include "pfaff/walks.hpp"
#include "pfaff/witness_json.hpp"

#endif  // PFAFF_PFAFF_HPP
