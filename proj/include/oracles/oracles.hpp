// Copyright 2026 The Oracle Reals Authors
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


#ifndef ORACLES_ORACLES_HPP
#define ORACLES_ORACLES_HPP

#include "oracles/combinators.hpp"
#include "oracles/constructors.hpp"
#include "oracles/errors.hpp"
#include "oracles/funoracle.hpp"
#include "oracles/harness.hpp"
#include "oracles/interval.hpp"
#include "oracles/oracle.hpp"
#include "oracles/polynomial.hpp"
#include "oracles/rational.hpp"
#include "oracles/refine.hpp"

#endif
