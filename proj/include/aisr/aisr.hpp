//  Copyright 2026 The aisr Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


/// @file aisr.hpp
/// Umbrella header for the library part of aisr.

#ifndef INCLUDE_AISR_AISR_HPP_
#define INCLUDE_AISR_AISR_HPP_

#include "aisr/catalog.hpp"
#include "aisr/constructions.hpp"
#include "aisr/criteria.hpp"
#include "aisr/derivation.hpp"
#include "aisr/enumeration.hpp"
#include "aisr/error.hpp"
#include "aisr/evaluator.hpp"
#include "aisr/json_io.hpp"
#include "aisr/morphism_search.hpp"
#include "aisr/parse.hpp"
#include "aisr/semiring.hpp"
#include "aisr/tables.hpp"
#include "aisr/term.hpp"

#endif  // INCLUDE_AISR_AISR_HPP_
