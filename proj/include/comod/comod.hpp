/*
 * Copyright 2026 The comod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


/// \file comod/comod.hpp
/// \brief Everything.

#ifndef COMOD_COMOD_HPP
#define COMOD_COMOD_HPP

#include <comod/axioms.hpp>
#include <comod/decompose.hpp>
#include <comod/error.hpp>
#include <comod/grid.hpp>
#include <comod/integrals.hpp>
#include <comod/json_io.hpp>
#include <comod/random.hpp>
#include <comod/rational.hpp>
#include <comod/scalar.hpp>
#include <comod/selftest.hpp>
#include <comod/set_function.hpp>
#include <comod/transform.hpp>
#include <comod/tuple.hpp>

#endif  // COMOD_COMOD_HPP
