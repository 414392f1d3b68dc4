//  Copyright 2026 The compat-frames Authors
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

#ifndef COMPAT_COMPAT_HPP_
#define COMPAT_COMPAT_HPP_

#include "compat/catalog.hpp"
#include "compat/dot.hpp"
#include "compat/edge_cover.hpp"
#include "compat/enumerate.hpp"
#include "compat/error.hpp"
#include "compat/frame.hpp"
#include "compat/io.hpp"
#include "compat/isomorphism.hpp"
#include "compat/lattice.hpp"
#include "compat/modal.hpp"
#include "compat/parallel.hpp"
#include "compat/representation.hpp"
#include "compat/search.hpp"
#include "compat/state_set.hpp"
#include "compat/suites.hpp"
#include "compat/unary_op.hpp"

#endif  // COMPAT_COMPAT_HPP_
