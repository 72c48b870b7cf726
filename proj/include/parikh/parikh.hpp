// Copyright 2026 The parikh Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARIKH_PARIKH_HPP_
#define PARIKH_PARIKH_HPP_

#include "errors.hpp"          // IWYU pragma: export
#include "irreducibility.hpp"  // IWYU pragma: export
#include "parikh_matrix.hpp"   // IWYU pragma: export
#include "search.hpp"          // IWYU pragma: export
#include "specs.hpp"           // IWYU pragma: export
#include "transforms.hpp"      // IWYU pragma: export
#include "words.hpp"           // IWYU pragma: export

#endif  // PARIKH_PARIKH_HPP_
