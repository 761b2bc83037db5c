// Copyright 2026 The Authors.
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

#ifndef SGL_SGL_HPP_
#define SGL_SGL_HPP_

#include "sgl/builders.hpp"
#include "sgl/error.hpp"
#include "sgl/exact.hpp"
#include "sgl/greedy.hpp"
#include "sgl/ground.hpp"
#include "sgl/index_set.hpp"
#include "sgl/instance.hpp"
#include "sgl/io.hpp"
#include "sgl/oracle.hpp"
#include "sgl/random.hpp"
#include "sgl/verify.hpp"

#endif  // SGL_SGL_HPP_
