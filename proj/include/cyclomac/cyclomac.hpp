/*
   Copyright 2026 The cyclomac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOMAC_CYCLOMAC_HPP
#define CYCLOMAC_CYCLOMAC_HPP

#include "arith.hpp"
#include "bernoulli.hpp"
#include "comb.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "eisenstein.hpp"
#include "macmahon.hpp"
#include "pfd.hpp"
#include "polynomial.hpp"
#include "polyparse.hpp"
#include "qseries.hpp"
#include "rational.hpp"

#endif  // CYCLOMAC_CYCLOMAC_HPP
