/*
   Copyright 2026 The groebner-kernel Authors

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

#ifndef GROEBNER_GROEBNER_HPP
#define GROEBNER_GROEBNER_HPP

#include "groebner/driver.hpp"
#include "groebner/fields.hpp"
#include "groebner/gbasis.hpp"
#include "groebner/idealops.hpp"
#include "groebner/localstd.hpp"
#include "groebner/modsyz.hpp"
#include "groebner/planecurves.hpp"
#include "groebner/polyring.hpp"
#include "groebner/resolutions.hpp"
#include "groebner/sessionio.hpp"

#endif  // GROEBNER_GROEBNER_HPP
