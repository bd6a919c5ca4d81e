// Copyright 2026 The qharmonic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHARMONIC_QHARMONIC_HPP_
#define QHARMONIC_QHARMONIC_HPP_

#include "qharmonic/bigfloat.hpp"
#include "qharmonic/errors.hpp"
#include "qharmonic/grid.hpp"
#include "qharmonic/grid_io.hpp"
#include "qharmonic/hyperseries.hpp"
#include "qharmonic/params.hpp"
#include "qharmonic/qcalculus.hpp"
#include "qharmonic/qcore.hpp"
#include "qharmonic/qfourier.hpp"
#include "qharmonic/qtrig.hpp"
#include "qharmonic/report.hpp"
#include "qharmonic/scalar.hpp"
#include "qharmonic/series.hpp"
#include "qharmonic/verify.hpp"

#endif  // QHARMONIC_QHARMONIC_HPP_
