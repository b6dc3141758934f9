// Copyright 2026 The qswitch Authors
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

#pragma once

#include "qswitch/bell.hpp"
#include "qswitch/capacity.hpp"
#include "qswitch/channel.hpp"
#include "qswitch/density_matrix.hpp"
#include "qswitch/matrix.hpp"
#include "qswitch/oracle.hpp"
#include "qswitch/pauli.hpp"
#include "qswitch/sweep.hpp"
#include "qswitch/trajectory.hpp"
#include "qswitch/verify.hpp"
