// Copyright 2026 The qchan Authors
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

#pragma once

// Umbrella header: quantum channels as first-class linear maps, their
// natural / general-basis / Choi-Jamiolkowski matrix representations, and
// complete-positivity and trace-preservation verdicts.

#include "qchan/analysis.hpp"
#include "qchan/basis.hpp"
#include "qchan/channel.hpp"
#include "qchan/eig.hpp"
#include "qchan/errors.hpp"
#include "qchan/family.hpp"
#include "qchan/matrix.hpp"
#include "qchan/repr.hpp"
