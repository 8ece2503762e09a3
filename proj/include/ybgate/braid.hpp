// Copyright 2026 The ybgate Authors
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

#include <string>
#include <vector>

#include "ybgate/linalg.hpp"
#include "ybgate/weyl.hpp"

namespace ybg {

enum class Family { I, II, III, IV };

std::string to_string(Family f);
Family parse_family(const std::string &s);

// Number of braid phases for a family: 4, 3, 2, 1.
int braid_param_count(Family f);

struct BraidSpec {
    Family family = Family::I;
    std::vector<double> phi;

    void validate() const;
};

struct DerivedAngles {
    // family I: phi_I1..3; family II: phi_II1..2 (third slot unused)
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    double omega = 0.0;
};

DerivedAngles derived_angles(const BraidSpec &spec);

Mat4d build_braid(const BraidSpec &spec);

// ||(B x 1)(1 x B)(B x 1) - (1 x B)(B x 1)(1 x B)||_F
double braid_residual(const Mat4d &b);

NonlocalPoint braid_nonlocal_closed(const BraidSpec &spec);
double braid_ep_closed(const BraidSpec &spec);

}  // namespace ybg
