/**************************************************************************
 * acceptance.hpp
 *
 * Copyright 2026 The ogc authors
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
 **************************************************************************/

#pragma once

#include <string>
#include <vector>

namespace ogc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

/// The desk verification suite: every numbered claim the library is built
/// to reproduce, run end to end at its stated tolerance.
std::vector<CriterionResult> run_acceptance(int threads = 1);

} // namespace ogc
