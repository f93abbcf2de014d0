// Copyright 2026 The abcontrast authors
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

#ifndef ABCONTRAST_NUMIO_HPP
#define ABCONTRAST_NUMIO_HPP

#include <string>

namespace abcontrast {

/// Shortest decimal string that parses back to exactly the same double.
/// Every number the library writes (CSV cells, report values) goes through
/// this, so emitted files are reproducible and lossless.
std::string format_double(double v);

}  // namespace abcontrast

#endif  // ABCONTRAST_NUMIO_HPP
