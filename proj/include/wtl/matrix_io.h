// Copyright 2026 The wtlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTL_MATRIX_IO_H_
#define WTL_MATRIX_IO_H_

#include <iosfwd>
#include <string>

#include "wtl/linalg.h"

namespace wtl {

// Plain-text complex matrices: one row per line, entries separated by
// whitespace and written as "a+bi" with 17 significant digits. Blank lines
// and lines starting with '#' are ignored.
std::string FormatComplex(Complex z);
Complex ParseComplex(const std::string& token);

void WriteMatrix(std::ostream& os, const CMatrix& m);
CMatrix ReadMatrix(std::istream& is);

void SaveMatrix(const std::string& path, const CMatrix& m);
CMatrix LoadMatrix(const std::string& path);

}  // namespace wtl

#endif  // WTL_MATRIX_IO_H_
