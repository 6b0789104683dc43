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

#include "wtl/matrix_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "wtl/errors.h"

namespace wtl {
namespace {

double ParseReal(const std::string& s, const std::string& token) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) {
    Fail(ErrorCode::kIo, "malformed complex entry '" + token + "'");
  }
  return v;
}

}  // namespace

std::string FormatComplex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

Complex ParseComplex(const std::string& token) {
  if (token.empty()) Fail(ErrorCode::kIo, "empty complex entry");
  if (token.back() != 'i') return {ParseReal(token, token), 0.0};
  const std::string body = token.substr(0, token.size() - 1);
  // The imaginary part starts at the last sign that is not part of an
  // exponent and not the leading sign.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, ParseReal(body, token)};
  return {ParseReal(body.substr(0, split), token),
          ParseReal(body.substr(split), token)};
}

void WriteMatrix(std::ostream& os, const CMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ' ';
      os << FormatComplex(m(r, c));
    }
    os << '\n';
  }
}

CMatrix ReadMatrix(std::istream& is) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<Complex> row;
    std::string token;
    while (ss >> token) row.push_back(ParseComplex(token));
    if (!rows.empty() && row.size() != rows.front().size()) {
      Fail(ErrorCode::kIo, "ragged matrix rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return CMatrix(0, 0);
  CMatrix m(rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void SaveMatrix(const std::string& path, const CMatrix& m) {
  std::ofstream os(path);
  if (!os) Fail(ErrorCode::kIo, "cannot write " + path);
  WriteMatrix(os, m);
  if (!os) Fail(ErrorCode::kIo, "write failed for " + path);
}

CMatrix LoadMatrix(const std::string& path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kIo, "cannot read " + path);
  return ReadMatrix(is);
}

}  // namespace wtl
