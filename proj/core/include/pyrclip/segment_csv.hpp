// Copyright 2026 The pyrclip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text segment files used by the command-line tool.
//
// Input rows are `xA,yA,zA,xB,yB,zB`. Clip output rows append
//
//   verdict,t_enter,t_exit,x1,y1,z1,x2,y2,z2
//
// with the last eight fields empty for a rejected segment. Reading a clip
// output file yields its accepted output segments, so a result can be fed
// straight back in. Blank lines and lines starting with '#' are skipped.
// All numbers are written in the shortest form that parses back exactly.

#ifndef PYRCLIP_SEGMENT_CSV_HPP_
#define PYRCLIP_SEGMENT_CSV_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pyrclip/clip_outcome.hpp"
#include "pyrclip/geometry.hpp"

namespace pyrclip {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::vector<Segment3> read_segments(std::istream& in);

// "xA,yA,zA,xB,yB,zB"
std::string format_segment(Segment3 const& s);

// format_segment(s) followed by the outcome columns.
std::string format_clip_row(Segment3 const& s, ClipOutcome const& o);

// Parses one number; throws std::invalid_argument on anything but a
// complete decimal floating-point literal.
double parse_double(std::string_view text);

}  // namespace pyrclip

#endif  // PYRCLIP_SEGMENT_CSV_HPP_
