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

#include "pyrclip/segment_csv.hpp"

#include <charconv>
#include <istream>

#include "pyrclip/harness.hpp"

namespace pyrclip {
namespace {

constexpr std::size_t kInputFields = 6;
constexpr std::size_t kOutputFields = 15;

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    auto const comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

Point3 point_at(std::vector<std::string_view> const& f, std::size_t i) {
  return {parse_double(f[i]), parse_double(f[i + 1]), parse_double(f[i + 2])};
}

}  // namespace

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0;
  auto const [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<Segment3> read_segments(std::istream& in) {
  std::vector<Segment3> out;
  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string_view const line = trim(buffer);
    if (line.empty() || line.front() == '#') continue;
    auto const fields = split(line);
    try {
      if (fields.size() == kInputFields) {
        out.push_back({point_at(fields, 0), point_at(fields, 3)});
      } else if (fields.size() == kOutputFields) {
        std::string_view const verdict = trim(fields[6]);
        if (verdict == "Accepted") {
          out.push_back({point_at(fields, 9), point_at(fields, 12)});
        } else if (verdict != "Rejected") {
          throw std::invalid_argument("unknown verdict '" +
                                      std::string(verdict) + "'");
        }
      } else {
        throw std::invalid_argument("expected 6 or 15 fields, got " +
                                    std::to_string(fields.size()));
      }
    } catch (std::invalid_argument const& e) {
      throw CsvError(line_no, e.what());
    }
  }
  if (in.bad()) throw CsvError(line_no, "read failed");
  return out;
}

std::string format_segment(Segment3 const& s) {
  std::string row;
  for (double v : {s.a.x, s.a.y, s.a.z, s.b.x, s.b.y, s.b.z}) {
    if (!row.empty()) row += ',';
    row += format_double(v);
  }
  return row;
}

std::string format_clip_row(Segment3 const& s, ClipOutcome const& o) {
  std::string row = format_segment(s);
  if (!o.accepted()) return row + ",Rejected,,,,,,,,";
  row += ",Accepted";
  for (double v : {o.t_enter, o.t_exit, o.p_enter.x, o.p_enter.y, o.p_enter.z,
                   o.p_exit.x, o.p_exit.y, o.p_exit.z}) {
    row += ',';
    row += format_double(v);
  }
  return row;
}

}  // namespace pyrclip
