// Copyright 2026 The boxdm Authors
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

#include "canonical_json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

namespace boxdm::cli {
namespace {

void write(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(key).dump() << ": ";
        write(os, value, indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
        return !e.is_structured();
      });
      os << (flat ? "[" : "[\n");
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat ? ", " : ",\n");
        first = false;
        if (!flat) os << inner;
        write(os, e, indent + 1);
      }
      if (!flat) os << "\n" << pad;
      os << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, path.empty() ? key : path + "." + key, os);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    }
  } else {
    std::string value;
    if (j.is_number_float()) {
      value = std::isfinite(j.get<double>()) ? format_double(j.get<double>()) : "";
    } else if (j.is_string()) {
      value = j.get<std::string>();
    } else if (!j.is_null()) {
      value = j.dump();
    }
    os << csv_field(path) << "," << csv_field(value) << "\n";
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  // A parser reads "-0" back as the integer 0, so signed zero is not kept.
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string dump_canonical(const Json& doc) {
  std::ostringstream os;
  // Non-finite floats have no JSON spelling.
  Json sanitized = doc;
  std::function<void(Json&)> scrub = [&](Json& j) {
    if (j.is_structured()) {
      for (auto& e : j) scrub(e);
    } else if (j.is_number_float() && !std::isfinite(j.get<double>())) {
      j = nullptr;
    }
  };
  scrub(sanitized);
  write(os, sanitized, 0);
  os << "\n";
  return os.str();
}

std::string flatten_csv(const Json& doc) {
  std::ostringstream os;
  os << "key,value\n";
  flatten(doc, "", os);
  return os.str();
}

}  // namespace boxdm::cli
