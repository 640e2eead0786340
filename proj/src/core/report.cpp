// Copyright 2026 The sgkit Authors
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

#include "sgkit/report.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "sgkit/error.hpp"

namespace sgkit {

  namespace {
    std::string escape(std::string_view s) {
      std::string out;
      for (char c : s) {
        if (c == '\\') {
          out += "\\\\";
        } else if (c == '\n') {
          out += "\\n";
        } else {
          out += c;
        }
      }
      return out;
    }

    std::string unescape(std::string_view s) {
      std::string out;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
          ++i;
          out += s[i] == 'n' ? '\n' : s[i];
        } else {
          out += s[i];
        }
      }
      return out;
    }

    std::string_view tag(Outcome o) {
      switch (o) {
        case Outcome::pass:
          return "PASS";
        case Outcome::fail:
          return "FAIL";
        default:
          return "SKIP";
      }
    }
  }  // namespace

  std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
      case Outcome::pass:
        return "pass";
      case Outcome::fail:
        return "fail";
      default:
        return "skipped";
    }
  }

  void Report::set(std::string const& key, std::string value) {
    auto it = std::find_if(_params.begin(), _params.end(), [&](auto const& kv) {
      return kv.first == key;
    });
    if (it != _params.end()) {
      it->second = std::move(value);
    } else {
      _params.emplace_back(key, std::move(value));
    }
  }

  void Report::set(std::string const& key, std::size_t value) {
    set(key, std::to_string(value));
  }

  void Report::set(std::string const& key, bool value) {
    set(key, std::string(value ? "true" : "false"));
  }

  std::string Report::param(std::string const& key) const {
    for (auto const& [k, v] : _params) {
      if (k == key) {
        return v;
      }
    }
    return {};
  }

  bool Report::add_check(std::string name, bool ok, std::string witness) {
    add({std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(witness)});
    return ok;
  }

  void Report::add_skipped(std::string name, std::string reason) {
    add({std::move(name), Outcome::skipped, std::move(reason)});
  }

  void Report::add(Check check) {
    _checks.push_back(std::move(check));
  }

  void Report::merge(Report const& other, std::string const& prefix) {
    for (auto const& c : other.checks()) {
      add({prefix + "." + c.name, c.outcome, c.witness});
    }
    for (auto const& n : other.notes()) {
      note(n);
    }
  }

  void Report::note(std::string text) {
    _notes.push_back(std::move(text));
  }

  Check const* Report::find(std::string const& name) const {
    for (auto const& c : _checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  std::size_t Report::count(Outcome outcome) const {
    return std::count_if(_checks.begin(), _checks.end(), [&](auto const& c) {
      return c.outcome == outcome;
    });
  }

  std::string Report::human() const {
    std::string out = fmt::format("report: {}\n", _id);
    for (auto const& [k, v] : _params) {
      out += fmt::format("  {}: {}\n", k, v);
    }
    for (auto const& c : _checks) {
      out += fmt::format("[{}] {}", tag(c.outcome), c.name);
      if (!c.witness.empty()) {
        out += fmt::format(": {}", c.witness);
      }
      out += '\n';
    }
    for (auto const& n : _notes) {
      out += fmt::format("note: {}\n", n);
    }
    out += fmt::format("totals: {} passed, {} failed, {} skipped\n",
                       count(Outcome::pass),
                       count(Outcome::fail),
                       count(Outcome::skipped));
    return out;
  }

  std::string Report::trailer() const {
    std::string out = fmt::format("report={}\n", escape(_id));
    for (auto const& [k, v] : _params) {
      out += fmt::format("param.{}={}\n", k, escape(v));
    }
    for (auto const& c : _checks) {
      out += fmt::format("check.{}={}\n", c.name, to_string(c.outcome));
      if (!c.witness.empty()) {
        out += fmt::format("check.{}.witness={}\n", c.name, escape(c.witness));
      }
    }
    out += fmt::format("total.pass={}\ntotal.fail={}\ntotal.skipped={}\n",
                       count(Outcome::pass),
                       count(Outcome::fail),
                       count(Outcome::skipped));
    return out;
  }

  std::string Report::render() const {
    return human() + "---\n" + trailer();
  }

  Report Report::parse(std::string_view text) {
    if (auto pos = text.find("\n---\n"); pos != std::string_view::npos) {
      text = text.substr(pos + 5);
    } else if (text.substr(0, 4) == "---\n") {
      text = text.substr(4);
    }
    Report      r;
    std::size_t line_no = 0;
    std::size_t totals[3] = {0, 0, 0};
    bool        have_totals[3] = {false, false, false};
    while (!text.empty()) {
      ++line_no;
      auto eol  = text.find('\n');
      auto line = text.substr(0, eol);
      text      = eol == std::string_view::npos ? std::string_view{}
                                                : text.substr(eol + 1);
      if (line.empty()) {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::parse_error,
                    fmt::format("trailer line {}: missing '='", line_no));
      }
      auto key   = line.substr(0, eq);
      auto value = line.substr(eq + 1);
      if (key == "report") {
        r._id = unescape(value);
      } else if (key.starts_with("param.")) {
        r.set(std::string(key.substr(6)), unescape(value));
      } else if (key.starts_with("check.")) {
        auto name = key.substr(6);
        if (name.ends_with(".witness") && !r._checks.empty()
            && r._checks.back().name == name.substr(0, name.size() - 8)) {
          r._checks.back().witness = unescape(value);
          continue;
        }
        Outcome o;
        if (value == "pass") {
          o = Outcome::pass;
        } else if (value == "fail") {
          o = Outcome::fail;
        } else if (value == "skipped") {
          o = Outcome::skipped;
        } else {
          throw Error(ErrorCode::parse_error,
                      fmt::format("trailer line {}: bad outcome '{}'",
                                  line_no,
                                  value));
        }
        r._checks.push_back({std::string(name), o, {}});
      } else if (key.starts_with("total.")) {
        auto which = key.substr(6);
        int  i     = which == "pass" ? 0 : which == "fail" ? 1 : which == "skipped" ? 2 : -1;
        if (i < 0
            || std::from_chars(value.data(), value.data() + value.size(), totals[i]).ec
                   != std::errc()) {
          throw Error(ErrorCode::parse_error,
                      fmt::format("trailer line {}: bad total", line_no));
        }
        have_totals[i] = true;
      } else {
        throw Error(ErrorCode::parse_error,
                    fmt::format("trailer line {}: unknown key '{}'", line_no, key));
      }
    }
    Outcome const kinds[] = {Outcome::pass, Outcome::fail, Outcome::skipped};
    for (int i = 0; i < 3; ++i) {
      if (have_totals[i] && totals[i] != r.count(kinds[i])) {
        throw Error(ErrorCode::parse_error, "trailer totals do not match checks");
      }
    }
    return r;
  }

}  // namespace sgkit
