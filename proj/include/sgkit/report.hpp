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

#ifndef SGKIT_REPORT_HPP_
#define SGKIT_REPORT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgkit {

  enum class Outcome { pass, fail, skipped };

  std::string_view to_string(Outcome outcome) noexcept;

  struct Check {
    std::string name;
    Outcome     outcome;
    //! Counterexample for failures, reason for skipped checks, optional
    //! evidence for passes. Single line.
    std::string witness;

    friend bool operator==(Check const&, Check const&) = default;
  };

  //! Structured evidence produced by a construction or verification.
  //!
  //! A report renders as free-form human text followed by a line `---` and a
  //! machine-readable trailer of `key=value` lines. Notes (timings and other
  //! run-dependent remarks) appear only in the human part.
  class Report {
   public:
    Report() = default;
    explicit Report(std::string id) : _id(std::move(id)) {}

    std::string const& id() const noexcept {
      return _id;
    }

    //! Adds or replaces a parameter; insertion order is kept.
    void set(std::string const& key, std::string value);
    void set(std::string const& key, std::size_t value);
    void set(std::string const& key, bool value);

    std::vector<std::pair<std::string, std::string>> const&
    params() const noexcept {
      return _params;
    }
    //! Empty if absent.
    std::string param(std::string const& key) const;

    //! Returns `ok`.
    bool add_check(std::string name, bool ok, std::string witness = {});
    void add_skipped(std::string name, std::string reason);
    void add(Check check);
    //! Appends the checks of `other`, names prefixed by `prefix` and a dot.
    void merge(Report const& other, std::string const& prefix);

    void note(std::string text);

    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }
    Check const* find(std::string const& name) const;
    std::vector<std::string> const& notes() const noexcept {
      return _notes;
    }

    std::size_t count(Outcome outcome) const;
    bool        ok() const {
      return count(Outcome::fail) == 0;
    }
    //! 0 if no check failed, 1 otherwise.
    int exit_code() const {
      return ok() ? 0 : 1;
    }

    std::string human() const;
    std::string trailer() const;
    //! human() + "---\n" + trailer()
    std::string render() const;

    //! Reads back the output of trailer() or render(). Notes are not
    //! restored. Throws ParseError on malformed input.
    static Report parse(std::string_view text);

    friend bool operator==(Report const& x, Report const& y) {
      return x._id == y._id && x._params == y._params
             && x._checks == y._checks;
    }

   private:
    std::string                                      _id;
    std::vector<std::pair<std::string, std::string>> _params;
    std::vector<Check>                               _checks;
    std::vector<std::string>                         _notes;
  };

}  // namespace sgkit

#endif  // SGKIT_REPORT_HPP_
