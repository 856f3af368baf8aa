// Copyright 2026 The rspace Authors
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

#ifndef RSPACE_ERRORS_HPP_
#define RSPACE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rspace {

/// Precondition or shape violation in a library call.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the supported domain of an operation (e.g. non-qubit
/// input to the qubit-only product search, or a dimension cap).
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

/// Base for failures caused by the numerics rather than the caller:
/// an undefined meet, or a constructive search that ran out of options.
class NumericalDegeneracy : public std::runtime_error {
 public:
  explicit NumericalDegeneracy(const std::string& what) : std::runtime_error(what) {}
};

class MeetUndefined : public NumericalDegeneracy {
 public:
  explicit MeetUndefined(const std::string& what) : NumericalDegeneracy(what) {}
};

class SearchExhausted : public NumericalDegeneracy {
 public:
  explicit SearchExhausted(const std::string& what) : NumericalDegeneracy(what) {}
};

}  // namespace rspace

#endif  // RSPACE_ERRORS_HPP_
