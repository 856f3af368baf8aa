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

#ifndef RSPACE_JSON_IO_HPP_
#define RSPACE_JSON_IO_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rspace/ffham.hpp"
#include "rspace/reduced.hpp"
#include "rspace/semilattice.hpp"

// File formats:
//   subspace:     {"dims":[...], "vectors":[v, ...]}
//   reduced:      {"dims":[...], "k":2, "components":[{"subset":[0,1], "vectors":[v, ...]}, ...]}
//   hamiltonian:  {"dims":[...], "k":2, "terms":[{"subset":[0,1], "kernel_vectors":[v, ...]}
//                                               | {"subset":[0,1], "matrix":[[a, ...], ...]}]}
// A vector v is an amplitude array ([re, im] pairs or plain reals), a ket
// shorthand {"ket":"001"}, or a superposition {"kets":{"001":a, "010":a}}.
// Vectors are spanning, not necessarily orthonormal.
namespace rspace::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parses text, reporting syntax errors with line and column.
json parse_text(const std::string& text, const std::string& source = "<input>");
json read_file(const std::string& path);

struct ShapedSubspace {
  SystemShape shape;
  Subspace space;
};

struct HamiltonianSpec {
  SystemShape shape;
  int k;
  std::vector<LocalTerm> terms;  // kernel terms arrive as projectors I - P
};

ShapedSubspace subspace_from_json(const json& j, double tol = kDefaultRankTol);
ReducedSpaceVector rsv_from_json(const json& j, double tol = kDefaultRankTol);
HamiltonianSpec hamiltonian_from_json(const json& j, double tol = kDefaultRankTol);
// Projector-form Hamiltonian; throws InvalidArgument if some subset's terms
// share no ground state.
LocalHamiltonian local_hamiltonian_from_json(const json& j, double tol = kDefaultRankTol);

json vector_to_json(const Vector& v);
json subspace_to_json(const SystemShape& shape, const Subspace& s);
json rsv_to_json(const ReducedSpaceVector& v);
json hamiltonian_to_json(const LocalHamiltonian& h);

json verdict_to_json(const AtomVerdict& v, double tol);
json verdict_to_json(const IrreducibleVerdict& v, double tol);
json verdict_to_json(const Verdict<Subspace>& v, const SystemShape& shape, double tol);
json verdict_to_json(const Verdict<SubspacePair>& v, const SystemShape& shape, double tol);

}  // namespace rspace::io

#endif  // RSPACE_JSON_IO_HPP_
