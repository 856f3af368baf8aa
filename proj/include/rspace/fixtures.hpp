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

#ifndef RSPACE_FIXTURES_HPP_
#define RSPACE_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rspace/ffham.hpp"
#include "rspace/reduced.hpp"

namespace rspace::fixtures {

// |digits> on a system with the given local dimensions, e.g. ket({2,2,2}, "001").
Vector ket(const std::vector<int>& dims, std::string_view digits);
// Sum of amp * |digits> (unnormalized).
Vector kets(const std::vector<int>& dims, std::initializer_list<std::pair<std::string_view, Complex>> terms);
Subspace span(std::initializer_list<Vector> vectors);

SystemShape three_qubits();
SystemShape three_qutrits();

Vector w_state();                // (|001> + |010> + |100>)/sqrt(3)
Subspace symmetric_three_qubit();  // span{|000>, W, W-bar, |111>}

// Components in the order the worked examples print them, (AB, BC, AC),
// each with its explicit subset label; sorted to lexicographic order here.
ReducedSpaceVector from_example_order(const SystemShape& shape, const Subspace& ab, const Subspace& bc,
                                      const Subspace& ac);

ReducedSpaceVector all_components(const SystemShape& shape, int k, const Subspace& component);

ReducedSpaceVector qutrit_example_vector();
Vector qutrit_example_state();
// H^perp of the frustration-free example whose kernel vector is not in Theta_2.
ReducedSpaceVector non_member_kernel_vector();

// L = 2 toric code on a torus: 8 edge qubits, 4 star (XXXX) and 4 plaquette
// (ZZZZ) terms written as projectors (I - A)/2.
struct ToricCode {
  SystemShape shape;
  std::vector<LocalTerm> terms;
};
ToricCode toric_code_l2();

struct FixtureReport {
  std::string name;
  std::string provenance;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// suite: "paper" (worked examples), "toric" or "all".
std::vector<FixtureReport> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace rspace::fixtures

#endif  // RSPACE_FIXTURES_HPP_
