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

#include "rspace/fixtures.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "rspace/errors.hpp"
#include "rspace/oracle.hpp"
#include "rspace/semilattice.hpp"

namespace rspace::fixtures {

Vector ket(const std::vector<int>& dims, std::string_view digits) {
  if (digits.size() != dims.size()) throw InvalidArgument("ket: digit count mismatch");
  std::size_t dim = 1, idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int d = digits[i] - '0';
    if (d < 0 || d >= dims[i]) throw InvalidArgument("ket: digit out of range");
    dim *= static_cast<std::size_t>(dims[i]);
    idx = idx * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(d);
  }
  return basis_ket(dim, idx);
}

Vector kets(const std::vector<int>& dims, std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  Vector out;
  for (const auto& [digits, amp] : terms) {
    Vector k = amp * ket(dims, digits);
    if (out.size() == 0) out = Vector::Zero(k.size());
    out += k;
  }
  return out;
}

Subspace span(std::initializer_list<Vector> vectors) {
  const std::vector<Vector> vs(vectors);
  return Subspace::from_spanning_vectors(vs);
}

SystemShape three_qubits() { return SystemShape::uniform(3, 2); }
SystemShape three_qutrits() { return SystemShape::uniform(3, 3); }

Vector w_state() {
  const std::vector<int> q3{2, 2, 2};
  return kets(q3, {{"001", 1.0}, {"010", 1.0}, {"100", 1.0}}) / std::sqrt(3.0);
}

Subspace symmetric_three_qubit() {
  const std::vector<int> q3{2, 2, 2};
  return span({ket(q3, "000"), w_state(), kets(q3, {{"110", 1.0}, {"101", 1.0}, {"011", 1.0}}), ket(q3, "111")});
}

ReducedSpaceVector from_example_order(const SystemShape& shape, const Subspace& ab, const Subspace& bc,
                                      const Subspace& ac) {
  return ReducedSpaceVector::from_labelled(shape, 2, {{{0, 1}, ab}, {{1, 2}, bc}, {{0, 2}, ac}});
}

ReducedSpaceVector all_components(const SystemShape& shape, int k, const Subspace& component) {
  const auto m = binomial(shape.num_particles(), k);
  return ReducedSpaceVector(shape, k, std::vector<Subspace>(m, component));
}

ReducedSpaceVector qutrit_example_vector() {
  const std::vector<int> t2{3, 3};
  const double c = std::sqrt(2.0 / 3.0);
  const double h = 1.0 / std::sqrt(2.0);
  const Subspace ab = span({c * kets(t2, {{"00", 1.0}, {"12", -h}}), c * kets(t2, {{"11", 1.0}, {"02", -h}})});
  const Subspace bc = span({c * kets(t2, {{"00", 1.0}, {"21", -h}}), c * kets(t2, {{"11", 1.0}, {"20", -h}})});
  const Subspace ac = span({ket(t2, "00"), kets(t2, {{"01", h}, {"10", h}}), ket(t2, "11")});
  return from_example_order(three_qutrits(), ab, bc, ac);
}

Vector qutrit_example_state() {
  const std::vector<int> t3{3, 3, 3};
  const double h = 1.0 / std::sqrt(2.0);
  return kets(t3, {{"000", 1.0}, {"021", -h}, {"120", -h}, {"111", 1.0}}) / std::sqrt(3.0);
}

ReducedSpaceVector non_member_kernel_vector() {
  const std::vector<int> q2{2, 2};
  const double h = 1.0 / std::sqrt(2.0);
  const Subspace sym = span({ket(q2, "00"), kets(q2, {{"01", h}, {"10", h}})});
  const Subspace zero = span({ket(q2, "00")});
  return from_example_order(three_qubits(), sym, zero, zero);
}

ToricCode toric_code_l2() {
  // Edge qubits: horizontal h(i,j) = 2i + j, vertical v(i,j) = 4 + 2i + j.
  auto hz = [](int i, int j) { return 2 * ((i + 2) % 2) + (j + 2) % 2; };
  auto vt = [](int i, int j) { return 4 + 2 * ((i + 2) % 2) + (j + 2) % 2; };
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  auto kron4 = [](const Matrix& p) {
    Matrix out = Matrix::Ones(1, 1);
    for (int i = 0; i < 4; ++i) {
      Matrix next(out.rows() * 2, out.cols() * 2);
      for (Eigen::Index r = 0; r < out.rows(); ++r) {
        for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * p;
      }
      out = std::move(next);
    }
    return out;
  };
  const Matrix id = Matrix::Identity(16, 16);
  const Matrix star = (id - kron4(x)) / 2.0;
  const Matrix plaquette = (id - kron4(z)) / 2.0;
  ToricCode tc{SystemShape::uniform(8, 2), {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<int> s{hz(i, j), hz(i, j - 1), vt(i, j), vt(i - 1, j)};
      std::sort(s.begin(), s.end());
      tc.terms.push_back({s, star});
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<int> p{hz(i, j), hz(i + 1, j), vt(i, j), vt(i, j + 1)};
      std::sort(p.begin(), p.end());
      tc.terms.push_back({p, plaquette});
    }
  }
  return tc;
}

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

FixtureReport timed(const std::string& name, const std::string& provenance, double tol,
                    const std::function<void(Check&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  return {name, provenance, tol, c.ok, c.detail.str(), std::chrono::duration<double>(t1 - t0).count()};
}

std::vector<FixtureReport> worked_example_suite(std::uint64_t seed) {
  const SystemShape q3 = three_qubits();
  const std::vector<int> q2{2, 2};
  const std::vector<int> d3{2, 2, 2};
  const double h = 1.0 / std::sqrt(2.0);
  const Subspace s00 = span({ket(q2, "00")});
  const Subspace s01 = span({ket(q2, "01")});
  const Subspace sym2 = span({ket(q2, "00"), kets(q2, {{"01", h}, {"10", h}})});
  const Subspace ghz_pair = span({ket(q2, "00"), ket(q2, "11")});
  const Subspace w_space = span({w_state()});
  const Subspace w_pre = span({w_state(), ket(d3, "000")});
  std::vector<FixtureReport> out;

  out.push_back(timed("example-1-reduce", "worked example: reduced spaces of |001>, span{|000>,|111>}, W", kInclusionTol,
                      [&](Check& c) {
                        c.expect(eq(reduce(span({ket(d3, "001")}), q3, 2), from_example_order(q3, s00, s01, s01)),
                                 "|001> components");
                        c.expect(eq(reduce(span({ket(d3, "000"), ket(d3, "111")}), q3, 2),
                                    all_components(q3, 2, ghz_pair)),
                                 "span{|000>,|111>} components");
                        c.expect(eq(reduce(w_space, q3, 2), all_components(q3, 2, sym2)), "W components");
                      }));

  out.push_back(timed("sum-example", "worked example: join of W and |111> reduced spaces; MPI is the symmetric subspace",
                      kInclusionTol, [&](Check& c) {
                        const auto a = reduce(w_space, q3, 2);
                        const auto b = reduce(span({ket(d3, "111")}), q3, 2);
                        const auto j = join(a, b);
                        const Subspace sym3 = span({ket(q2, "00"), kets(q2, {{"01", h}, {"10", h}}), ket(q2, "11")});
                        c.expect(eq(j, all_components(q3, 2, sym3)), "joined components");
                        const Subspace pre = mpi(j);
                        const Subspace mpi_sum = sum(mpi(a), mpi(b));
                        c.expect(pre.rank() == 4 && equals(pre, symmetric_three_qubit()), "MPI is the symmetric subspace");
                        c.expect(mpi_sum.rank() == 3 && contains(pre, mpi_sum), "MPI strictly contains the MPI sum");
                      }));

  out.push_back(timed("qutrit-atom", "worked example: qutrit element whose MPI is a single entangled state", kInclusionTol,
                      [&](Check& c) {
                        const auto v = qutrit_example_vector();
                        const Subspace pre = mpi(v);
                        c.expect(pre.rank() == 1, "MPI rank 1");
                        if (pre.rank() == 1) {
                          const double overlap = std::abs(pre.basis().col(0).dot(qutrit_example_state()));
                          c.expect(overlap > 1 - 1e-8, "MPI equals psi up to phase");
                        }
                        SearchBudget b;
                        b.seed = seed;
                        c.expect(is_atom(v, b).status == VerdictStatus::kCertifiedYes, "is_atom certifies");
                      }));

  out.push_back(timed("w-join-irreducible", "worked example: reduced spaces of W: not an atom, no reducing pair found",
                      kInclusionTol, [&](Check& c) {
                        const auto v = reduce(w_space, q3, 2);
                        SearchBudget b;
                        b.seed = seed;
                        b.random_samples = 2000;
                        const auto atom = is_atom(v, b);
                        c.expect(atom.status == VerdictStatus::kNo && atom.witness &&
                                     eq(*atom.witness, reduce(span({ket(d3, "000")}), q3, 2)),
                                 "is_atom witness is reduce(|000>)");
                        const auto irr = is_join_irreducible(v, b);
                        c.expect(irr.status == VerdictStatus::kUnknown && !irr.witness, "no reducing pair");
                      }));

  out.push_back(timed("non-member-kernel", "worked example: kernel vector outside Theta_2 with ground space |000>",
                      kInclusionTol, [&](Check& c) {
                        const auto v = non_member_kernel_vector();
                        c.expect(!member_theta(v), "not in Theta_2");
                        const Subspace g = ground_space(from_rsv(v));
                        c.expect(equals(g, span({ket(d3, "000")})), "ground space is |000>");
                        c.expect(eq(reduce(g, q3, 2), all_components(q3, 2, s00)), "reduce(ground) is all span{|00>}");
                      }));

  out.push_back(timed("subsemilattice", "worked example: MPI of reduce(W) is span{W,|000>}, a ground space",
                      kInclusionTol, [&](Check& c) {
                        const auto big = all_components(q3, 2, sym2);
                        const auto small = all_components(q3, 2, s00);
                        c.expect(leq(small, big), "L' <= L");
                        c.expect(equals(mpi(big), w_pre), "MPI(L) = span{W,|000>}");
                        c.expect(contains(mpi(big), mpi(small)), "MPI(L) contains MPI(L')");
                        c.expect(equals(ground_space(from_rsv(big)), w_pre), "ground space of L^perp");
                      }));
  return out;
}

std::vector<FixtureReport> toric_suite(std::uint64_t seed) {
  std::vector<FixtureReport> out;
  const ToricCode tc = toric_code_l2();
  const int k = 4;
  out.push_back(timed("toric-degeneracy", "worked example: L=2 toric code ground space is four-fold degenerate",
                      kInclusionTol, [&](Check& c) {
                        const auto ff = is_frustration_free(tc.shape, k, tc.terms);
                        c.expect(ff.frustration_free, "frustration free");
                        c.expect(ff.ground.rank() == 4, "ground space rank 4 (got " + std::to_string(ff.ground.rank()) + ")");
                        const auto brute = oracle::brute_ground(tc.shape, tc.terms);
                        c.expect(std::abs(brute.energy) < 1e-8 && equals(brute.space, ff.ground),
                                 "dense diagonalization agrees");
                      }));
  out.push_back(timed("toric-same-image", "worked example: every subspace of the toric ground space has the same image",
                      kInclusionTol, [&](Check& c) {
                        const Subspace gs = is_frustration_free(tc.shape, k, tc.terms).ground;
                        const auto image = reduce(gs, tc.shape, k);
                        Rng rng(seed);
                        for (int i = 0; i < 20; ++i) {
                          const Subspace one = rng.random_subspace_of(gs, 1);
                          c.expect(eq(reduce(one, tc.shape, k), image), "random state " + std::to_string(i));
                        }
                      }));
  out.push_back(timed("toric-atom-search", "worked example: no strictly smaller element found below the toric image",
                      kInclusionTol, [&](Check& c) {
                        const Subspace gs = is_frustration_free(tc.shape, k, tc.terms).ground;
                        SearchBudget b;
                        b.seed = seed;
                        b.random_samples = 1000;
                        // Random candidates only. On the 2x2 torus the logical
                        // Z strings have weight 2, so logical eigenstates (which
                        // the structured families pick up) do reduce strictly
                        // below the image of a generic ground state.
                        b.families.basis_states = false;
                        b.families.space_basis = false;
                        b.families.product_states = false;
                        const auto v = is_atom(reduce(gs, tc.shape, k), b);
                        c.expect(v.status != VerdictStatus::kNo, "no No-witness");
                        c.expect(v.samples_used == 1000, "1000 samples drawn");
                      }));
  return out;
}

}  // namespace

std::vector<FixtureReport> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<FixtureReport> out;
  if (suite == "paper" || suite == "all") {
    auto p = worked_example_suite(seed);
    out.insert(out.end(), p.begin(), p.end());
  }
  if (suite == "toric" || suite == "all") {
    auto t = toric_suite(seed);
    out.insert(out.end(), t.begin(), t.end());
  }
  if (suite != "paper" && suite != "toric" && suite != "all") {
    throw InvalidArgument("run_suite: unknown suite \"" + suite + "\"");
  }
  return out;
}

}  // namespace rspace::fixtures
