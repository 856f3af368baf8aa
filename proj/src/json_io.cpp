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

#include "rspace/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rspace/errors.hpp"

namespace rspace::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError("at " + (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Complex amplitude(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(path, "expected a number or a [re, im] pair");
}

std::size_t ket_index(const std::string& ket, const std::vector<int>& dims, const std::string& path) {
  if (ket.size() != dims.size()) {
    fail(path, "ket \"" + ket + "\" has " + std::to_string(ket.size()) + " digits, expected " +
                   std::to_string(dims.size()));
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < ket.size(); ++i) {
    const int digit = ket[i] - '0';
    if (digit < 0 || digit >= dims[i]) fail(path, "ket \"" + ket + "\" has an out-of-range digit");
    idx = idx * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(digit);
  }
  return idx;
}

Vector parse_vector(const json& j, const std::vector<int>& dims, const std::string& path) {
  std::size_t dim = 1;
  for (int d : dims) dim *= static_cast<std::size_t>(d);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  if (j.is_object() && j.contains("ket")) {
    if (!j["ket"].is_string()) fail(path + ".ket", "expected a string");
    const std::size_t idx = ket_index(j["ket"].get<std::string>(), dims, path + ".ket");
    v(static_cast<Eigen::Index>(idx)) = j.contains("amp") ? amplitude(j["amp"], path + ".amp") : Complex(1.0);
    return v;
  }
  if (j.is_object() && j.contains("kets")) {
    const json& kets = j["kets"];
    if (!kets.is_object()) fail(path + ".kets", "expected an object mapping kets to amplitudes");
    for (auto it = kets.begin(); it != kets.end(); ++it) {
      const std::string sub = path + ".kets." + it.key();
      v(static_cast<Eigen::Index>(ket_index(it.key(), dims, sub))) += amplitude(it.value(), sub);
    }
    return v;
  }
  if (!j.is_array()) fail(path, "expected an amplitude array or a ket object");
  if (j.size() != dim) {
    fail(path, "amplitude array has length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = amplitude(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Subspace parse_span(const json& j, const std::vector<int>& dims, double tol, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of vectors");
  std::size_t dim = 1;
  for (int d : dims) dim *= static_cast<std::size_t>(d);
  if (j.empty()) return Subspace::zero(dim, tol);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < j.size(); ++i) vs.push_back(parse_vector(j[i], dims, path + "[" + std::to_string(i) + "]"));
  return Subspace::from_spanning_vectors(vs, tol);
}

SystemShape parse_shape(const json& j) {
  const auto dims = int_list(field(j, "", "dims"), "dims");
  try {
    return SystemShape(dims);
  } catch (const InvalidArgument& e) {
    fail("dims", e.what());
  }
}

int parse_k(const json& j, const SystemShape& shape) {
  const int k = as_int(field(j, "", "k"), "k");
  if (k < 1 || k > shape.num_particles()) fail("k", "locality must satisfy 1 <= k <= n");
  return k;
}

std::vector<int> parse_subset(const json& j, const SystemShape& shape, const std::string& path) {
  auto s = int_list(j, path);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= shape.num_particles()) fail(path, "particle index out of range");
    if (i > 0 && s[i] <= s[i - 1]) fail(path, "subset must be strictly increasing");
  }
  if (s.empty()) fail(path, "subset must be nonempty");
  return s;
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json span_to_json(const Subspace& s) {
  json out = json::array();
  for (int c = 0; c < s.rank(); ++c) out.push_back(vector_to_json(s.basis().col(c)));
  return out;
}

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(e.byte > 0 ? e.byte - 1 : 0, text.size()); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                     e.what() + ")");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

ShapedSubspace subspace_from_json(const json& j, double tol) {
  SystemShape shape = parse_shape(j);
  Subspace s = parse_span(field(j, "", "vectors"), shape.dims(), tol, "vectors");
  return {std::move(shape), std::move(s)};
}

ReducedSpaceVector rsv_from_json(const json& j, double tol) {
  SystemShape shape = parse_shape(j);
  const int k = parse_k(j, shape);
  const json& comps = field(j, "", "components");
  if (!comps.is_array()) fail("components", "expected an array");
  const auto subsets = enumerate_subsets(shape.num_particles(), k);
  if (comps.size() != subsets.size()) {
    fail("components", "expected " + std::to_string(subsets.size()) + " components (one per k-subset), got " +
                           std::to_string(comps.size()));
  }
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    const auto subset = parse_subset(field(comps[i], path, "subset"), shape, path + ".subset");
    if (subset != subsets[i].particles) fail(path + ".subset", "components must list every k-subset in lexicographic order");
    out.push_back(parse_span(field(comps[i], path, "vectors"), shape.subsystem_dims(subset), tol, path + ".vectors"));
  }
  return ReducedSpaceVector(std::move(shape), k, std::move(out));
}

HamiltonianSpec hamiltonian_from_json(const json& j, double tol) {
  SystemShape shape = parse_shape(j);
  const int k = parse_k(j, shape);
  const json& terms = field(j, "", "terms");
  if (!terms.is_array()) fail("terms", "expected an array");
  std::vector<LocalTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    auto subset = parse_subset(field(terms[i], path, "subset"), shape, path + ".subset");
    if (static_cast<int>(subset.size()) > k) fail(path + ".subset", "term acts on more than k particles");
    const auto dims = shape.subsystem_dims(subset);
    const auto d = static_cast<Eigen::Index>(shape.subsystem_dim(subset));
    if (terms[i].contains("kernel_vectors")) {
      const Subspace ker = parse_span(terms[i]["kernel_vectors"], dims, tol, path + ".kernel_vectors");
      if (ker.is_zero()) fail(path + ".kernel_vectors", "kernel must be nonzero");
      out.push_back({std::move(subset), Matrix(Matrix::Identity(d, d) - ker.projector())});
    } else if (terms[i].contains("matrix")) {
      const json& m = terms[i]["matrix"];
      if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != d) fail(path + ".matrix", "expected " + std::to_string(d) + " rows");
      Matrix mat(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        const std::string rp = path + ".matrix[" + std::to_string(r) + "]";
        if (!m[r].is_array() || static_cast<Eigen::Index>(m[r].size()) != d) fail(rp, "expected " + std::to_string(d) + " entries");
        for (Eigen::Index c = 0; c < d; ++c) mat(r, c) = amplitude(m[r][c], rp + "[" + std::to_string(c) + "]");
      }
      out.push_back({std::move(subset), std::move(mat)});
    } else {
      fail(path, "term needs \"kernel_vectors\" or \"matrix\"");
    }
  }
  return {std::move(shape), k, std::move(out)};
}

LocalHamiltonian local_hamiltonian_from_json(const json& j, double tol) {
  const HamiltonianSpec spec = hamiltonian_from_json(j, tol);
  auto ff = is_frustration_free(spec.shape, spec.k, spec.terms);
  if (!ff.hamiltonian) throw InvalidArgument("hamiltonian: some subset's terms share no ground state");
  std::vector<Subspace> kernels;
  for (const auto& ker : ff.hamiltonian->kernels()) kernels.push_back(ker.with_tol(tol));
  return LocalHamiltonian(spec.shape, spec.k, std::move(kernels));
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json subspace_to_json(const SystemShape& shape, const Subspace& s) {
  return json{{"dims", shape.dims()}, {"rank", s.rank()}, {"vectors", span_to_json(s)}};
}

json rsv_to_json(const ReducedSpaceVector& v) {
  json comps = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    comps.push_back(json{{"subset", v.subsets()[i].particles},
                         {"rank", v.component(i).rank()},
                         {"vectors", span_to_json(v.component(i))}});
  }
  return json{{"dims", v.shape().dims()}, {"k", v.k()}, {"components", comps}};
}

json hamiltonian_to_json(const LocalHamiltonian& h) {
  json terms = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& ker = h.kernel(i);
    if (ker.rank() == static_cast<int>(ker.ambient_dim())) continue;  // zero term
    terms.push_back(json{{"subset", h.subsets()[i].particles}, {"kernel_vectors", span_to_json(ker)}});
  }
  return json{{"dims", h.shape().dims()}, {"k", h.k()}, {"terms", terms}};
}

namespace {

template <typename V>
json verdict_header(const V& v, double tol) {
  return json{{"status", to_string(v.status)},
              {"rule", v.rule},
              {"samples_used", v.samples_used},
              {"seed", v.seed},
              {"tol", tol},
              {"witness", nullptr}};
}

}  // namespace

json verdict_to_json(const AtomVerdict& v, double tol) {
  json out = verdict_header(v, tol);
  if (v.witness) out["witness"] = rsv_to_json(*v.witness);
  return out;
}

json verdict_to_json(const IrreducibleVerdict& v, double tol) {
  json out = verdict_header(v, tol);
  if (v.witness) out["witness"] = json::array({rsv_to_json(v.witness->first), rsv_to_json(v.witness->second)});
  return out;
}

json verdict_to_json(const Verdict<Subspace>& v, const SystemShape& shape, double tol) {
  json out = verdict_header(v, tol);
  if (v.witness) out["witness"] = subspace_to_json(shape, *v.witness);
  return out;
}

json verdict_to_json(const Verdict<SubspacePair>& v, const SystemShape& shape, double tol) {
  json out = verdict_header(v, tol);
  if (v.witness) {
    out["witness"] = json::array({subspace_to_json(shape, v.witness->first), subspace_to_json(shape, v.witness->second)});
  }
  return out;
}

}  // namespace rspace::io
