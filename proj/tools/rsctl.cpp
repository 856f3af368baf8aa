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

// rsctl: command-line front end for reduced-space calculations.
//
// Exit codes: 0 success / true, 1 false / negative verdict,
// 2 usage or parse error, 3 numerical degeneracy (undefined meet,
// exhausted witness search).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rspace/errors.hpp"
#include "rspace/ffham.hpp"
#include "rspace/fixtures.hpp"
#include "rspace/json_io.hpp"
#include "rspace/oracle.hpp"
#include "rspace/semilattice.hpp"

namespace {

using nlohmann::json;
using namespace rspace;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Globals {
  double tol = kDefaultRankTol;
  std::uint64_t seed = 0;
  bool json_out = false;
};

// Every JSON report carries the tolerance and seed it was produced with.
void emit(json j, const Globals& g) {
  if (j.is_object()) {
    j["tol"] = g.tol;
    j["seed"] = g.seed;
  }
  std::cout << j.dump(2) << "\n";
}

SearchBudget budget_from(const Globals& g, std::size_t samples) {
  SearchBudget b;
  b.seed = g.seed;
  b.random_samples = samples;
  return b;
}

int verdict_exit(VerdictStatus s) { return s == VerdictStatus::kNo ? kExitFalse : kExitTrue; }

int run_examples(const std::string& suite, const Globals& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = fixtures::run_suite(suite, g.seed);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.passed ? 1 : 0;
  if (g.json_out) {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"name", r.name},
                     {"provenance", r.provenance},
                     {"tolerance", r.tolerance},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    }
    emit({{"suite", suite}, {"seed", g.seed}, {"tol", g.tol}, {"passed", passed}, {"total", reports.size()},
          {"seconds", total}, {"fixtures", arr}}, g);
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << r.provenance << ", tol " << r.tolerance
                << ")  " << r.detail << " [" << r.seconds << " s]\n";
    }
    std::cout << passed << "/" << reports.size() << " PASS  seed=" << g.seed << "  tol=" << g.tol << "  [" << total
              << " s]\n";
  }
  return passed == reports.size() ? kExitTrue : kExitFalse;
}

struct Property {
  const char* name;
  std::function<bool(Rng&, int)> holds;
};

// Randomized property suite: each property runs `trials` times on fresh
// random inputs; the longer versions live in the acceptance suite.
int run_properties(const Globals& g, int trials) {
  const SystemShape shape({2, 3, 2});
  const std::size_t d = shape.total_dim();
  auto random_space = [&](Rng& rng, int lo, int hi) { return rng.random_subspace(d, rng.uniform_int(lo, hi), g.tol); };
  const std::vector<Property> props{
      {"reduce-vs-sampling",
       [&](Rng& rng, int t) {
         const Subspace s = random_space(rng, 1, 3);
         return eq(oracle::sample_rs(s, shape, 2, 50, Rng::derive_seed(g.seed, t)), reduce(s, shape, 2));
       }},
      {"intersect-vs-naive",
       [&](Rng& rng, int) {
         const Subspace a = rng.random_subspace(9, rng.uniform_int(1, 8), g.tol);
         const Subspace b = rng.random_subspace(9, rng.uniform_int(1, 8), g.tol);
         return equals(oracle::naive_intersect(a, b), intersect(a, b));
       }},
      {"reduce-monotone",
       [&](Rng& rng, int) {
         const Subspace s = random_space(rng, 1, 2);
         return leq(reduce(s, shape, 2), reduce(sum(s, random_space(rng, 1, 2)), shape, 2));
       }},
      {"reduce-of-sum-is-join",
       [&](Rng& rng, int) {
         const Subspace s = random_space(rng, 1, 2);
         const Subspace t = random_space(rng, 1, 2);
         return eq(reduce(sum(s, t), shape, 2), join(reduce(s, shape, 2), reduce(t, shape, 2)));
       }},
      {"mpi-closure",
       [&](Rng& rng, int) {
         const Subspace s = random_space(rng, 1, 3);
         const auto x = reduce(s, shape, 2);
         const Subspace m = mpi(x);
         return contains(m, s) && eq(reduce(m, shape, 2), x);
       }},
      {"join-laws",
       [&](Rng& rng, int) {
         const auto a = reduce(random_space(rng, 1, 2), shape, 2);
         const auto b = reduce(random_space(rng, 1, 2), shape, 2);
         const auto c = reduce(random_space(rng, 1, 2), shape, 2);
         return eq(join(a, b), join(b, a)) && eq(join(a, a), a) && eq(join(join(a, b), c), join(a, join(b, c))) &&
                leq(a, join(a, b));
       }},
      {"ground-vs-brute-force",
       [&](Rng& rng, int) {
         const Subspace s = random_space(rng, 1, 2);
         const auto h = from_rsv(reduce(s, shape, 2));
         std::vector<LocalTerm> terms;
         for (std::size_t j = 0; j < h.size(); ++j) terms.push_back({h.subsets()[j].particles, h.term_projector(j)});
         const auto brute = oracle::brute_ground(shape, terms);
         return std::abs(brute.energy) < 1e-9 && equals(brute.space, mpi(reduce(s, shape, 2)));
       }},
  };

  int failures = 0;
  json arr = json::array();
  for (std::size_t p = 0; p < props.size(); ++p) {
    Rng rng(Rng::derive_seed(g.seed, 7919 + p));
    int passed = 0;
    for (int t = 0; t < trials; ++t) passed += props[p].holds(rng, t) ? 1 : 0;
    failures += trials - passed;
    if (g.json_out) {
      arr.push_back({{"property", props[p].name}, {"passed", passed}, {"trials", trials}});
    } else {
      std::cout << (passed == trials ? "PASS " : "FAIL ") << props[p].name << "  " << passed << "/" << trials << "\n";
    }
  }
  if (g.json_out) {
    emit({{"properties", arr}, {"failures", failures}}, g);
  } else {
    std::cout << (failures == 0 ? "properties PASS" : "properties FAIL") << "  failures=" << failures
              << "  seed=" << g.seed << "  tol=" << g.tol << "\n";
  }
  return failures == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rsctl: reduced spaces, their join-semilattice, and frustration-free ground spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("RS_TOL")) g.tol = std::strtod(env, nullptr);
  if (const char* env = std::getenv("RS_SEED")) g.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--tol", g.tol, "relative rank tolerance (env RS_TOL)")->capture_default_str();
  app.add_option("--seed", g.seed, "search seed (env RS_SEED)")->capture_default_str();
  app.add_flag("--json", g.json_out, "JSON report output where a text form exists");

  std::string file_a, file_b, suite = "all";
  int k = 2;
  std::size_t samples = 1000;
  bool strict = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "k-particle reduced spaces of a subspace");
  reduce_cmd->add_option("file", file_a, "subspace JSON")->required();
  reduce_cmd->add_option("-k,--k", k, "locality")->required();

  auto* mpi_cmd = app.add_subcommand("mpi", "maximal pre-image of a reduced-space vector");
  mpi_cmd->add_option("file", file_a, "reduced-space-vector JSON")->required();

  auto* join_cmd = app.add_subcommand("join", "componentwise sum of two reduced-space vectors");
  join_cmd->add_option("a", file_a)->required();
  join_cmd->add_option("b", file_b)->required();

  auto* member_cmd = app.add_subcommand("member", "is the vector in Theta_k (exit 0) or not (exit 1)");
  member_cmd->add_option("file", file_a)->required();

  auto* leq_cmd = app.add_subcommand("leq", "a <= b componentwise (exit 0) or not (exit 1)");
  leq_cmd->add_option("a", file_a)->required();
  leq_cmd->add_option("b", file_b)->required();
  leq_cmd->add_flag("--strict", strict, "test a < b instead");

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--samples", samples, "random candidate budget")->capture_default_str();
  };
  auto* atom_cmd = app.add_subcommand("atom", "atom check with witness search");
  atom_cmd->add_option("file", file_a)->required();
  add_search(atom_cmd);
  auto* irr_cmd = app.add_subcommand("irreducible", "join-irreducibility check with witness search");
  irr_cmd->add_option("file", file_a)->required();
  add_search(irr_cmd);
  auto* jp_cmd = app.add_subcommand("jpwitness", "witness pair showing a pure state's image is not join prime");
  jp_cmd->add_option("file", file_a, "subspace JSON spanned by one state")->required();
  jp_cmd->add_option("-k,--k", k, "locality")->required();
  auto* dec_cmd = app.add_subcommand("decompose", "split into join-irreducible parts");
  dec_cmd->add_option("file", file_a)->required();
  add_search(dec_cmd);

  auto* ground_cmd = app.add_subcommand("ground", "ground space of a Hamiltonian");
  ground_cmd->add_option("file", file_a, "Hamiltonian JSON")->required();
  auto* ff_cmd = app.add_subcommand("ff", "frustration-freeness (exit 0 yes, 1 no)");
  ff_cmd->add_option("file", file_a, "Hamiltonian JSON")->required();
  auto* meet_cmd = app.add_subcommand("meet", "meet of two projector Hamiltonians");
  meet_cmd->add_option("a", file_a)->required();
  meet_cmd->add_option("b", file_b)->required();
  auto* min_cmd = app.add_subcommand("minimal", "minimal ground-space check");
  min_cmd->add_option("file", file_a, "subspace JSON")->required();
  min_cmd->add_option("-k,--k", k, "locality")->required();
  add_search(min_cmd);
  auto* irrgs_cmd = app.add_subcommand("irrgs", "irreducible ground-space check");
  irrgs_cmd->add_option("file", file_a, "subspace JSON")->required();
  irrgs_cmd->add_option("-k,--k", k, "locality")->required();
  add_search(irrgs_cmd);

  auto* ex_cmd = app.add_subcommand("examples", "run the built-in worked-example fixtures");
  ex_cmd->add_option("--suite", suite, "paper | toric | all")->check(CLI::IsMember({"paper", "toric", "all"}));
  int trials = 10;
  auto* self_cmd = app.add_subcommand("selfcheck", "randomized property suite, cross-checked against brute-force oracles");
  self_cmd->alias("properties");
  self_cmd->add_option("--trials", trials, "trials per property")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*reduce_cmd) {
      const auto s = io::subspace_from_json(io::read_file(file_a), g.tol);
      emit(io::rsv_to_json(reduce(s.space, s.shape, k)), g);
    } else if (*mpi_cmd) {
      const auto v = io::rsv_from_json(io::read_file(file_a), g.tol);
      emit(io::subspace_to_json(v.shape(), mpi(v)), g);
    } else if (*join_cmd) {
      const auto a = io::rsv_from_json(io::read_file(file_a), g.tol);
      const auto b = io::rsv_from_json(io::read_file(file_b), g.tol);
      emit(io::rsv_to_json(join(a, b)), g);
    } else if (*member_cmd) {
      const bool in = member_theta(io::rsv_from_json(io::read_file(file_a), g.tol));
      emit({{"member", in}}, g);
      return in ? kExitTrue : kExitFalse;
    } else if (*leq_cmd) {
      const auto a = io::rsv_from_json(io::read_file(file_a), g.tol);
      const auto b = io::rsv_from_json(io::read_file(file_b), g.tol);
      const bool r = strict ? lt(a, b) : leq(a, b);
      emit({{strict ? "lt" : "leq", r}}, g);
      return r ? kExitTrue : kExitFalse;
    } else if (*atom_cmd) {
      const auto v = is_atom(io::rsv_from_json(io::read_file(file_a), g.tol), budget_from(g, samples));
      emit(io::verdict_to_json(v, g.tol), g);
      return verdict_exit(v.status);
    } else if (*irr_cmd) {
      const auto v = is_join_irreducible(io::rsv_from_json(io::read_file(file_a), g.tol), budget_from(g, samples));
      emit(io::verdict_to_json(v, g.tol), g);
      return verdict_exit(v.status);
    } else if (*jp_cmd) {
      const auto s = io::subspace_from_json(io::read_file(file_a), g.tol);
      const auto w = join_prime_witness(s.space, s.shape, k);
      const auto x = reduce(s.space, s.shape, k);
      emit({{"construction", w.construction},
            {"particle", w.particle},
            {"split", w.split},
            {"validated", validates_join_prime_witness(x, w)},
            {"first", io::rsv_to_json(w.first)},
            {"second", io::rsv_to_json(w.second)}},
           g);
    } else if (*dec_cmd) {
      const auto parts = decompose_irreducibles(io::rsv_from_json(io::read_file(file_a), g.tol), budget_from(g, samples));
      json arr = json::array();
      for (const auto& p : parts) {
        arr.push_back({{"status", to_string(p.status)}, {"rule", p.rule}, {"element", io::rsv_to_json(p.element)}});
      }
      emit({{"parts", arr}}, g);
    } else if (*ground_cmd) {
      const auto spec = io::hamiltonian_from_json(io::read_file(file_a), g.tol);
      const auto ff = is_frustration_free(spec.shape, spec.k, spec.terms);
      emit(io::subspace_to_json(spec.shape, ff.ground), g);
    } else if (*ff_cmd) {
      const auto spec = io::hamiltonian_from_json(io::read_file(file_a), g.tol);
      const auto ff = is_frustration_free(spec.shape, spec.k, spec.terms);
      json out{{"frustration_free", ff.frustration_free}, {"ground", io::subspace_to_json(spec.shape, ff.ground)}};
      if (ff.hamiltonian) out["hamiltonian"] = io::hamiltonian_to_json(*ff.hamiltonian);
      emit(out, g);
      return ff.frustration_free ? kExitTrue : kExitFalse;
    } else if (*meet_cmd) {
      const auto a = io::local_hamiltonian_from_json(io::read_file(file_a), g.tol);
      const auto b = io::local_hamiltonian_from_json(io::read_file(file_b), g.tol);
      emit(io::hamiltonian_to_json(meet(a, b)), g);
    } else if (*min_cmd) {
      const auto s = io::subspace_from_json(io::read_file(file_a), g.tol);
      const auto v = is_minimal_ground_space(s.space, s.shape, k, budget_from(g, samples));
      emit(io::verdict_to_json(v, s.shape, g.tol), g);
      return verdict_exit(v.status);
    } else if (*irrgs_cmd) {
      const auto s = io::subspace_from_json(io::read_file(file_a), g.tol);
      const auto v = is_irreducible_ground_space(s.space, s.shape, k, budget_from(g, samples));
      emit(io::verdict_to_json(v, s.shape, g.tol), g);
      return verdict_exit(v.status);
    } else if (*ex_cmd) {
      return run_examples(suite, g);
    } else if (*self_cmd) {
      return run_properties(g, trials);
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalDegeneracy& e) {
    std::cerr << "numerical degeneracy: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitTrue;
}
