#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace etacalc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure diagnostic; empty when passing
};

// Runs the full invariant sweep across every module: algebra axioms,
// series structure, signature stability, eta/xi pipeline identities,
// resonance pairing and signatures, dimension and tunneling assemblies,
// and report serialization.  Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace etacalc
