#pragma once

#include <atomic>

namespace polya {

// Every batch kernel exists twice: a plain serial loop kept as the reference
// implementation, and an OpenMP version that must reproduce its output
// byte for byte. jobs = 0 means the OpenMP default.
enum class Engine { serial, openmp };

struct ExecPolicy {
  Engine engine = Engine::openmp;
  int jobs = 0;
  const std::atomic<bool>* cancel = nullptr;

  int resolved_jobs() const;
};

inline ExecPolicy serial_policy() { return {Engine::serial, 1, nullptr}; }
inline ExecPolicy parallel_policy(int jobs = 0) { return {Engine::openmp, jobs, nullptr}; }

}  // namespace polya
