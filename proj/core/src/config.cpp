#include "kron/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace kron {
namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

std::atomic<int>& cap_slot() {
  static std::atomic<int> cap{env_int("KRONFAM_ORACLE_CAP", 25)};
  return cap;
}

std::atomic<int>& threads_slot() {
  static std::atomic<int> threads{std::max(1, env_int("KRONFAM_THREADS", 1))};
  return threads;
}

}  // namespace

int oracle_cap() { return cap_slot().load(); }
bool oracle_allows(int n) {
  const int cap = oracle_cap();
  return cap > 0 && n <= cap;
}
void set_oracle_cap(int cap) { cap_slot().store(cap); }

int thread_count() { return threads_slot().load(); }
void set_thread_count(int threads) { threads_slot().store(std::max(1, threads)); }

}  // namespace kron
