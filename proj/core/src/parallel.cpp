#include "curvelattice/parallel.hpp"

#include <cstdlib>
#include <string>

namespace curvelattice {

int thread_budget() {
  const char* env = std::getenv("CURVELATTICE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  int requested = 1;
  try {
    requested = std::stoi(env);
  } catch (...) {
    return 1;
  }
  if (requested < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return requested > static_cast<int>(hw) ? static_cast<int>(hw) : requested;
}

}  // namespace curvelattice
