#include "topedge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace topedge {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TOPEDGE_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace topedge
