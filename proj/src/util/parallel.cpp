#include "moduli/util/parallel.hpp"

#include <cstdlib>
#include <string>

namespace moduli::util {

std::size_t thread_count() {
    if (const char* env = std::getenv("MODULI_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace moduli::util
