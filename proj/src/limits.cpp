#include "factorlab/limits.hpp"

#include <cstdlib>
#include <string>

#include "factorlab/errors.hpp"

namespace factorlab {

int exhaustive_size_cap() {
    if (const char* env = std::getenv("FACTORLAB_SIZE_CAP")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end && *end == '\0' && value >= 1 && value <= 64) return static_cast<int>(value);
    }
    return kDefaultSizeCap;
}

void require_within_cap(int order, const char* what) {
    int cap = exhaustive_size_cap();
    if (order > cap)
        throw SizeLimitError(std::string(what) + ": graph order " + std::to_string(order) +
                             " exceeds the exhaustive size cap " + std::to_string(cap) +
                             " (set FACTORLAB_SIZE_CAP to raise it)");
}

} // namespace factorlab
