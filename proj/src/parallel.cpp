#include "nhlc/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace nhlc {

std::size_t thread_count()
{
    if (const char* env = std::getenv("NHLC_THREADS")) {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc() && *end == '\0' && value > 0)
            return value;
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace nhlc
