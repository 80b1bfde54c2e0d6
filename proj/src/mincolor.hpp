#ifndef REUSESP_MINCOLOR_HPP
#define REUSESP_MINCOLOR_HPP

#include <cstdint>
#include <optional>

#include "instance.hpp"

namespace reusesp {

// Embeds the min-color path question: read each label as a color, set every
// weight to 1, and a path's reuse length becomes its number of distinct
// colors. Weights on the input are ignored; its structure must be valid.
Instance reduce_mincolor(const Instance& colored);

// Fewest distinct colors over all s-t paths by exhaustive enumeration, or
// nullopt when the sink is unreachable. Oracle for small instances.
// Throws Error(TooLarge) beyond max_paths paths.
std::optional<std::uint64_t> min_color_count_bruteforce(const Instance& colored,
                                                        std::uint64_t max_paths = 100000);

} // namespace reusesp

#endif
