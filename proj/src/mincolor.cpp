#include "mincolor.hpp"

#include <set>

#include "enumerate.hpp"
#include "error.hpp"

namespace reusesp {

Instance reduce_mincolor(const Instance& colored) {
    ValidationReport report = validate_structure(colored);
    if (!report.ok())
        throw Error(ErrorCode::Validation, report.to_string());
    Instance g = colored;
    for (Edge& e : g.edges) e.weight = 1;
    return g;
}

std::optional<std::uint64_t> min_color_count_bruteforce(const Instance& colored,
                                                        std::uint64_t max_paths) {
    ValidationReport report = validate_structure(colored);
    if (!report.ok())
        throw Error(ErrorCode::Validation, report.to_string());
    bool saturated = false;
    std::uint64_t n = count_paths(colored, &saturated);
    if (saturated || n > max_paths)
        throw Error(ErrorCode::TooLarge,
                    "instance has " + (saturated ? std::string("more than 2^64")
                                                 : std::to_string(n)) +
                        " paths, limit is " + std::to_string(max_paths));
    std::optional<std::uint64_t> best;
    for_each_path(colored, [&](const std::vector<EdgeId>& edge_ids, Weight) {
        std::set<Label> colors;
        for (EdgeId id : edge_ids) colors.insert(colored.edges[id].label);
        if (!best || colors.size() < *best) best = colors.size();
    });
    return best;
}

} // namespace reusesp
