#include "phx/batch.hpp"

#include "phx/error.hpp"

#include <exception>

namespace phx {

namespace {

void check_sizes(std::span<const Expression> outers, std::span<const Expression> inners) {
    if (outers.size() != inners.size()) {
        throw Error(ErrorCode::ValidationError, "batch spans differ in length");
    }
}

} // namespace

std::vector<std::uint8_t> includes_batch_serial(std::span<const Expression> outers,
                                                std::span<const Expression> inners,
                                                const GeneratingPolyhierarchy& gp, World world) {
    check_sizes(outers, inners);
    std::vector<std::uint8_t> out(outers.size());
    for (std::size_t k = 0; k < outers.size(); ++k) out[k] = includes(outers[k], inners[k], gp, world) ? 1 : 0;
    return out;
}

std::vector<std::uint8_t> includes_batch(std::span<const Expression> outers, std::span<const Expression> inners,
                                         const GeneratingPolyhierarchy& gp, World world) {
    check_sizes(outers, inners);
    const auto n = static_cast<std::ptrdiff_t>(outers.size());
    std::vector<std::uint8_t> out(outers.size());
    std::exception_ptr first;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            out[k] = includes(outers[k], inners[k], gp, world) ? 1 : 0;
        } catch (...) {
#pragma omp critical(phx_batch_error)
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
    return out;
}

} // namespace phx
