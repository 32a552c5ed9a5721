#ifndef PHX_BATCH_HPP
#define PHX_BATCH_HPP

#include "phx/algebra.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace phx {

/// results[k] = includes(outers[k], inners[k]). Both spans must have equal
/// length. An error raised by any pair is rethrown after the batch.
std::vector<std::uint8_t> includes_batch_serial(std::span<const Expression> outers,
                                                std::span<const Expression> inners,
                                                const GeneratingPolyhierarchy& gp, World world = World::Open);

/// OpenMP version of includes_batch_serial; identical results.
std::vector<std::uint8_t> includes_batch(std::span<const Expression> outers, std::span<const Expression> inners,
                                         const GeneratingPolyhierarchy& gp, World world = World::Open);

} // namespace phx

#endif
