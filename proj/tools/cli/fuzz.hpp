#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace newton_mv::cli {

enum class FuzzProperty { af, bm, multilinearity, cancellation, rational_bk };

std::string property_name(FuzzProperty p);
/// Throws InvalidArgument on an unknown name.
FuzzProperty parse_fuzz_property(std::string_view name);

struct FuzzOptions {
    FuzzProperty property = FuzzProperty::af;
    std::size_t dim = 2;
    int count = 100;
    long max_coord = 3;
    std::size_t max_points = 6;
    std::uint64_t seed = 0x5eed5eedULL;
};

struct FuzzOutcome {
    int instances = 0;
    int violations = 0;
    int near_ties = 0;                 // bm only: decided within floating tolerance
    std::vector<std::string> failures; // descriptions of the first few violations
};

/// Throws InvalidArgument when the property needs a larger dimension or the
/// options are out of range.
FuzzOutcome run_fuzz(const FuzzOptions& options);

} // namespace newton_mv::cli
