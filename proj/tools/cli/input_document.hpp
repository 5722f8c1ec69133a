#pragma once

#include <newton_mv/sparse_solver.hpp>
#include <newton_mv/support_semigroup.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newton_mv::cli {

/// Malformed input or an unresolved name; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VirtualPairRef {
    std::string numer;
    std::string denom;
};

/// One scenario file:
///   {"dim": n,
///    "supports": {"name": [[int, ...], ...], ...},
///    "virtual": {"name": {"numer": "a", "denom": "b"}, ...},
///    "config": {"seed": s, "trials": t, "coeff_range": r, "torus_eps": e,
///               "residual_tol": e, "cluster_radius": e, "max_resamples": k,
///               "pass_fraction": f}}
struct InputDocument {
    std::size_t dim = 0;
    std::vector<std::pair<std::string, SupportSet>> supports; // file order
    std::vector<std::pair<std::string, VirtualPairRef>> virtual_pairs;
    OracleConfig config;
    int trials = 20;

    bool has_support(std::string_view name) const;
    bool has_virtual(std::string_view name) const;
    const SupportSet& support(std::string_view name) const;
    VirtualSupport virtual_support(std::string_view name) const;
};

/// `source` names the document in diagnostics.
InputDocument parse_input(std::string_view text, std::string_view source = "<input>");
InputDocument load_input(const std::filesystem::path& path);

/// Applies NEWTON_MV_SEED from the environment, if set.
void apply_environment(InputDocument& doc);

} // namespace newton_mv::cli
