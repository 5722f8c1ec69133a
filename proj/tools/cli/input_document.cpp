#include "input_document.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace newton_mv::cli {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(std::string_view source, const std::string& field, const std::string& what)
{
    throw InputError(std::string(source) + ": " + field + ": " + what);
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const char* type_name(const ordered_json& j) { return j.type_name(); }

long long require_integer(std::string_view source, const std::string& field, const ordered_json& j)
{
    if (!j.is_number_integer())
        fail(source, field, std::string("expected an integer, got ") + type_name(j));
    return j.get<long long>();
}

double require_number(std::string_view source, const std::string& field, const ordered_json& j)
{
    if (!j.is_number())
        fail(source, field, std::string("expected a number, got ") + type_name(j));
    return j.get<double>();
}

SupportSet parse_support(std::string_view source, const std::string& field, const ordered_json& j, std::size_t dim)
{
    if (!j.is_array() || j.empty())
        fail(source, field, "expected a nonempty array of points");
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string pf = field + "[" + std::to_string(i) + "]";
        const auto& p = j[i];
        if (!p.is_array())
            fail(source, pf, std::string("expected an array of coordinates, got ") + type_name(p));
        if (p.size() != dim)
            fail(source, pf, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(p.size()));
        std::vector<Integer> coords;
        for (std::size_t c = 0; c < p.size(); ++c)
            coords.emplace_back(static_cast<long>(require_integer(source, pf + "[" + std::to_string(c) + "]", p[c])));
        pts.emplace_back(std::move(coords));
    }
    return SupportSet(dim, std::move(pts));
}

void parse_config(std::string_view source, const ordered_json& j, InputDocument& doc)
{
    if (!j.is_object())
        fail(source, "config", "expected an object");
    for (const auto& [key, value] : j.items()) {
        const std::string field = "config." + key;
        if (key == "seed") {
            if (!value.is_number_unsigned())
                fail(source, field, "expected a nonnegative integer");
            doc.config.seed = value.get<std::uint64_t>();
        } else if (key == "trials") {
            const auto t = require_integer(source, field, value);
            if (t < 1)
                fail(source, field, "must be at least 1");
            doc.trials = static_cast<int>(t);
        } else if (key == "coeff_range") {
            const auto r = require_integer(source, field, value);
            if (r < 1)
                fail(source, field, "must be at least 1");
            doc.config.coeff_range = static_cast<int>(r);
        } else if (key == "max_resamples") {
            const auto r = require_integer(source, field, value);
            if (r < 0)
                fail(source, field, "must be nonnegative");
            doc.config.max_resamples = static_cast<int>(r);
        } else if (key == "torus_eps") {
            doc.config.torus_eps = require_number(source, field, value);
        } else if (key == "residual_tol") {
            doc.config.residual_tol = require_number(source, field, value);
        } else if (key == "cluster_radius") {
            doc.config.cluster_radius = require_number(source, field, value);
        } else if (key == "pass_fraction") {
            const double f = require_number(source, field, value);
            if (f <= 0 || f > 1)
                fail(source, field, "must lie in (0, 1]");
            doc.config.pass_fraction = f;
        } else {
            fail(source, field, "unknown configuration key");
        }
    }
}

} // namespace

bool InputDocument::has_support(std::string_view name) const
{
    return std::any_of(supports.begin(), supports.end(), [&](const auto& s) { return s.first == name; });
}

bool InputDocument::has_virtual(std::string_view name) const
{
    return std::any_of(virtual_pairs.begin(), virtual_pairs.end(), [&](const auto& v) { return v.first == name; });
}

const SupportSet& InputDocument::support(std::string_view name) const
{
    for (const auto& [n, s] : supports)
        if (n == name)
            return s;
    throw InputError("unknown support '" + std::string(name) + "'");
}

VirtualSupport InputDocument::virtual_support(std::string_view name) const
{
    for (const auto& [n, ref] : virtual_pairs)
        if (n == name)
            return VirtualSupport(support(ref.numer), support(ref.denom));
    throw InputError("unknown virtual pair '" + std::string(name) + "'");
}

InputDocument parse_input(std::string_view text, std::string_view source)
{
    ordered_json root;
    try {
        root = ordered_json::parse(text.begin(), text.end());
    } catch (const ordered_json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column)
                         + ": JSON parse error: " + e.what());
    }
    if (!root.is_object())
        fail(source, "<root>", "expected a JSON object");

    InputDocument doc;
    if (!root.contains("dim"))
        fail(source, "dim", "missing");
    const auto dim = require_integer(source, "dim", root["dim"]);
    if (dim < 1 || static_cast<std::size_t>(dim) > max_dimension())
        fail(source, "dim", "must lie in [1, " + std::to_string(max_dimension()) + "]");
    doc.dim = static_cast<std::size_t>(dim);

    if (!root.contains("supports") || !root["supports"].is_object())
        fail(source, "supports", "expected an object mapping names to point lists");
    for (const auto& [name, pts] : root["supports"].items())
        doc.supports.emplace_back(name, parse_support(source, "supports." + name, pts, doc.dim));

    if (root.contains("virtual")) {
        if (!root["virtual"].is_object())
            fail(source, "virtual", "expected an object");
        for (const auto& [name, pair] : root["virtual"].items()) {
            const std::string field = "virtual." + name;
            if (!pair.is_object() || !pair.contains("numer") || !pair.contains("denom") || !pair["numer"].is_string()
                || !pair["denom"].is_string())
                fail(source, field, "expected {\"numer\": name, \"denom\": name}");
            VirtualPairRef ref{pair["numer"].get<std::string>(), pair["denom"].get<std::string>()};
            if (!doc.has_support(ref.numer))
                fail(source, field + ".numer", "unknown support '" + ref.numer + "'");
            if (!doc.has_support(ref.denom))
                fail(source, field + ".denom", "unknown support '" + ref.denom + "'");
            doc.virtual_pairs.emplace_back(name, std::move(ref));
        }
    }
    if (root.contains("config"))
        parse_config(source, root["config"], doc);

    for (const auto& [key, value] : root.items())
        if (key != "dim" && key != "supports" && key != "virtual" && key != "config")
            fail(source, key, "unknown top-level key");
    return doc;
}

InputDocument load_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str(), path.string());
}

void apply_environment(InputDocument& doc)
{
    const char* env = std::getenv("NEWTON_MV_SEED");
    if (env == nullptr || *env == '\0')
        return;
    try {
        std::size_t used = 0;
        const unsigned long long seed = std::stoull(env, &used, 0);
        if (used != std::string_view(env).size())
            throw std::invalid_argument("trailing characters");
        doc.config.seed = seed;
    } catch (const std::exception&) {
        throw InputError(std::string("NEWTON_MV_SEED: not an unsigned integer: '") + env + "'");
    }
}

} // namespace newton_mv::cli
