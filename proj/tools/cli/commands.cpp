#include "commands.hpp"

#include "fuzz.hpp"
#include "input_document.hpp"
#include "report_json.hpp"

#include <newton_mv/newton_mv.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <ostream>

namespace newton_mv::cli {

namespace {

using nlohmann::json;

struct Options {
    bool json_output = false;
    std::string file;
    std::vector<std::string> names;
    int trials = 0; // 0: take it from the input document
    std::string property = "af";
    std::size_t dim = 2;
    int count = 100;
    long max_coord = 3;
    std::size_t max_points = 6;
    std::optional<std::uint64_t> seed;
};

class Command {
public:
    Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    int hull();
    int complete();
    int mv();
    int bk();
    int virtual_mv();
    int verify();
    int fuzz();

private:
    InputDocument load() const
    {
        InputDocument doc = load_input(opt_.file);
        apply_environment(doc);
        return doc;
    }

    std::vector<SupportSet> resolve_supports(const InputDocument& doc, std::string_view command) const
    {
        if (opt_.names.size() != doc.dim)
            throw InputError(std::string(command) + ": expected " + std::to_string(doc.dim)
                             + " support names for dim " + std::to_string(doc.dim) + ", got "
                             + std::to_string(opt_.names.size()));
        std::vector<SupportSet> out;
        for (const auto& name : opt_.names)
            out.push_back(doc.support(name));
        return out;
    }

    std::vector<VirtualSupport> resolve_virtual(const InputDocument& doc, std::string_view command) const
    {
        if (opt_.names.size() != doc.dim)
            throw InputError(std::string(command) + ": expected " + std::to_string(doc.dim)
                             + " virtual pair names for dim " + std::to_string(doc.dim) + ", got "
                             + std::to_string(opt_.names.size()));
        std::vector<VirtualSupport> out;
        for (const auto& name : opt_.names)
            out.push_back(doc.virtual_support(name));
        return out;
    }

    void emit(json j) const { out_ << j.dump(2) << '\n'; }

    const Options& opt_;
    std::ostream& out_;
};

std::string mask_label(unsigned mask, std::size_t n)
{
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

int Command::hull()
{
    const InputDocument doc = load();
    std::vector<std::pair<std::string, SupportSet>> selected;
    if (opt_.names.empty()) {
        selected = doc.supports;
    } else {
        for (const auto& name : opt_.names)
            selected.emplace_back(name, doc.support(name));
    }

    json polytopes = json::array();
    for (const auto& [name, support] : selected) {
        const Polytope p = convex_hull(support);
        const Rational vol = volume(p);
        const Rational normalized = vol * Rational(factorial(static_cast<unsigned>(doc.dim)));
        if (opt_.json_output) {
            polytopes.push_back({{"name", name},
                                 {"vertices", vertices_json(p)},
                                 {"affine_dim", affine_dim(p)},
                                 {"volume", rational_json(vol)},
                                 {"normalized_volume", rational_json(normalized)}});
        } else {
            out_ << name << ": " << p.vertices().size() << " vertices, affine dim " << affine_dim(p) << ", volume "
                 << to_string(vol) << ", n!vol " << to_string(normalized) << '\n';
            for (const auto& v : p.vertices())
                out_ << "  " << v.str() << '\n';
        }
    }
    if (opt_.json_output)
        emit({{"command", "hull"}, {"dim", doc.dim}, {"polytopes", std::move(polytopes)}});
    return kExitOk;
}

int Command::complete()
{
    const InputDocument doc = load();
    if (opt_.names.size() != 1)
        throw InputError("complete: expected exactly one support name, got " + std::to_string(opt_.names.size()));
    const SupportSet& a = doc.support(opt_.names.front());
    const SupportSet full = completion(a);
    if (opt_.json_output) {
        emit({{"command", "complete"},
              {"name", opt_.names.front()},
              {"size", full.size()},
              {"added", full.size() - a.size()},
              {"points", points_json(full)}});
        return kExitOk;
    }
    out_ << "completion of " << opt_.names.front() << ": " << full.size() << " points (" << full.size() - a.size()
         << " added)\n";
    for (const auto& p : full.points())
        out_ << "  " << p.str() << (a.contains(p) ? "" : "  +") << '\n';
    return kExitOk;
}

int Command::mv()
{
    const InputDocument doc = load();
    std::vector<Polytope> bodies;
    for (const auto& s : resolve_supports(doc, "mv"))
        bodies.push_back(convex_hull(s));
    const MixedVolumeResult r = mixed_volume(bodies);
    if (opt_.json_output) {
        json j = r;
        j["command"] = "mv";
        j["names"] = opt_.names;
        emit(std::move(j));
    } else {
        out_ << "V = " << to_string(r.value) << ", n!V = " << to_string(*r.normalized) << '\n';
    }
    return kExitOk;
}

int Command::bk()
{
    const InputDocument doc = load();
    const Integer predicted = bk_count(resolve_supports(doc, "bk"));
    if (opt_.json_output)
        emit({{"command", "bk"}, {"names", opt_.names}, {"predicted", integer_json(predicted)}});
    else
        out_ << "predicted = " << predicted.get_str() << '\n';
    return kExitOk;
}

int Command::virtual_mv()
{
    const InputDocument doc = load();
    const auto vs = resolve_virtual(doc, "virtual-mv");
    std::vector<VirtualPolytope> bodies;
    for (const auto& v : vs)
        bodies.push_back(virtual_newton_polytope(v.numer, v.denom));
    const Rational value = mixed_volume_virtual(bodies);
    const Rational normalized = value * Rational(factorial(static_cast<unsigned>(doc.dim)));
    const IndexReport index = virtual_index(vs);
    const bool consistent = Rational(index.predicted) == normalized;

    if (opt_.json_output) {
        emit({{"command", "virtual-mv"},
              {"names", opt_.names},
              {"value", rational_json(value)},
              {"normalized", rational_json(normalized)},
              {"index", index},
              {"consistent", consistent}});
    } else {
        out_ << "V = " << to_string(value) << ", n!V = " << to_string(normalized) << '\n';
        out_ << "index = " << index.predicted.get_str() << '\n';
        for (const auto& [mask, term] : index.terms)
            out_ << "  I = " << mask_label(mask, doc.dim) << "  " << (term.sign > 0 ? '+' : '-')
                 << "  N = " << term.count.get_str() << '\n';
        if (!consistent)
            out_ << "MISMATCH: index differs from n!V\n";
    }
    return consistent ? kExitOk : kExitViolation;
}

int Command::verify()
{
    const InputDocument doc = load();
    const int trials = opt_.trials > 0 ? opt_.trials : doc.trials;
    if (opt_.names.empty())
        throw InputError("verify: expected " + std::to_string(doc.dim) + " names");
    const bool all_virtual = std::all_of(opt_.names.begin(), opt_.names.end(),
                                         [&](const auto& n) { return doc.has_virtual(n) && !doc.has_support(n); });

    Verdict verdict;
    if (all_virtual) {
        const auto report = verify_virtual_index(resolve_virtual(doc, "verify"), trials, doc.config);
        verdict = report.verdict;
        if (opt_.json_output) {
            json j = report;
            j["command"] = "verify";
            j["kind"] = "virtual";
            emit(std::move(j));
        } else {
            out_ << "predicted = " << report.predicted.get_str() << ", empirical = " << report.empirical.get_str()
                 << ", verdict " << to_string(report.verdict) << '\n';
            for (const auto& [mask, term] : report.terms)
                out_ << "  I = " << mask_label(mask, doc.dim) << "  " << (term.sign > 0 ? '+' : '-')
                     << "  N = " << term.report.predicted.get_str() << ", observed " << term.empirical.get_str()
                     << " (" << term.report.matches << "/" << term.report.trials.size() << ")\n";
        }
    } else {
        const auto report = verify_bk(resolve_supports(doc, "verify"), trials, doc.config);
        verdict = report.verdict;
        if (opt_.json_output) {
            json j = report;
            j["command"] = "verify";
            j["kind"] = "bk";
            emit(std::move(j));
        } else {
            out_ << "predicted = " << report.predicted.get_str() << ", matched " << report.matches << "/"
                 << report.trials.size() << " trials, verdict " << to_string(report.verdict) << '\n';
            for (std::size_t i = 0; i < report.trials.size(); ++i) {
                const auto& t = report.trials[i];
                if (Integer(t.observed) == report.predicted && !t.inconclusive)
                    continue;
                out_ << "  trial " << i << ": observed " << t.observed << (t.inconclusive ? " (inconclusive)" : "")
                     << ", seed " << t.seed << (t.diagnostic.empty() ? "" : ", " + t.diagnostic) << '\n';
            }
        }
    }
    return verdict == Verdict::pass ? kExitOk : kExitViolation;
}

int Command::fuzz()
{
    FuzzOptions f;
    f.property = parse_fuzz_property(opt_.property);
    f.dim = opt_.dim;
    f.count = opt_.count;
    f.max_coord = opt_.max_coord;
    f.max_points = opt_.max_points;
    if (opt_.seed) {
        f.seed = *opt_.seed;
    } else {
        InputDocument defaults;
        apply_environment(defaults);
        f.seed = defaults.config.seed;
    }
    const FuzzOutcome outcome = run_fuzz(f);
    if (opt_.json_output) {
        emit({{"command", "fuzz"},
              {"property", property_name(f.property)},
              {"dim", f.dim},
              {"seed", f.seed},
              {"instances", outcome.instances},
              {"violations", outcome.violations},
              {"near_ties", outcome.near_ties},
              {"failures", outcome.failures}});
    } else {
        out_ << property_name(f.property) << ": " << outcome.instances << " instances in dim " << f.dim << ", "
             << outcome.violations << " violations";
        if (f.property == FuzzProperty::bm)
            out_ << ", " << outcome.near_ties << " near ties";
        out_ << '\n';
        for (const auto& failure : outcome.failures)
            out_ << "  " << failure << '\n';
    }
    return outcome.violations == 0 ? kExitOk : kExitViolation;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Newton polytopes, mixed volumes and root-count predictions for sparse systems", "newton-mv"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json_output, "Emit a JSON report");

    auto file_command = [&](const char* name, const char* help, const char* names_help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("file", opt.file, "Input document")->required();
        sub->add_option("names", opt.names, names_help);
        return sub;
    };
    CLI::App* hull = file_command("hull", "Convex hulls, vertices and volumes", "Supports to show (default: all)");
    CLI::App* complete = file_command("complete", "All lattice points of conv(A)", "One support name");
    CLI::App* mv = file_command("mv", "Mixed volume of the Newton polytopes", "n support names");
    CLI::App* bk = file_command("bk", "Predicted number of torus solutions", "n support names");
    CLI::App* vmv = file_command("virtual-mv", "Mixed volume and index of virtual pairs", "n virtual pair names");
    CLI::App* verify = file_command("verify", "Check the prediction against the root-counting oracle",
                                    "n support names or n virtual pair names");
    verify->add_option("--trials", opt.trials, "Random systems per check (default: config.trials)")
        ->check(CLI::PositiveNumber);

    CLI::App* fuzz = app.add_subcommand("fuzz", "Check an invariant on random instances");
    fuzz->fallthrough();
    fuzz->add_option("--property", opt.property, "Property to check")
        ->check(CLI::IsMember({"af", "bm", "multilinearity", "cancellation", "rational-bk"}))
        ->required();
    fuzz->add_option("--dim", opt.dim, "Ambient dimension")->check(CLI::Range(1, 6));
    fuzz->add_option("--count", opt.count, "Number of instances")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--max-coord", opt.max_coord, "Coordinates drawn from [-c, c]")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--max-points", opt.max_points, "Points per random support")->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", opt.seed, "Random seed (default: NEWTON_MV_SEED or built-in)");

    std::vector<std::string> argv_storage{"newton-mv"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    Command cmd(opt, out);
    try {
        if (hull->parsed())
            return cmd.hull();
        if (complete->parsed())
            return cmd.complete();
        if (mv->parsed())
            return cmd.mv();
        if (bk->parsed())
            return cmd.bk();
        if (vmv->parsed())
            return cmd.virtual_mv();
        if (verify->parsed())
            return cmd.verify();
        if (fuzz->parsed())
            return cmd.fuzz();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::logic_error& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kExitViolation;
    }
    return kExitInputError;
}

} // namespace newton_mv::cli
