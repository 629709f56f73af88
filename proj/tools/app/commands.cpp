#include "commands.hpp"

#include "oracles.hpp"

#include <tricoll/control_ops.hpp>
#include <tricoll/errors.hpp>
#include <tricoll/hamiltonian.hpp>
#include <tricoll/io.hpp>
#include <tricoll/propagation.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace tricoll::app {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kReferenceRule =
    "two lowest-index unflagged states above the ground state";

class MissingPrerequisite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json config_json(const RunConfig& c) {
    return json{
        {"mu", c.params.mu},
        {"Z", c.params.Z},
        {"q", c.params.q},
        {"n", c.grid.n},
        {"L", c.grid.L},
        {"count", c.count},
        {"tau", c.tau},
        {"block", c.block},
        {"operator", std::string(to_string(c.control.kind))},
        {"c_rho", c.c_rho},
        {"c_R", c.c_R},
        {"n_max", c.n_max},
        {"dt", c.control.dt},
        {"n_steps", c.control.n_steps},
        {"substeps", c.control.substeps},
        {"alpha", c.control.alpha},
        {"kick_field", c.control.kick_field},
        {"basis_size", c.control.basis_size},
        {"target", c.control.target < 0 ? json("auto") : json(c.control.target)},
    };
}

// Collects the files a command writes so the manifest can list them.
class RunOutput {
public:
    RunOutput(fs::path dir, std::string command) : dir_(std::move(dir)), command_(std::move(command)) {
        fs::create_directories(dir_);
    }

    template <typename Writer>
    void write(const std::string& name, Writer&& writer) {
        std::ostringstream buffer;
        writer(buffer);
        const std::string bytes = buffer.str();
        std::ofstream file(dir_ / name, std::ios::binary | std::ios::trunc);
        file << bytes;
        if (!file) throw std::runtime_error("cannot write " + (dir_ / name).string());
        files_.push_back(json{{"name", name}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}});
    }

    void finish(const RunConfig& config, const std::string& suffix, json metadata) {
        const std::string tag = suffix.empty() ? command_ : command_ + "_" + suffix;
        write("effective_" + tag + ".conf", [&](std::ostream& o) { write_config(o, config); });
        metadata["box_volume"] = 4.0 / 3.0 * std::numbers::pi * std::pow(config.grid.L, 3);
        const json manifest{
            {"tool", "tricoll"},
            {"version", kVersion},
            {"command", command_},
            {"config", config_json(config)},
            {"files", files_},
            {"metadata", std::move(metadata)},
        };
        std::ofstream file(dir_ / ("manifest_" + tag + ".json"), std::ios::trunc);
        file << manifest.dump(2) << '\n';
        if (!file) throw std::runtime_error("cannot write manifest");
    }

private:
    fs::path dir_;
    std::string command_;
    json files_ = json::array();
};

ControlOperator build_operator(const RunConfig& config, const RadialGrid& grid) {
    if (config.control.kind == OperatorKind::diamagnetic)
        return diamagnetic_operator(grid, config.params, config.c_rho, config.c_R);
    return make_operator(config.control.kind, grid, config.params);
}

int resolve_target(const RunConfig& config, const Classification& classification) {
    if (config.control.target >= 0) return config.control.target;
    if (!classification.designated)
        throw MissingPrerequisite("no triple-collision state among the retained states (tau=" +
                                  format_double(classification.tau) + ")");
    return *classification.designated;
}

template <typename Body>
int guarded(Streams io, Body&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        write_error_record(io.err, "config", e.what(), exit_config);
        return exit_config;
    } catch (const InvalidSpec& e) {
        write_error_record(io.err, "config", e.what(), exit_config);
        return exit_config;
    } catch (const SolverError& e) {
        write_error_record(io.err, "solver", e.what(), exit_solver);
        return exit_solver;
    } catch (const MissingPrerequisite& e) {
        write_error_record(io.err, "missing_prerequisite", e.what(), exit_missing);
        return exit_missing;
    } catch (const std::exception& e) {
        write_error_record(io.err, "internal", e.what(), 1);
        return 1;
    }
}

}  // namespace

void write_error_record(std::ostream& err, const std::string& kind, const std::string& message,
                        int code) {
    err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
}

SpectrumRun obtain_spectrum(const RunConfig& config, const Paths& paths, Streams io) {
    config.validate();
    const EigenbasisCache cache(paths.cache);
    auto lookup = cache.load(config.grid, config.params, config.count);
    if (lookup.status == EigenbasisCache::Status::corrupt) {
        io.err << json{{"warning", "cache_corrupt"},
                       {"entry", cache.entry_path(EigenbasisCache::key(config.grid, config.params,
                                                                       config.count))
                                     .string()},
                       {"detail", lookup.detail},
                       {"action", "recompute"}}
                      .dump()
               << '\n';
    }

    if (lookup.status == EigenbasisCache::Status::hit) {
        Classification cls = classify(*lookup.solution, config.tau, config.block);
        return SpectrumRun{std::move(*lookup.solution), std::move(cls), true};
    }

    const HamiltonianMatrix H = assemble_hamiltonian(config.grid, config.params);
    EigenSolution solution = solve_spectrum(H, config.count);
    cache.store(config.grid, config.params, solution);
    Classification cls = classify(solution, config.tau, config.block);
    return SpectrumRun{std::move(solution), std::move(cls), false};
}

int cmd_spectrum(const RunConfig& config, const Paths& paths, Streams io) {
    return guarded(io, [&] {
        const SpectrumRun run = obtain_spectrum(config, paths, io);
        const auto& cls = run.classification;
        const auto refs = reference_states(cls, 2);

        RunOutput out(paths.out, "spectrum");
        out.write("spectrum.csv", [&](std::ostream& o) { write_spectrum_csv(o, cls); });
        out.write("wavefunction_ground.csv", [&](std::ostream& o) {
            write_wavefunction_csv(o, run.solution.grid, run.solution.state(0));
        });
        if (cls.designated)
            out.write("wavefunction_target.csv", [&](std::ostream& o) {
                write_wavefunction_csv(o, run.solution.grid, run.solution.state(*cls.designated));
            });

        const auto flagged = cls.flagged();
        out.finish(config, "",
                   json{{"eigenbasis_key",
                         EigenbasisCache::key(config.grid, config.params, config.count)},
                        {"ground_energy", run.solution.energies[0]},
                        {"designated_target",
                         cls.designated ? json(*cls.designated) : json(nullptr)},
                        {"flagged_count", flagged.size()},
                        {"reference_states", refs},
                        {"reference_rule", kReferenceRule},
                        {"max_residual", run.solution.residuals.maxCoeff()}});

        io.out << "ground_energy=" << format_double(run.solution.energies[0])
               << " count=" << run.solution.count() << " target="
               << (cls.designated ? std::to_string(*cls.designated) : std::string("none found"))
               << " flagged=" << flagged.size() << " cache=" << (run.cache_hit ? "hit" : "miss")
               << '\n';
        return int(exit_ok);
    });
}

int cmd_transitivity(const RunConfig& config, const Paths& paths, Streams io) {
    return guarded(io, [&] {
        const SpectrumRun run = obtain_spectrum(config, paths, io);
        const int target = resolve_target(config, run.classification);
        const auto refs = reference_states(run.classification, 2);

        const ControlOperator op = build_operator(config, run.solution.grid);
        const ProjectedOperator B = project(op, run.solution);
        const auto t_target = transitivity_scan(B, 0, target, config.n_max);
        std::vector<double> t_ref1;
        std::vector<double> t_ref2;
        if (refs.size() > 0) t_ref1 = transitivity_scan(B, 0, refs[0], config.n_max);
        if (refs.size() > 1) t_ref2 = transitivity_scan(B, 0, refs[1], config.n_max);

        const std::string kind(to_string(config.control.kind));
        RunOutput out(paths.out, "transitivity");
        out.write("scan_" + kind + ".csv",
                  [&](std::ostream& o) { write_scan_csv(o, t_target, t_ref1, t_ref2); });

        auto max_of = [](const std::vector<double>& v) {
            return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
        };
        out.finish(config, kind,
                   json{{"operator", kind},
                        {"source", 0},
                        {"target", target},
                        {"reference_states", refs},
                        {"reference_rule", kReferenceRule},
                        {"max_t_target", max_of(t_target)},
                        {"max_t_ref1", max_of(t_ref1)},
                        {"max_t_ref2", max_of(t_ref2)}});

        io.out << "operator=" << kind << " target=" << target
               << " max_t_target=" << format_double(max_of(t_target))
               << " max_t_ref1=" << format_double(max_of(t_ref1))
               << " max_t_ref2=" << format_double(max_of(t_ref2)) << '\n';
        return int(exit_ok);
    });
}

int cmd_control(const RunConfig& config, const Paths& paths, Streams io) {
    return guarded(io, [&] {
        const SpectrumRun run = obtain_spectrum(config, paths, io);
        ControlConfig control = config.control;
        control.target = resolve_target(config, run.classification);
        if (control.target >= control.basis_size)
            throw ConfigError("target " + std::to_string(control.target) +
                              " does not fit in basis_size " + std::to_string(control.basis_size));

        const ControlOperator op = build_operator(config, run.solution.grid);
        const ControlTrace trace = run_control(control, run.solution, op);

        const std::string kind(to_string(config.control.kind));
        RunOutput out(paths.out, "control");
        out.write("trace_" + kind + ".csv", [&](std::ostream& o) { write_trace_csv(o, trace); });
        out.write("final_state_" + kind + ".csv", [&](std::ostream& o) {
            write_final_state_csv(o, run.solution.grid, trace.final_state);
        });
        out.finish(config, kind,
                   json{{"operator", kind},
                        {"target", control.target},
                        {"alpha", trace.alpha},
                        {"kick_applied", trace.kicked},
                        {"basis_size", trace.basis_size},
                        {"final_overlap", trace.final_overlap()}});

        io.out << "operator=" << kind << " target=" << control.target
               << " final_overlap=" << format_double(trace.final_overlap()) << '\n';
        return int(exit_ok);
    });
}

int cmd_oracle(const Paths& paths, Streams io) {
    return guarded(io, [&] {
        const auto results = run_oracles();
        bool all = true;
        json records = json::array();
        for (const auto& r : results) {
            io.out << (r.passed ? "PASS " : "FAIL ") << r.name
                   << " worst=" << format_double(r.worst)
                   << " tol=" << format_double(r.tolerance) << ' ' << r.detail << '\n';
            all = all && r.passed;
            records.push_back(json{{"name", r.name}, {"passed", r.passed}, {"worst", r.worst},
                                   {"tolerance", r.tolerance}});
        }
        fs::create_directories(paths.out);
        std::ofstream(paths.out / "manifest_oracle.json", std::ios::trunc)
            << json{{"tool", "tricoll"}, {"version", kVersion}, {"command", "oracle"},
                    {"results", records}}
                   .dump(2)
            << '\n';
        return all ? int(exit_ok) : int(exit_solver);
    });
}

}  // namespace tricoll::app
