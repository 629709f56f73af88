#pragma once

#include "tricoll/grid.hpp"
#include "tricoll/model.hpp"
#include "tricoll/propagation.hpp"
#include "tricoll/spectrum.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tricoll {

// Shortest round-trip-safe text form: 17 significant digits.
std::string format_double(double value);

// index,energy,delta,psi00_abs,i2,flagged
void write_spectrum_csv(std::ostream& out, const Classification& classification);

// R,rho,psi
void write_wavefunction_csv(std::ostream& out, const RadialGrid& grid,
                            const Eigen::VectorXd& psi);

// n,t_target,t_ref1,t_ref2 -- reference columns are empty when absent.
void write_scan_csv(std::ostream& out, const std::vector<double>& target,
                    const std::vector<double>& ref1, const std::vector<double>& ref2);

// step,time,overlap,M,epsilon
void write_trace_csv(std::ostream& out, const ControlTrace& trace);

// R,rho,psi_real,psi_imag
void write_final_state_csv(std::ostream& out, const RadialGrid& grid,
                           const Eigen::VectorXcd& psi);

// One "i j value" line per stored entry, 1-based indices.
void write_coordinate(std::ostream& out, const Eigen::SparseMatrix<double>& matrix);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

// On-disk eigenbasis keyed by a content hash of (grid, parameters, count).
// Each entry carries a SHA-256 digest of its payload and is rejected if the
// digest or the key does not match.
class EigenbasisCache {
public:
    enum class Status { hit, miss, corrupt };

    struct Lookup {
        Status status = Status::miss;
        std::optional<EigenSolution> solution;
        std::string detail;
    };

    explicit EigenbasisCache(std::filesystem::path directory);

    static std::string key(const GridSpec& spec, const PhysicalParams& params, int count);

    std::filesystem::path entry_path(const std::string& key) const;
    Lookup load(const GridSpec& spec, const PhysicalParams& params, int count) const;
    void store(const GridSpec& spec, const PhysicalParams& params,
               const EigenSolution& solution) const;

private:
    std::filesystem::path directory_;
};

}  // namespace tricoll
