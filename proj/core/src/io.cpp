#include "tricoll/io.hpp"

#include "tricoll/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tricoll {

namespace {

constexpr char kMagic[8] = {'T', 'R', 'I', 'C', 'O', 'L', 'L', '1'};
constexpr std::size_t kDigestBytes = 32;

std::array<unsigned char, kDigestBytes> sha256_raw(std::string_view bytes) {
    std::array<unsigned char, kDigestBytes> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1 ||
        length != kDigestBytes)
        throw std::runtime_error("SHA-256 digest failed");
    return digest;
}

std::string to_hex(const unsigned char* data, std::size_t size) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(2 * size, '0');
    for (std::size_t k = 0; k < size; ++k) {
        out[2 * k] = digits[data[k] >> 4];
        out[2 * k + 1] = digits[data[k] & 0xf];
    }
    return out;
}

template <typename T>
void put(std::string& buffer, const T& value) {
    buffer.append(reinterpret_cast<const char*>(&value), sizeof(T));
}

void put_doubles(std::string& buffer, const double* data, std::size_t count) {
    buffer.append(reinterpret_cast<const char*>(data), count * sizeof(double));
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    template <typename T>
    T get() {
        T value;
        take(&value, sizeof(T));
        return value;
    }
    void get_doubles(double* data, std::size_t count) { take(data, count * sizeof(double)); }
    std::string get_string(std::size_t size) {
        std::string s(size, '\0');
        take(s.data(), size);
        return s;
    }
    bool exhausted() const { return offset_ == bytes_.size(); }

private:
    void take(void* dst, std::size_t size) {
        if (offset_ + size > bytes_.size()) throw std::runtime_error("truncated cache entry");
        std::memcpy(dst, bytes_.data() + offset_, size);
        offset_ += size;
    }

    std::string_view bytes_;
    std::size_t offset_ = 0;
};

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_spectrum_csv(std::ostream& out, const Classification& classification) {
    out << "index,energy,delta,psi00_abs,i2,flagged\n";
    for (const auto& r : classification.reports) {
        out << r.index << ',' << format_double(r.energy) << ',' << format_double(r.delta) << ','
            << format_double(std::abs(r.psi00)) << ',' << format_double(r.i2) << ','
            << (r.is_triple_collision ? 1 : 0) << '\n';
    }
}

void write_wavefunction_csv(std::ostream& out, const RadialGrid& grid,
                            const Eigen::VectorXd& psi) {
    if (psi.size() != static_cast<Eigen::Index>(grid.size()))
        throw DimensionMismatch("write_wavefunction_csv: state does not live on this grid");
    out << "R,rho,psi\n";
    for (std::size_t p = 0; p < grid.size(); ++p)
        out << format_double(grid.R_at(p)) << ',' << format_double(grid.rho_at(p)) << ','
            << format_double(psi[static_cast<Eigen::Index>(p)]) << '\n';
}

void write_scan_csv(std::ostream& out, const std::vector<double>& target,
                    const std::vector<double>& ref1, const std::vector<double>& ref2) {
    out << "n,t_target,t_ref1,t_ref2\n";
    auto cell = [](const std::vector<double>& col, std::size_t k) {
        return k < col.size() ? format_double(col[k]) : std::string();
    };
    for (std::size_t k = 0; k < target.size(); ++k)
        out << (k + 1) << ',' << format_double(target[k]) << ',' << cell(ref1, k) << ','
            << cell(ref2, k) << '\n';
}

void write_trace_csv(std::ostream& out, const ControlTrace& trace) {
    out << "step,time,overlap,M,epsilon\n";
    for (const auto& r : trace.records)
        out << r.step << ',' << format_double(r.time) << ',' << format_double(r.overlap) << ','
            << format_double(r.M) << ',' << format_double(r.epsilon) << '\n';
}

void write_final_state_csv(std::ostream& out, const RadialGrid& grid,
                           const Eigen::VectorXcd& psi) {
    if (psi.size() != static_cast<Eigen::Index>(grid.size()))
        throw DimensionMismatch("write_final_state_csv: state does not live on this grid");
    out << "R,rho,psi_real,psi_imag\n";
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto v = psi[static_cast<Eigen::Index>(p)];
        out << format_double(grid.R_at(p)) << ',' << format_double(grid.rho_at(p)) << ','
            << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

void write_coordinate(std::ostream& out, const Eigen::SparseMatrix<double>& matrix) {
    const Eigen::SparseMatrix<double, Eigen::RowMajor> rows = matrix;
    for (int r = 0; r < rows.outerSize(); ++r)
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(rows, r); it; ++it)
            out << (it.row() + 1) << ' ' << (it.col() + 1) << ' ' << format_double(it.value())
                << '\n';
}

std::string sha256_hex(std::string_view bytes) {
    const auto digest = sha256_raw(bytes);
    return to_hex(digest.data(), digest.size());
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return sha256_hex(bytes);
}

EigenbasisCache::EigenbasisCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {}

std::string EigenbasisCache::key(const GridSpec& spec, const PhysicalParams& params, int count) {
    std::ostringstream canon;
    canon << "tricoll-eigenbasis-v1;n=" << spec.n << ";L=" << format_double(spec.L)
          << ";mu=" << format_double(params.mu) << ";Z=" << format_double(params.Z)
          << ";q=" << format_double(params.q) << ";count=" << count;
    return sha256_hex(canon.str());
}

std::filesystem::path EigenbasisCache::entry_path(const std::string& key) const {
    return directory_ / (key + ".eig");
}

EigenbasisCache::Lookup EigenbasisCache::load(const GridSpec& spec, const PhysicalParams& params,
                                              int count) const {
    const std::string k = key(spec, params, count);
    const auto path = entry_path(k);
    Lookup result;
    std::ifstream in(path, std::ios::binary);
    if (!in) return result;

    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        if (bytes.size() < kDigestBytes) throw std::runtime_error("truncated cache entry");
        const std::string_view payload(bytes.data(), bytes.size() - kDigestBytes);
        const auto digest = sha256_raw(payload);
        if (std::memcmp(digest.data(), bytes.data() + payload.size(), kDigestBytes) != 0)
            throw std::runtime_error("payload digest mismatch");

        Reader reader(payload);
        if (reader.get_string(sizeof kMagic) != std::string(kMagic, sizeof kMagic))
            throw std::runtime_error("bad magic");
        if (reader.get_string(k.size()) != k) throw std::runtime_error("key mismatch");
        const auto n = reader.get<std::int32_t>();
        const auto L = reader.get<double>();
        const auto dim = reader.get<std::int64_t>();
        const auto stored_count = reader.get<std::int32_t>();
        if (n != spec.n || L != spec.L || stored_count != count ||
            dim != static_cast<std::int64_t>(spec.unknowns()))
            throw std::runtime_error("header does not match the requested configuration");

        EigenSolution solution{RadialGrid(spec), Eigen::VectorXd(count),
                               Eigen::MatrixXd(dim, count), Eigen::VectorXd(count)};
        reader.get_doubles(solution.energies.data(), static_cast<std::size_t>(count));
        reader.get_doubles(solution.residuals.data(), static_cast<std::size_t>(count));
        reader.get_doubles(solution.states.data(), static_cast<std::size_t>(dim * count));
        if (!reader.exhausted()) throw std::runtime_error("trailing bytes in cache entry");

        result.status = Status::hit;
        result.solution = std::move(solution);
    } catch (const std::exception& e) {
        result.status = Status::corrupt;
        result.detail = e.what();
    }
    return result;
}

void EigenbasisCache::store(const GridSpec& spec, const PhysicalParams& params,
                            const EigenSolution& solution) const {
    const int count = solution.count();
    const std::string k = key(spec, params, count);
    std::string buffer;
    buffer.append(kMagic, sizeof kMagic);
    buffer.append(k);
    put(buffer, static_cast<std::int32_t>(spec.n));
    put(buffer, spec.L);
    put(buffer, static_cast<std::int64_t>(solution.states.rows()));
    put(buffer, static_cast<std::int32_t>(count));
    put_doubles(buffer, solution.energies.data(), static_cast<std::size_t>(count));
    put_doubles(buffer, solution.residuals.data(), static_cast<std::size_t>(count));
    put_doubles(buffer, solution.states.data(), static_cast<std::size_t>(solution.states.size()));
    const auto digest = sha256_raw(buffer);
    buffer.append(reinterpret_cast<const char*>(digest.data()), digest.size());

    std::filesystem::create_directories(directory_);
    const auto path = entry_path(k);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace tricoll
