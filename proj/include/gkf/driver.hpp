#pragma once

// Relative complex assembly, Betti numbers, invariant-basis cache and report
// rendering shared by the command-line tool and the tests.

#include "gkf/characters.hpp"
#include "gkf/cochain.hpp"
#include "gkf/linalg.hpp"
#include "gkf/sp_invariants.hpp"
#include "gkf/weight_combinatorics.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkf {

inline constexpr int kCodeVersion = 1;

/// A d-image of an invariant cochain left the invariant span of the next degree.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Invariant-basis cache

struct CacheKey {
    int n = 2;
    int weight = 0;
    int degree = 0;
    int min_gen = 3;

    [[nodiscard]] std::string file_name() const
    {
        std::ostringstream os;
        os << "invariants-n" << n << "-w" << weight << "-m" << degree << "-g" << min_gen << "-v" << kCodeVersion
           << ".txt";
        return os.str();
    }
    [[nodiscard]] std::string header(std::size_t slice_dim, std::size_t count) const
    {
        std::ostringstream os;
        os << "gkf-invariant-basis n=" << n << " w=" << weight << " m=" << degree << " min_gen=" << min_gen
           << " version=" << kCodeVersion << " slice_dim=" << slice_dim << " vectors=" << count;
        return os.str();
    }
};

/// --cache wins over GKF_CACHE; neither means no caching.
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv("GKF_CACHE"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

inline void write_invariant_cache(const std::filesystem::path& dir, const CacheKey& key, const InvariantBasis& b)
{
    std::filesystem::create_directories(dir);
    const auto final_path = dir / key.file_name();
    const auto tmp = dir / (key.file_name() + ".tmp");
    {
        std::ofstream os(tmp);
        if (!os) throw CacheError("cannot write cache file " + tmp.string());
        os << key.header(b.slice_dim, b.vectors.size()) << '\n';
        for (const auto& v : b.vectors) write_vector(os, v);
        if (!os) throw CacheError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

/// Loads a cached basis; nullopt when absent, CacheError when present but unusable.
inline std::optional<InvariantBasis> read_invariant_cache(const std::filesystem::path& dir, const CacheKey& key,
                                                          std::size_t slice_dim)
{
    const auto path = dir / key.file_name();
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream is(path);
    std::string header;
    if (!std::getline(is, header)) throw CacheError("empty cache file " + path.string());
    const std::string prefix = key.header(slice_dim, 0);
    const std::string stem = prefix.substr(0, prefix.rfind(" vectors="));
    if (header.rfind(stem + " vectors=", 0) != 0) throw CacheError("cache header mismatch in " + path.string());
    std::size_t count = 0;
    try {
        count = std::stoul(header.substr(stem.size() + 9));
    } catch (const std::exception&) {
        throw CacheError("bad vector count in " + path.string());
    }
    InvariantBasis b{key.n, key.weight, key.degree, key.min_gen, slice_dim, {}};
    try {
        for (std::size_t i = 0; i < count; ++i) {
            b.vectors.push_back(read_vector(is));
            if (b.vectors.back().dim() != slice_dim) throw CacheError("vector dimension mismatch");
        }
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError("corrupt cache file " + path.string() + ": " + e.what());
    }
    std::string rest;
    if (is >> rest) throw CacheError("trailing data in " + path.string());
    return b;
}

// ---------------------------------------------------------------------------
// Relative complex

struct BuildOptions {
    int min_gen = 3;
    std::optional<std::filesystem::path> cache_dir;
    bool verify_cached = true; // re-check invariance of bases read from disk
    std::ostream* log = nullptr;
};

struct DegreeData {
    int degree = 0;
    std::size_t slice_dim = 0;
    InvariantBasis basis;
    bool from_cache = false;
    double seconds = 0;
};

struct RelativeComplex {
    int n = 2;
    int weight = 0;
    int min_gen = 3;
    std::vector<DegreeData> degrees;       // degrees 0..w
    std::vector<SparseRationalMatrix> d;   // d[m]: |basis_{m+1}| x |basis_m|, m = 0..w-1
    std::vector<std::vector<Cochain>> images; // d of each invariant basis vector, per degree

    [[nodiscard]] std::size_t dim(int m) const { return degrees.at(m).basis.vectors.size(); }
};

namespace detail {

inline void log_line(const BuildOptions& o, const std::string& s)
{
    if (o.log) *o.log << s << std::endl;
}

} // namespace detail

inline InvariantBasis obtain_invariant_basis(const ComplexSlice& s, const BuildOptions& opt, bool& from_cache)
{
    from_cache = false;
    const CacheKey key{s.n(), s.weight(), s.degree(), opt.min_gen};
    if (opt.cache_dir) {
        if (auto cached = read_invariant_cache(*opt.cache_dir, key, s.dim())) {
            if (opt.verify_cached) verify_invariant(s, cached->vectors);
            from_cache = true;
            return *cached;
        }
    }
    InvariantBasis b = invariant_basis(s);
    b.min_gen = opt.min_gen;
    if (opt.cache_dir) write_invariant_cache(*opt.cache_dir, key, b);
    return b;
}

/// Invariant bases of C^m|_w for m = 0..w and the restricted coboundaries.
/// Cochains are built from generators of degree >= 3; opt.min_gen selects the
/// split threshold of the coboundary.
inline RelativeComplex build_relative_complex(int n, int w, const BuildOptions& opt = {})
{
    if (n != 1 && n != 2) throw std::invalid_argument("n must be 1 or 2");
    if (w < 0) throw std::invalid_argument("weight must be non-negative");
    if (opt.min_gen != 2 && opt.min_gen != 3) throw std::invalid_argument("min_gen must be 2 or 3");
    RelativeComplex rc{n, w, opt.min_gen, {}, {}, {}};
    if (w % 2 != 0) {
        // odd weight: the relative complex vanishes
        for (int m = 0; m <= w; ++m) rc.degrees.push_back({m, slice_dimension(n, w, m), {n, w, m, opt.min_gen, 0, {}}, false, 0});
        for (int m = 0; m < w; ++m) rc.d.push_back(SparseRationalMatrix::from_columns(0, {}));
        rc.images.resize(w + 1);
        return rc;
    }
    std::vector<std::optional<ComplexSlice>> slices(w + 2);
    auto slice_at = [&](int m) -> const ComplexSlice& {
        if (!slices[m]) slices[m].emplace(slice(n, w, m, 3));
        return *slices[m];
    };
    for (int m = 0; m <= w; ++m) {
        const auto t0 = std::chrono::steady_clock::now();
        const ComplexSlice& s = slice_at(m);
        bool cached = false;
        InvariantBasis b = obtain_invariant_basis(s, opt, cached);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        detail::log_line(opt, "  degree " + std::to_string(m) + ": slice dim " + std::to_string(s.dim()) +
                                  ", invariants " + std::to_string(b.vectors.size()) + (cached ? " (cached)" : ""));
        rc.degrees.push_back({m, s.dim(), std::move(b), cached, secs});
    }
    rc.images.resize(w + 1);
    for (int m = 0; m < w; ++m) {
        const ComplexSlice& from = slice_at(m);
        const ComplexSlice& to = slice_at(m + 1);
        const auto& src = rc.degrees[m].basis.vectors;
        const auto& dst = rc.degrees[m + 1].basis.vectors;
        std::vector<SparseVector> cols;
        for (std::size_t i = 0; i < src.size(); ++i) {
            Cochain image = d_apply(from.cochain(src[i]), opt.min_gen);
            SparseVector coords_full(to.dim());
            try {
                coords_full = to.coordinates(image);
            } catch (const std::logic_error&) {
                throw InvariantViolation("d of invariant vector " + std::to_string(i) + " in degree " +
                                         std::to_string(m) + " has terms outside " + to.label());
            }
            auto coords = coords_in_span(coords_full, dst);
            if (!coords)
                throw InvariantViolation("d of invariant vector " + std::to_string(i) + " in degree " +
                                         std::to_string(m) + " leaves the invariant span of degree " +
                                         std::to_string(m + 1));
            std::vector<SparseVector::Entry> pairs;
            for (std::size_t k = 0; k < coords->size(); ++k)
                if (!(*coords)[k].is_zero()) pairs.emplace_back(static_cast<Index>(k), (*coords)[k]);
            cols.push_back(SparseVector::from_pairs(dst.size(), std::move(pairs)));
            rc.images[m].push_back(std::move(image));
        }
        rc.d.push_back(SparseRationalMatrix::from_columns(dst.size(), std::move(cols)));
    }
    return rc;
}

struct CohomologyRow {
    int degree = 0;
    std::size_t slice_dim = 0;
    std::size_t dim = 0;
    std::size_t rank_out = 0; // rank of d leaving this degree
    std::size_t betti = 0;
};

struct CohomologyReport {
    int n = 2;
    int weight = 0;
    int min_gen = 3;
    std::vector<CohomologyRow> rows;
    std::int64_t euler_from_dims = 0;
    std::int64_t euler_from_betti = 0;
};

inline CohomologyReport betti(const RelativeComplex& rc)
{
    CohomologyReport rep{rc.n, rc.weight, rc.min_gen, {}, 0, 0};
    const int top = static_cast<int>(rc.degrees.size()) - 1;
    std::vector<std::size_t> ranks(top + 1, 0);
    for (int m = 0; m < top; ++m) {
        if (!(rc.d[m].rows() == rc.dim(m + 1) && rc.d[m].cols() == rc.dim(m)))
            throw std::logic_error("restricted coboundary has the wrong shape");
        ranks[m] = rank(rc.d[m]);
    }
    for (int m = 0; m + 1 < top; ++m)
        if (!(rc.d[m + 1] * rc.d[m]).is_zero()) throw InvariantViolation("restricted d o d is nonzero");
    for (int m = 0; m <= top; ++m) {
        const std::size_t dim = rc.dim(m);
        const std::size_t in = m > 0 ? ranks[m - 1] : 0;
        const std::size_t out = ranks[m];
        if (in + out > dim) throw std::logic_error("negative Betti number");
        const std::size_t b = dim - out - in;
        rep.rows.push_back({m, rc.degrees[m].slice_dim, dim, out, b});
        const std::int64_t sign = m % 2 ? -1 : 1;
        rep.euler_from_dims += sign * static_cast<std::int64_t>(dim);
        rep.euler_from_betti += sign * static_cast<std::int64_t>(b);
    }
    if (rep.euler_from_dims != rep.euler_from_betti) throw std::logic_error("Euler characteristics disagree");
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string unvalidated_banner(int w)
{
    return "WARNING: weight " + std::to_string(w) + " is outside the validated range (2, 4, 6); results are unvalidated";
}

inline void print_report_text(std::ostream& os, const CohomologyReport& r)
{
    os << "weight " << r.weight << " (n=" << r.n << ", min_gen=" << r.min_gen << ")\n";
    auto row = [&](const std::string& name, auto get) {
        os << std::left << std::setw(10) << name;
        for (const auto& x : r.rows) os << std::right << std::setw(8) << get(x);
        os << '\n';
    };
    row("degree", [](const CohomologyRow& x) { return std::to_string(x.degree); });
    row("slice", [](const CohomologyRow& x) { return std::to_string(x.slice_dim); });
    row("dim", [](const CohomologyRow& x) { return std::to_string(x.dim); });
    row("rank d", [](const CohomologyRow& x) { return std::to_string(x.rank_out); });
    row("Betti", [](const CohomologyRow& x) { return std::to_string(x.betti); });
    os << "Euler characteristic " << r.euler_from_dims << '\n';
}

inline nlohmann::json report_json(const CohomologyReport& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["weight"] = r.weight;
    j["min_gen"] = r.min_gen;
    j["degrees"] = nlohmann::json::array();
    for (const auto& x : r.rows)
        j["degrees"].push_back({{"weight", r.weight},
                                {"degree", x.degree},
                                {"slice_dim", x.slice_dim},
                                {"dim", x.dim},
                                {"rank_out", x.rank_out},
                                {"betti", x.betti}});
    j["euler_from_dims"] = r.euler_from_dims;
    j["euler_from_betti"] = r.euler_from_betti;
    return j;
}

inline nlohmann::json decomposition_json(const Decomposition& d)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [l, m] : d)
        if (m) j[l.str()] = m;
    return j;
}

/// Writes invariant bases in Z-notation and restricted coboundaries in matrix text format.
inline void emit_bases(const std::filesystem::path& dir, const RelativeComplex& rc)
{
    std::filesystem::create_directories(dir);
    const std::string stem = "n" + std::to_string(rc.n) + "-w" + std::to_string(rc.weight);
    for (const auto& deg : rc.degrees) {
        if (deg.basis.vectors.empty()) continue;
        const ComplexSlice s = slice(rc.n, rc.weight, deg.degree, 3);
        std::ofstream os(dir / ("basis-" + stem + "-m" + std::to_string(deg.degree) + ".txt"));
        os << "# invariant basis of " << s.label() << ", " << deg.basis.vectors.size() << " vectors\n";
        for (std::size_t i = 0; i < deg.basis.vectors.size(); ++i) {
            os << "v" << i << " (" << deg.basis.vectors[i].nnz() << " terms) =\n";
            os << render_cochain(s.cochain(deg.basis.vectors[i])) << "\n";
        }
    }
    for (std::size_t m = 0; m < rc.d.size(); ++m) {
        if (rc.d[m].rows() == 0 || rc.d[m].cols() == 0) continue;
        std::ofstream os(dir / ("d-" + stem + "-m" + std::to_string(m) + ".txt"));
        write_matrix(os, rc.d[m]);
    }
}

} // namespace gkf
