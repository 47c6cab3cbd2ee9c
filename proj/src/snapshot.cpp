#include "degvisc/snapshot.hpp"

#include "degvisc/errors.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace degvisc {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

constexpr const char* kMagic = "DEGVISC-FIELD";

std::string header_line(const Grid& g, bool vector, double t) {
    std::ostringstream h;
    h << kMagic << " v1 dim=" << g.dim << " n=";
    for (int a = 0; a < g.dim; ++a) h << (a ? "," : "") << g.n[a];
    h << " L=";
    for (int a = 0; a < g.dim; ++a) h << (a ? "," : "") << fmt17(g.length[a]);
    h << " topo=" << (g.topology == Topology::Periodic ? 'P' : 'B');
    h << " kind=" << (vector ? "vector" : "scalar") << " t=" << fmt17(t) << '\n';
    return h.str();
}

void write_payload(const std::filesystem::path& path, const std::string& header, const std::vector<double>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(double)));
    if (!out) throw IoError("write failed for " + path.string());
}

std::vector<double> parse_list(const std::string& s, const std::filesystem::path& path) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw IoError(path.string() + ": malformed header value '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

void write_field(const std::filesystem::path& path, const ScalarField& f, double t) {
    write_payload(path, header_line(f.grid(), false, t), f.values());
}

void write_field(const std::filesystem::path& path, const VectorField& f, double t) {
    const int d = f.dim();
    std::vector<double> data(f.size() * d);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (int c = 0; c < d; ++c) data[i * d + c] = f(c, i);
    write_payload(path, header_line(f.grid(), true, t), data);
}

FieldSnapshot read_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open snapshot " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw IoError(path.string() + ": empty snapshot file");

    std::istringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != kMagic || version != "v1") throw IoError(path.string() + ": not a DEGVISC-FIELD v1 file");
    std::map<std::string, std::string> kv;
    std::string tok;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw IoError(path.string() + ": malformed header token '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"dim", "n", "L", "topo", "kind", "t"})
        if (!kv.count(key)) throw IoError(path.string() + ": header lacks '" + key + "'");

    FieldSnapshot snap;
    Grid& g = snap.grid;
    g.dim = static_cast<int>(parse_list(kv["dim"], path).at(0));
    const auto ns = parse_list(kv["n"], path);
    const auto ls = parse_list(kv["L"], path);
    if (g.dim < 1 || g.dim > 3 || static_cast<int>(ns.size()) != g.dim || static_cast<int>(ls.size()) != g.dim)
        throw IoError(path.string() + ": inconsistent dim/n/L in header");
    if (kv["topo"] != "P" && kv["topo"] != "B") throw IoError(path.string() + ": unknown topo");
    g.topology = kv["topo"] == "P" ? Topology::Periodic : Topology::Box;
    for (int a = 0; a < g.dim; ++a) {
        g.n[a] = static_cast<int>(ns[a]);
        g.length[a] = ls[a];
        g.origin[a] = g.topology == Topology::Box ? -0.5 * ls[a] : 0.0;
    }
    try {
        g.validate();
    } catch (const ConfigError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
    if (kv["kind"] != "scalar" && kv["kind"] != "vector") throw IoError(path.string() + ": unknown kind");
    snap.is_vector = kv["kind"] == "vector";
    snap.t = parse_list(kv["t"], path).at(0);

    const std::size_t count = g.size() * (snap.is_vector ? g.dim : 1);
    std::vector<double> data(count);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(count * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
        throw IoError(path.string() + ": truncated snapshot (expected " + std::to_string(count) + " samples)");
    if (in.peek() != std::char_traits<char>::eof()) throw IoError(path.string() + ": trailing bytes after payload");

    if (snap.is_vector) {
        snap.vector = VectorField(g);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (int c = 0; c < g.dim; ++c) snap.vector(c, i) = data[i * g.dim + c];
    } else {
        snap.scalar = ScalarField(g);
        snap.scalar.values() = std::move(data);
    }
    return snap;
}

namespace {

void write_slice(const std::filesystem::path& path, const Grid& g, int ncomp,
                 const std::function<double(int, std::size_t)>& value) {
    if (g.dim > 2) throw IoError("CSV slices are available for 1D and 2D fields only");
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string());
    out << (g.dim == 1 ? "x" : "x,y");
    for (int c = 0; c < ncomp; ++c) out << ",v" << c;
    out << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto ij = g.coords(i);
        out << fmt17(g.center(0, ij[0]));
        if (g.dim == 2) out << ',' << fmt17(g.center(1, ij[1]));
        for (int c = 0; c < ncomp; ++c) out << ',' << fmt17(value(c, i));
        out << '\n';
    }
}

}  // namespace

void write_csv_slice(const std::filesystem::path& path, const ScalarField& f) {
    write_slice(path, f.grid(), 1, [&](int, std::size_t i) { return f[i]; });
}

void write_csv_slice(const std::filesystem::path& path, const VectorField& f) {
    write_slice(path, f.grid(), f.dim(), [&](int c, std::size_t i) { return f(c, i); });
}

}  // namespace degvisc
