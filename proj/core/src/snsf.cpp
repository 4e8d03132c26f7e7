#include "snse/snsf.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "snse/wiener.hpp"

namespace snse {

namespace {

using nlohmann::json;

void store_f64(std::string& out, double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r = (r << 8) | ((bits >> (8 * i)) & 0xffu);
        bits = r;
    }
    char buf[8];
    std::memcpy(buf, &bits, 8);
    out.append(buf, 8);
}

double load_f64(const char* p) {
    std::uint64_t bits;
    std::memcpy(&bits, p, 8);
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r = (r << 8) | ((bits >> (8 * i)) & 0xffu);
        bits = r;
    }
    double x;
    std::memcpy(&x, &bits, sizeof x);
    return x;
}

void write_container(const std::string& path, const json& header, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const std::string htext = header.dump();
    out.write("SNSF", 4);
    const std::uint32_t hlen = static_cast<std::uint32_t>(htext.size());
    char lenbuf[4];
    for (int i = 0; i < 4; ++i) lenbuf[i] = static_cast<char>((hlen >> (8 * i)) & 0xffu);
    out.write(lenbuf, 4);
    out.write(htext.data(), static_cast<std::streamsize>(htext.size()));
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::pair<json, std::string> read_container(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    if (bytes.size() < 8 || bytes.compare(0, 4, "SNSF") != 0)
        throw std::runtime_error("not an SNSF container: " + path);
    std::uint32_t hlen = 0;
    for (int i = 3; i >= 0; --i) hlen = (hlen << 8) | static_cast<unsigned char>(bytes[4 + i]);
    if (bytes.size() < 8 + hlen) throw std::runtime_error("truncated SNSF header: " + path);
    json header = json::parse(bytes.substr(8, hlen));
    return {header, bytes.substr(8 + hlen)};
}

}  // namespace

void write_field_snsf(const std::string& path, const SpectralField& f, double time) {
    const auto& grid = f.grid();
    json header{{"kind", "field"},
                {"d", grid.dim},
                {"N", grid.modes},
                {"L", grid.period},
                {"components", grid.dim},
                {"time", time},
                {"solenoidal", f.solenoidal()}};
    std::string payload;
    payload.reserve(f.points() * grid.dim * 16);
    for (std::size_t i = 0; i < f.points(); ++i) {
        for (int c = 0; c < grid.dim; ++c) {
            store_f64(payload, f.at(c, i).real());
            store_f64(payload, f.at(c, i).imag());
        }
    }
    write_container(path, header, payload);
}

LoadedField read_field_snsf(const std::string& path) {
    auto [header, payload] = read_container(path);
    if (header.value("kind", "field") != "field")
        throw std::runtime_error("SNSF container is not a field: " + path);
    const int d = header.at("d").get<int>();
    const int n = header.at("N").get<int>();
    const double period = header.at("L").get<double>();
    LoadedField loaded;
    loaded.field = SpectralField(make_grid(d, n, period));
    loaded.field.set_solenoidal(header.value("solenoidal", false));
    loaded.time = header.value("time", 0.0);
    const std::size_t expected = loaded.field.points() * d * 16;
    if (payload.size() != expected) throw std::runtime_error("SNSF payload size mismatch: " + path);
    const char* p = payload.data();
    for (std::size_t i = 0; i < loaded.field.points(); ++i) {
        for (int c = 0; c < d; ++c) {
            const double re = load_f64(p);
            const double im = load_f64(p + 8);
            p += 16;
            loaded.field.at(c, i) = Complex{re, im};
        }
    }
    return loaded;
}

void write_wiener_snsf(const std::string& path, const WienerPath& w) {
    json header{{"kind", "wiener"},
                {"dt", w.dt()},
                {"steps", w.steps()},
                {"modes", w.modes()},
                {"seed", w.seed()}};
    std::string payload;
    payload.reserve(static_cast<std::size_t>(w.steps()) * w.modes() * 8);
    for (int s = 0; s < w.steps(); ++s)
        for (int j = 0; j < w.modes(); ++j) store_f64(payload, w.increment(s, j));
    write_container(path, header, payload);
}

LoadedWiener read_wiener_snsf(const std::string& path) {
    auto [header, payload] = read_container(path);
    if (header.value("kind", "") != "wiener")
        throw std::runtime_error("SNSF container is not a wiener path: " + path);
    LoadedWiener loaded;
    loaded.dt = header.at("dt").get<double>();
    loaded.steps = header.at("steps").get<int>();
    loaded.modes = header.at("modes").get<int>();
    loaded.seed = header.at("seed").get<std::uint64_t>();
    const std::size_t count = static_cast<std::size_t>(loaded.steps) * loaded.modes;
    if (payload.size() != count * 8) throw std::runtime_error("SNSF payload size mismatch: " + path);
    loaded.increments.resize(count);
    for (std::size_t i = 0; i < count; ++i) loaded.increments[i] = load_f64(payload.data() + 8 * i);
    return loaded;
}

}  // namespace snse
