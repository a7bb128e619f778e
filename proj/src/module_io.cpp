#include <cstring>
#include <fstream>

#include "lieblocks/errors.hpp"
#include "lieblocks/module_rep.hpp"

namespace lieblocks {

namespace {

constexpr char kMagic[6] = {'S', 'N', 'M', 'O', 'D', '1'};

void write_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw domain_error("module cache file truncated");
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
           std::uint32_t(b[3]) << 24;
}

} // namespace

void save_module(const std::string& path, const ModuleRep& m) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw domain_error("cannot open module cache for writing: " + path);
    os.write(kMagic, sizeof kMagic);
    write_u32(os, m.degree());
    write_u32(os, m.modulus());
    write_u32(os, static_cast<std::uint32_t>(m.dim()));
    for (const GFMatrix& g : m.generator_actions()) {
        if (g.packed()) {
            for (std::size_t r = 0; r < g.rows(); ++r) {
                const std::uint64_t* row = g.word_row(r);
                for (std::size_t w = 0; w < g.words_per_row(); ++w) {
                    unsigned char b[8];
                    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(row[w] >> (8 * i));
                    os.write(reinterpret_cast<const char*>(b), 8);
                }
            }
        } else {
            for (std::size_t r = 0; r < g.rows(); ++r)
                os.write(reinterpret_cast<const char*>(g.byte_row(r)),
                         static_cast<std::streamsize>(g.cols()));
        }
    }
    if (!os) throw domain_error("short write to module cache: " + path);
}

ModuleRep load_module(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw domain_error("cannot open module cache: " + path);
    char magic[6];
    is.read(magic, 6);
    if (!is || std::memcmp(magic, kMagic, 6) != 0)
        throw domain_error("bad module cache magic in " + path);
    const std::uint32_t n = read_u32(is);
    const std::uint32_t p = read_u32(is);
    const std::uint32_t dim = read_u32(is);
    if (n < 1 || n > 12 || !is_prime(p)) throw domain_error("implausible module cache header");

    std::vector<GFMatrix> gens;
    for (std::uint32_t gi = 0; gi + 1 < n; ++gi) {
        GFMatrix g(dim, dim, static_cast<std::uint16_t>(p));
        if (g.packed()) {
            for (std::size_t r = 0; r < dim; ++r) {
                std::uint64_t* row = g.word_row(r);
                for (std::size_t w = 0; w < g.words_per_row(); ++w) {
                    unsigned char b[8];
                    is.read(reinterpret_cast<char*>(b), 8);
                    std::uint64_t v = 0;
                    for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
                    row[w] = v;
                }
            }
        } else {
            for (std::size_t r = 0; r < dim; ++r)
                is.read(reinterpret_cast<char*>(g.byte_row(r)), static_cast<std::streamsize>(dim));
        }
        if (!is) throw domain_error("module cache file truncated: " + path);
        gens.push_back(std::move(g));
    }
    return ModuleRep(n, static_cast<std::uint16_t>(p), dim, std::move(gens));
}

} // namespace lieblocks
