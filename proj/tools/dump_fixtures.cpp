// Writes the built-in fixtures as JSON files: NAME.json, plus
// NAME.claimed.json for fixtures that carry a claimed subdivision.
#include "simplicia/complex_json.hpp"
#include "simplicia/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace simplicia;

static void write(const std::filesystem::path& path, const GeometricComplex& k)
{
    std::ofstream(path, std::ios::binary) << serialize_complex(k);
}

static void dump(const std::filesystem::path& dir, const Fixture& f)
{
    write(dir / (f.name + ".json"), f.complex);
    if (f.claimed_subdivision)
        write(dir / (f.name + ".claimed.json"), *f.claimed_subdivision);
}

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: dump_fixtures DIR\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto& f : shipped_corpus())
        dump(dir, f);
    for (const auto& f : faulty_corpus())
        dump(dir, f.fixture);
    return 0;
}
