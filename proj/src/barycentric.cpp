#include "simplicia/subdivision.hpp"

namespace simplicia {

namespace {

// Barycenter of simplex i becomes vertex i of the subdivision; original
// vertices keep their labels.
ComplexBuilder barycenter_vertices(const GeometricComplex& k)
{
    ComplexBuilder b(k.ambient_dim());
    for (std::size_t i = 0; i < k.size(); ++i) {
        const Simplex& s = k.simplex(i);
        const std::string label = s.dim() == 0 ? k.label(s[0]) : derived_label("b", k.labels_of(s));
        const VertexId id = b.add_vertex(label, k.barycenter(s));
        if (id != i)
            throw StructuralError("barycenter label " + label + " collides with an existing vertex");
    }
    return b;
}

std::size_t face_index(const GeometricComplex& k, const Simplex& face, const Simplex& of)
{
    auto index = k.index_of(face);
    if (!index)
        throw StructuralError("complex is not face-closed: " + k.name_of(of) + " lacks " + k.name_of(face));
    return *index;
}

// Starring: the pieces carried by simplex i are its barycenter together with
// the cone from it over every piece carried by a proper face.
GeometricComplex star_barycenters(const GeometricComplex& k, std::vector<std::size_t>* refinement)
{
    ComplexBuilder b = barycenter_vertices(k);
    std::vector<std::vector<Simplex>> pieces(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        const Simplex& sigma = k.simplex(i);
        const auto apex = static_cast<VertexId>(i);
        auto& own = pieces[i];
        own.push_back(Simplex{apex});
        if (sigma.dim() == 0)
            continue;
        for (const auto& face : sigma.faces()) {
            if (face == sigma)
                continue;
            for (const auto& tau : pieces[face_index(k, face, sigma)])
                own.push_back(tau.with_vertex(apex));
        }
    }
    for (const auto& list : pieces) {
        for (const auto& s : list)
            b.add_simplex(s);
    }
    GeometricComplex fine = std::move(b).build();
    if (refinement) {
        refinement->assign(fine.size(), 0);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            for (const auto& s : pieces[i])
                (*refinement)[*fine.index_of(s)] = i;
        }
    }
    return fine;
}

}  // namespace

Subdivision barycentric_subdivide(const GeometricComplex& k)
{
    std::vector<std::size_t> refinement;
    GeometricComplex fine = star_barycenters(k, &refinement);
    auto witness = SubdivisionWitness::from_refinement(fine, k, std::move(refinement));
    return {std::move(fine), std::move(witness)};
}

GeometricComplex barycentric_subdivide_n(const GeometricComplex& k, int n)
{
    if (n < 0)
        throw std::invalid_argument("barycentric_subdivide_n: negative iteration count");
    GeometricComplex current = k;
    for (int i = 0; i < n; ++i)
        current = star_barycenters(current, nullptr);
    return current;
}

Subdivision barycentric_subdivide_n_witnessed(const GeometricComplex& k, int n)
{
    if (n < 0)
        throw std::invalid_argument("barycentric_subdivide_n: negative iteration count");
    Subdivision result{k, SubdivisionWitness::identity(k)};
    for (int i = 0; i < n; ++i) {
        Subdivision next = barycentric_subdivide(result.complex);
        next.witness = compose(next.complex, k, next.witness, result.witness);
        result = std::move(next);
    }
    return result;
}

bool is_flag(const GeometricComplex& k, const Flag& flag)
{
    if (flag.chain.empty())
        return false;
    for (std::size_t i = 0; i < flag.chain.size(); ++i) {
        if (!k.contains(flag.chain[i]))
            return false;
        if (i > 0 && (!flag.chain[i].is_face_of(flag.chain[i - 1]) || flag.chain[i] == flag.chain[i - 1]))
            return false;
    }
    return true;
}

namespace {

// Calls emit(chain of simplex indices) for every flag starting at simplex `top`.
template <typename Emit>
void walk_flags(const GeometricComplex& k, std::size_t top, Emit&& emit)
{
    const Simplex& sigma = k.simplex(top);
    const std::size_t n = sigma.size();
    if (n > 20)
        throw std::invalid_argument("simplex dimension too large for flag enumeration");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::size_t> mask_index(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Simplex::Storage ids;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::uint32_t{1} << j))
                ids.push_back(sigma[j]);
        }
        Simplex face(std::move(ids));
        mask_index[mask] = face_index(k, face, sigma);
    }

    std::vector<std::size_t> chain;
    auto descend = [&](auto&& self, std::uint32_t mask) -> void {
        chain.push_back(mask_index[mask]);
        emit(chain);
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
            self(self, sub);
        chain.pop_back();
    };
    descend(descend, full);
}

}  // namespace

std::vector<Flag> enumerate_flags(const GeometricComplex& k)
{
    std::vector<Flag> flags;
    for (std::size_t i = 0; i < k.size(); ++i) {
        walk_flags(k, i, [&](const std::vector<std::size_t>& chain) {
            Flag f;
            for (std::size_t index : chain)
                f.chain.push_back(k.simplex(index));
            flags.push_back(std::move(f));
        });
    }
    return flags;
}

GeometricComplex barycentric_flags(const GeometricComplex& k)
{
    ComplexBuilder b = barycenter_vertices(k);
    for (std::size_t i = 0; i < k.size(); ++i) {
        walk_flags(k, i, [&](const std::vector<std::size_t>& chain) {
            Simplex::Storage ids;
            for (std::size_t index : chain)
                ids.push_back(static_cast<VertexId>(index));
            b.add_simplex(Simplex(std::move(ids)));
        });
    }
    return std::move(b).build();
}

}  // namespace simplicia
