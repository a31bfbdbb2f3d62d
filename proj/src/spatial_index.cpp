#include "simplicia/spatial_index.hpp"

#include "simplicia/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace simplicia {

namespace {

std::int64_t floor_to_int(const Rational& q)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

}  // namespace

SpatialIndex::SpatialIndex(const GeometricComplex& k) : dim_(k.ambient_dim())
{
    const auto maximal = k.maximal();
    maximal_.reserve(maximal.size());
    boxes_.reserve(maximal.size());
    frames_.reserve(maximal.size());

    for (std::size_t index : maximal) {
        const Simplex& s = k.simplex(index);
        maximal_.push_back(s);
        auto pts = k.points_of(s);

        Box box{std::vector<Rational>(pts.front().coords().begin(), pts.front().coords().end()),
                std::vector<Rational>(pts.front().coords().begin(), pts.front().coords().end())};
        for (const auto& p : pts) {
            for (std::size_t a = 0; a < dim_; ++a) {
                if (p[a] < box.lo[a])
                    box.lo[a] = p[a];
                if (p[a] > box.hi[a])
                    box.hi[a] = p[a];
            }
        }
        boxes_.push_back(std::move(box));

        try {
            frames_.emplace_back(pts);
        } catch (const std::invalid_argument&) {
            throw StructuralError("simplex " + k.name_of(s) + " is affinely dependent");
        }
    }

    grid_lo_.assign(dim_, Rational(0));
    grid_span_.assign(dim_, Rational(0));
    resolution_.assign(dim_, 1);
    if (maximal_.empty() || dim_ == 0)
        return;

    for (std::size_t a = 0; a < dim_; ++a) {
        Rational lo = boxes_.front().lo[a];
        Rational hi = boxes_.front().hi[a];
        for (const auto& b : boxes_) {
            if (b.lo[a] < lo)
                lo = b.lo[a];
            if (b.hi[a] > hi)
                hi = b.hi[a];
        }
        grid_lo_[a] = lo;
        grid_span_[a] = hi - lo;
    }
    const double per_axis = std::ceil(std::pow(static_cast<double>(maximal_.size()), 1.0 / static_cast<double>(dim_)));
    const auto res = static_cast<std::int64_t>(std::clamp(per_axis, 1.0, 256.0));
    for (std::size_t a = 0; a < dim_; ++a)
        resolution_[a] = sgn(grid_span_[a]) > 0 ? res : 1;

    for (std::size_t i = 0; i < maximal_.size(); ++i) {
        std::vector<std::vector<std::int64_t>> ranges(dim_);
        for (std::size_t a = 0; a < dim_; ++a)
            ranges[a] = cell_range(boxes_[i].lo[a], boxes_[i].hi[a], a);
        std::vector<std::size_t> idx(dim_, 0);
        for (;;) {
            std::uint64_t key = 0;
            for (std::size_t a = 0; a < dim_; ++a)
                key = key * 257u + static_cast<std::uint64_t>(ranges[a][idx[a]]);
            cells_[key].push_back(static_cast<std::uint32_t>(i));
            std::size_t a = 0;
            while (a < dim_ && ++idx[a] == ranges[a].size()) {
                idx[a] = 0;
                ++a;
            }
            if (a == dim_)
                break;
        }
    }
}

std::int64_t SpatialIndex::cell_of(const Rational& value, std::size_t axis) const
{
    if (resolution_[axis] == 1)
        return 0;
    Rational scaled = (value - grid_lo_[axis]) * Rational(resolution_[axis]) / grid_span_[axis];
    return std::clamp<std::int64_t>(floor_to_int(scaled), 0, resolution_[axis] - 1);
}

std::vector<std::int64_t> SpatialIndex::cell_range(const Rational& lo, const Rational& hi, std::size_t axis) const
{
    std::vector<std::int64_t> out;
    for (std::int64_t c = cell_of(lo, axis); c <= cell_of(hi, axis); ++c)
        out.push_back(c);
    return out;
}

bool SpatialIndex::boxes_overlap(std::size_t a, std::size_t b) const
{
    for (std::size_t ax = 0; ax < dim_; ++ax) {
        if (boxes_[a].hi[ax] < boxes_[b].lo[ax] || boxes_[b].hi[ax] < boxes_[a].lo[ax])
            return false;
    }
    return true;
}

std::vector<std::size_t> SpatialIndex::candidates(const Point& x) const
{
    std::vector<std::size_t> out;
    if (x.dim() != dim_)
        throw StructuralError("point dimension does not match the ambient dimension");
    if (maximal_.empty())
        return out;
    const std::vector<std::uint32_t>* bucket = nullptr;
    std::vector<std::uint32_t> all;
    if (dim_ == 0) {
        all.resize(maximal_.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<std::uint32_t>(i);
        bucket = &all;
    } else {
        std::uint64_t key = 0;
        for (std::size_t a = 0; a < dim_; ++a) {
            if (x[a] < grid_lo_[a] || x[a] > grid_lo_[a] + grid_span_[a])
                return out;
            key = key * 257u + static_cast<std::uint64_t>(cell_of(x[a], a));
        }
        auto it = cells_.find(key);
        if (it == cells_.end())
            return out;
        bucket = &it->second;
    }
    for (std::uint32_t i : *bucket) {
        const Box& b = boxes_[i];
        bool inside = true;
        for (std::size_t a = 0; a < dim_ && inside; ++a)
            inside = !(x[a] < b.lo[a]) && !(x[a] > b.hi[a]);
        if (inside)
            out.push_back(i);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SpatialIndex::overlapping_pairs() const
{
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    if (dim_ == 0) {
        for (std::size_t i = 0; i < maximal_.size(); ++i) {
            for (std::size_t j = i + 1; j < maximal_.size(); ++j)
                pairs.emplace(i, j);
        }
    }
    for (const auto& [key, bucket] : cells_) {
        for (std::size_t x = 0; x < bucket.size(); ++x) {
            for (std::size_t y = x + 1; y < bucket.size(); ++y) {
                std::size_t i = std::min(bucket[x], bucket[y]);
                std::size_t j = std::max(bucket[x], bucket[y]);
                if (boxes_overlap(i, j))
                    pairs.emplace(i, j);
            }
        }
    }
    return {pairs.begin(), pairs.end()};
}

std::optional<std::vector<Rational>> SpatialIndex::coordinates(std::size_t position, const Point& x) const
{
    return frames_.at(position).coordinates(x);
}

std::optional<Simplex> SpatialIndex::locate(const Point& x) const
{
    for (std::size_t position : candidates(x)) {
        auto w = coordinates(position, x);
        if (!w)
            continue;
        if (std::any_of(w->begin(), w->end(), [](const Rational& q) { return sgn(q) < 0; }))
            continue;
        Simplex::Storage support;
        const Simplex& s = maximal_[position];
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (sgn((*w)[i]) > 0)
                support.push_back(s[i]);
        }
        return Simplex(std::move(support));
    }
    return std::nullopt;
}

}  // namespace simplicia
