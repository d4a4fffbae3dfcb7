#include "wfh/graded.hpp"

#include <stdexcept>

namespace wfh {

GradedDims::GradedDims(std::initializer_list<std::pair<const int, long long>> init) {
    for (const auto& [deg, dim] : init)
        add(deg, dim);
}

void GradedDims::add(int degree, long long dim) {
    if (dim < 0)
        throw std::invalid_argument("negative dimension");
    if (dim == 0)
        return;
    entries_[degree] += dim;
}

long long GradedDims::dim(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second;
}

long long GradedDims::total() const {
    long long t = 0;
    for (const auto& [deg, dim] : entries_)
        t += dim;
    return t;
}

GradedDims GradedDims::shifted(int offset) const {
    GradedDims out;
    for (const auto& [deg, dim] : entries_)
        out.add(deg + offset, dim);
    return out;
}

GradedDims& GradedDims::operator+=(const GradedDims& other) {
    for (const auto& [deg, dim] : other.entries_)
        add(deg, dim);
    return *this;
}

GradedDims GradedDims::operator+(const GradedDims& other) const {
    GradedDims out = *this;
    out += other;
    return out;
}

std::vector<int> GradedDims::degrees() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& [deg, dim] : entries_)
        out.push_back(deg);
    return out;
}

std::string GradedDims::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [deg, dim] : entries_) {
        if (!first)
            out += ", ";
        out += std::to_string(deg) + ":" + std::to_string(dim);
        first = false;
    }
    return out + "}";
}

SpaceModel SpaceModel::point() {
    return SpaceModel{Kind::Point, 0, {}};
}

SpaceModel SpaceModel::sphere(int m) {
    if (m < 0)
        throw std::invalid_argument("sphere dimension must be >= 0");
    return SpaceModel{Kind::Sphere, m, {}};
}

SpaceModel SpaceModel::ball(int m) {
    if (m < 0)
        throw std::invalid_argument("ball dimension must be >= 0");
    return SpaceModel{Kind::Ball, m, {}};
}

SpaceModel SpaceModel::ball_pair(int m) {
    if (m < 0)
        throw std::invalid_argument("ball pair dimension must be >= 0");
    return SpaceModel{Kind::BallPair, m, {}};
}

SpaceModel SpaceModel::disjoint_union(std::vector<SpaceModel> members) {
    if (members.empty())
        throw std::invalid_argument("disjoint union must be non-empty");
    return SpaceModel{Kind::DisjointUnion, 0, std::move(members)};
}

std::string SpaceModel::str() const {
    switch (kind) {
        case Kind::Point:
            return "pt";
        case Kind::Sphere:
            return "S" + std::to_string(dim);
        case Kind::Ball:
            return "B" + std::to_string(dim);
        case Kind::BallPair:
            return "(B" + std::to_string(dim) + ",S" + std::to_string(dim - 1) + ")";
        case Kind::DisjointUnion: {
            std::string out;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i)
                    out += " u ";
                out += parts[i].str();
            }
            return out;
        }
    }
    return "?";
}

bool SpaceModel::operator==(const SpaceModel& other) const {
    return kind == other.kind && dim == other.dim && parts == other.parts;
}

GradedDims homology(const SpaceModel& space) {
    GradedDims h;
    switch (space.kind) {
        case SpaceModel::Kind::Point:
            h.add(0, 1);
            return h;
        case SpaceModel::Kind::Sphere:
            if (space.dim == 0) {
                h.add(0, 2);  // two points
            } else {
                h.add(0, 1);
                h.add(space.dim, 1);
            }
            return h;
        case SpaceModel::Kind::Ball:
            h.add(0, 1);
            return h;
        case SpaceModel::Kind::BallPair:
            // H_*(B^m, S^{m-1}; Z2): one class in degree m.
            h.add(space.dim, 1);
            return h;
        case SpaceModel::Kind::DisjointUnion:
            for (const auto& part : space.parts)
                h += homology(part);
            return h;
    }
    throw std::invalid_argument("unsupported space kind");
}

GradedDims shift_degrees(const GradedDims& g, int offset) {
    return g.shifted(offset);
}

}  // namespace wfh
