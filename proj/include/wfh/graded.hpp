#pragma once

#include <map>
#include <string>
#include <vector>

namespace wfh {

/* Dimensions of a graded Z2-vector space, indexed by integer degree.
 * Degrees may be negative. Zero dimensions are never stored. */
class GradedDims {
public:
    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, long long>> init);

    void add(int degree, long long dim);
    long long dim(int degree) const;
    long long total() const;
    bool empty() const { return entries_.empty(); }

    GradedDims shifted(int offset) const;
    GradedDims& operator+=(const GradedDims& other);
    GradedDims operator+(const GradedDims& other) const;
    bool operator==(const GradedDims& other) const { return entries_ == other.entries_; }
    bool operator!=(const GradedDims& other) const { return !(*this == other); }

    const std::map<int, long long>& entries() const { return entries_; }
    std::vector<int> degrees() const;

    std::string str() const;

private:
    std::map<int, long long> entries_;
};

/* The spaces that occur as Morse-Bott components and Lagrangians here:
 * spheres, balls, the relative pair (B^m, S^{m-1}), points, and disjoint
 * unions of those. Homology is table-driven; nothing else is needed. */
struct SpaceModel {
    enum class Kind { Point, Sphere, Ball, BallPair, DisjointUnion };

    Kind kind = Kind::Point;
    int dim = 0;
    std::vector<SpaceModel> parts;

    static SpaceModel point();
    static SpaceModel sphere(int m);
    static SpaceModel ball(int m);
    static SpaceModel ball_pair(int m);
    static SpaceModel disjoint_union(std::vector<SpaceModel> members);

    std::string str() const;
    bool operator==(const SpaceModel& other) const;
};

/* H_*(space; Z2). For BallPair(m) this is the relative H_*(B^m, S^{m-1}). */
GradedDims homology(const SpaceModel& space);

GradedDims shift_degrees(const GradedDims& g, int offset);

}  // namespace wfh
