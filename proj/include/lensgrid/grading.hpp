#pragma once

#include <vector>

#include "lensgrid/grid.hpp"
#include "lensgrid/rational.hpp"

namespace lensgrid {

// One intersection point per row: row i carries the point (a[i], i), a[i] in [0, pn).
// The S_n x Z_p^n view is sigma(i) = a[i] mod n, m(i) = a[i] div n.
struct Generator {
    std::vector<int> a;

    static Generator from_perm(const std::vector<int>& sigma, const std::vector<int>& m, int n);
    int sigma(int i, int n) const { return a[i] % n; }
    int m(int i, int n) const { return a[i] / n; }
    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Points in doubled coordinates so marking centers (a+1/2, b+1/2) stay integral.
struct Point2 {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const Point2&, const Point2&) = default;
    friend auto operator<=>(const Point2&, const Point2&) = default;
};
using PointSet = std::vector<Point2>;

Rational d_invariant(int p, int q, long long i);

PointSet generator_points(const Generator& x);
PointSet marking_points(const std::vector<Cell>& cells);
PointSet expand(const PointSet& s, int p, int q, int n);
long long count_dominated_pairs(const PointSet& A, const PointSet& B);

Generator base_generator(const GridDiagram& g, Family f);
int spin_degree(const GridDiagram& g, const Generator& x);
Rational maslov_degree(const GridDiagram& g, const std::vector<Cell>& S, const Generator& x);

enum class AlexanderNormalization { standard, symmetric };

std::vector<Rational> alexander_multidegree(const GridDiagram& g, const Generator& x,
                                            AlexanderNormalization norm = AlexanderNormalization::standard);

struct Grading {
    int spin = 0;
    Rational maslov;
    std::vector<Rational> alexander;
    friend bool operator==(const Grading&, const Grading&) = default;
};

// Caches the expanded marking sets of one diagram; grading() is then cheap per generator.
class GradingEngine {
public:
    explicit GradingEngine(const GridDiagram& g,
                           AlexanderNormalization norm = AlexanderNormalization::standard);

    Grading grading(const Generator& x) const;
    int spin(const Generator& x) const;
    Rational maslov(const Generator& x) const;

    const GridDiagram& diagram() const { return g_; }
    const ComponentInfo& components() const { return info_; }

private:
    struct MarkSet {
        PointSet pts;
        long long self = 0;
    };
    MarkSet make_set(const std::vector<Cell>& cells) const;
    Rational maslov_with(const PointSet& xs, long long xx, const MarkSet& s) const;

    GridDiagram g_;
    ComponentInfo info_;
    Rational constant_;
    int base_m_sum_ = 0;
    MarkSet all_o_;
    std::vector<MarkSet> comp_o_, comp_x_;
    std::vector<Rational> shift_;
};

}
