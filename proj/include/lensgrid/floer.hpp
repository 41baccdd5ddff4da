#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lensgrid/grading.hpp"
#include "lensgrid/grid.hpp"

namespace lensgrid {

constexpr long long default_generator_cap = 10'000'000;

// LENSGRID_CAP when set, otherwise the default.
long long configured_cap();

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(long double count, long long cap);
};

// All n! p^n generators in lexicographic (sigma, m) order.
class GeneratorSpace {
public:
    GeneratorSpace(int p, int n, long long cap = default_generator_cap);

    long long size() const { return size_; }
    Generator at(long long index) const;
    long long index(const Generator& x) const;

private:
    int p_, n_;
    long long pn_pow_ = 1; // p^n
    long long size_ = 0;
    std::vector<long long> fact_;
};

std::vector<Generator> generators(const GridDiagram& g, long long cap = default_generator_cap);

struct Rectangle {
    int i = 0, j = 0;       // rows of the bottom-left and top-right corners
    long long a1 = 0, b1 = 0; // bottom-left, b1 in [0, n)
    long long a2 = 0, b2 = 0; // top-right
    Generator target;
    int n_o = 0, n_x = 0;
    bool admissible = false;

    bool empty() const { return admissible && n_o == 0 && n_x == 0; }
};

// Every embedded parallelogram with x at its bottom-left and top-right corners.
std::vector<Rectangle> rectangles_from(const GridDiagram& g, const Generator& x);

// Mod 2 boundary, as a sorted set of generators.
std::vector<Generator> boundary(const GridDiagram& g, const Generator& x);

struct ComplexOptions {
    long long cap = default_generator_cap;
    AlexanderNormalization norm = AlexanderNormalization::standard;
};

struct ChainComplex {
    GridDiagram diagram;
    ComponentInfo info;
    GeneratorSpace space;
    std::vector<Grading> gradings;
    std::vector<std::vector<long long>> d; // sorted target indices

    ChainComplex(const GridDiagram& g, const ComplexOptions& opt);
};

struct DSquaredReport {
    bool ok = true;
    std::optional<Generator> offender;
    // (middle, end) pairs of the length-2 paths out of the offender whose ends survive mod 2
    std::vector<std::pair<Generator, Generator>> paths;
};

DSquaredReport verify_d_squared(const ChainComplex& cx);
DSquaredReport verify_d_squared(const GridDiagram& g, long long cap = default_generator_cap);

struct DegreeLawReport {
    bool ok = true;
    std::vector<std::pair<long long, long long>> violations; // (x, y) with y in dx
};

DegreeLawReport verify_degree_laws(const ChainComplex& cx);

struct HomologyRow {
    int spin = 0;
    Rational maslov;
    std::vector<Rational> alexander;
    long long dim = 0;
    friend bool operator==(const HomologyRow&, const HomologyRow&) = default;
};

struct HomologyTable {
    int p = 1, q = 0, n = 1;
    std::vector<int> k;
    std::vector<HomologyRow> rows; // spin asc, alexander lex asc, maslov desc

    int components() const { return static_cast<int>(k.size()); }
    long long total() const;
};

HomologyTable homology(const ChainComplex& cx);
HomologyTable homology(const GridDiagram& g, const ComplexOptions& opt = {});

void sort_rows(std::vector<HomologyRow>& rows);

// Rank of the span of the given chains in homology; every chain must be a homogeneous cycle.
long long homology_rank(const ChainComplex& cx, const std::vector<std::vector<long long>>& chains);

struct OrientationReport {
    int k = 0;                   // sum m(x_O) - sum m(x_X) mod p
    bool holds = false;          // bijection with that k
    std::vector<int> valid_ks;   // every shift for which the bijection holds
    HomologyTable forward, reversed;
};

OrientationReport compare_orientation(const GridDiagram& g, const ComplexOptions& opt = {});

}
