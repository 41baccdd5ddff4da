#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lensgrid {

struct Cell {
    int a = 0;
    int b = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Markings live in [0, p*n) x [0, n) with gluing (a,b) ~ (a+pn, b) ~ (a+qn, b+n).
struct GridDiagram {
    int p = 1;
    int q = 0;
    int n = 1;
    std::vector<Cell> O;
    std::vector<Cell> X;

    int width() const { return p * n; }
    friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

enum class Family { O, X };

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

class DiagramError : public std::runtime_error {
public:
    explicit DiagramError(const std::string& what) : std::runtime_error(what) {}
};

class SyntaxError : public DiagramError {
public:
    explicit SyntaxError(const std::string& what) : DiagramError(what) {}
};

class ValidationError : public DiagramError {
public:
    explicit ValidationError(ValidationReport r);
    ValidationReport report;
};

ValidationReport validate(const GridDiagram& g);

// Validates and sorts O and X by row; afterwards O[b], X[b] sit in row b.
GridDiagram canonical(GridDiagram g);

GridDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const GridDiagram& g);

struct Component {
    std::vector<int> o_rows; // rows of its O markings, in tracing order
    std::vector<int> x_rows;
};

struct ComponentInfo {
    std::vector<Component> components;
    std::vector<int> k;
    std::vector<int> classes;
    int size() const { return static_cast<int>(components.size()); }
};

ComponentInfo trace_components(const GridDiagram& g);
int homology_class(const GridDiagram& g, int component);

GridDiagram reverse_orientation(const GridDiagram& g);
GridDiagram lift_diagram(const GridDiagram& g);

int mod(long long x, long long m);
int inverse_mod(int q, int p);

// Column of cell (a,b) is a mod n; its height in that column's annulus of pn cells.
int column_height(const GridDiagram& g, Cell c);
// Position along the row annulus, aligned so that cells stacked vertically share it.

// Per-class component counts, ascending storage (i_0, i_1, ..., i_{p-1}).
struct TrivialCounts {
    int p = 1;
    std::vector<int> counts;
    std::string render() const;           // U_{i0,i_{p-1},...,i1}
    std::string render_ascending() const; // U_{i0,i1,...,i_{p-1}}
    friend bool operator==(const TrivialCounts&, const TrivialCounts&) = default;
    friend auto operator<=>(const TrivialCounts&, const TrivialCounts&) = default;
};

GridDiagram make_trivial_link(int p, int q, const std::vector<int>& counts);
std::optional<TrivialCounts> recognize_trivial(const GridDiagram& g);

}
