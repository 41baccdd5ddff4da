#pragma once

#include <string>

#include "lensgrid/grid.hpp"

namespace lensgrid {

enum class Corner { NW, NE, SW, SE };
enum class Axis { rows, columns };

Corner parse_corner(const std::string& s);
std::string to_string(Corner c);

class MoveRefused : public DiagramError {
public:
    explicit MoveRefused(const std::string& what) : DiagramError(what) {}
};

// Splits the row and column of the chosen marking (indexed by its row) into a 2x2 block.
// The corner tag names the block cell left empty; the chosen family takes the diagonal
// avoiding it and the other family takes the cell opposite it.
GridDiagram stabilize(const GridDiagram& g, int marking, Family family, Corner corner);

// sw is the lower-left cell of a 2x2 stabilization block.
GridDiagram destabilize(const GridDiagram& g, Cell sw);

// The pair is (c, c+1 mod n) along the given axis.
bool is_interleaving(const GridDiagram& g, int c, Axis axis);
GridDiagram commute(const GridDiagram& g, int c, Axis axis);

GridDiagram cycle(const GridDiagram& g, Axis axis, int shift);

struct MoveSpec {
    enum class Kind { stabilize, destabilize, commute, cycle } kind = Kind::cycle;
    Axis axis = Axis::columns;
    int index = 0; // marking row, commutation pair start, or shift
    Family family = Family::X;
    Corner corner = Corner::NW;
    Cell site;
};

GridDiagram apply_move(const GridDiagram& g, const MoveSpec& m);

}
