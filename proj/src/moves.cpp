#include "lensgrid/moves.hpp"

#include <array>

namespace lensgrid {

Corner parse_corner(const std::string& s)
{
    if (s == "NW") return Corner::NW;
    if (s == "NE") return Corner::NE;
    if (s == "SW") return Corner::SW;
    if (s == "SE") return Corner::SE;
    throw DiagramError("invalid corner tag: " + s);
}

std::string to_string(Corner c)
{
    switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
    }
    return "?";
}

namespace {

// block offsets (dr, db) of a corner
std::pair<int, int> offset(Corner c)
{
    switch (c) {
    case Corner::SW: return {0, 0};
    case Corner::SE: return {1, 0};
    case Corner::NW: return {0, 1};
    case Corner::NE: return {1, 1};
    }
    return {0, 0};
}

Corner opposite(Corner c)
{
    switch (c) {
    case Corner::SW: return Corner::NE;
    case Corner::NE: return Corner::SW;
    case Corner::NW: return Corner::SE;
    case Corner::SE: return Corner::NW;
    }
    return c;
}

Cell row_up(const GridDiagram& g, Cell c)
{
    if (c.b + 1 < g.n) return {c.a, c.b + 1};
    return {mod(c.a - static_cast<long long>(g.q) * g.n, g.width()), 0};
}

Cell row_down(const GridDiagram& g, Cell c)
{
    if (c.b > 0) return {c.a, c.b - 1};
    return {mod(c.a + static_cast<long long>(g.q) * g.n, g.width()), g.n - 1};
}

bool strictly_between(int x, int lo, int hi, int len)
{
    return x != lo && mod(x - lo, len) < mod(hi - lo, len);
}

}

GridDiagram stabilize(const GridDiagram& g0, int marking, Family family, Corner corner)
{
    GridDiagram g = canonical(g0);
    const int n = g.n;
    if (marking < 0 || marking >= n) throw DiagramError("marking index out of range");
    auto& mine = family == Family::O ? g.O : g.X;
    auto& other = family == Family::O ? g.X : g.O;
    const Cell m = mine[marking];
    const int r = m.a % n, t = m.a / n, b = m.b;

    // old (residue, row) -> new, with the split residue/row resolved by the caller
    auto place = [&](Cell c, int split_col, int split_row) {
        int cr = c.a % n, ct = c.a / n;
        int nr = cr < r ? cr : (cr > r ? cr + 1 : r + split_col);
        int nb = c.b < b ? c.b : (c.b > b ? c.b + 1 : b + split_row);
        return Cell{ct * (n + 1) + nr, nb};
    };
    auto block = [&](Corner c) {
        auto [dr, db] = offset(c);
        return Cell{t * (n + 1) + r + dr, b + db};
    };
    const auto [er, eb] = offset(corner);

    GridDiagram out;
    out.p = g.p;
    out.q = g.q;
    out.n = n + 1;
    std::vector<Cell> new_mine, new_other;
    for (int i = 0; i < n; ++i)
        if (i != marking) new_mine.push_back(place(mine[i], 0, 0));
    for (Corner c : {Corner::SW, Corner::SE, Corner::NW, Corner::NE})
        if (c != corner && c != opposite(corner)) new_mine.push_back(block(c));
    for (const Cell& c : other) new_other.push_back(place(c, er, eb));
    new_other.push_back(block(opposite(corner)));
    if (family == Family::O) {
        out.O = new_mine;
        out.X = new_other;
    } else {
        out.X = new_mine;
        out.O = new_other;
    }
    return canonical(std::move(out));
}

GridDiagram destabilize(const GridDiagram& g0, Cell sw)
{
    GridDiagram g = canonical(g0);
    const int n = g.n;
    if (n == 1) throw DiagramError("cannot destabilize a diagram with n = 1");
    if (sw.a < 0 || sw.a >= g.width() || sw.b < 0 || sw.b >= n) throw DiagramError("site out of range");
    const int r = sw.a % n, t = sw.a / n, b = sw.b;
    if (r + 1 >= n || b + 1 >= n) throw DiagramError("pattern mismatch: block crosses the seam");

    auto cell_at = [&](Corner c) {
        auto [dr, db] = offset(c);
        return Cell{t * n + r + dr, b + db};
    };
    auto has = [](const std::vector<Cell>& v, Cell c) {
        for (const Cell& x : v)
            if (x == c) return true;
        return false;
    };
    for (Family fam : {Family::X, Family::O}) {
        const auto& mine = fam == Family::O ? g.O : g.X;
        const auto& other = fam == Family::O ? g.X : g.O;
        for (Corner e : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
            Corner opp = opposite(e);
            bool ok = has(other, cell_at(opp));
            for (Corner c : {Corner::SW, Corner::SE, Corner::NW, Corner::NE})
                if (c != e && c != opp) ok = ok && has(mine, cell_at(c));
            if (!ok) continue;
            auto merge = [&](Cell c) {
                int cr = c.a % n, ct = c.a / n;
                int nr = cr <= r ? cr : cr - 1;
                int nb = c.b <= b ? c.b : c.b - 1;
                return Cell{ct * (n - 1) + nr, nb};
            };
            // drop one marking of the doubled family and the lone one opposite the empty cell
            Cell drop_mine = e == Corner::NW || e == Corner::SE ? cell_at(Corner::NE) : cell_at(Corner::NW);
            GridDiagram out;
            out.p = g.p;
            out.q = g.q;
            out.n = n - 1;
            std::vector<Cell> nm, no;
            for (const Cell& c : mine)
                if (c != drop_mine) nm.push_back(merge(c));
            for (const Cell& c : other)
                if (c != cell_at(opp)) no.push_back(merge(c));
            if (fam == Family::O) {
                out.O = nm;
                out.X = no;
            } else {
                out.X = nm;
                out.O = no;
            }
            if (validate(out).ok()) return canonical(std::move(out));
        }
    }
    throw DiagramError("pattern mismatch: no stabilization block at site");
}

namespace {

// the four marking coordinates of an adjacent pair on a common circle of length pn
struct PairCoords {
    std::array<int, 2> first, second;
};

PairCoords pair_coords(const GridDiagram& g, int c, Axis axis)
{
    const int n = g.n;
    const int c2 = (c + 1) % n;
    PairCoords pc;
    int i1 = 0, i2 = 0;
    for (const auto* fam : {&g.O, &g.X})
        for (const Cell& m : *fam) {
            if (axis == Axis::columns) {
                if (m.a % n == c) pc.first[i1++] = column_height(g, m);
                else if (m.a % n == c2) pc.second[i2++] = column_height(g, {mod(m.a - 1, g.width()), m.b});
            } else {
                if (m.b == c) pc.first[i1++] = m.a;
                else if (m.b == c2) pc.second[i2++] = row_down(g, m).a;
            }
        }
    return pc;
}

}

bool is_interleaving(const GridDiagram& g0, int c, Axis axis)
{
    GridDiagram g = canonical(g0);
    if (g.n < 2) throw DiagramError("commutation needs at least two rows and columns");
    if (c < 0 || c >= g.n) throw DiagramError("pair index out of range");
    PairCoords pc = pair_coords(g, c, axis);
    const int len = g.width();
    auto [h1, h2] = pc.first;
    auto [g1, g2] = pc.second;
    if (g1 == h1 || g1 == h2 || g2 == h1 || g2 == h2) return false;
    return strictly_between(g1, h1, h2, len) != strictly_between(g2, h1, h2, len);
}

GridDiagram commute(const GridDiagram& g0, int c, Axis axis)
{
    GridDiagram g = canonical(g0);
    if (is_interleaving(g, c, axis)) throw MoveRefused("interleaving pair: not an equivalence move");
    const int n = g.n, c2 = (c + 1) % n;
    auto move = [&](Cell m) {
        if (axis == Axis::columns) {
            if (m.a % n == c) return Cell{mod(m.a + 1, g.width()), m.b};
            if (m.a % n == c2) return Cell{mod(m.a - 1, g.width()), m.b};
        } else {
            if (m.b == c) return row_up(g, m);
            if (m.b == c2) return row_down(g, m);
        }
        return m;
    };
    for (auto* fam : {&g.O, &g.X})
        for (Cell& m : *fam) m = move(m);
    return canonical(std::move(g));
}

GridDiagram cycle(const GridDiagram& g0, Axis axis, int shift)
{
    GridDiagram g = canonical(g0);
    for (auto* fam : {&g.O, &g.X})
        for (Cell& m : *fam) {
            if (axis == Axis::columns) {
                m.a = mod(static_cast<long long>(m.a) + shift, g.width());
            } else {
                for (int s = 0; s < shift; ++s) m = row_up(g, m);
                for (int s = 0; s > shift; --s) m = row_down(g, m);
            }
        }
    return canonical(std::move(g));
}

GridDiagram apply_move(const GridDiagram& g, const MoveSpec& m)
{
    switch (m.kind) {
    case MoveSpec::Kind::stabilize: return stabilize(g, m.index, m.family, m.corner);
    case MoveSpec::Kind::destabilize: return destabilize(g, m.site);
    case MoveSpec::Kind::commute: return commute(g, m.index, m.axis);
    case MoveSpec::Kind::cycle: return cycle(g, m.axis, m.index);
    }
    return g;
}

}
