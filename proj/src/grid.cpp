#include "lensgrid/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace lensgrid {

namespace {

std::string cell_text(Cell c)
{
    return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

void check_family(const GridDiagram& g, const std::vector<Cell>& cells, const char* name,
                  std::vector<std::string>& out)
{
    if (static_cast<int>(cells.size()) != g.n) {
        out.push_back(std::string(name) + ": expected " + std::to_string(g.n) + " cells, got " +
                      std::to_string(cells.size()));
        return;
    }
    std::vector<int> rows(g.n, 0), cols(g.n, 0);
    for (const Cell& c : cells) {
        if (c.a < 0 || c.a >= g.p * g.n || c.b < 0 || c.b >= g.n) {
            out.push_back(std::string(name) + ": cell " + cell_text(c) + " out of range");
            continue;
        }
        if (rows[c.b]++ == 1)
            out.push_back(std::string(name) + ": duplicate row " + std::to_string(c.b));
        int col = c.a % g.n;
        if (cols[col]++ == 1)
            out.push_back(std::string(name) + ": duplicate column " + std::to_string(col));
    }
}

}

ValidationError::ValidationError(ValidationReport r)
    : DiagramError([&] {
          std::string s = "invalid diagram";
          for (const auto& v : r.violations) s += "; " + v;
          return s;
      }()),
      report(std::move(r))
{
}

int mod(long long x, long long m)
{
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

int inverse_mod(int q, int p)
{
    if (p == 1) return 0;
    for (int k = 1; k < p; ++k)
        if (mod(static_cast<long long>(q) * k, p) == 1) return k;
    throw DiagramError("q has no inverse mod p");
}

ValidationReport validate(const GridDiagram& g)
{
    ValidationReport r;
    if (g.p < 1) r.violations.push_back("p must be positive");
    if (g.n < 1) r.violations.push_back("n must be positive");
    if (!r.ok()) return r;
    if (g.q < 0 || g.q >= g.p)
        r.violations.push_back("q out of range");
    else if (std::gcd(g.p, g.q) != 1)
        r.violations.push_back("non-coprime (p,q)");
    check_family(g, g.O, "O", r.violations);
    check_family(g, g.X, "X", r.violations);
    return r;
}

GridDiagram canonical(GridDiagram g)
{
    auto r = validate(g);
    if (!r.ok()) throw ValidationError(std::move(r));
    auto by_row = [](const Cell& u, const Cell& v) { return u.b < v.b; };
    std::sort(g.O.begin(), g.O.end(), by_row);
    std::sort(g.X.begin(), g.X.end(), by_row);
    return g;
}

GridDiagram parse_diagram(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("malformed diagram: ") + e.what());
    }
    if (!j.is_object()) throw SyntaxError("malformed diagram: expected an object");
    GridDiagram g;
    auto get_int = [&](const char* key) {
        if (!j.contains(key)) throw SyntaxError(std::string("malformed diagram: missing \"") + key + "\"");
        if (!j[key].is_number_integer())
            throw SyntaxError(std::string("malformed diagram: \"") + key + "\" must be an integer");
        return j[key].get<int>();
    };
    auto get_cells = [&](const char* key) {
        if (!j.contains(key)) throw SyntaxError(std::string("malformed diagram: missing \"") + key + "\"");
        std::vector<Cell> cells;
        const auto& arr = j[key];
        if (!arr.is_array()) throw SyntaxError(std::string("malformed diagram: \"") + key + "\" must be an array");
        for (const auto& c : arr) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
                throw SyntaxError(std::string("malformed diagram: cells of \"") + key + "\" must be [a,b]");
            cells.push_back({c[0].get<int>(), c[1].get<int>()});
        }
        return cells;
    };
    g.p = get_int("p");
    g.q = get_int("q");
    g.n = get_int("n");
    g.O = get_cells("O");
    g.X = get_cells("X");
    return canonical(std::move(g));
}

std::string serialize_diagram(const GridDiagram& g)
{
    GridDiagram c = canonical(g);
    nlohmann::ordered_json j;
    j["p"] = c.p;
    j["q"] = c.q;
    j["n"] = c.n;
    auto cells = [](const std::vector<Cell>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const Cell& x : v) a.push_back({x.a, x.b});
        return a;
    };
    j["O"] = cells(c.O);
    j["X"] = cells(c.X);
    return j.dump();
}

ComponentInfo trace_components(const GridDiagram& g0)
{
    GridDiagram g = canonical(g0);
    const int n = g.n;
    std::vector<int> o_by_col(n), x_by_col(n);
    for (int r = 0; r < n; ++r) {
        o_by_col[g.O[r].a % n] = r;
        x_by_col[g.X[r].a % n] = r;
    }
    ComponentInfo info;
    std::vector<bool> seen(n, false);
    for (int col = 0; col < n; ++col) {
        int start = o_by_col[col];
        if (seen[start]) continue;
        Component comp;
        int r = start;
        do {
            seen[r] = true;
            comp.o_rows.push_back(r);
            int xr = x_by_col[g.O[r].a % n];
            comp.x_rows.push_back(xr);
            r = xr; // the O sharing the X's row
        } while (r != start);
        info.k.push_back(static_cast<int>(comp.o_rows.size()));
        info.components.push_back(std::move(comp));
    }
    for (int j = 0; j < info.size(); ++j) info.classes.push_back(homology_class(g, j));
    return info;
}

int column_height(const GridDiagram& g, Cell c)
{
    int t = c.a / g.n;
    int j = mod(-static_cast<long long>(t) * inverse_mod(g.q, g.p), g.p);
    return j * g.n + c.b;
}

int homology_class(const GridDiagram& g0, int component)
{
    GridDiagram g = canonical(g0);
    const int n = g.n, w = g.width();
    std::vector<int> o_by_col(n), x_by_col(n);
    for (int r = 0; r < n; ++r) {
        o_by_col[g.O[r].a % n] = r;
        x_by_col[g.X[r].a % n] = r;
    }
    // retrace rather than recurse through trace_components
    std::vector<bool> seen(n, false);
    int idx = 0;
    for (int col = 0; col < n; ++col) {
        int start = o_by_col[col];
        if (seen[start]) continue;
        long long total = 0;
        int r = start;
        do {
            seen[r] = true;
            int xr = x_by_col[g.O[r].a % n];
            total += mod(column_height(g, g.X[xr]) - column_height(g, g.O[r]), w);
            r = xr;
        } while (r != start);
        if (idx == component) return mod(-(total / n), g.p);
        ++idx;
    }
    throw DiagramError("component index " + std::to_string(component) + " out of range");
}

GridDiagram reverse_orientation(const GridDiagram& g)
{
    GridDiagram r = canonical(g);
    std::swap(r.O, r.X);
    return r;
}

GridDiagram lift_diagram(const GridDiagram& g0)
{
    GridDiagram g = canonical(g0);
    GridDiagram out;
    out.p = 1;
    out.q = 0;
    out.n = g.p * g.n;
    auto expand = [&](const std::vector<Cell>& cells) {
        std::vector<Cell> v;
        for (const Cell& c : cells)
            for (int k = 0; k < g.p; ++k)
                v.push_back({mod(c.a + g.n * g.q * k, g.width()), c.b + g.n * k});
        return v;
    };
    out.O = expand(g.O);
    out.X = expand(g.X);
    return canonical(std::move(out));
}

std::string TrivialCounts::render() const
{
    std::ostringstream s;
    s << "U_{" << counts[0];
    for (int c = p - 1; c >= 1; --c) s << "," << counts[c];
    s << "}";
    return s.str();
}

std::string TrivialCounts::render_ascending() const
{
    std::ostringstream s;
    s << "U_{" << counts[0];
    for (int c = 1; c < p; ++c) s << "," << counts[c];
    s << "}";
    return s.str();
}

GridDiagram make_trivial_link(int p, int q, const std::vector<int>& counts)
{
    if (static_cast<int>(counts.size()) != p) throw DiagramError("counts must have p entries");
    GridDiagram probe{p, q, 1, {{0, 0}}, {{0, 0}}};
    auto r = validate(probe);
    if (!r.ok()) throw ValidationError(std::move(r));
    // component of class c sits in box c*q; boxes are filled left to right, bottom to top
    std::vector<int> boxes;
    for (int c = 0; c < p; ++c) {
        if (counts[c] < 0) throw DiagramError("counts must be nonnegative");
        for (int k = 0; k < counts[c]; ++k) boxes.push_back(mod(static_cast<long long>(c) * q, p));
    }
    if (boxes.empty()) throw DiagramError("trivial link needs at least one component");
    std::sort(boxes.begin(), boxes.end());
    GridDiagram g;
    g.p = p;
    g.q = q;
    g.n = static_cast<int>(boxes.size());
    for (int i = 0; i < g.n; ++i) {
        g.O.push_back({i, i});
        g.X.push_back({boxes[i] * g.n + i, i});
    }
    return canonical(std::move(g));
}

std::optional<TrivialCounts> recognize_trivial(const GridDiagram& g0)
{
    GridDiagram g = canonical(g0);
    const int n = g.n;
    auto diagonal = [n](Cell c) { return c.a % n == c.b; };
    for (int r = 0; r < n; ++r)
        if (!diagonal(g.O[r]) || !diagonal(g.X[r]) || g.O[r].a >= n) return std::nullopt;
    // X's grouped by box must occupy contiguous rows
    std::vector<int> lo(g.p, n), hi(g.p, -1), cnt(g.p, 0);
    for (int r = 0; r < n; ++r) {
        int t = g.X[r].a / n;
        lo[t] = std::min(lo[t], r);
        hi[t] = std::max(hi[t], r);
        ++cnt[t];
    }
    for (int t = 0; t < g.p; ++t)
        if (cnt[t] && hi[t] - lo[t] + 1 != cnt[t]) return std::nullopt;
    if (cnt[0] && g.X[0].a != 0) return std::nullopt;
    for (int r = 1; r < n; ++r)
        if (g.X[r - 1].a >= g.X[r].a) return std::nullopt;
    TrivialCounts tc;
    tc.p = g.p;
    tc.counts.assign(g.p, 0);
    auto info = trace_components(g);
    for (int cls : info.classes) ++tc.counts[cls];
    return tc;
}

}
