#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <tuple>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "lensgrid/floer.hpp"
#include "lensgrid/grid.hpp"
#include "lensgrid/rational.hpp"

namespace testing {

using namespace lensgrid;

inline std::string data_path(const std::string& name) { return std::string(LENSGRID_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

inline GridDiagram fixture(const std::string& name) { return parse_diagram(slurp(data_path(name + ".json"))); }

inline Rational R(long long num, long long den = 1) { return Rational(num, den); }

inline GridDiagram diagram(int p, int q, int n, std::vector<Cell> O, std::vector<Cell> X)
{
    return canonical(GridDiagram{p, q, n, std::move(O), std::move(X)});
}

// random valid diagram: independent random row/column permutations and boxes for O and X
inline GridDiagram random_diagram(std::mt19937& rng, int pmax, int nmax, int nmin = 1)
{
    std::uniform_int_distribution<int> pd(1, pmax), nd(nmin, nmax);
    GridDiagram g;
    g.p = pd(rng);
    std::vector<int> qs;
    for (int q = 0; q < g.p; ++q)
        if (std::gcd(g.p, q) == 1) qs.push_back(q);
    g.q = qs[std::uniform_int_distribution<int>(0, static_cast<int>(qs.size()) - 1)(rng)];
    g.n = nd(rng);
    std::uniform_int_distribution<int> box(0, g.p - 1);
    for (auto* fam : {&g.O, &g.X}) {
        std::vector<int> res(g.n);
        std::iota(res.begin(), res.end(), 0);
        std::shuffle(res.begin(), res.end(), rng);
        for (int b = 0; b < g.n; ++b) fam->push_back({box(rng) * g.n + res[b], b});
    }
    return canonical(g);
}

inline GridDiagram random_knot(std::mt19937& rng, int pmax, int nmax, int nmin = 1)
{
    for (;;) {
        GridDiagram g = random_diagram(rng, pmax, nmax, nmin);
        if (trace_components(g).size() == 1) return g;
    }
}

inline long long total_dim(const HomologyTable& t) { return t.total(); }

}

namespace testing {

// H tensor V_j, V_j = F(0,0) + F(-1, -e_j), rows merged and sorted
inline HomologyTable tensor_v(const HomologyTable& h, int j)
{
    HomologyTable out = h;
    std::map<std::tuple<int, Rational, std::vector<Rational>>, long long> acc;
    for (const auto& r : h.rows) {
        acc[{r.spin, r.maslov, r.alexander}] += r.dim;
        auto a = r.alexander;
        a[j] -= 1;
        acc[{r.spin, r.maslov - 1, a}] += r.dim;
    }
    out.rows.clear();
    for (const auto& [key, dim] : acc) out.rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), dim});
    sort_rows(out.rows);
    return out;
}

inline bool same_rows(const HomologyTable& a, const HomologyTable& b) { return a.rows == b.rows; }

// the cell of the stabilized marking's block that destabilize expects
inline Cell block_site(const GridDiagram& g, int marking, Family family)
{
    Cell m = (family == Family::O ? canonical(g).O : canonical(g).X)[marking];
    return {m.a / g.n * (g.n + 1) + m.a % g.n, m.b};
}

}

namespace testing {

using Bigraded = std::map<std::pair<Rational, Rational>, long long>; // (Maslov, Alexander) -> dim

inline Bigraded knot_bigraded(const HomologyTable& h)
{
    Bigraded out;
    for (const auto& r : h.rows) out[{r.maslov, r.alexander.at(0)}] += r.dim;
    return out;
}

// Divides out one factor F(0,0) + F(-1,-1); nullopt if it does not divide.
inline std::optional<Bigraded> divide_v(Bigraded h)
{
    Bigraded q;
    while (!h.empty()) {
        auto top = std::prev(h.end()); // largest Maslov, then largest Alexander
        auto [key, c] = *top;
        if (c < 0) return std::nullopt;
        q[key] = c;
        h.erase(top);
        std::pair<Rational, Rational> low{key.first - 1, key.second - 1};
        h[low] -= c;
        if (h[low] == 0) h.erase(low);
    }
    return q;
}

}

namespace testing {

inline std::vector<HomologyRow> relabel(const std::vector<HomologyRow>& rows, const std::vector<int>& perm)
{
    std::vector<HomologyRow> out = rows;
    for (auto& r : out)
        for (std::size_t j = 0; j < perm.size(); ++j) r.alexander[perm[j]] = rows[&r - out.data()].alexander[j];
    sort_rows(out);
    return out;
}

// Tables agree after some relabelling of the components (component order depends on columns).
inline bool equal_up_to_relabel(const HomologyTable& a, const HomologyTable& b)
{
    if (a.components() != b.components()) return false;
    std::vector<int> perm(a.components());
    std::iota(perm.begin(), perm.end(), 0);
    do
        if (relabel(a.rows, perm) == b.rows) return true;
    while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline int component_of(const GridDiagram& g, int marking_row, Family f)
{
    auto info = trace_components(g);
    for (int j = 0; j < info.size(); ++j) {
        const auto& rows = f == Family::O ? info.components[j].o_rows : info.components[j].x_rows;
        if (std::find(rows.begin(), rows.end(), marking_row) != rows.end()) return j;
    }
    return -1;
}

}

namespace testing {

inline int base_generator_m(const GridDiagram& g, Family f)
{
    int s = 0;
    for (const Cell& c : f == Family::O ? g.O : g.X) s += c.a / g.n;
    return s;
}

}
