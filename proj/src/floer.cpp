#include "lensgrid/floer.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

#include "lensgrid/gf2.hpp"

namespace lensgrid {

long long configured_cap()
{
    if (const char* env = std::getenv("LENSGRID_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return default_generator_cap;
}

CapExceeded::CapExceeded(long double count, long long cap)
    : std::runtime_error("generator count " + std::to_string(static_cast<long long>(std::min<long double>(count, 9e18L))) +
                         " exceeds cap " + std::to_string(cap))
{
}

GeneratorSpace::GeneratorSpace(int p, int n, long long cap) : p_(p), n_(n)
{
    long double count = 1;
    for (int i = 2; i <= n; ++i) count *= i;
    for (int i = 0; i < n; ++i) count *= p;
    if (count > static_cast<long double>(cap)) throw CapExceeded(count, cap);
    fact_.assign(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact_[i] = fact_[i - 1] * i;
    for (int i = 0; i < n; ++i) pn_pow_ *= p;
    size_ = fact_[n] * pn_pow_;
}

Generator GeneratorSpace::at(long long index) const
{
    long long r = index / pn_pow_, mc = index % pn_pow_;
    std::vector<int> pool(n_);
    for (int i = 0; i < n_; ++i) pool[i] = i;
    Generator x;
    x.a.resize(n_);
    for (int i = 0; i < n_; ++i) {
        long long f = fact_[n_ - 1 - i];
        int pick = static_cast<int>(r / f);
        r %= f;
        x.a[i] = pool[pick];
        pool.erase(pool.begin() + pick);
    }
    for (int i = n_ - 1; i >= 0; --i) {
        x.a[i] += n_ * static_cast<int>(mc % p_);
        mc /= p_;
    }
    return x;
}

long long GeneratorSpace::index(const Generator& x) const
{
    long long r = 0, mc = 0;
    for (int i = 0; i < n_; ++i) {
        int s = x.a[i] % n_, smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (x.a[j] % n_ < s) ++smaller;
        r += smaller * fact_[n_ - 1 - i];
        mc = mc * p_ + x.a[i] / n_;
    }
    return r * pn_pow_ + mc;
}

std::vector<Generator> generators(const GridDiagram& g0, long long cap)
{
    GridDiagram g = canonical(g0);
    GeneratorSpace space(g.p, g.n, cap);
    std::vector<Generator> out;
    out.reserve(space.size());
    for (long long i = 0; i < space.size(); ++i) out.push_back(space.at(i));
    return out;
}

namespace {

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Geometry {
    long long p, q, n, w; // w = pn

    // no nonzero deck translation fits strictly inside a w x h box
    bool embedded(long long width, long long height) const
    {
        long long kmax = (height - 1) / n;
        for (long long k = -kmax; k <= kmax; ++k) {
            long long base = q * n * k;
            long long t0 = floor_div(-base, w);
            for (long long t = t0 - 1; t <= t0 + 1; ++t) {
                if (k == 0 && t == 0) continue;
                long long da = base + w * t;
                if (std::llabs(da) < width) return false;
            }
        }
        return true;
    }

    // lifts of a doubled-coordinate point strictly inside the doubled box (x1,x2) x (y1,y2)
    int inside(long long px, long long py, long long x1, long long y1, long long x2, long long y2) const
    {
        int c = 0;
        const long long n2 = 2 * n, w2 = 2 * w;
        for (long long k = floor_div(y1 - py, n2); py + n2 * k < y2; ++k) {
            long long y = py + n2 * k;
            if (y <= y1) continue;
            long long x = px + 2 * q * n * k;
            // smallest lift in the a-direction exceeding x1
            long long t = floor_div(x1 - x, w2) + 1;
            for (long long xx = x + w2 * t; xx < x2; xx += w2)
                if (xx > x1) ++c;
        }
        return c;
    }
};

}

std::vector<Rectangle> rectangles_from(const GridDiagram& g0, const Generator& x)
{
    GridDiagram g = canonical(g0);
    const long long n = g.n, p = g.p, q = g.q, w = g.width();
    Geometry geo{p, q, n, w};
    std::vector<Rectangle> out;
    for (int i = 0; i < n; ++i) {
        const long long a1 = x.a[i], b1 = i;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (long long k = 0; k <= p; ++k) {
                long long b2 = j + n * k;
                if (b2 <= b1 || b2 >= b1 + w) continue;
                long long base = x.a[j] + q * n * k;
                long long a2 = base + w * (floor_div(a1 - base, w) + 1);
                if (a2 >= a1 + w) continue;
                long long width = a2 - a1, height = b2 - b1;
                if (!geo.embedded(width, height)) continue;
                Rectangle r;
                r.i = i;
                r.j = j;
                r.a1 = a1;
                r.b1 = b1;
                r.a2 = a2;
                r.b2 = b2;
                const long long X1 = 2 * a1, Y1 = 2 * b1, X2 = 2 * a2, Y2 = 2 * b2;
                int blockers = 0;
                for (int l = 0; l < n; ++l) blockers += geo.inside(2LL * x.a[l], 2LL * l, X1, Y1, X2, Y2);
                r.admissible = blockers == 0;
                for (const Cell& c : g.O) r.n_o += geo.inside(2LL * c.a + 1, 2LL * c.b + 1, X1, Y1, X2, Y2);
                for (const Cell& c : g.X) r.n_x += geo.inside(2LL * c.a + 1, 2LL * c.b + 1, X1, Y1, X2, Y2);
                r.target = x;
                r.target.a[i] = mod(a2, w);
                r.target.a[j] = mod(a1 - q * n * k, w);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<Generator> boundary(const GridDiagram& g, const Generator& x)
{
    std::map<Generator, int> acc;
    for (const auto& r : rectangles_from(g, x))
        if (r.empty()) acc[r.target] ^= 1;
    std::vector<Generator> out;
    for (const auto& [y, c] : acc)
        if (c) out.push_back(y);
    return out;
}

ChainComplex::ChainComplex(const GridDiagram& g, const ComplexOptions& opt)
    : diagram(canonical(g)), info(trace_components(diagram)), space(diagram.p, diagram.n, opt.cap)
{
    GradingEngine eng(diagram, opt.norm);
    gradings.reserve(space.size());
    d.resize(space.size());
    for (long long idx = 0; idx < space.size(); ++idx) {
        Generator x = space.at(idx);
        gradings.push_back(eng.grading(x));
        std::vector<long long> t;
        for (const auto& r : rectangles_from(diagram, x))
            if (r.empty()) t.push_back(space.index(r.target));
        std::sort(t.begin(), t.end());
        std::vector<long long> odd;
        for (std::size_t s = 0; s < t.size();) {
            std::size_t e = s;
            while (e < t.size() && t[e] == t[s]) ++e;
            if ((e - s) % 2) odd.push_back(t[s]);
            s = e;
        }
        d[idx] = std::move(odd);
    }
}

DSquaredReport verify_d_squared(const ChainComplex& cx)
{
    DSquaredReport rep;
    for (long long x = 0; x < cx.space.size(); ++x) {
        std::map<long long, std::vector<long long>> via;
        for (long long y : cx.d[x])
            for (long long z : cx.d[y]) via[z].push_back(y);
        for (const auto& [z, mids] : via) {
            if (mids.size() % 2 == 0) continue;
            rep.ok = false;
            rep.offender = cx.space.at(x);
            for (const auto& [z2, m2] : via)
                if (m2.size() % 2)
                    for (long long y : m2) rep.paths.emplace_back(cx.space.at(y), cx.space.at(z2));
            return rep;
        }
    }
    return rep;
}

DSquaredReport verify_d_squared(const GridDiagram& g, long long cap)
{
    ComplexOptions opt;
    opt.cap = cap;
    return verify_d_squared(ChainComplex(g, opt));
}

DegreeLawReport verify_degree_laws(const ChainComplex& cx)
{
    DegreeLawReport rep;
    for (long long x = 0; x < cx.space.size(); ++x) {
        const Grading& gx = cx.gradings[x];
        for (long long y : cx.d[x]) {
            const Grading& gy = cx.gradings[y];
            if (gy.spin != gx.spin || gy.alexander != gx.alexander || gy.maslov != gx.maslov - 1) {
                rep.ok = false;
                rep.violations.emplace_back(x, y);
            }
        }
    }
    return rep;
}

long long HomologyTable::total() const
{
    long long t = 0;
    for (const auto& r : rows) t += r.dim;
    return t;
}

void sort_rows(std::vector<HomologyRow>& rows)
{
    std::sort(rows.begin(), rows.end(), [](const HomologyRow& u, const HomologyRow& v) {
        if (u.spin != v.spin) return u.spin < v.spin;
        if (u.alexander != v.alexander) return u.alexander < v.alexander;
        return u.maslov > v.maslov;
    });
}

namespace {

using BlockKey = std::tuple<int, std::vector<Rational>, Rational>;

BlockKey key_of(const Grading& g) { return {g.spin, g.alexander, g.maslov}; }

// rank of the differential restricted to sources -> targets
std::size_t restricted_rank(const ChainComplex& cx, const std::vector<long long>& sources,
                            const std::vector<long long>& targets)
{
    if (sources.empty() || targets.empty()) return 0;
    std::map<long long, std::size_t> col;
    for (std::size_t c = 0; c < targets.size(); ++c) col[targets[c]] = c;
    BitMatrix m(sources.size(), targets.size());
    for (std::size_t r = 0; r < sources.size(); ++r)
        for (long long y : cx.d[sources[r]]) {
            auto it = col.find(y);
            if (it != col.end()) m.set(r, it->second);
        }
    return m.eliminate();
}

}

HomologyTable homology(const ChainComplex& cx)
{
    auto laws = verify_degree_laws(cx);
    if (!laws.ok) throw std::logic_error("differential violates the degree laws");
    std::map<BlockKey, std::vector<long long>> groups;
    for (long long x = 0; x < cx.space.size(); ++x) groups[key_of(cx.gradings[x])].push_back(x);

    HomologyTable t;
    t.p = cx.diagram.p;
    t.q = cx.diagram.q;
    t.n = cx.diagram.n;
    t.k = cx.info.k;
    static const std::vector<long long> none;
    auto find = [&](int s, const std::vector<Rational>& a, const Rational& m) -> const std::vector<long long>& {
        auto it = groups.find({s, a, m});
        return it == groups.end() ? none : it->second;
    };
    for (const auto& [key, gens] : groups) {
        const auto& [s, a, m] = key;
        std::size_t out_rank = restricted_rank(cx, gens, find(s, a, m - 1));
        std::size_t in_rank = restricted_rank(cx, find(s, a, m + 1), gens);
        long long dim = static_cast<long long>(gens.size() - out_rank - in_rank);
        if (dim > 0) t.rows.push_back({s, m, a, dim});
    }
    sort_rows(t.rows);
    return t;
}

HomologyTable homology(const GridDiagram& g, const ComplexOptions& opt)
{
    return homology(ChainComplex(g, opt));
}

long long homology_rank(const ChainComplex& cx, const std::vector<std::vector<long long>>& chains)
{
    std::set<BlockKey> keys;
    for (const auto& ch : chains)
        for (long long x : ch) {
            auto [s, a, m] = key_of(cx.gradings[x]);
            keys.insert({s, a, m + 1});
        }
    std::vector<std::vector<long long>> rows;
    for (long long x = 0; x < cx.space.size(); ++x)
        if (keys.count(key_of(cx.gradings[x])) && !cx.d[x].empty()) rows.push_back(cx.d[x]);
    auto rank_of = [&](const std::vector<std::vector<long long>>& rs) {
        BitMatrix m(rs.size(), static_cast<std::size_t>(cx.space.size()));
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (long long y : rs[r]) m.flip(r, y);
        return static_cast<long long>(m.eliminate());
    };
    long long base = rank_of(rows);
    rows.insert(rows.end(), chains.begin(), chains.end());
    return rank_of(rows) - base;
}

OrientationReport compare_orientation(const GridDiagram& g0, const ComplexOptions& opt)
{
    GridDiagram g = canonical(g0);
    if (trace_components(g).size() != 1) throw DiagramError("compare_orientation needs a knot diagram");
    OrientationReport rep;
    long long sum = 0;
    for (int r = 0; r < g.n; ++r) sum += g.O[r].a / g.n - g.X[r].a / g.n;
    rep.k = mod(sum, g.p);
    rep.forward = homology(g, opt);
    rep.reversed = homology(reverse_orientation(g), opt);
    for (int k = 0; k < g.p; ++k) {
        std::vector<HomologyRow> mapped;
        for (const auto& r : rep.forward.rows) {
            const Rational& a = r.alexander[0];
            mapped.push_back({mod(r.spin + k, g.p), r.maslov - 2 * a - (g.n - 1), {-a - (g.n - 1)}, r.dim});
        }
        sort_rows(mapped);
        if (mapped == rep.reversed.rows) rep.valid_ks.push_back(k);
    }
    rep.holds = std::find(rep.valid_ks.begin(), rep.valid_ks.end(), rep.k) != rep.valid_ks.end();
    return rep;
}

}
