#include "lensgrid/grading.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lensgrid {

Generator Generator::from_perm(const std::vector<int>& sigma, const std::vector<int>& m, int n)
{
    Generator x;
    for (std::size_t i = 0; i < sigma.size(); ++i) x.a.push_back(sigma[i] + n * m[i]);
    return x;
}

Rational d_invariant(int p, int q, long long i)
{
    if (p < 1 || q < 0 || q >= p || (q == 0 && p != 1) || (q > 0 && std::gcd(p, q) != 1))
        throw std::invalid_argument("d_invariant: invalid (p,q)");
    i = mod(i, p);
    if (p == 1) return Rational(0);
    long long t = 2 * i + 1 - p - q;
    Rational head(static_cast<long long>(p) * q - t * t, 4LL * p * q);
    return head - d_invariant(q, p % q, i % q);
}

PointSet generator_points(const Generator& x)
{
    PointSet s;
    for (std::size_t i = 0; i < x.a.size(); ++i) s.push_back({2LL * x.a[i], 2LL * static_cast<long long>(i)});
    return s;
}

PointSet marking_points(const std::vector<Cell>& cells)
{
    PointSet s;
    for (const Cell& c : cells) s.push_back({2LL * c.a + 1, 2LL * c.b + 1});
    return s;
}

PointSet expand(const PointSet& s, int p, int q, int n)
{
    PointSet out;
    out.reserve(s.size() * p);
    const long long w2 = 2LL * p * n;
    for (const Point2& pt : s)
        for (int k = 0; k < p; ++k)
            out.push_back({mod(pt.x + 2LL * n * q * k, w2), pt.y + 2LL * n * k});
    return out;
}

long long count_dominated_pairs(const PointSet& A, const PointSet& B)
{
    long long c = 0;
    for (const Point2& u : A)
        for (const Point2& v : B)
            if (u.x < v.x && u.y < v.y) ++c;
    return c;
}

Generator base_generator(const GridDiagram& g0, Family f)
{
    GridDiagram g = canonical(g0);
    const auto& cells = f == Family::O ? g.O : g.X;
    Generator x;
    for (const Cell& c : cells) x.a.push_back(c.a);
    return x;
}

int spin_degree(const GridDiagram& g, const Generator& x)
{
    return GradingEngine(g).spin(x);
}

Rational maslov_degree(const GridDiagram& g0, const std::vector<Cell>& S, const Generator& x)
{
    if (S.empty()) throw std::invalid_argument("maslov_degree: empty marking set");
    GridDiagram g = canonical(g0);
    PointSet xs = expand(generator_points(x), g.p, g.q, g.n);
    PointSet ss = expand(marking_points(S), g.p, g.q, g.n);
    long long v = count_dominated_pairs(xs, xs) - count_dominated_pairs(xs, ss) - count_dominated_pairs(ss, xs) +
                  count_dominated_pairs(ss, ss) + 1;
    return Rational(v, g.p) + d_invariant(g.p, g.q, g.q - 1) + Rational(g.p - 1, g.p);
}

std::vector<Rational> alexander_multidegree(const GridDiagram& g, const Generator& x, AlexanderNormalization norm)
{
    return GradingEngine(g, norm).grading(x).alexander;
}

GradingEngine::GradingEngine(const GridDiagram& g, AlexanderNormalization norm)
    : g_(canonical(g)), info_(trace_components(g_))
{
    constant_ = d_invariant(g_.p, g_.q, g_.q - 1) + Rational(g_.p - 1, g_.p);
    for (const Cell& c : g_.O) base_m_sum_ += c.a / g_.n;
    all_o_ = make_set(g_.O);
    for (const auto& comp : info_.components) {
        std::vector<Cell> os, xs;
        for (int r : comp.o_rows) os.push_back(g_.O[r]);
        for (int r : comp.x_rows) xs.push_back(g_.X[r]);
        comp_o_.push_back(make_set(os));
        comp_x_.push_back(make_set(xs));
    }
    shift_.assign(info_.size(), Rational(0));
    if (norm == AlexanderNormalization::symmetric) {
        // subtract the cross terms against the other components' markings
        for (int j = 0; j < info_.size(); ++j) {
            PointSet others;
            for (int l = 0; l < info_.size(); ++l) {
                if (l == j) continue;
                others.insert(others.end(), comp_o_[l].pts.begin(), comp_o_[l].pts.end());
                others.insert(others.end(), comp_x_[l].pts.begin(), comp_x_[l].pts.end());
            }
            const PointSet& xj = comp_x_[j].pts;
            const PointSet& oj = comp_o_[j].pts;
            long long cross = count_dominated_pairs(others, xj) + count_dominated_pairs(xj, others) -
                              count_dominated_pairs(others, oj) - count_dominated_pairs(oj, others);
            shift_[j] = Rational(cross, 4LL * g_.p);
        }
    }
}

GradingEngine::MarkSet GradingEngine::make_set(const std::vector<Cell>& cells) const
{
    MarkSet s;
    s.pts = expand(marking_points(cells), g_.p, g_.q, g_.n);
    s.self = count_dominated_pairs(s.pts, s.pts);
    return s;
}

Rational GradingEngine::maslov_with(const PointSet& xs, long long xx, const MarkSet& s) const
{
    long long v = xx - count_dominated_pairs(xs, s.pts) - count_dominated_pairs(s.pts, xs) + s.self + 1;
    return Rational(v, g_.p) + constant_;
}

int GradingEngine::spin(const Generator& x) const
{
    long long sum = 0;
    for (int a : x.a) sum += a / g_.n;
    return mod(g_.q - 1 + sum - base_m_sum_, g_.p);
}

Rational GradingEngine::maslov(const Generator& x) const
{
    PointSet xs = expand(generator_points(x), g_.p, g_.q, g_.n);
    return maslov_with(xs, count_dominated_pairs(xs, xs), all_o_);
}

Grading GradingEngine::grading(const Generator& x) const
{
    Grading out;
    PointSet xs = expand(generator_points(x), g_.p, g_.q, g_.n);
    long long xx = count_dominated_pairs(xs, xs);
    out.spin = spin(x);
    out.maslov = maslov_with(xs, xx, all_o_);
    for (int j = 0; j < info_.size(); ++j) {
        Rational mo = maslov_with(xs, xx, comp_o_[j]);
        Rational mx = maslov_with(xs, xx, comp_x_[j]);
        out.alexander.push_back((mo - mx - (info_.k[j] - 1)) / 2 - shift_[j]);
    }
    return out;
}

}
