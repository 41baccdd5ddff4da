#include "lensgrid/homfly.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lensgrid {

LaurentPoly LaurentPoly::monomial(int ea, int ez, Integer c)
{
    LaurentPoly f;
    f.add({ea, ez}, c);
    return f;
}

Integer LaurentPoly::coeff(int ea, int ez) const
{
    auto it = terms_.find({ea, ez});
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add(const Key& k, const Integer& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y)
{
    LaurentPoly r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) r.add({kx.first + ky.first, kx.second + ky.second}, cx * cy);
    return r;
}

LaurentPoly LaurentPoly::shifted(int ea, int ez) const
{
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + ea, k.second + ez}, c);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    LaurentPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            s << (c < 0 ? "-" : "");
        else
            s << (c < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> parts;
        if (mag != 1 || (k.first == 0 && k.second == 0)) parts.push_back(mag.str());
        auto power = [&](const char* v, int e) {
            if (e == 0) return;
            parts.push_back(e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e));
        };
        power("a", k.first);
        power("z", k.second);
        for (std::size_t i = 0; i < parts.size(); ++i) s << (i ? "*" : "") << parts[i];
    }
    return s.str();
}

TrivialSymbol make_symbol(int p, std::vector<int> ascending)
{
    if (static_cast<int>(ascending.size()) != p) throw std::invalid_argument("symbol must have p counts");
    bool any = false;
    for (int c : ascending) {
        if (c < 0) throw std::invalid_argument("symbol counts must be nonnegative");
        any = any || c > 0;
    }
    if (!any) throw std::invalid_argument("symbol must have at least one component");
    return TrivialSymbol{p, std::move(ascending)};
}

JExpression JExpression::symbol(const TrivialSymbol& s, LaurentPoly c)
{
    JExpression e;
    e.add(s, c);
    return e;
}

void JExpression::add(const TrivialSymbol& s, const LaurentPoly& c)
{
    if (!terms_.empty() && terms_.begin()->first.p != s.p)
        throw std::invalid_argument("symbols of different p in one expression");
    LaurentPoly& slot = terms_[s];
    slot += c;
    if (slot.is_zero()) terms_.erase(s);
}

JExpression& JExpression::operator+=(const JExpression& o)
{
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

JExpression& JExpression::operator-=(const JExpression& o)
{
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

JExpression operator*(const LaurentPoly& c, const JExpression& e)
{
    JExpression r;
    for (const auto& [s, f] : e.terms_) r.add(s, c * f);
    return r;
}

std::string JExpression::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& [sym, c] : terms_) {
        s << (first ? "" : " + ") << "(" << c.to_string() << ")*" << sym.render();
        first = false;
    }
    return s.str();
}

LaurentPoly unknot_value(int p)
{
    LaurentPoly delta = LaurentPoly::monomial(-1, -1) - LaurentPoly::monomial(1, -1);
    return delta.pow(p - 1);
}

LaurentPoly union_multiplier(int p)
{
    return LaurentPoly::monomial(-p, -1) - LaurentPoly::monomial(p, -1);
}

JExpression reverse_expression(const JExpression& e)
{
    JExpression r;
    for (const auto& [s, c] : e.terms()) {
        TrivialSymbol t = s;
        for (int cls = 1; cls < s.p; ++cls) t.counts[cls] = s.counts[s.p - cls];
        r += JExpression::symbol(t, c);
    }
    return r;
}

Role parse_role(const std::string& s)
{
    if (s == "+") return Role::plus;
    if (s == "-") return Role::minus;
    if (s == "0") return Role::zero;
    throw std::invalid_argument("invalid skein role: " + s);
}

JExpression solve_skein(int p, const std::optional<JExpression>& plus, const std::optional<JExpression>& minus,
                        const std::optional<JExpression>& zero)
{
    int given = (plus ? 1 : 0) + (minus ? 1 : 0) + (zero ? 1 : 0);
    if (given != 2) throw std::invalid_argument("solve_skein needs exactly two of J+, J-, J0");
    if (!plus) return LaurentPoly::monomial(2 * p, 0) * *minus + LaurentPoly::monomial(p, 1) * *zero;
    if (!minus) return LaurentPoly::monomial(-2 * p, 0) * *plus - LaurentPoly::monomial(-p, 1) * *zero;
    return LaurentPoly::monomial(-p, -1) * *plus - LaurentPoly::monomial(p, -1) * *minus;
}

JExpression eval_symbolic(int p, const SkeinNode& node)
{
    if (node.children.empty()) {
        if (!node.expr) throw std::invalid_argument("skein leaf without an expression");
        return union_multiplier(p).pow(node.unknots) * *node.expr;
    }
    if (!node.role) throw std::invalid_argument("internal skein node without a role");
    if (node.children.size() != 2) throw std::invalid_argument("internal skein node needs two children");
    std::vector<Role> free;
    for (Role r : {Role::plus, Role::minus, Role::zero})
        if (r != *node.role && (!node.children[0].as || *node.children[0].as != r) &&
            (!node.children[1].as || *node.children[1].as != r))
            free.push_back(r);
    std::optional<JExpression> vals[3];
    std::size_t next = 0;
    for (const auto& child : node.children) {
        Role r;
        if (child.as) {
            r = *child.as;
        } else {
            if (next >= free.size()) throw std::invalid_argument("inconsistent skein roles");
            r = free[next++];
        }
        if (r == *node.role || vals[static_cast<int>(r)]) throw std::invalid_argument("inconsistent skein roles");
        vals[static_cast<int>(r)] = eval_symbolic(p, child);
    }
    return solve_skein(p, vals[0], vals[1], vals[2]);
}

std::optional<LaurentPoly> lookup(int p, const TrivialSymbol& s, const AssignmentTable& table)
{
    auto it = table.find(s);
    if (it != table.end()) return it->second;
    if (s.counts[0] == 0) return std::nullopt;
    // a null-homologous component splits off as a disjoint unknot
    TrivialSymbol rest = s;
    --rest.counts[0];
    bool empty = true;
    for (int c : rest.counts) empty = empty && c == 0;
    if (empty) return unknot_value(p);
    auto v = lookup(p, rest, table);
    if (!v) return std::nullopt;
    return union_multiplier(p) * *v;
}

EvalResult eval_script(int p, const SkeinNode& script, const AssignmentTable& table)
{
    EvalResult r;
    r.symbolic = eval_symbolic(p, script);
    LaurentPoly total;
    for (const auto& [s, c] : r.symbolic.terms()) {
        auto v = lookup(p, s, table);
        if (!v) {
            r.missing.push_back(s);
            continue;
        }
        total += c * *v;
    }
    if (r.missing.empty()) r.value = total;
    return r;
}

namespace {

using nlohmann::json;

LaurentPoly poly_from(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of [i,j,c] triples");
    LaurentPoly f;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("monomial must be [i,j,c]");
        Integer c = t[2].is_string() ? Integer(t[2].get<std::string>()) : Integer(t[2].get<long long>());
        f += LaurentPoly::monomial(t[0].get<int>(), t[1].get<int>(), c);
    }
    return f;
}

json poly_json(const LaurentPoly& f)
{
    json a = json::array();
    for (const auto& [k, c] : f.terms()) {
        json cj;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            cj = c.convert_to<long long>();
        else
            cj = c.str();
        a.push_back({k.first, k.second, cj});
    }
    return a;
}

TrivialSymbol symbol_from(const json& j, int& p)
{
    if (!j.is_array()) throw std::invalid_argument("symbol must be an array of counts");
    std::vector<int> counts = j.get<std::vector<int>>();
    if (p == 0) p = static_cast<int>(counts.size());
    return make_symbol(p, counts);
}

JExpression expression_from(const json& j, int& p)
{
    if (!j.is_array()) throw std::invalid_argument("expression must be an array");
    JExpression e;
    for (const auto& t : j) e += JExpression::symbol(symbol_from(t.at("symbol"), p), poly_from(t.at("coeff")));
    return e;
}

SkeinNode node_from(const json& j, int& p)
{
    SkeinNode node;
    if (j.contains("role")) node.role = parse_role(j["role"].get<std::string>());
    if (j.contains("as")) node.as = parse_role(j["as"].get<std::string>());
    if (j.contains("children")) {
        for (const auto& c : j["children"]) node.children.push_back(node_from(c, p));
        return node;
    }
    if (j.contains("symbol"))
        node.expr = JExpression::symbol(symbol_from(j["symbol"], p));
    else if (j.contains("expr"))
        node.expr = expression_from(j["expr"], p);
    else
        throw std::invalid_argument("skein leaf needs \"symbol\" or \"expr\"");
    node.unknots = j.value("unknots", 0);
    if (node.unknots < 0) throw std::invalid_argument("unknots must be nonnegative");
    return node;
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed input: ") + e.what());
    }
}

}

LaurentPoly parse_poly_json(const std::string& text)
{
    return guarded([&] { return poly_from(parse_json(text)); });
}

std::string poly_to_json(const LaurentPoly& f) { return poly_json(f).dump(); }

AssignmentTable parse_table(const std::string& text, int& p)
{
    return guarded([&] {
        json j = parse_json(text);
        if (!j.is_array()) throw std::invalid_argument("table must be an array");
        AssignmentTable t;
        for (const auto& e : j) t[symbol_from(e.at("symbol"), p)] = poly_from(e.at("value"));
        return t;
    });
}

JExpression parse_expression(const std::string& text, int& p)
{
    return guarded([&] { return expression_from(parse_json(text), p); });
}

std::string expression_to_json(const JExpression& e)
{
    json a = json::array();
    for (const auto& [s, c] : e.terms()) {
        json t;
        t["symbol"] = s.counts;
        t["coeff"] = poly_json(c);
        a.push_back(t);
    }
    return a.dump();
}

SkeinNode parse_script(const std::string& text, int& p)
{
    return guarded([&] { return node_from(parse_json(text), p); });
}

}
