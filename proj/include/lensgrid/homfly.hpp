#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lensgrid/grid.hpp"
#include "lensgrid/rational.hpp"

namespace lensgrid {

// Element of Z[a^{+-1}, z^{+-1}]; keys are (power of a, power of z).
class LaurentPoly {
public:
    using Key = std::pair<int, int>;

    LaurentPoly() = default;
    static LaurentPoly monomial(int ea, int ez, Integer c = 1);
    static LaurentPoly constant(Integer c) { return monomial(0, 0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Key, Integer>& terms() const { return terms_; }
    Integer coeff(int ea, int ez) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator-(const LaurentPoly& x) { return LaurentPoly() - x; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    LaurentPoly shifted(int ea, int ez) const; // times a^ea z^ez
    LaurentPoly pow(int e) const;              // e >= 0
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    void add(const Key& k, const Integer& c);
    std::map<Key, Integer> terms_;
};

using TrivialSymbol = TrivialCounts;

TrivialSymbol make_symbol(int p, std::vector<int> ascending);

class JExpression {
public:
    JExpression() = default;
    static JExpression symbol(const TrivialSymbol& s, LaurentPoly c = LaurentPoly::constant(1));

    const std::map<TrivialSymbol, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    JExpression& operator+=(const JExpression& o);
    JExpression& operator-=(const JExpression& o);
    friend JExpression operator+(JExpression x, const JExpression& y) { return x += y; }
    friend JExpression operator-(JExpression x, const JExpression& y) { return x -= y; }
    friend JExpression operator*(const LaurentPoly& c, const JExpression& e);
    friend bool operator==(const JExpression&, const JExpression&) = default;

    std::string to_string() const;

private:
    void add(const TrivialSymbol& s, const LaurentPoly& c);
    std::map<TrivialSymbol, LaurentPoly> terms_;
};

LaurentPoly unknot_value(int p);
LaurentPoly union_multiplier(int p);

JExpression reverse_expression(const JExpression& e);

enum class Role { plus, minus, zero };
Role parse_role(const std::string& s);

// Given two of J+, J-, J0 returns the third.
JExpression solve_skein(int p, const std::optional<JExpression>& plus, const std::optional<JExpression>& minus,
                        const std::optional<JExpression>& zero);

struct SkeinNode {
    std::optional<Role> role; // own role in the triple with its children
    std::optional<Role> as;   // role in the parent's triple
    std::vector<SkeinNode> children;
    std::optional<JExpression> expr; // leaves only
    int unknots = 0;
};

using AssignmentTable = std::map<TrivialSymbol, LaurentPoly>;

struct EvalResult {
    JExpression symbolic;
    std::optional<LaurentPoly> value;
    std::vector<TrivialSymbol> missing;
};

JExpression eval_symbolic(int p, const SkeinNode& script);
EvalResult eval_script(int p, const SkeinNode& script, const AssignmentTable& table);
std::optional<LaurentPoly> lookup(int p, const TrivialSymbol& s, const AssignmentTable& table);

// JSON formats
LaurentPoly parse_poly_json(const std::string& text);
std::string poly_to_json(const LaurentPoly& f);
AssignmentTable parse_table(const std::string& text, int& p);
JExpression parse_expression(const std::string& text, int& p);
std::string expression_to_json(const JExpression& e);
SkeinNode parse_script(const std::string& text, int& p);

}
