#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lensgrid/floer.hpp"
#include "lensgrid/grading.hpp"
#include "lensgrid/grid.hpp"
#include "lensgrid/homfly.hpp"
#include "lensgrid/moves.hpp"

using namespace lensgrid;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, invalid = 1, io = 2, refused = 3, cap_exceeded = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw IoError("cannot write " + out);
    f << text;
}

std::string alex_text(const std::vector<Rational>& a, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? sep : "") + to_string(a[i]);
    return s;
}

std::string format_homology(const HomologyTable& t, const std::string& format)
{
    std::ostringstream s;
    if (format == "json") {
        ojson j;
        j["p"] = t.p;
        j["q"] = t.q;
        j["n"] = t.n;
        j["components"] = t.components();
        j["k"] = t.k;
        j["table"] = ojson::array();
        for (const auto& r : t.rows) {
            ojson row;
            row["spin"] = r.spin;
            row["maslov"] = to_string(r.maslov);
            row["alexander"] = ojson::array();
            for (const auto& a : r.alexander) row["alexander"].push_back(to_string(a));
            row["dim"] = r.dim;
            j["table"].push_back(row);
        }
        s << j.dump(2) << "\n";
    } else if (format == "csv") {
        s << "spin,maslov,alexander,dim\n";
        for (const auto& r : t.rows)
            s << r.spin << "," << to_string(r.maslov) << "," << alex_text(r.alexander, ";") << "," << r.dim << "\n";
    } else {
        s << "p=" << t.p << " q=" << t.q << " n=" << t.n << " components=" << t.components() << " total=" << t.total()
          << "\n";
        for (const auto& r : t.rows)
            s << "Z2[" << r.spin << ", " << to_string(r.maslov) << ", (" << alex_text(r.alexander, ", ") << ")]"
              << (r.dim > 1 ? "^" + std::to_string(r.dim) : "") << "\n";
    }
    return s.str();
}

std::string format_gradings(const GridDiagram& g, const std::string& format, long long cap,
                            AlexanderNormalization norm)
{
    GeneratorSpace space(g.p, g.n, cap);
    GradingEngine eng(g, norm);
    std::ostringstream s;
    ojson rows = ojson::array();
    if (format == "csv") s << "perm,m,spin,maslov,alexander\n";
    for (long long i = 0; i < space.size(); ++i) {
        Generator x = space.at(i);
        Grading gr = eng.grading(x);
        std::vector<int> perm, m;
        for (int r = 0; r < g.n; ++r) {
            perm.push_back(x.sigma(r, g.n));
            m.push_back(x.m(r, g.n));
        }
        auto join = [](const std::vector<int>& v, const char* sep) {
            std::string o;
            for (std::size_t k = 0; k < v.size(); ++k) o += (k ? sep : "") + std::to_string(v[k]);
            return o;
        };
        if (format == "json") {
            ojson r;
            r["perm"] = perm;
            r["m"] = m;
            r["spin"] = gr.spin;
            r["maslov"] = to_string(gr.maslov);
            r["alexander"] = ojson::array();
            for (const auto& a : gr.alexander) r["alexander"].push_back(to_string(a));
            rows.push_back(r);
        } else if (format == "csv") {
            s << join(perm, " ") << "," << join(m, " ") << "," << gr.spin << "," << to_string(gr.maslov) << ","
              << alex_text(gr.alexander, ";") << "\n";
        } else {
            s << "{[" << join(perm, " ") << "],(" << join(m, ",") << ")}  S=" << gr.spin
              << "  M=" << to_string(gr.maslov) << "  A=(" << alex_text(gr.alexander, ", ") << ")\n";
        }
    }
    if (format == "json") s << rows.dump(2) << "\n";
    return s.str();
}

std::string format_components(const GridDiagram& g, const std::string& format)
{
    ComponentInfo info = trace_components(g);
    std::ostringstream s;
    if (format == "json") {
        ojson j;
        j["components"] = info.size();
        j["list"] = ojson::array();
        for (int c = 0; c < info.size(); ++c)
            j["list"].push_back({{"k", info.k[c]},
                                 {"class", info.classes[c]},
                                 {"o_rows", info.components[c].o_rows},
                                 {"x_rows", info.components[c].x_rows}});
        s << j.dump(2) << "\n";
        return s.str();
    }
    s << info.size() << " component" << (info.size() == 1 ? "" : "s") << "\n";
    for (int c = 0; c < info.size(); ++c) {
        s << "component " << c << ": k=" << info.k[c] << " class=" << info.classes[c] << " rows(O)=";
        for (std::size_t i = 0; i < info.components[c].o_rows.size(); ++i)
            s << (i ? "," : "") << info.components[c].o_rows[i];
        s << "\n";
    }
    return s.str();
}

AlexanderNormalization parse_norm(const std::string& s)
{
    return s == "symmetric" ? AlexanderNormalization::symmetric : AlexanderNormalization::standard;
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer list: " + s);
        }
    }
    return v;
}

struct Golden {
    std::string name, file;
};

int reproduce(const std::string& dir, bool update)
{
    namespace fs = std::filesystem;
    int failures = 0;
    auto check = [&](const std::string& label, const std::string& got, const std::string& golden) {
        fs::path path = fs::path(dir) / "golden" / golden;
        if (update) {
            emit(got, path.string());
            std::cout << label << ": written\n";
            return;
        }
        std::string want;
        try {
            want = read_file(path.string());
        } catch (const IoError&) {
            std::cout << label << ": MISSING golden file " << golden << "\n";
            ++failures;
            return;
        }
        bool same = want == got;
        std::cout << label << ": " << (same ? "match" : "DIFFERS") << "\n";
        if (!same) ++failures;
    };
    for (const char* name : {"g1", "g2", "la", "lb"}) {
        GridDiagram g = parse_diagram(read_file((fs::path(dir) / (std::string(name) + ".json")).string()));
        check(std::string(name) + " gradings", format_gradings(g, "csv", configured_cap(), AlexanderNormalization::standard),
              std::string(name) + "_gradings.csv");
        check(std::string(name) + " homology", format_homology(homology(g), "json"),
              std::string(name) + "_homology.json");
    }
    struct T {
        int p, q;
        std::vector<int> counts;
        const char* golden;
    };
    for (const T& t : {T{5, 2, {0, 1, 0, 0, 0}, "trivial_5_2_k1.json"}, T{5, 2, {0, 0, 1, 0, 0}, "trivial_5_2_k2.json"},
                       T{4, 1, {1, 0, 1, 2}, "trivial_4_1_1012.json"}}) {
        GridDiagram g = make_trivial_link(t.p, t.q, t.counts);
        auto rec = recognize_trivial(g);
        std::string text = serialize_diagram(g) + "\n" + (rec ? rec->render() : std::string("not trivial")) + "\n";
        check(std::string("trivial ") + t.golden, text, t.golden);
    }
    std::cout << (failures ? "FAILED" : "all fixtures match") << "\n";
    return failures ? Exit::invalid : Exit::ok;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"lensgrid: grid diagrams, link Floer homology and skein calculus for links in lens spaces"};
    app.require_subcommand(1);

    std::string file, out, format = "text", check, norm = "standard";
    long long cap = configured_cap();

    auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
    validate_cmd->add_option("FILE", file)->required();

    auto* comp_cmd = app.add_subcommand("components", "trace link components and homology classes");
    comp_cmd->add_option("FILE", file)->required();
    comp_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* grad_cmd = app.add_subcommand("gradings", "spin, Maslov and Alexander degree of every generator");
    grad_cmd->add_option("FILE", file)->required();
    grad_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    grad_cmd->add_option("--cap", cap);
    grad_cmd->add_option("--alexander", norm)->check(CLI::IsMember({"standard", "symmetric"}));

    auto* hom_cmd = app.add_subcommand("homology", "multigraded GF(2) homology");
    hom_cmd->add_option("FILE", file)->required();
    hom_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    hom_cmd->add_option("--cap", cap);
    hom_cmd->add_option("--check", check)->check(CLI::IsMember({"d2", "orientation"}));
    hom_cmd->add_option("--alexander", norm)->check(CLI::IsMember({"standard", "symmetric"}));

    auto* lift_cmd = app.add_subcommand("lift", "standard grid diagram of the lift to S^3");
    lift_cmd->add_option("FILE", file)->required();
    lift_cmd->add_option("-o", out);

    auto* rev_cmd = app.add_subcommand("reverse", "swap O and X");
    rev_cmd->add_option("FILE", file)->required();
    rev_cmd->add_option("-o", out);

    std::string op, family = "X", corner = "NW", axis = "col", site;
    int marking = 0, at = 0, shift = 1;
    auto* move_cmd = app.add_subcommand("move", "apply a grid move");
    move_cmd->add_option("FILE", file)->required();
    move_cmd->add_option("--op", op)->required()->check(CLI::IsMember({"stabilize", "destabilize", "commute", "cycle"}));
    move_cmd->add_option("--family", family)->check(CLI::IsMember({"X", "O"}));
    move_cmd->add_option("--corner", corner)->check(CLI::IsMember({"NW", "NE", "SW", "SE"}));
    move_cmd->add_option("--marking", marking, "row of the chosen marking");
    move_cmd->add_option("--axis", axis)->check(CLI::IsMember({"row", "col"}));
    move_cmd->add_option("--at", at, "first index of the adjacent pair");
    move_cmd->add_option("--shift", shift);
    move_cmd->add_option("--site", site, "a,b of the lower-left cell of the block to remove");
    move_cmd->add_option("-o", out);

    int p = 0, q = 0;
    std::string counts, recognize;
    auto* triv_cmd = app.add_subcommand("trivial", "build or recognize trivial-form diagrams");
    triv_cmd->add_option("--p", p);
    triv_cmd->add_option("--q", q);
    triv_cmd->add_option("--counts", counts, "per-class counts c0,c1,...");
    triv_cmd->add_option("--recognize", recognize, "diagram file to test");
    triv_cmd->add_option("-o", out);

    auto* homfly_cmd = app.add_subcommand("homfly", "skein calculus");
    homfly_cmd->require_subcommand(1);
    std::string table;
    bool symbolic = false;
    auto* eval_cmd = homfly_cmd->add_subcommand("eval", "evaluate a skein script");
    eval_cmd->add_option("SCRIPT", file)->required();
    eval_cmd->add_option("--table", table);
    eval_cmd->add_flag("--symbolic", symbolic);
    auto* hrev_cmd = homfly_cmd->add_subcommand("reverse", "orientation reversal of an expression");
    hrev_cmd->add_option("EXPRFILE", file)->required();

    std::string data_dir = LENSGRID_DATA_DIR;
    bool update = false;
    auto* repro_cmd = app.add_subcommand("reproduce-appendix", "recompute bundled fixtures and diff against golden files");
    repro_cmd->add_option("--data", data_dir);
    repro_cmd->add_flag("--update", update, "rewrite the golden files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Exit::ok : Exit::io;
    }
    if (cap < 1) {
        std::cerr << "cap must be at least 1\n";
        return Exit::io;
    }

    try {
        if (*validate_cmd) {
            GridDiagram g = parse_diagram(read_file(file));
            std::cout << "valid: p=" << g.p << " q=" << g.q << " n=" << g.n << "\n";
        } else if (*comp_cmd) {
            emit(format_components(parse_diagram(read_file(file)), format), "");
        } else if (*grad_cmd) {
            emit(format_gradings(parse_diagram(read_file(file)), format, cap, parse_norm(norm)), "");
        } else if (*hom_cmd) {
            GridDiagram g = parse_diagram(read_file(file));
            ComplexOptions opt{cap, parse_norm(norm)};
            if (check == "orientation") {
                auto rep = compare_orientation(g, opt);
                std::cout << "k=" << rep.k << " bijection " << (rep.holds ? "holds" : "FAILS") << " valid k:";
                for (int k : rep.valid_ks) std::cout << " " << k;
                std::cout << "\n" << format_homology(rep.forward, format);
                return rep.holds ? Exit::ok : Exit::invalid;
            }
            ChainComplex cx(g, opt);
            if (check == "d2") {
                auto d2 = verify_d_squared(cx);
                auto laws = verify_degree_laws(cx);
                std::cout << "d2: " << (d2.ok ? "ok" : "FAILS") << "  degree laws: " << (laws.ok ? "ok" : "FAIL")
                          << "\n";
                if (!d2.ok) {
                    std::cout << "offender:";
                    for (int a : d2.offender->a) std::cout << " " << a;
                    std::cout << "\n";
                }
                if (!d2.ok || !laws.ok) return Exit::invalid;
            }
            emit(format_homology(homology(cx), format), "");
        } else if (*lift_cmd) {
            emit(serialize_diagram(lift_diagram(parse_diagram(read_file(file)))) + "\n", out);
        } else if (*rev_cmd) {
            emit(serialize_diagram(reverse_orientation(parse_diagram(read_file(file)))) + "\n", out);
        } else if (*move_cmd) {
            GridDiagram g = parse_diagram(read_file(file));
            MoveSpec m;
            m.axis = axis == "row" ? Axis::rows : Axis::columns;
            if (op == "stabilize") {
                m.kind = MoveSpec::Kind::stabilize;
                m.index = marking;
                m.family = family == "O" ? Family::O : Family::X;
                m.corner = parse_corner(corner);
            } else if (op == "destabilize") {
                m.kind = MoveSpec::Kind::destabilize;
                auto v = parse_int_list(site);
                if (v.size() != 2) throw std::invalid_argument("--site expects a,b");
                m.site = {v[0], v[1]};
            } else if (op == "commute") {
                m.kind = MoveSpec::Kind::commute;
                m.index = at;
            } else {
                m.kind = MoveSpec::Kind::cycle;
                m.index = shift;
            }
            emit(serialize_diagram(apply_move(g, m)) + "\n", out);
        } else if (*triv_cmd) {
            if (!recognize.empty()) {
                auto rec = recognize_trivial(parse_diagram(read_file(recognize)));
                if (!rec) {
                    std::cout << "not in trivial form\n";
                } else {
                    std::cout << rec->render() << "  (ascending reading " << rec->render_ascending() << ")\n";
                }
            } else {
                if (p < 1 || counts.empty()) throw std::invalid_argument("trivial needs --p, --q and --counts");
                emit(serialize_diagram(make_trivial_link(p, q, parse_int_list(counts))) + "\n", out);
            }
        } else if (*eval_cmd) {
            int pp = 0;
            SkeinNode script = parse_script(read_file(file), pp);
            AssignmentTable t;
            if (!table.empty() && !symbolic) t = parse_table(read_file(table), pp);
            auto res = eval_script(pp, script, t);
            std::cout << "J = " << res.symbolic.to_string() << "\n";
            if (!symbolic) {
                if (res.value)
                    std::cout << "value = " << res.value->to_string() << "\n";
                else if (!table.empty()) {
                    std::cout << "missing table entries:";
                    for (const auto& s : res.missing) std::cout << " " << s.render();
                    std::cout << "\n";
                }
            }
        } else if (*hrev_cmd) {
            int pp = 0;
            JExpression e = parse_expression(read_file(file), pp);
            std::cout << expression_to_json(reverse_expression(e)) << "\n";
        } else if (*repro_cmd) {
            return reproduce(data_dir, update);
        }
    } catch (const ValidationError& e) {
        std::cerr << "invalid diagram\n";
        for (const auto& v : e.report.violations) std::cerr << "  " << v << "\n";
        return Exit::invalid;
    } catch (const MoveRefused& e) {
        std::cerr << e.what() << "\n";
        return Exit::refused;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << " (raise with --cap or LENSGRID_CAP)\n";
        return Exit::cap_exceeded;
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return Exit::io;
    } catch (const DiagramError& e) {
        std::cerr << e.what() << "\n";
        return Exit::invalid;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return Exit::io;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return Exit::io;
    }
    return Exit::ok;
}
