// weylsheaf: command-line front end.
//
//   weylsheaf diagram E7
//   weylsheaf cuspidal E8 --format json
//   weylsheaf relative E7 --levi 2,3,4,5 [--normalizer]
//   weylsheaf enumerate F4 [--count] [--format text|json|csv]
//   weylsheaf count E8
//   weylsheaf mset S5
//   weylsheaf verify --max-rank 7 [--heavy]
//
// Exit codes: 0 success, 1 input error, 2 size bound exceeded, 3 failed check.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylsheaf/e8_classes.hpp"
#include "weylsheaf/weylsheaf.hpp"

using namespace weylsheaf;

namespace {

struct Settings {
    std::string type_spec;
    std::string format = "text";
    std::string out_path;
    std::string levi;
    bool count_only = false;
    bool normalizer = false;
    bool heavy = false;
    int max_rank = 8;
    std::size_t bound = group::Bounds{}.enumeration;
    std::size_t table_bound = group::Bounds{}.table;
};

class CheckFailed : public Error {
public:
    using Error::Error;
};

group::Bounds bounds_of(const Settings& s) { return {s.bound, s.table_bound}; }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::vector<int> parse_levi(const std::string& text, int rank) {
    std::vector<int> out;
    if (text.empty() || text == "-" || text == "{}") return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos)
            throw InputError("bad node list '" + text + "'");
        const int v = std::stoi(tok);
        if (v < 1 || v > rank) throw InputError("node " + tok + " out of range 1.." + std::to_string(rank));
        out.push_back(v - 1);
    }
    return out;
}

std::string cycle_string(const group::Permutation& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == s) continue;
        out += '(';
        for (std::size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = 1;
            if (x != s) out += ',';
            out += std::to_string(x + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

void run_diagram(const Settings& s, std::ostream& os) {
    const CartanType t = parse_cartan_type(s.type_spec);
    const RootSystem rs(t);
    if (s.format == "json") {
        Json nodes = Json::array();
        for (int i = 0; i < rs.rank(); ++i) {
            const auto [c, k] = rs.node_origin()[static_cast<std::size_t>(i)];
            nodes.push_back(Json{{"node", i + 1},
                                 {"component", t.factors()[static_cast<std::size_t>(c)].name()},
                                 {"bourbaki", k + 1},
                                 {"norm", rs.gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]}});
        }
        Json j{{"type", t.name()},
               {"aliases", t.aliases()},
               {"rank", rs.rank()},
               {"nu", rs.positive_count()},
               {"order", group_order(t)},
               {"nodes", std::move(nodes)},
               {"cartan_matrix", matrix_json(rs.cartan_matrix())}};
        os << j.dump(2) << "\n";
        return;
    }
    os << "type    " << t.name() << "\n";
    for (const auto& a : t.aliases()) os << "alias   " << a << "\n";
    os << "rank    " << rs.rank() << "\n";
    os << "nu      " << rs.positive_count() << "\n";
    os << "|W|     " << group_order(t) << "\n";
    os << "nodes\n";
    for (int i = 0; i < rs.rank(); ++i) {
        const auto [c, k] = rs.node_origin()[static_cast<std::size_t>(i)];
        os << "  " << pad(std::to_string(i + 1), 4) << t.factors()[static_cast<std::size_t>(c)].name() << " node " << k + 1
           << (rs.gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == 2 && t.factors()[static_cast<std::size_t>(c)].family != Family::A &&
                       t.factors()[static_cast<std::size_t>(c)].family != Family::D && t.factors()[static_cast<std::size_t>(c)].family != Family::E
                   ? " (short)"
                   : "")
           << "\n";
    }
    os << "cartan matrix\n";
    for (const auto& row : rs.cartan_matrix()) {
        os << " ";
        for (int v : row) os << " " << (v >= 0 ? " " : "") << v;
        os << "\n";
    }
}

void run_cuspidal(const Settings& s, std::ostream& os) {
    const CartanType t = parse_cartan_type(s.type_spec);
    const auto set = cuspidal_set(t);
    if (s.format == "json") {
        Json labels = Json::array();
        for (const auto& z : set) labels.push_back(to_string(z));
        os << Json{{"type", t.name()}, {"count", set.size()}, {"labels", std::move(labels)}}.dump(2) << "\n";
        return;
    }
    if (s.format == "csv") {
        os << "type,label\n";
        for (const auto& z : set) os << csv_field(t.name()) << "," << csv_field(to_string(z)) << "\n";
        return;
    }
    os << t.name() << ": " << set.size() << " cuspidal label" << (set.size() == 1 ? "" : "s") << "\n";
    for (const auto& z : set) os << "  " << to_string(z) << "\n";
}

void run_relative(const Settings& s, std::ostream& os) {
    const CartanType t = parse_cartan_type(s.type_spec);
    const RootSystem rs(t);
    const SubsetJ J = SubsetJ::from_indices(parse_levi(s.levi, rs.rank()));
    const auto g = relative_weyl_group(rs, J);
    std::optional<NormalizerReport> nr;
    if (s.normalizer) nr = normalizer_complement_check(rs, J, bounds_of(s));
    std::vector<std::tuple<int, int, int, Rational>> orders;
    for (std::size_t a = 0; a < g.complement.size(); ++a)
        for (std::size_t b = a + 1; b < g.complement.size(); ++b)
            orders.emplace_back(g.complement[a] + 1, g.complement[b] + 1, g.coxeter_matrix[a][b],
                                order_formula(rs, J, g.complement[a], g.complement[b]));

    if (s.format == "json") {
        Json j = to_json(g);
        j["levi"] = subdiagram_type(rs, J).name();
        Json ord = Json::array();
        for (const auto& [h, h2, m, f] : orders) ord.push_back(Json{{"h", h}, {"h2", h2}, {"order", m}});
        j["orders"] = std::move(ord);
        if (nr)
            j["normalizer"] = Json{{"normalizer_order", nr->normalizer_order},
                                   {"parabolic_order", nr->parabolic_order},
                                   {"relative_order", nr->relative_order},
                                   {"intersection_order", nr->intersection_order},
                                   {"complement", nr->holds()}};
        os << j.dump(2) << "\n";
        return;
    }
    os << "ambient   " << t.name() << "\n";
    os << "J         " << node_string(J) << "\n";
    os << "levi      " << subdiagram_type(rs, J).name() << "\n";
    os << "relative  " << g.identified_type.name() << "\n";
    for (std::size_t k = 0; k < g.complement.size(); ++k) {
        os << "sigma_" << g.complement[k] + 1 << "  length " << g.generators[k].length() << ", word";
        for (int i : g.words[k]) os << " " << i + 1;
        os << "\n";
    }
    for (const auto& [h, h2, m, f] : orders)
        os << "order(sigma_" << h << " sigma_" << h2 << ") = " << m << "\n";
    if (nr) {
        os << "|N(W_J)|  " << nr->normalizer_order << "\n";
        os << "|W_J|     " << nr->parabolic_order << "\n";
        os << "|W^{S/J}| " << nr->relative_order << "\n";
        os << "|W_J n W^{S/J}| " << nr->intersection_order << "\n";
        os << "complement " << (nr->holds() ? "yes" : "no") << "\n";
    }
}

void emit_counts(const CartanType& t, const std::string& format, std::ostream& os) {
    const auto rep = series_report(t);
    if (format == "json") {
        os << to_json(rep).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        os << "ambient,J,levi,zeta,relative,count\n";
        for (const auto& e : rep.series) {
            std::string J;
            for (int i : e.J.indices()) J += (J.empty() ? "" : " ") + std::to_string(i + 1);
            os << csv_field(t.name()) << "," << csv_field(J) << "," << csv_field(e.levi.name()) << "," << csv_field(e.zeta_string())
               << "," << csv_field(e.relative.name()) << "," << e.count << "\n";
        }
        return;
    }
    std::size_t wj = 0, wl = 0, wz = 0, wr = 0;
    for (const auto& e : rep.series) {
        wj = std::max(wj, node_string(e.J).size());
        wl = std::max(wl, e.levi.name().size());
        wz = std::max(wz, e.zeta_string().size());
        wr = std::max(wr, e.relative.name().size());
    }
    os << t.name() << ": total " << rep.total << "\n";
    for (const auto& e : rep.series)
        os << "  J=" << pad(node_string(e.J), wj) << "  levi=" << pad(e.levi.name(), wl) << "  zeta=" << pad(e.zeta_string(), wz)
           << "  relative=" << pad(e.relative.name(), wr) << "  count=" << e.count << "\n";
}

void run_enumerate(const Settings& s, std::ostream& os) {
    const CartanType t = parse_cartan_type(s.type_spec);
    if (s.count_only) {
        emit_counts(t, s.format, os);
        return;
    }
    if (s.format == "json") {
        os << "[";
        bool first = true;
        for_each_parameter(t, [&](const SheafParameter& p) {
            os << (first ? "\n" : ",\n") << to_json(p).dump();
            first = false;
        });
        os << (first ? "]\n" : "\n]\n");
    } else if (s.format == "csv") {
        os << csv_header() << "\n";
        for_each_parameter(t, [&](const SheafParameter& p) { os << csv_row(p) << "\n"; });
    } else {
        const auto n = for_each_parameter(t, [&](const SheafParameter& p) { os << text_row(p) << "\n"; });
        os << "total " << n << "\n";
    }
}

template <class Group, class Show>
void emit_mset(const Group& g, const std::string& name, const std::string& format, Show show, std::ostream& os) {
    const auto m = group::m_set(g);
    if (format == "json") {
        Json classes = Json::array();
        for (const auto& c : m.classes)
            classes.push_back(Json{{"rep", show(c.rep)},
                                   {"class_size", c.class_size},
                                   {"centralizer_order", c.centralizer_order},
                                   {"centralizer_classes", c.centralizer_classes},
                                   {"centralizer_degrees", c.centralizer_degrees}});
        os << Json{{"group", name}, {"order", m.group_order}, {"pairs", m.pairs.size()}, {"classes", std::move(classes)}}.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        os << "rep,class_size,centralizer_order,centralizer_classes\n";
        for (const auto& c : m.classes)
            os << csv_field(show(c.rep)) << "," << c.class_size << "," << c.centralizer_order << "," << c.centralizer_classes << "\n";
        return;
    }
    os << "group   " << name << "\n";
    os << "order   " << m.group_order << "\n";
    os << "classes " << m.classes.size() << "\n";
    for (const auto& c : m.classes)
        os << "  " << pad(show(c.rep), 24) << " size " << pad(std::to_string(c.class_size), 6) << " |Z| "
           << pad(std::to_string(c.centralizer_order), 6) << " Irr Z " << c.centralizer_classes << "\n";
    os << "|M|     " << m.pairs.size() << "\n";
}

void run_mset(const Settings& s, std::ostream& os) {
    const auto b = bounds_of(s);
    if (s.type_spec.rfind("weyl:", 0) == 0) {
        // Weyl groups use the compact simple-root encoding; reps print as words.
        const RootSystem rs(parse_cartan_type(s.type_spec.substr(5)));
        group::WeylGroup W(group::WeylRep(std::make_shared<const RootSystem>(rs)), b);
        const auto& rep = W.rep();
        auto show = [&](const group::WeylKey& k) {
            const WeylElement w = rep.to_element(k);
            const auto word = reduced_word(rs, w);
            if (word.empty()) return std::string("1");
            std::string out;
            for (int i : word) out += (out.empty() ? "s" : " s") + std::to_string(i + 1);
            return out;
        };
        emit_mset(W, s.type_spec, s.format, show, os);
        return;
    }
    const auto g = group::parse_group_spec(s.type_spec, b);
    emit_mset(g, s.type_spec, s.format, cycle_string, os);
}

void run_verify(const Settings& s, std::ostream& os) {
    verify::Options o;
    o.max_rank = s.max_rank;
    o.classical_max_rank = s.max_rank + 4;
    o.heavy = s.heavy;
    o.bounds = bounds_of(s);
    bool all = true;
    auto report = [&](const verify::CheckResult& r) {
        all = all && r.passed;
        os << (r.passed ? "ok    " : "FAIL  ") << r.name << ": " << r.detail << "\n";
        os.flush();
    };
    verify::run_all(o, report);
    if (s.heavy) report(verify::e8_class_count(o));
    if (!all) throw CheckFailed("verification failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl group combinatorics: cuspidal labels, relative Weyl groups, (J, epsilon, zeta) parameters"};
    app.require_subcommand(1);
    Settings s;
    app.add_option("--out", s.out_path, "Write output to a file instead of stdout");
    app.add_option("--bound", s.bound, "Cap on the number of enumerated group elements");
    app.add_option("--table-bound", s.table_bound, "Cap on the order of groups whose character table is computed");

    auto with_format = [&](CLI::App* c) {
        c->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto* diagram = app.add_subcommand("diagram", "Canonical type, node numbering and Cartan matrix");
    diagram->add_option("type", s.type_spec, "Cartan type, e.g. E8 or A2+G2")->required();
    with_format(diagram);
    auto* cuspidal = app.add_subcommand("cuspidal", "Cuspidal labels of a type");
    cuspidal->add_option("type", s.type_spec)->required();
    with_format(cuspidal);
    auto* relative = app.add_subcommand("relative", "Relative Weyl group of a subset J");
    relative->add_option("type", s.type_spec)->required();
    relative->add_option("--levi", s.levi, "Comma-separated Bourbaki node indices of J")->required();
    relative->add_flag("--normalizer", s.normalizer, "Brute-force the normalizer complement check");
    with_format(relative);
    auto* enumerate = app.add_subcommand("enumerate", "All parameters (J, epsilon, zeta)");
    enumerate->add_option("type", s.type_spec)->required();
    enumerate->add_flag("--count", s.count_only, "Series counts only");
    with_format(enumerate);
    auto* count = app.add_subcommand("count", "Series counts and total");
    count->add_option("type", s.type_spec)->required();
    with_format(count);
    auto* mset = app.add_subcommand("mset", "Pairs (g, rho) for a finite group");
    mset->add_option("group", s.type_spec, "S<n>, Z<n>, Z2^<k>, Dih<m>, weyl:<type>, or cycle notation")->required();
    with_format(mset);
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant checks");
    verify_cmd->add_option("--max-rank", s.max_rank, "Largest rank checked (classical types go 4 further)")->check(CLI::Range(1, 8));
    verify_cmd->add_flag("--heavy", s.heavy, "Also run the E8 class-count job");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ofstream file;
    if (!s.out_path.empty()) {
        file.open(s.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << s.out_path << "\n";
            return 1;
        }
    }
    std::ostream& os = s.out_path.empty() ? std::cout : file;

    try {
        if (*diagram) run_diagram(s, os);
        else if (*cuspidal) run_cuspidal(s, os);
        else if (*relative) run_relative(s, os);
        else if (*enumerate) run_enumerate(s, os);
        else if (*count) emit_counts(parse_cartan_type(s.type_spec), s.format, os);
        else if (*mset) run_mset(s, os);
        else if (*verify_cmd) run_verify(s, os);
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CuspidalityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CheckFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    os.flush();
    return 0;
}
