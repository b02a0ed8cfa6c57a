// Command-line front end: tables, traces and scans over the hlattice core,
// emitted as CSV or JSON with deterministic ordering.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 when a scan or
// solve finds no solution (so harnesses can alarm on counterexamples).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlattice/errors.hpp"
#include "hlattice/goldbach2.hpp"
#include "hlattice/goldbach3.hpp"
#include "hlattice/hcore.hpp"
#include "hlattice/intervals.hpp"
#include "hlattice/prachar.hpp"
#include "hlattice/sieve.hpp"
#include "hlattice/twins.hpp"

namespace {

using nlohmann::json;
namespace hl = hlattice;

struct Output {
    std::string format;
    std::string path; // empty = standard output

    int emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return 0;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open '" << path << "' for writing\n";
            return 1;
        }
        file << text;
        return file ? 0 : 1;
    }
};

std::shared_ptr<Output> add_output_opts(CLI::App* cmd, const std::string& def) {
    auto out = std::make_shared<Output>();
    out->format = def;
    cmd->add_option("--format", out->format, "Output format (default " + def + ")")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", out->path, "Write to this file instead of stdout");
    return out;
}

std::int64_t parse_i64(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        throw CLI::ValidationError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw CLI::ValidationError("expected an integer, got '" + s + "'");
    return v;
}

std::pair<std::int64_t, std::int64_t> parse_point(const std::string& s) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected X,Y but got '" + s + "'");
    return {parse_i64(s.substr(0, comma)), parse_i64(s.substr(comma + 1))};
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// ---- classify ----------------------------------------------------------

int cmd_classify(const std::string& arg, const Output& out) {
    const std::int64_t x = parse_i64(arg);
    const auto [traeger, branch] = hl::traeger_of(x);
    const hl::MemberClass mc = hl::sieve::member_class(x);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "value,traeger,branch,class\n"
            << x << ',' << traeger << ',' << hl::branch_char(branch) << ','
            << hl::to_string(mc) << '\n';
        return out.emit(csv.str());
    }
    json j{{"value", x},
           {"traeger", traeger},
           {"branch", std::string(1, hl::branch_char(branch))},
           {"class", hl::to_string(mc)}};
    return out.emit(json_text(j));
}

// ---- intervals ---------------------------------------------------------

int cmd_intervals(std::int64_t p_max, bool by_gap, const Output& out) {
    const auto rows = hl::intervals::interval_table(
        p_max, by_gap ? hl::intervals::TableOrder::by_gap
                      : hl::intervals::TableOrder::ascending_p);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "p,q,L,primes_plus,primes_minus,multiples_plus,multiples_minus,d\n";
        for (const auto& r : rows)
            csv << r.p << ',' << r.q << ',' << r.length << ',' << r.primes_plus
                << ',' << r.primes_minus << ',' << r.multiples_plus << ','
                << r.multiples_minus << ',' << r.gap << '\n';
        return out.emit(csv.str());
    }
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"p", r.p},
                           {"q", r.q},
                           {"L", r.length},
                           {"primes_plus", r.primes_plus},
                           {"primes_minus", r.primes_minus},
                           {"multiples_plus", r.multiples_plus},
                           {"multiples_minus", r.multiples_minus},
                           {"d", r.gap}});
    return out.emit(json_text(arr));
}

// ---- goldbach2 ---------------------------------------------------------

json census_json(const hl::goldbach2::PairCensus& c) {
    return json{{"e", c.e},           {"quadrant", c.quadrant},
                {"A", c.a},           {"p_first", c.p_first},
                {"v_first", c.v_first}, {"p_second", c.p_second},
                {"v_second", c.v_second}, {"pp", c.n_pp},
                {"pv", c.n_pv},       {"vp", c.n_vp},
                {"vv", c.n_vv},
                {"identity_ok", hl::goldbach2::census_identity_check(c) ? 1 : 0}};
}

int cmd_g2_census(std::int64_t e, std::int64_t quadrant, const Output& out) {
    const int q = quadrant == 0
                      ? hl::goldbach2::compatible_quadrants(e).front()
                      : static_cast<int>(quadrant);
    const auto c = hl::goldbach2::census(e, q);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "e,quadrant,A,p_first,v_first,p_second,v_second,pp,pv,vp,vv,identity_ok\n"
            << c.e << ',' << c.quadrant << ',' << c.a << ',' << c.p_first << ','
            << c.v_first << ',' << c.p_second << ',' << c.v_second << ','
            << c.n_pp << ',' << c.n_pv << ',' << c.n_vp << ',' << c.n_vv << ','
            << (hl::goldbach2::census_identity_check(c) ? 1 : 0) << '\n';
        return out.emit(csv.str());
    }
    return out.emit(json_text(census_json(c)));
}

int cmd_g2_solve(std::int64_t e, const Output& out) {
    const auto sol = hl::goldbach2::goldbach_solutions(e);
    int rc = 0;
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "x,y\n";
        for (const auto& [x, y] : sol.pairs) csv << x << ',' << y << '\n';
        rc = out.emit(csv.str());
    } else {
        json pairs = json::array();
        for (const auto& [x, y] : sol.pairs) pairs.push_back(json::array({x, y}));
        json j{{"e", sol.e},
               {"residue", sol.residue},
               {"solutions", pairs},
               {"count", sol.pairs.size()}};
        rc = out.emit(json_text(j));
    }
    return rc != 0 ? rc : (sol.pairs.empty() ? 3 : 0);
}

int cmd_g2_scan(std::int64_t lo, std::int64_t hi, int jobs, const Output& out) {
    const auto rep = hl::goldbach2::scan_goldbach(lo, hi, jobs);
    int rc = 0;
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "e,count\n";
        for (std::size_t i = 0; i < rep.counts.size(); ++i)
            csv << rep.e_lo + 2 * static_cast<std::int64_t>(i) << ','
                << rep.counts[i] << '\n';
        rc = out.emit(csv.str());
    } else {
        json j{{"e_lo", rep.e_lo},
               {"e_hi", rep.e_hi},
               {"evens", rep.counts.size()},
               {"min_count", rep.min_count},
               {"min_count_e", rep.min_count_e},
               {"no_solution", rep.no_solution},
               {"identity_checked", rep.identity_checked},
               {"identity_failures", rep.identity_failures}};
        rc = out.emit(json_text(j));
    }
    return rc != 0 ? rc : (rep.no_solution.empty() ? 0 : 3);
}

// ---- twins -------------------------------------------------------------

int cmd_twins_list(std::int64_t limit, const Output& out) {
    const auto pairs = hl::twins::twin_pairs(limit);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "s,minus_value,plus_value\n";
        for (const auto& t : pairs)
            csv << t.traeger << ',' << t.minus_value << ',' << t.plus_value << '\n';
        return out.emit(csv.str());
    }
    json arr = json::array();
    for (const auto& t : pairs)
        arr.push_back(json{{"s", t.traeger},
                           {"minus_value", t.minus_value},
                           {"plus_value", t.plus_value}});
    return out.emit(json_text(arr));
}

int cmd_twins_census(std::int64_t p, const Output& out) {
    const auto dc = hl::twins::diagonal_census(p);
    const auto& c = dc.counts;
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "p,L,v_minus,p_minus,v_plus,p_plus,vv,pv,vp,pp\n"
            << dc.p << ',' << dc.length << ',' << c.v_first << ',' << c.p_first
            << ',' << c.v_second << ',' << c.p_second << ',' << c.n_vv << ','
            << c.n_pv << ',' << c.n_vp << ',' << c.n_pp << '\n';
        return out.emit(csv.str());
    }
    json j{{"p", dc.p},         {"q", dc.q},          {"L", dc.length},
           {"v_minus", c.v_first}, {"p_minus", c.p_first},
           {"v_plus", c.v_second}, {"p_plus", c.p_second},
           {"vv", c.n_vv},      {"pv", c.n_pv},       {"vp", c.n_vp},
           {"pp", c.n_pp}};
    return out.emit(json_text(j));
}

void streichung_step_csv(std::ostringstream& csv, int step,
                         const std::vector<hl::twins::DiagonalRow>& rows) {
    std::int64_t index = 0;
    for (const auto& r : rows)
        csv << step << ',' << hl::to_string(r.type) << ',' << r.row << ','
            << ++index << ',' << r.minus_value << '\n';
}

json rows_json(const std::vector<hl::twins::DiagonalRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"row", r.row},
                           {"traeger", r.traeger},
                           {"minus_value", r.minus_value},
                           {"plus_value", r.plus_value},
                           {"type", hl::to_string(r.type)}});
    return arr;
}

int cmd_twins_streichung(std::int64_t p, const Output& out) {
    const auto tr = hl::twins::streichung(p);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "step,type,row,index,value\n";
        streichung_step_csv(csv, 1, tr.initial.rows);
        streichung_step_csv(csv, 2, tr.sorted_rows);
        streichung_step_csv(csv, 3, tr.after_overhang);
        streichung_step_csv(csv, 4, tr.after_balance);
        streichung_step_csv(csv, 5, tr.final_rows);
        return out.emit(csv.str());
    }
    const auto& f = tr.final_counts;
    json j{{"p", tr.p},
           {"q", tr.initial.q},
           {"L", tr.initial.length},
           {"k3", tr.k3},
           {"k4", tr.k4},
           {"k4_type", hl::to_string(tr.k4_type)},
           {"steps",
            json{{"1", rows_json(tr.initial.rows)},
                 {"2", rows_json(tr.sorted_rows)},
                 {"3", rows_json(tr.after_overhang)},
                 {"4", rows_json(tr.after_balance)},
                 {"5", rows_json(tr.final_rows)}}},
           {"final", json{{"vv", f.n_vv}, {"pv", f.n_pv}, {"vp", f.n_vp}, {"pp", f.n_pp}}}};
    return out.emit(json_text(j));
}

int cmd_twins_general(std::int64_t offset, std::int64_t limit, const Output& out) {
    const auto pairs = hl::twins::generalized_twins(offset, limit);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "a,b\n";
        for (const auto& [a, b] : pairs) csv << a << ',' << b << '\n';
        return out.emit(csv.str());
    }
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    json j{{"offset", offset}, {"limit", limit}, {"pairs", arr},
           {"count", pairs.size()}};
    return out.emit(json_text(j));
}

// ---- prachar -----------------------------------------------------------

int cmd_prachar_points(std::int64_t limit, const Output& out) {
    const auto points = hl::prachar::ppt_lattice_points(limit);
    auto prime = [](std::int64_t v) {
        return hl::sieve::is_prime(static_cast<std::uint64_t>(v < 0 ? -v : v));
    };
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "x,y,x_prime,y_prime,solution\n";
        for (const auto& pt : points) {
            const std::int64_t x = pt.x.value();
            const std::int64_t y = pt.y.value();
            const int xp = prime(x) ? 1 : 0;
            const int yp = prime(y) ? 1 : 0;
            csv << x << ',' << y << ',' << xp << ',' << yp << ',' << (xp & yp)
                << '\n';
        }
        return out.emit(csv.str());
    }
    json arr = json::array();
    for (const auto& pt : points) {
        const std::int64_t x = pt.x.value();
        const std::int64_t y = pt.y.value();
        const bool xp = prime(x);
        const bool yp = prime(y);
        arr.push_back(json{{"x", x},
                           {"y", y},
                           {"x_prime", xp ? 1 : 0},
                           {"y_prime", yp ? 1 : 0},
                           {"solution", xp && yp ? 1 : 0}});
    }
    return out.emit(json_text(arr));
}

int cmd_prachar_line(const std::string& second_arg, const std::string& anchor_arg,
                     std::int64_t limit, const Output& out) {
    const auto [sx, sy] = parse_point(second_arg);
    const auto [ax, ay] = parse_point(anchor_arg);
    const auto line = hl::prachar::line_through(hl::lattice_point(sx, sy),
                                                hl::lattice_point(ax, ay));
    const auto sols = hl::prachar::line_solutions(line, limit);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "x,y\n";
        for (const auto& [x, y] : sols) csv << x << ',' << y << '\n';
        return out.emit(csv.str());
    }
    json pairs = json::array();
    for (const auto& [x, y] : sols) pairs.push_back(json::array({x, y}));
    json j{{"anchor", json::array({ax, ay})},
           {"second", json::array({sx, sy})},
           {"slope", json::array({line.dy, line.dx})},
           {"solutions", pairs},
           {"count", sols.size()}};
    return out.emit(json_text(j));
}

// ---- goldbach3 ---------------------------------------------------------

int cmd_g3_layer(std::int64_t s, const Output& out) {
    const auto layer = hl::goldbach3::octahedron_layer(s);
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "index,sign_x,sign_y,sign_z,rest_sum\n";
        for (const auto& sc : layer.subcubes)
            csv << sc.index << ',' << sc.signs[0] << ',' << sc.signs[1] << ','
                << sc.signs[2] << ',' << sc.rest_sum << '\n';
        return out.emit(csv.str());
    }
    json cubes = json::array();
    for (const auto& sc : layer.subcubes)
        cubes.push_back(json{{"index", sc.index},
                             {"signs", sc.signs},
                             {"rest_sum", sc.rest_sum}});
    json j{{"s", layer.s}, {"odd_numbers", layer.odd_numbers}, {"subcubes", cubes}};
    return out.emit(json_text(j));
}

int cmd_g3_solve(std::int64_t n, const Output& out) {
    const auto reps = hl::goldbach3::unordered_triples(n);
    const auto ordered = hl::goldbach3::triple_solutions(n);
    const std::int64_t min_comp = reps.empty() ? 0 : reps.front()[0];
    int rc = 0;
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "n,s,unordered_count,ordered_count,min_component\n"
            << n << ',' << hl::goldbach3::layer_of(n) << ',' << reps.size()
            << ',' << ordered.size() << ',' << min_comp << '\n';
        rc = out.emit(csv.str());
    } else {
        json unord = json::array();
        for (const auto& r : reps) unord.push_back(r);
        json ord = json::array();
        for (const auto& ts : ordered)
            ord.push_back(json{{"components", ts.components},
                               {"traegers", ts.traegers},
                               {"signs", ts.signs},
                               {"subcube", ts.subcube}});
        json j{{"n", n},
               {"layer", hl::goldbach3::layer_of(n)},
               {"unordered_count", reps.size()},
               {"ordered_count", ordered.size()},
               {"min_component", min_comp},
               {"unordered", unord},
               {"ordered", ord}};
        rc = out.emit(json_text(j));
    }
    return rc != 0 ? rc : (reps.empty() ? 3 : 0);
}

int cmd_g3_scan(std::int64_t lo, std::int64_t hi, int jobs, const Output& out) {
    const auto rep = hl::goldbach3::scan_3gh(lo, hi, jobs);
    int rc = 0;
    if (out.format == "csv") {
        std::ostringstream csv;
        csv << "n,s,unordered_count,ordered_count,min_component\n";
        for (std::size_t i = 0; i < rep.unordered.size(); ++i) {
            const std::int64_t n = rep.n_lo + 2 * static_cast<std::int64_t>(i);
            csv << n << ',' << hl::goldbach3::layer_of(n) << ','
                << rep.unordered[i] << ',' << rep.ordered[i] << ','
                << rep.min_component[i] << '\n';
        }
        rc = out.emit(csv.str());
    } else {
        json j{{"n_lo", rep.n_lo},
               {"n_hi", rep.n_hi},
               {"odds", rep.unordered.size()},
               {"min_unordered", rep.min_unordered},
               {"min_unordered_n", rep.min_unordered_n},
               {"no_solution", rep.no_solution}};
        rc = out.emit(json_text(j));
    }
    return rc != 0 ? rc : (rep.no_solution.empty() ? 0 : 3);
}

// ---- wiring ------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"Tables, traces and scans over the 6k+-1 prime lattice"};
    app.require_subcommand(1);
    int rc = 0;

    { // classify
        auto* cmd = app.add_subcommand("classify", "Lattice coordinates and class of a member");
        auto arg = std::make_shared<std::string>();
        cmd->add_option("value", *arg, "Member value (may be negative)")->required();
        auto out = add_output_opts(cmd, "json");
        cmd->callback([=, &rc] { rc = cmd_classify(*arg, *out); });
    }

    { // intervals
        auto* cmd = app.add_subcommand("intervals", "Classification statistics per prime-square interval");
        auto p_max = std::make_shared<std::int64_t>(0);
        auto by_gap = std::make_shared<bool>(false);
        cmd->add_option("--p-max", *p_max, "Largest interval-defining prime")->required();
        cmd->add_flag("--group-by-gap", *by_gap, "Order rows by prime gap, then p");
        auto out = add_output_opts(cmd, "csv");
        cmd->callback([=, &rc] { rc = cmd_intervals(*p_max, *by_gap, *out); });
    }

    { // goldbach2
        auto* g2 = app.add_subcommand("goldbach2", "Two-prime decompositions of even numbers");
        g2->require_subcommand(1);

        auto* cen = g2->add_subcommand("census", "Pair-type census of a rhombus side");
        auto e1 = std::make_shared<std::int64_t>(0);
        auto quad = std::make_shared<std::int64_t>(0);
        cen->add_option("e", *e1, "Even number > 8")->required();
        cen->add_option("--quadrant", *quad, "Quadrant 1..4 (default: first compatible)")
            ->check(CLI::Range(std::int64_t{1}, std::int64_t{4}));
        auto cen_out = add_output_opts(cen, "csv");
        cen->callback([=, &rc] { rc = cmd_g2_census(*e1, *quad, *cen_out); });

        auto* sol = g2->add_subcommand("solve", "All prime pairs summing to e");
        auto e2 = std::make_shared<std::int64_t>(0);
        sol->add_option("e", *e2, "Even number > 8")->required();
        auto sol_out = add_output_opts(sol, "json");
        sol->callback([=, &rc] { rc = cmd_g2_solve(*e2, *sol_out); });

        auto* scan = g2->add_subcommand("scan", "Solution counts for every even in a range");
        auto lo = std::make_shared<std::int64_t>(0);
        auto hi = std::make_shared<std::int64_t>(0);
        auto jobs = std::make_shared<int>(0);
        scan->add_option("lo", *lo, "Range start (>= 10)")->required();
        scan->add_option("hi", *hi, "Range end (inclusive)")->required();
        scan->add_option("--jobs", *jobs, "Worker threads (default: hardware)");
        auto scan_out = add_output_opts(scan, "json");
        scan->callback([=, &rc] { rc = cmd_g2_scan(*lo, *hi, *jobs, *scan_out); });
    }

    { // twins
        auto* tw = app.add_subcommand("twins", "Twin pairs and interval pair censuses");
        tw->require_subcommand(1);

        auto* list = tw->add_subcommand("list", "All twin pairs up to a limit");
        auto limit = std::make_shared<std::int64_t>(0);
        list->add_option("--limit", *limit, "Upper bound on the larger twin")->required();
        auto list_out = add_output_opts(list, "csv");
        list->callback([=, &rc] { rc = cmd_twins_list(*limit, *list_out); });

        auto* cen = tw->add_subcommand("census", "Pair-type census of the interval [p^2, q^2)");
        auto p1 = std::make_shared<std::int64_t>(0);
        cen->add_option("p", *p1, "Prime > 3")->required();
        auto cen_out = add_output_opts(cen, "csv");
        cen->callback([=, &rc] { rc = cmd_twins_census(*p1, *cen_out); });

        auto* str = tw->add_subcommand("streichung", "Two-step overhang removal trace");
        auto p2 = std::make_shared<std::int64_t>(0);
        str->add_option("p", *p2, "Prime >= 23")->required();
        auto str_out = add_output_opts(str, "csv");
        str->callback([=, &rc] { rc = cmd_twins_streichung(*p2, *str_out); });

        auto* gen = tw->add_subcommand("general", "Prime pairs at a fixed even distance");
        auto offset = std::make_shared<std::int64_t>(0);
        auto glimit = std::make_shared<std::int64_t>(0);
        gen->add_option("--offset", *offset, "Even distance a - b")->required();
        gen->add_option("--limit", *glimit, "Upper bound on the larger prime")->required();
        auto gen_out = add_output_opts(gen, "csv");
        gen->callback([=, &rc] { rc = cmd_twins_general(*offset, *glimit, *gen_out); });
    }

    { // prachar
        auto* pr = app.add_subcommand("prachar", "Prime pairs on lattice lines");
        pr->require_subcommand(1);

        auto* pts = pr->add_subcommand("points", "Lattice points on the line y = (x+1)/2");
        auto limit = std::make_shared<std::int64_t>(0);
        pts->add_option("--limit", *limit, "Bound on |x|")->required();
        auto pts_out = add_output_opts(pts, "csv");
        pts->callback([=, &rc] { rc = cmd_prachar_points(*limit, *pts_out); });

        auto* line = pr->add_subcommand("line", "Line through two lattice points and its prime pairs");
        auto second = std::make_shared<std::string>();
        auto anchor = std::make_shared<std::string>("1,1");
        auto llimit = std::make_shared<std::int64_t>(0);
        line->add_option("--second", *second, "Second point as X,Y (use --second=-11,7 for negatives)")
            ->required();
        line->add_option("--anchor", *anchor, "Anchor point as X,Y (default 1,1)");
        line->add_option("--limit", *llimit, "Bound on |x| and |y|")->required();
        auto line_out = add_output_opts(line, "json");
        line->callback([=, &rc] { rc = cmd_prachar_line(*second, *anchor, *llimit, *line_out); });
    }

    { // goldbach3
        auto* g3 = app.add_subcommand("goldbach3", "Three-prime decompositions of odd numbers");
        g3->require_subcommand(1);

        auto* layer = g3->add_subcommand("layer", "Octahedron layer of a traeger sum");
        auto s = std::make_shared<std::int64_t>(0);
        layer->add_option("s", *s, "Traeger sum >= 2")->required();
        auto layer_out = add_output_opts(layer, "json");
        layer->callback([=, &rc] { rc = cmd_g3_layer(*s, *layer_out); });

        auto* sol = g3->add_subcommand("solve", "All prime triples summing to n");
        auto n = std::make_shared<std::int64_t>(0);
        sol->add_option("n", *n, "Odd number >= 15")->required();
        auto sol_out = add_output_opts(sol, "json");
        sol->callback([=, &rc] { rc = cmd_g3_solve(*n, *sol_out); });

        auto* scan = g3->add_subcommand("scan", "Triple counts for every odd in a range");
        auto lo = std::make_shared<std::int64_t>(0);
        auto hi = std::make_shared<std::int64_t>(0);
        auto jobs = std::make_shared<int>(0);
        scan->add_option("lo", *lo, "Range start (>= 15)")->required();
        scan->add_option("hi", *hi, "Range end (inclusive)")->required();
        scan->add_option("--jobs", *jobs, "Worker threads (default: hardware)");
        auto scan_out = add_output_opts(scan, "csv");
        scan->callback([=, &rc] { rc = cmd_g3_scan(*lo, *hi, *jobs, *scan_out); });
    }

    try {
        if (const char* env = std::getenv("HLATTICE_SEGMENT_BUDGET")) {
            std::size_t pos = 0;
            std::int64_t budget = 0;
            try {
                budget = std::stoll(env, &pos);
            } catch (...) {
                pos = 0;
            }
            if (pos == 0 || env[pos] != '\0')
                throw hl::OutOfDomain("HLATTICE_SEGMENT_BUDGET must be a decimal integer");
            hl::sieve::set_segment_budget(budget);
        }
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const hl::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
