#include "whitetet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace whitetet {
namespace {

constexpr Int json_safe_limit = Int{1} << 53;

Json num(Int v)
{
    if (v >= json_safe_limit || v <= -json_safe_limit) {
        throw std::out_of_range("integer " + std::to_string(v) + " exceeds the JSON safe range");
    }
    return Json(v);
}

Json num(std::uint64_t v)
{
    if (v >= static_cast<std::uint64_t>(json_safe_limit)) {
        throw std::out_of_range("integer " + std::to_string(v) + " exceeds the JSON safe range");
    }
    return Json(v);
}

Json point_json(const IntVec3 &p)
{
    return Json::array({num(p.x()), num(p.y()), num(p.z())});
}

Json form_json(const CanonicalForm &cf)
{
    Json j = Json::object();
    j["a"] = num(cf.a());
    j["b"] = num(cf.b());
    j["c"] = num(cf.c());
    j["d"] = num(cf.d());
    return j;
}

std::string point_text(const IntVec3 &p)
{
    std::ostringstream out;
    out << '(' << p.x() << ',' << p.y() << ',' << p.z() << ')';
    return out.str();
}

std::string map_text(const AffineUnimodularMap &map)
{
    std::ostringstream out;
    out << "matrix [";
    for (int i = 0; i < 3; ++i) {
        out << (i ? "," : "") << '[' << map.matrix()(i, 0) << ',' << map.matrix()(i, 1) << ','
            << map.matrix()(i, 2) << ']';
    }
    out << "] translation [" << map.translation().x() << ',' << map.translation().y() << ','
        << map.translation().z() << ']';
    return out.str();
}

std::string form_text(const CanonicalForm &cf)
{
    std::ostringstream out;
    out << "a=" << cf.a() << " b=" << cf.b() << " c=" << cf.c() << " d=" << cf.d();
    return out.str();
}

std::string join(const std::vector<std::string> &parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? std::string(sep) : std::string()) + parts[i];
    }
    return out;
}

class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string &what) : std::invalid_argument(what) {}
};

struct Options {
    std::vector<Int> coords;
    std::string file;
    bool json = false;
    bool csv = false;
    bool oracle = false;
    bool check = false;
    Int c = 0;
    Int a = 0;
    Int b = 0;
    std::vector<std::string> suites;
    std::optional<Int> max_c;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};

Tetrahedron input_tetrahedron(const Options &opt)
{
    if (!opt.file.empty() && !opt.coords.empty()) {
        throw UsageError("give either 12 coordinates or --file, not both");
    }
    if (!opt.file.empty()) {
        return Tetrahedron(read_vertex_file(opt.file));
    }
    return Tetrahedron(parse_vertices(opt.coords));
}

int cmd_classify(const Options &opt, std::ostream &out, std::ostream &err)
{
    const Tetrahedron t = input_tetrahedron(opt);
    const ClassificationReport report = classify(t);

    if (opt.oracle) {
        const bool oracle_empty = is_empty_bruteforce(t);
        const bool oracle_clean = is_clean_bruteforce(t);
        if (oracle_empty != report.empty || oracle_clean != report.clean) {
            err << "error: oracle disagreement: fast clean=" << report.clean
                << " empty=" << report.empty << ", oracle clean=" << oracle_clean
                << " empty=" << oracle_empty << '\n';
            return exit_code::counterexample;
        }
    }

    if (opt.json) {
        Json j = to_json(report);
        if (opt.oracle) {
            j["oracle_checked"] = true;
        }
        out << j.dump(2) << '\n';
        return exit_code::ok;
    }
    out << "vertices:";
    for (const IntVec3 &v : report.vertices) {
        out << ' ' << point_text(v);
    }
    out << "\nvolume6: " << report.volume6 << '\n';
    out << "clean: " << (report.clean ? "true" : "false") << '\n';
    out << "empty: " << (report.empty ? "true" : "false") << '\n';
    if (report.normalization) {
        out << "form: " << form_text(report.normalization->form) << '\n';
        out << "map: " << map_text(report.normalization->map) << '\n';
    }
    if (report.plane) {
        out << "plane: " << *report.plane << '\n';
        out << "interior:";
        for (const IntVec3 &p : report.interior_points) {
            out << ' ' << point_text(p);
        }
        out << '\n';
    }
    if (opt.oracle) {
        out << "oracle: agrees\n";
    }
    return exit_code::ok;
}

int cmd_normalize(const Options &opt, std::ostream &out, std::ostream &err)
{
    const Tetrahedron t = input_tetrahedron(opt);
    const NormalizationResult result = canonical_normalization(t);
    if (opt.check && !image_matches(t, result.map, result.form)) {
        err << "error: map image does not match T(" << result.form.a() << ',' << result.form.b()
            << ',' << result.form.c() << ")\n";
        return exit_code::counterexample;
    }
    if (opt.json) {
        Json j = Json::object();
        j["schema_version"] = 1;
        j["command"] = "normalize";
        const Json body = to_json(result);
        for (const auto &item : body.items()) {
            j[item.key()] = item.value();
        }
        if (opt.check) {
            j["checked"] = true;
        }
        out << j.dump(2) << '\n';
        return exit_code::ok;
    }
    out << "form: " << form_text(result.form) << '\n';
    out << "map: " << map_text(result.map) << '\n';
    if (opt.check) {
        out << "check: image matches\n";
    }
    return exit_code::ok;
}

int cmd_enumerate(const Options &opt, std::ostream &out)
{
    if (opt.c < 1) {
        throw UsageError("enumerate requires c >= 1");
    }
    const auto forms = empty_forms(opt.c);
    if (opt.json) {
        Json rows = Json::array();
        for (const CanonicalForm &cf : forms) {
            Json row = Json::object();
            row["a"] = num(cf.a());
            row["b"] = num(cf.b());
            row["d"] = num(cf.d());
            row["clauses"] = satisfied_clauses(cf);
            rows.push_back(row);
        }
        Json j = Json::object();
        j["schema_version"] = 1;
        j["command"] = "enumerate";
        j["c"] = num(opt.c);
        j["count"] = num(static_cast<Int>(forms.size()));
        j["forms"] = rows;
        out << j.dump(2) << '\n';
        return exit_code::ok;
    }
    if (opt.csv) {
        out << "a,b,c,d,clauses\n";
        for (const CanonicalForm &cf : forms) {
            out << cf.a() << ',' << cf.b() << ',' << cf.c() << ',' << cf.d() << ','
                << join(satisfied_clauses(cf), ";") << '\n';
        }
        return exit_code::ok;
    }
    out << "empty T(a,b," << opt.c << "): " << forms.size() << '\n';
    for (const CanonicalForm &cf : forms) {
        out << "a=" << cf.a() << " b=" << cf.b() << " d=" << cf.d() << "  "
            << join(satisfied_clauses(cf), " ") << '\n';
    }
    return exit_code::ok;
}

int cmd_points(const Options &opt, std::ostream &out)
{
    const auto points = parallelepiped_interior_points(opt.a, opt.b, opt.c);
    if (opt.json) {
        Json j = Json::object();
        j["schema_version"] = 1;
        j["command"] = "points";
        j["a"] = num(opt.a);
        j["b"] = num(opt.b);
        j["c"] = num(opt.c);
        Json list = Json::array();
        for (const IntVec3 &p : points) {
            list.push_back(point_json(p));
        }
        j["points"] = list;
        out << j.dump(2) << '\n';
        return exit_code::ok;
    }
    if (opt.csv) {
        out << "k,x,y,z\n";
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
        const IntVec3 &p = points[k];
        if (opt.csv) {
            out << k + 1 << ',' << p.x() << ',' << p.y() << ',' << p.z() << '\n';
        } else {
            out << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
        }
    }
    return exit_code::ok;
}

int cmd_verify(const Options &opt, std::ostream &out, std::ostream &err)
{
    if (opt.csv) {
        throw UsageError("verify does not support --csv");
    }
    std::vector<std::string> suites = opt.suites;
    if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) {
        if (suites.size() > 1) {
            throw UsageError("--suite all cannot be combined with other suites");
        }
        suites = suite_names();
    }
    if (opt.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }

    SuiteOptions suite_options;
    suite_options.c_max = opt.max_c;
    suite_options.trials = opt.trials;
    suite_options.seed = opt.seed;

    std::vector<VerificationReport> reports;
    for (const std::string &name : suites) {
        reports.push_back(run_suite(name, suite_options));
        err << "suite " << name << " finished in " << reports.back().seconds << " s\n";
    }
    const bool all_ok = std::all_of(reports.begin(), reports.end(),
                                    [](const VerificationReport &r) { return r.ok(); });

    if (opt.json) {
        Json j = Json::object();
        j["schema_version"] = 1;
        j["command"] = "verify";
        j["ok"] = all_ok;
        Json list = Json::array();
        for (const auto &r : reports) {
            list.push_back(to_json(r));
        }
        j["reports"] = list;
        out << j.dump(2) << '\n';
    } else {
        for (const auto &r : reports) {
            out << "suite " << r.suite << " (max_c=" << r.c_max;
            if (r.trials) out << " trials=" << *r.trials;
            if (r.seed) out << " seed=" << *r.seed;
            out << "): " << r.total_cases() << " cases, " << r.total_failures()
                << " failures: " << (r.ok() ? "PASS" : "FAIL") << '\n';
            for (const auto &c : r.checks) {
                out << "  " << c.name << ": " << c.passed << " passed, " << c.failed
                    << " failed\n";
            }
            for (const auto &cx : r.counterexamples) {
                out << "  counterexample: " << cx << '\n';
            }
        }
        out << (all_ok ? "OK" : "COUNTEREXAMPLES FOUND") << '\n';
    }
    return all_ok ? exit_code::ok : exit_code::counterexample;
}

void add_format_flags(CLI::App *cmd, Options &opt, bool with_csv)
{
    auto *json = cmd->add_flag("--json", opt.json, "Emit JSON");
    if (with_csv) {
        cmd->add_flag("--csv", opt.csv, "Emit CSV")->excludes(json);
    }
}

void add_vertex_inputs(CLI::App *cmd, Options &opt)
{
    cmd->add_option("coords", opt.coords, "Twelve integers: x y z of each of the four vertices");
    cmd->add_option("--file", opt.file, "File with one vertex \"x y z\" per line");
}

} // namespace

ClassificationReport classify(const Tetrahedron &t)
{
    ClassificationReport report;
    report.vertices = t.vertices();
    report.volume6 = volume6(t);
    report.clean = faces_are_primitive(t);
    if (!report.clean) {
        return report;
    }
    report.normalization = canonical_normalization(t);
    const CanonicalForm &cf = report.normalization->form;
    report.empty = white_empty(cf);
    if (report.empty) {
        report.interior_points = parallelepiped_interior_points(cf.a(), cf.b(), cf.c());
        report.plane = plane_tag(cf);
    }
    return report;
}

std::string plane_tag(const CanonicalForm &cf)
{
    if (cf.c() == 1) return "c=1";
    if (cf.a() == 1) return "x=1";
    if (cf.b() == 1) return "y=1";
    if (cf.d() == 1) return "x+y-z=1";
    throw std::invalid_argument("plane_tag requires an empty form");
}

Json to_json(const AffineUnimodularMap &map)
{
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        rows.push_back(point_json(IntVec3(map.matrix().row(i).transpose())));
    }
    Json j = Json::object();
    j["matrix"] = rows;
    j["translation"] = point_json(map.translation());
    return j;
}

Json to_json(const NormalizationResult &result)
{
    Json j = Json::object();
    j["canonical_form"] = form_json(result.form);
    j["map"] = to_json(result.map);
    j["roles"] = Json::array({num(static_cast<Int>(result.roles.origin)),
                              num(static_cast<Int>(result.roles.first)),
                              num(static_cast<Int>(result.roles.second)),
                              num(static_cast<Int>(result.roles.apex))});
    return j;
}

Json to_json(const ClassificationReport &report)
{
    Json j = Json::object();
    j["schema_version"] = 1;
    j["command"] = "classify";
    Json vertices = Json::array();
    for (const IntVec3 &v : report.vertices) {
        vertices.push_back(point_json(v));
    }
    j["vertices"] = vertices;
    j["volume6"] = num(report.volume6);
    j["clean"] = report.clean;
    j["empty"] = report.empty;
    if (report.normalization) {
        j["canonical_form"] = form_json(report.normalization->form);
        j["map"] = to_json(report.normalization->map);
    } else {
        j["canonical_form"] = nullptr;
        j["map"] = nullptr;
    }
    if (report.plane) {
        j["plane"] = *report.plane;
        Json points = Json::array();
        for (const IntVec3 &p : report.interior_points) {
            points.push_back(point_json(p));
        }
        j["interior_points"] = points;
    } else {
        j["plane"] = nullptr;
        j["interior_points"] = nullptr;
    }
    return j;
}

Json to_json(const VerificationReport &report)
{
    Json j = Json::object();
    j["suite"] = report.suite;
    j["c_max"] = num(report.c_max);
    j["trials"] = report.trials ? num(*report.trials) : Json(nullptr);
    j["seed"] = report.seed ? num(*report.seed) : Json(nullptr);
    j["ok"] = report.ok();
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["passed"] = num(c.passed);
        entry["failed"] = num(c.failed);
        checks.push_back(entry);
    }
    j["checks"] = checks;
    j["counterexamples"] = report.counterexamples;
    return j;
}

std::array<IntVec3, 4> parse_vertices(const std::vector<Int> &coordinates)
{
    if (coordinates.size() != 12) {
        throw UsageError("expected 12 integers (four vertices), got " +
                         std::to_string(coordinates.size()));
    }
    std::array<IntVec3, 4> vertices{};
    for (std::size_t i = 0; i < 4; ++i) {
        vertices[i] = IntVec3(coordinates[3 * i], coordinates[3 * i + 1], coordinates[3 * i + 2]);
    }
    return vertices;
}

std::array<IntVec3, 4> read_vertex_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open vertex file: " + path);
    }
    std::vector<Int> coordinates;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = line.substr(0, line.find('#'));
        std::istringstream fields(line);
        std::vector<Int> row;
        Int value = 0;
        while (fields >> value) {
            row.push_back(value);
        }
        if (!fields.eof()) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": not an integer");
        }
        if (row.empty()) {
            continue;
        }
        if (row.size() != 3) {
            throw UsageError(path + ":" + std::to_string(line_no) +
                             ": expected 3 integers per vertex");
        }
        coordinates.insert(coordinates.end(), row.begin(), row.end());
    }
    if (coordinates.size() != 12) {
        throw UsageError(path + ": expected exactly 4 vertices");
    }
    return parse_vertices(coordinates);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options opt;
    CLI::App app{"Classify, normalize and verify empty lattice tetrahedra", "whitetet"};
    app.require_subcommand(1);

    auto *classify_cmd = app.add_subcommand("classify", "Classify a lattice tetrahedron");
    add_vertex_inputs(classify_cmd, opt);
    classify_cmd->add_flag("--oracle", opt.oracle, "Cross-check with the lattice-point scan");
    add_format_flags(classify_cmd, opt, false);

    auto *normalize_cmd = app.add_subcommand("normalize", "Map a clean tetrahedron to T(a,b,c)");
    add_vertex_inputs(normalize_cmd, opt);
    normalize_cmd->add_flag("--check", opt.check, "Re-apply the map and check its image");
    add_format_flags(normalize_cmd, opt, false);

    auto *enumerate_cmd = app.add_subcommand("enumerate", "List all empty T(a,b,c) for one c");
    enumerate_cmd->add_option("c", opt.c, "Height c >= 1")->required();
    add_format_flags(enumerate_cmd, opt, true);

    auto *points_cmd =
        app.add_subcommand("points", "Interior lattice points of the parallelepiped P(a,b,c)");
    points_cmd->add_option("a", opt.a)->required();
    points_cmd->add_option("b", opt.b)->required();
    points_cmd->add_option("c", opt.c)->required();
    add_format_flags(points_cmd, opt, true);

    auto *verify_cmd = app.add_subcommand("verify", "Run exhaustive verification suites");
    std::vector<std::string> allowed = suite_names();
    allowed.emplace_back("all");
    verify_cmd->add_option("--suite", opt.suites, "Suite to run (repeatable); default all")
        ->check(CLI::IsMember(allowed));
    verify_cmd->add_option("--max-c", opt.max_c, "Largest c to check");
    verify_cmd->add_option("--trials", opt.trials, "Normalization trials");
    verify_cmd->add_option("--seed", opt.seed, "Seed for normalization trials");
    add_format_flags(verify_cmd, opt, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return exit_code::ok;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_code::usage;
    }

    try {
        if (*classify_cmd) return cmd_classify(opt, out, err);
        if (*normalize_cmd) return cmd_normalize(opt, out, err);
        if (*enumerate_cmd) return cmd_enumerate(opt, out);
        if (*points_cmd) return cmd_points(opt, out);
        if (*verify_cmd) return cmd_verify(opt, out, err);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace whitetet
