#pragma once

// The command-line surface: one subcommand per operation family, JSON/CSV/SVG
// output, deterministic byte-for-byte results for identical invocations.
//
// Exit codes: 0 success, 1 invariant violation or failed check, 2 usage error.

#include "tripstern/geometry.hpp"
#include "tripstern/reports.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tripstern::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline RTriple parse_seed(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw std::invalid_argument("seed must be three comma-separated rationals");
    return {parse_rat_or_throw(parts[0]), parse_rat_or_throw(parts[1]), parse_rat_or_throw(parts[2])};
}

inline RationalPoint parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point must be \"x,y\"");
    return {parse_rat_or_throw(s.substr(0, comma)), parse_rat_or_throw(s.substr(comma + 1))};
}

inline ordered_json triple_json(const ITriple& t) {
    return ordered_json::array({t.a.str(), t.b.str(), t.c.str()});
}

inline ordered_json triple_json(const RTriple& t) {
    return ordered_json::array({format_rat(t.a), format_rat(t.b), format_rat(t.c)});
}

inline ordered_json positions_json(const std::vector<Position>& ps) {
    ordered_json arr = ordered_json::array();
    for (const auto& [idx, comp] : ps) arr.push_back(ordered_json::array({idx, comp}));
    return arr;
}

inline int depth_cap_from_env(int fallback) {
    const char* v = std::getenv("TRIP_DEPTH_CAP");
    if (!v) return fallback;
    char* end = nullptr;
    long cap = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || cap < 1)
        throw std::invalid_argument("TRIP_DEPTH_CAP must be a positive integer");
    return static_cast<int>(cap);
}

struct OutputSink {
    std::string path;  // empty = stdout

    void write(std::ostream& out, const std::string& text) const {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

template <typename T>
std::string value_str(const T& v);

template <>
inline std::string value_str(const Int& v) {
    return v.str();
}

template <>
inline std::string value_str(const Rat& v) {
    return format_rat(v);
}

// tree/maxima/minima/sums run on the integer lane when the seed is integral.
template <typename T>
ordered_json tree_json(const TripMap& map, int depth, const Triple<T>& seed, int cap) {
    ordered_json levels = ordered_json::array();
    for (int n = 1; n <= depth; ++n) {
        ordered_json lv = ordered_json::array();
        for (const auto& t : level(map, n, seed, cap)) lv.push_back(triple_json(t));
        levels.push_back(std::move(lv));
    }
    ordered_json doc;
    doc["map"] = map.name();
    doc["seed"] = triple_json(seed);
    doc["depth"] = depth;
    doc["levels"] = std::move(levels);
    return doc;
}

template <typename T>
std::string tree_csv(const TripMap& map, int depth, const Triple<T>& seed, int cap) {
    std::ostringstream os;
    os << "level,index,a,b,c\n";
    for (int n = 1; n <= depth; ++n) {
        auto lv = level(map, n, seed, cap);
        for (std::size_t i = 0; i < lv.size(); ++i)
            os << n << "," << i << "," << value_str(lv[i].a) << "," << value_str(lv[i].b) << ","
               << value_str(lv[i].c) << "\n";
    }
    return os.str();
}

template <typename T>
ordered_json stats_json(const TripMap& map, int depth, const Triple<T>& seed, bool maxima,
                        int cap) {
    auto stats = scan_levels(map, depth, seed, true, cap);
    ordered_json levels = ordered_json::array();
    for (const auto& st : stats) {
        ordered_json lv;
        lv["level"] = st.depth;
        if (maxima) {
            lv["max"] = value_str(st.max_value);
            lv["positions"] = positions_json(st.max_positions);
        } else {
            lv["min"] = value_str(st.min_value);
            lv["positions"] = positions_json(st.min_positions);
        }
        levels.push_back(std::move(lv));
    }
    ordered_json doc;
    doc["map"] = map.name();
    doc["seed"] = triple_json(seed);
    doc["depth"] = depth;
    doc["levels"] = std::move(levels);
    return doc;
}

template <typename T>
std::string stats_csv(const TripMap& map, int depth, const Triple<T>& seed, bool maxima, int cap) {
    auto stats = scan_levels(map, depth, seed, false, cap);
    std::ostringstream os;
    os << "level," << (maxima ? "max" : "min") << "\n";
    for (const auto& st : stats)
        os << st.depth << "," << value_str(maxima ? st.max_value : st.min_value) << "\n";
    return os.str();
}

template <typename T>
ordered_json sums_json(const TripMap& map, int depth, const Triple<T>& seed, int cap) {
    auto sums = level_sums_sequence(map, depth, seed, cap);
    ordered_json levels = ordered_json::array();
    for (int n = 0; n < depth; ++n) {
        const auto& s = sums[static_cast<std::size_t>(n)];
        ordered_json lv;
        lv["level"] = n + 1;
        lv["s1"] = value_str(s.s1);
        lv["s2"] = value_str(s.s2);
        lv["s3"] = value_str(s.s3);
        lv["s"] = value_str(s.total());
        levels.push_back(std::move(lv));
    }
    ordered_json doc;
    doc["map"] = map.name();
    doc["seed"] = triple_json(seed);
    doc["depth"] = depth;
    doc["levels"] = std::move(levels);
    return doc;
}

template <typename T>
std::string sums_csv(const TripMap& map, int depth, const Triple<T>& seed, int cap) {
    auto sums = level_sums_sequence(map, depth, seed, cap);
    std::ostringstream os;
    os << "level,s1,s2,s3,s\n";
    for (int n = 0; n < depth; ++n) {
        const auto& s = sums[static_cast<std::size_t>(n)];
        os << (n + 1) << "," << value_str(s.s1) << "," << value_str(s.s2) << "," << value_str(s.s3)
           << "," << value_str(s.total()) << "\n";
    }
    return os.str();
}

inline ordered_json class_report_json(const ClassReport& rep) {
    ordered_json groups = ordered_json::array();
    for (const auto& g : rep.groups) {
        ordered_json grp;
        grp["maps"] = g.maps;
        if (g.recurrence) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : g.recurrence->coeffs) coeffs.push_back(format_rat(c));
            grp["recurrence"] = std::move(coeffs);
        } else {
            grp["recurrence"] = nullptr;
        }
        ordered_json wit = ordered_json::array();
        for (const auto& v : g.witness) wit.push_back(v.str());
        grp["values"] = std::move(wit);
        grp["oeis"] = g.anum.empty() ? ordered_json(nullptr) : ordered_json(g.anum);
        grp["status"] = g.status;
        groups.push_back(std::move(grp));
    }
    ordered_json doc;
    doc["depth"] = rep.depth;
    doc["group_count"] = rep.groups.size();
    doc["groups"] = std::move(groups);
    return doc;
}

}  // namespace detail

// Runs the CLI; argv excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for the 216 triangle partition maps and their Stern trees"};
    app.require_subcommand(1);

    unsigned jobs = default_jobs();
    std::string map_str = "e,e,e", seed_str = "1,1,1", format = "json";
    detail::OutputSink sink;
    int depth = 6;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("--map", map_str, "permutation triplet sigma,tau0,tau1");
        cmd->add_option("--depth", depth, "number of levels");
        if (with_seed) cmd->add_option("--seed", seed_str, "seed triple a,b,c (rationals allowed)");
        cmd->add_option("--format", format, "output format");
        cmd->add_option("--out", sink.path, "write output to a file instead of stdout");
    };

    auto* cmd_tree = app.add_subcommand("tree", "emit levels of a TRIP-Stern tree");
    add_common(cmd_tree, true);

    auto* cmd_maxima = app.add_subcommand("maxima", "per-level maximum entries and positions");
    add_common(cmd_maxima, true);

    auto* cmd_minima = app.add_subcommand("minima", "per-level minimum entries and positions");
    add_common(cmd_minima, true);

    auto* cmd_sums = app.add_subcommand("sums", "level sums via two independent routes");
    add_common(cmd_sums, true);

    std::string policy_str = "left";
    auto* cmd_paths = app.add_subcommand("verify-paths", "check that a path carries the maxima");
    add_common(cmd_paths, true);
    cmd_paths->add_option("--policy", policy_str, "left|right|alt");

    std::string values_str;
    int max_order = 6, burn_in = 0;
    auto* cmd_fit = app.add_subcommand("fit", "fit a minimal exact linear recurrence");
    cmd_fit->add_option("--values", values_str, "comma-separated exact values")->required();
    cmd_fit->add_option("--max-order", max_order, "largest order to try");
    cmd_fit->add_option("--burn-in", burn_in, "ignore this many leading terms");
    cmd_fit->add_option("--out", sink.path, "write output to a file instead of stdout");

    std::string what = "sums";
    int classify_depth = 12;
    auto* cmd_classify = app.add_subcommand("classify", "group the family by sums or maxima");
    cmd_classify->add_option("--what", what, "sums|maxima");
    cmd_classify->add_option("--depth", classify_depth, "witness depth");
    cmd_classify->add_option("--jobs", jobs, "worker cap for the sweep over the family");
    cmd_classify->add_option("--out", sink.path, "write output to a file instead of stdout");

    std::string triple_str;
    auto* cmd_germ = app.add_subcommand("germ", "germ and tree membership of an integer triple");
    cmd_germ->add_option("--triple", triple_str, "integer triple a,b,c")->required();
    cmd_germ->add_option("--out", sink.path, "write output to a file instead of stdout");

    long sum_bound = 30;
    auto* cmd_forbidden = app.add_subcommand("forbidden", "potential entries missing from the tree");
    cmd_forbidden->add_option("--sum-bound", sum_bound, "largest entry sum to enumerate");
    cmd_forbidden->add_option("--format", format, "output format");
    cmd_forbidden->add_option("--out", sink.path, "write output to a file instead of stdout");

    std::string point_str;
    int digits = 20;
    auto* cmd_seq = app.add_subcommand("trip-seq", "digit sequence of a point under a TRIP map");
    cmd_seq->add_option("--map", map_str, "permutation triplet");
    cmd_seq->add_option("--point", point_str, "rational point x,y inside the triangle")->required();
    cmd_seq->add_option("--digits", digits, "maximum digits to emit");
    cmd_seq->add_option("--out", sink.path, "write output to a file instead of stdout");

    int stern_terms = 0, brocot_level_n = -1;
    auto* cmd_stern = app.add_subcommand("stern", "the classical diatomic sequence and array");
    cmd_stern->add_option("--terms", stern_terms, "emit this many diatomic terms");
    cmd_stern->add_option("--brocot", brocot_level_n, "emit one level of the mediant array");
    cmd_stern->add_option("--out", sink.path, "write output to a file instead of stdout");

    bool labels = false;
    std::string render_format = "svg";
    auto* cmd_render = app.add_subcommand("render", "subdivision cells as SVG or JSON");
    cmd_render->add_option("--map", map_str, "permutation triplet");
    cmd_render->add_option("--depth", depth, "number of divisions");
    cmd_render->add_flag("--labels", labels, "label vertices with leading coordinates");
    cmd_render->add_option("--format", render_format, "svg|json");
    cmd_render->add_option("--out", sink.path, "write output to a file instead of stdout");

    std::string tables_format = "text";
    auto* cmd_tables = app.add_subcommand("reproduce-tables", "recompute and audit every table");
    cmd_tables->add_option("--format", tables_format, "text|json");
    cmd_tables->add_option("--out", sink.path, "write output to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return exit_ok;
        }
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        const int exhaustive_cap = detail::depth_cap_from_env(default_exhaustive_cap);
        const int level_cap = detail::depth_cap_from_env(default_level_cap);

        auto need_map = [&]() { return parse_trip_map_or_throw(map_str); };
        auto need_seed = [&]() { return detail::parse_seed(seed_str); };
        std::string payload;

        if (*cmd_tree) {
            auto map = need_map();
            auto seed = need_seed();
            if (format == "json") {
                ordered_json doc = is_integral(seed)
                                       ? detail::tree_json(map, depth, to_integral(seed), level_cap)
                                       : detail::tree_json(map, depth, seed, level_cap);
                payload = doc.dump(2) + "\n";
            } else if (format == "csv") {
                payload = is_integral(seed) ? detail::tree_csv(map, depth, to_integral(seed), level_cap)
                                            : detail::tree_csv(map, depth, seed, level_cap);
            } else {
                throw std::invalid_argument("tree supports --format json|csv");
            }
        } else if (*cmd_maxima || *cmd_minima) {
            auto map = need_map();
            auto seed = need_seed();
            bool maxima = static_cast<bool>(*cmd_maxima);
            if (format == "json") {
                ordered_json doc =
                    is_integral(seed)
                        ? detail::stats_json(map, depth, to_integral(seed), maxima, exhaustive_cap)
                        : detail::stats_json(map, depth, seed, maxima, exhaustive_cap);
                payload = doc.dump(2) + "\n";
            } else if (format == "csv") {
                payload = is_integral(seed)
                              ? detail::stats_csv(map, depth, to_integral(seed), maxima, exhaustive_cap)
                              : detail::stats_csv(map, depth, seed, maxima, exhaustive_cap);
            } else {
                throw std::invalid_argument("maxima/minima support --format json|csv");
            }
        } else if (*cmd_sums) {
            auto map = need_map();
            auto seed = need_seed();
            if (format == "json") {
                ordered_json doc = is_integral(seed)
                                       ? detail::sums_json(map, depth, to_integral(seed), exhaustive_cap)
                                       : detail::sums_json(map, depth, seed, exhaustive_cap);
                payload = doc.dump(2) + "\n";
            } else if (format == "csv") {
                payload = is_integral(seed)
                              ? detail::sums_csv(map, depth, to_integral(seed), exhaustive_cap)
                              : detail::sums_csv(map, depth, seed, exhaustive_cap);
            } else {
                throw std::invalid_argument("sums supports --format json|csv");
            }
        } else if (*cmd_paths) {
            auto map = need_map();
            auto seed = need_seed();
            auto policy = parse_policy(policy_str);
            if (!policy) throw std::invalid_argument("policy must be left, right or alt");
            std::vector<bool> ok =
                is_integral(seed)
                    ? verify_max_path(map, *policy, depth, to_integral(seed), exhaustive_cap)
                    : verify_max_path(map, *policy, depth, seed, exhaustive_cap);
            ordered_json doc;
            doc["map"] = map.name();
            doc["policy"] = policy_str;
            doc["depth"] = depth;
            doc["levels"] = ok;
            doc["all"] = std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
            payload = doc.dump(2) + "\n";
        } else if (*cmd_fit) {
            std::vector<Rat> values;
            std::string cur;
            std::istringstream is(values_str);
            while (std::getline(is, cur, ',')) values.push_back(parse_rat_or_throw(cur));
            auto rec = fit_min_recurrence(values, max_order, burn_in);
            ordered_json doc;
            doc["terms"] = values.size();
            doc["max_order"] = max_order;
            if (rec) {
                ordered_json coeffs = ordered_json::array();
                for (const auto& c : rec->coeffs) coeffs.push_back(format_rat(c));
                doc["order"] = rec->order();
                doc["coefficients"] = std::move(coeffs);
                auto entry = oeis_lookup(*rec);
                doc["oeis"] = entry ? ordered_json(entry->anum) : ordered_json(nullptr);
            } else {
                doc["order"] = nullptr;
                doc["coefficients"] = nullptr;
                doc["oeis"] = nullptr;
            }
            payload = doc.dump(2) + "\n";
        } else if (*cmd_classify) {
            ClassReport rep;
            if (what == "sums")
                rep = classify_level_sums(classify_depth, jobs);
            else if (what == "maxima")
                rep = classify_maxima(classify_depth, jobs);
            else
                throw std::invalid_argument("classify supports --what sums|maxima");
            payload = detail::class_report_json(rep).dump(2) + "\n";
        } else if (*cmd_germ) {
            auto seed = detail::parse_seed(triple_str);
            if (!is_integral(seed)) throw std::invalid_argument("germ needs an integer triple");
            ITriple t = to_integral(seed);
            ordered_json doc;
            doc["triple"] = detail::triple_json(t);
            doc["in_P"] = in_P(t);
            if (in_P(t)) {
                ITriple g = germ_of(t);
                doc["germ"] = detail::triple_json(g);
                doc["in_S"] = (g == ITriple{1, 1, 1});
            } else {
                doc["germ"] = nullptr;
                doc["in_S"] = false;
            }
            payload = doc.dump(2) + "\n";
        } else if (*cmd_forbidden) {
            auto listed = enumerate_forbidden(sum_bound);
            if (format != "json") throw std::invalid_argument("forbidden supports --format json");
            ordered_json arr = ordered_json::array();
            for (const auto& t : listed) arr.push_back(detail::triple_json(t));
            ordered_json doc;
            doc["sum_bound"] = sum_bound;
            doc["count"] = listed.size();
            doc["forbidden"] = std::move(arr);
            payload = doc.dump(2) + "\n";
        } else if (*cmd_seq) {
            auto map = need_map();
            auto p = detail::parse_point(point_str);
            auto ds = trip_digits(map, p, static_cast<std::size_t>(digits));
            ordered_json arr = ordered_json::array();
            for (auto d : ds.digits) arr.push_back(d);
            payload = arr.dump() + "\n";
            // the array contract stays on stdout; boundary resolutions are noted aside
            if (ds.hit_boundary)
                err << "note: a digit was decided on a subtriangle edge (convention: F1 side)\n";
        } else if (*cmd_stern) {
            ordered_json doc;
            if (stern_terms > 0) {
                ordered_json arr = ordered_json::array();
                for (unsigned long long n = 1; n <= static_cast<unsigned long long>(stern_terms); ++n)
                    arr.push_back(stern_diatomic(n).str());
                doc = std::move(arr);
            } else if (brocot_level_n >= 0) {
                ordered_json arr = ordered_json::array();
                for (const auto& f : stern_brocot_level(brocot_level_n))
                    arr.push_back(f.num.str() + "/" + f.den.str());
                doc = std::move(arr);
            } else {
                throw std::invalid_argument("stern needs --terms N or --brocot L");
            }
            payload = doc.dump() + "\n";
        } else if (*cmd_render) {
            auto map = need_map();
            auto cells = subdivision(map, depth);
            const std::string& fmt = render_format;
            if (fmt == "svg") {
                SvgOptions opt;
                opt.labels = labels;
                payload = render_svg(cells, opt);
            } else if (fmt == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& c : cells) {
                    ordered_json cj;
                    cj["word"] = to_string(c.word);
                    ordered_json verts = ordered_json::array();
                    for (const auto& v : c.vertices)
                        verts.push_back(ordered_json::array({format_rat(v.x), format_rat(v.y)}));
                    cj["vertices"] = std::move(verts);
                    cj["label"] = detail::triple_json(c.label);
                    cj["area"] = format_rat(cell_area(c));
                    cj["orientation"] = cell_signed_area(c) >= 0 ? "ccw" : "cw";
                    arr.push_back(std::move(cj));
                }
                ordered_json doc;
                doc["map"] = map.name();
                doc["depth"] = depth;
                doc["cells"] = std::move(arr);
                payload = doc.dump(2) + "\n";
            } else {
                throw std::invalid_argument("render supports --format svg|json");
            }
        } else if (*cmd_tables) {
            auto rep = reproduce_tables();
            if (tables_format == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& c : rep.checks) {
                    ordered_json cj;
                    cj["name"] = c.name;
                    cj["passed"] = c.passed;
                    cj["detail"] = c.detail;
                    arr.push_back(std::move(cj));
                }
                ordered_json doc;
                doc["all_passed"] = rep.all_passed();
                doc["checks"] = std::move(arr);
                payload = doc.dump(2) + "\n";
            } else {
                std::ostringstream os;
                for (const auto& c : rep.checks)
                    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
                payload = os.str();
            }
            sink.write(out, payload);
            return rep.all_passed() ? exit_ok : exit_violation;
        }

        sink.write(out, payload);
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_violation;
    }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace tripstern::cli
