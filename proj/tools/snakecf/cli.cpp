#include "cli.hpp"

#include "render.hpp"
#include "suite.hpp"

#include <snakecf/contfrac.hpp>
#include <snakecf/error.hpp>
#include <snakecf/markov.hpp>
#include <snakecf/matchings.hpp>
#include <snakecf/palindrome.hpp>
#include <snakecf/snake.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace snakecf::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format;
    std::string out;
    Coeff max_q = 0;
    std::string search_limit = "1000000000000";
    unsigned jobs = 1;
    int cell_size = 24;
    bool signs = false;
    std::string edge;
    std::string method = "transfer";
    std::string arg1;
    std::string arg2;
};

std::string str(const BigInt& v) { return v.str(); }

json coeffs(std::span<const Coeff> c) { return json(std::vector<Coeff>(c.begin(), c.end())); }
json coeffs(const PositiveCF& cf) { return coeffs(cf.coeffs()); }

json fraction(const Fraction& f) { return {{"num", str(f.num())}, {"den", str(f.den())}}; }

json strings(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(str(v));
    }
    return out;
}

PositiveCF parse_cf(const std::string& text) { return PositiveCF(parse_coeffs(text)); }

SnakeGraph parse_graph(const std::string& text) {
    const bool steps = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return c == 'E' || c == 'N' || c == 'e' || c == 'n' || c == '-';
    });
    return steps ? SnakeGraph::parse(text) : from_cf(parse_cf(text));
}

BigInt parse_count(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
        throw Error(ErrorCode::domain, "expected a nonnegative integer, got '" + text + "'");
    }
    return BigInt(text);
}

std::optional<BigInt> parse_limit(const std::string& text) {
    if (text == "unlimited" || text == "none") {
        return std::nullopt;
    }
    const auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        BigInt v = parse_count(text.substr(0, e));
        const BigInt exponent = parse_count(text.substr(e + 1));
        if (exponent > 1000) {
            throw Error(ErrorCode::domain, "search limit exponent too large");
        }
        for (BigInt i = 0; i < exponent; ++i) {
            v *= 10;
        }
        return v;
    }
    return parse_count(text);
}

json graph_json(const SnakeGraph& sg) {
    json out{{"steps", sg.to_string()}, {"tile_count", sg.tile_count()}};
    return out;
}

json pair_report(const PairReport& r) {
    return {{"a", str(r.pair.a)}, {"b", str(r.pair.b)}, {"cf", coeffs(r.cf)},
            {"D", r.digits_12},   {"R", r.in_range},    {"M", r.markov}};
}

json conjecture_json(const ConjectureReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back(pair_report(p));
    }
    return {{"slope", r.slope.to_string()},
            {"markov", str(r.markov)},
            {"pairs", std::move(pairs)},
            {"counts", {{"D", r.count_d}, {"M", r.count_m}, {"DR", r.count_dr}, {"MR", r.count_mr}}},
            {"unique_d", r.unique_d},
            {"unique_m", r.unique_m},
            {"coincide", r.coincide}};
}

json slopes_json(const std::vector<Slope>& slopes) {
    json out = json::array();
    for (const auto& s : slopes) {
        out.push_back(s.to_string());
    }
    return out;
}

json suite_json(const SuiteSummary& s) {
    json rows = json::array();
    for (const auto& row : s.rows) {
        json r{{"slope", row.slope.to_string()}, {"markov", str(row.markov)}};
        if (row.report) {
            r["status"] = "checked";
            r["report"] = conjecture_json(*row.report);
        } else {
            r["status"] = "skipped";
        }
        rows.push_back(std::move(r));
    }
    return {{"max_q", s.max_q},
            {"search_limit", s.search_limit ? json(str(*s.search_limit)) : json("unlimited")},
            {"total", s.rows.size()},
            {"checked", s.checked},
            {"skipped", s.skipped},
            {"d_unique", s.d_unique},
            {"m_unique", s.m_unique},
            {"coinciding", s.coinciding},
            {"counterexamples", slopes_json(s.counterexamples)},
            {"range_discrepancies", slopes_json(s.range_discrepancies)},
            {"rows", std::move(rows)}};
}

struct Outcome {
    Outcome(json in, std::string how, json res)
        : input(std::move(in)), method(std::move(how)), result(std::move(res)) {}

    json input;
    std::string method;
    json result;
    std::optional<std::string> text;  // ascii or svg output replaces the JSON envelope
};

using Handler = std::function<Outcome(const Options&)>;

Format format_or(const Options& o, Format fallback) {
    return o.format.empty() ? fallback : parse_format(o.format);
}

RenderSpec render_spec(const Options& o, Format fallback) {
    RenderSpec spec;
    spec.format = format_or(o, fallback);
    spec.cell_size = o.cell_size;
    spec.sign_labels = o.signs;
    spec.validate();
    return spec;
}

Coeff require_max_q(const Options& o) {
    if (o.max_q < 2) {
        throw UsageError("--max-q N with N >= 2 is required");
    }
    return o.max_q;
}

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;

    h["cf eval"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        json conv = json::array();
        for (const auto& c : convergents(cf)) {
            conv.push_back(c.to_string());
        }
        const Fraction v = evaluate(cf);
        return Outcome{{{"cf", coeffs(cf)}}, "continuant recurrence",
                       {{"num", str(v.num())}, {"den", str(v.den())}, {"convergents", conv}}};
    };
    h["cf from"] = [](const Options& o) {
        const Fraction f = parse_fraction(o.arg1);
        const PositiveCF cf = from_fraction(f);
        const auto alt = alternate_form(cf);
        return Outcome{{{"fraction", f.to_string()}}, "floor division",
                       {{"cf", coeffs(cf)}, {"alternate", alt ? coeffs(*alt) : json(nullptr)}}};
    };
    h["cf even"] = [](const Options& o) {
        const Fraction f = parse_fraction(o.arg1);
        const EvenCF cf = to_even_cf(f);
        return Outcome{{{"fraction", f.to_string()}}, "nearest even quotient",
                       {{"even_cf", coeffs(cf.coeffs())},
                        {"value", evaluate_even(cf).to_string()}}};
    };
    h["cf tails"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        return Outcome{{{"cf", coeffs(cf)}}, "tail continuants",
                       {{"tail_numerators", strings(tail_numerators(cf))}}};
    };
    h["cf reverse"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        const PositiveCF r = reverse(cf);
        return Outcome{{{"cf", coeffs(cf)}}, "reversal",
                       {{"cf", coeffs(r)}, {"numerator", str(numerator(r))}}};
    };

    h["snake from-cf"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        const SnakeGraph sg = from_cf(cf);
        const SignSequence signs = SignSequence::from_runs(cf.coeffs());
        json result = graph_json(sg);
        result["signs"] = signs.to_string();
        result["sign_change_tiles"] = signs.sign_change_tiles();
        return Outcome{{{"cf", coeffs(cf)}}, "sign sequence", result};
    };
    h["snake to-cf"] = [](const Options& o) {
        const SnakeGraph sg = parse_graph(o.arg1);
        json result{{"north", coeffs(to_cf(sg, EdgeChoice::north))},
                    {"east", coeffs(to_cf(sg, EdgeChoice::east))},
                    {"canonical_edge", to_string(canonical_choice(sg))}};
        if (o.edge.empty()) {
            result["cf"] = coeffs(to_cf(sg));
        } else {
            result["cf"] = coeffs(to_cf(sg, o.edge == "north" ? EdgeChoice::north
                                                              : EdgeChoice::east));
        }
        return Outcome{{{"graph", sg.to_string()}, {"edge", o.edge.empty() ? "canonical" : o.edge}},
                       "sign sequence", result};
    };
    h["snake symmetry"] = [](const Options& o) {
        const SnakeGraph sg = parse_graph(o.arg1);
        json images;
        for (const auto& [name, image] :
             {std::pair{"rotate180", rotate180(sg)}, std::pair{"flip_diag", flip_diag(sg)},
              std::pair{"flip_antidiag", flip_antidiag(sg)}}) {
            images[name] = {{"steps", image.to_string()},
                            {"cf", coeffs(to_cf(image))},
                            {"count", str(count_matchings(image))}};
        }
        return Outcome{{{"graph", sg.to_string()}}, "step sequence symmetries",
                       {{"center_symmetric", has_center_symmetry(sg)},
                        {"count", str(count_matchings(sg))},
                        {"images", images}}};
    };
    h["snake render"] = [](const Options& o) {
        const SnakeGraph sg = parse_graph(o.arg1);
        const RenderSpec spec = render_spec(o, Format::ascii);
        Outcome out{{{"graph", sg.to_string()}}, "render", nullptr};
        if (spec.format == Format::json) {
            out.result = json::parse(render_snake(sg, spec));
        } else {
            out.text = render_snake(sg, spec);
        }
        return out;
    };

    h["match count"] = [](const Options& o) {
        const SnakeGraph sg = parse_graph(o.arg1);
        BigInt count;
        if (o.method == "transfer") {
            count = count_matchings(sg);
        } else if (o.method == "enumerate") {
            count = enumerate_matchings(sg).size();
        } else {
            throw UsageError("--method must be transfer or enumerate");
        }
        return Outcome{{{"graph", sg.to_string()}}, o.method, {{"count", str(count)}}};
    };
    h["match list"] = [](const Options& o) {
        const SnakeGraph sg = parse_graph(o.arg1);
        json list = json::array();
        for (const Matching& m : enumerate_matchings(sg)) {
            json edges = json::array();
            for (const EdgeLabel& e : m.edges) {
                edges.push_back(std::to_string(e.tile) + to_string(e.side));
            }
            list.push_back(std::move(edges));
        }
        const std::size_t n = list.size();
        return Outcome{{{"graph", sg.to_string()}}, "enumerate",
                       {{"count", std::to_string(n)}, {"matchings", std::move(list)}}};
    };
    h["match prefix"] = [](const Options& o) {
        const SnakeGraph sg = parse_graph(o.arg1);
        return Outcome{{{"graph", sg.to_string()}}, "transfer",
                       {{"prefix_counts", strings(prefix_counts(sg))}}};
    };

    h["pal value"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        const Fraction v = palindromification_value(cf);
        return Outcome{{{"cf", coeffs(cf)}}, "closed formula",
                       {{"cf", coeffs(palindromify(cf))}, {"num", str(v.num())},
                        {"den", str(v.den())}}};
    };
    h["pal odd"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        const OddPalindromeValue v = odd_palindrome_value(cf);
        return Outcome{{{"cf", coeffs(cf)}}, "closed formula",
                       {{"cf", coeffs(odd_palindromify(cf))},
                        {"unreduced", {{"num", str(v.unreduced.num)}, {"den", str(v.unreduced.den)}}},
                        {"reduced", fraction(v.value)}}};
    };
    h["pal square"] = [](const Options& o) {
        const PositiveCF cf = parse_cf(o.arg1);
        const SquareCF sq = square_cf(cf);
        return Outcome{{{"cf", coeffs(cf)}}, "grafting identity",
                       {{"cf", coeffs(sq.cf)}, {"num", str(sq.value.num())},
                        {"den", str(sq.value.den())}}};
    };
    h["pal sum-squares"] = [](const Options& o) {
        const BigInt n = parse_count(o.arg1);
        json pairs = json::array();
        for (const SquarePair& p : sum_of_two_coprime_squares(n)) {
            pairs.push_back({str(p.a), str(p.b)});
        }
        return Outcome{{{"n", str(n)}}, "scan", {{"pairs", std::move(pairs)}}};
    };
    h["pal enum"] = [](const Options& o) {
        const BigInt n = parse_count(o.arg1);
        json cfs = json::array();
        for (const PositiveCF& cf : palindromic_even_cfs(n)) {
            cfs.push_back(coeffs(cf));
        }
        const std::size_t count = cfs.size();
        return Outcome{{{"n", str(n)}}, "scan",
                       {{"cfs", std::move(cfs)},
                        {"count", count},
                        {"square_pairs", sum_of_two_coprime_squares(n).size()}}};
    };
    h["pal reduce"] = [](const Options& o) {
        const Fraction f = parse_fraction(o.arg1);
        const auto r = palindromic_reduction(f);
        const auto inner = palindromic_inner(f);
        return Outcome{{{"fraction", f.to_string()}}, "divisibility",
                       {{"reduction", r ? json(str(*r)) : json(nullptr)},
                        {"inner", inner ? json(inner->to_string()) : json(nullptr)}}};
    };

    h["markov number"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        return Outcome{{{"slope", s.to_string()}}, "markov cf numerator",
                       {{"markov", str(markov_number(s))}}};
    };
    h["markov cf"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        const PositiveCF cf = markov_cf(s);
        return Outcome{{{"slope", s.to_string()}}, "floor formulas",
                       {{"cf", coeffs(cf)}, {"v_sequence", v_sequence(s)},
                        {"tile_count", cf.sum() - 1}}};
    };
    h["markov word"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        const RenderSpec spec = render_spec(o, Format::json);
        Outcome out{{{"slope", s.to_string()}}, "lower christoffel path",
                    {{"word", christoffel_word(s).letters}}};
        if (spec.format != Format::json) {
            out.text = render_christoffel(s, spec);
        }
        return out;
    };
    h["markov triple"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        const MarkovTriple t = markov_triple(s);
        const auto [left, right] = farey_parents(s);
        return Outcome{{{"slope", s.to_string()}}, "farey parents",
                       {{"triple", {str(t[0]), str(t[1]), str(t[2])}},
                        {"parents", {left.to_string(), right.to_string()}}}};
    };
    h["markov split"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        const ChristoffelFactorization f = christoffel_factorize(s);
        const auto [a, b] = split_at_L(s);
        json pieces = json::array();
        for (const SnakeGraph* g : {&a, &b}) {
            json piece = graph_json(*g);
            piece["count"] = str(count_matchings(*g));
            pieces.push_back(std::move(piece));
        }
        return Outcome{{{"slope", s.to_string()}}, "christoffel factorization",
                       {{"lattice_point", {f.lattice_point.x, f.lattice_point.y}},
                        {"left", f.left.to_string()},
                        {"right", f.right.to_string()},
                        {"left_word", f.left_word.letters},
                        {"right_word", f.right_word.letters},
                        {"pieces", std::move(pieces)}}};
    };
    h["markov mutate"] = [](const Options& o) {
        const auto parts = parse_coeffs(o.arg1);
        if (parts.size() != 3) {
            throw Error(ErrorCode::domain, "a triple has three entries");
        }
        const MarkovTriple t(parts[0], parts[1], parts[2]);
        const BigInt index = parse_count(o.arg2);
        if (index < 1 || index > 3) {
            throw Error(ErrorCode::out_of_range, "mutation index must be 1, 2 or 3");
        }
        const MarkovTriple m = mutate(t, static_cast<std::size_t>(index) - 1);
        return Outcome{{{"triple", t.to_string()}, {"index", static_cast<int>(index)}},
                       "exchange relation", {{"triple", {str(m[0]), str(m[1]), str(m[2])}}}};
    };
    h["markov tree"] = [](const Options& o) {
        const Coeff max_q = require_max_q(o);
        json rows = json::array();
        const auto tree = markov_tree(max_q, o.jobs);
        for (const MarkovRow& r : tree) {
            rows.push_back({{"slope", r.slope.to_string()}, {"markov", str(r.markov)}});
        }
        return Outcome{{{"max_q", max_q}}, "farey enumeration",
                       {{"count", tree.size()}, {"rows", std::move(rows)}}};
    };
    h["markov band"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        const BandGraph bg = band_graph(s);
        json plus = graph_json(bg.plus_graph);
        plus["count"] = str(count_matchings(bg.plus_graph));
        json minus = graph_json(bg.minus_graph);
        minus["count"] = str(count_matchings(bg.minus_graph));
        return Outcome{{{"slope", s.to_string()}}, "cut identity",
                       {{"plus", plus},
                        {"minus", minus},
                        {"band_count", str(count_matchings_band(bg))},
                        {"three_m", str(3 * markov_number(s))}}};
    };
    h["markov pair"] = [](const Options& o) {
        const Slope s = Slope::parse(o.arg1);
        const SquarePair p = decomposition_pair(s);
        return Outcome{{{"slope", s.to_string()}}, "half continued fraction",
                       {{"a", str(p.a)}, {"b", str(p.b)}, {"sum", str(p.a * p.a + p.b * p.b)}}};
    };
    h["markov check"] = [](const Options& o) {
        const std::optional<BigInt> limit = parse_limit(o.search_limit);
        if (!o.arg1.empty()) {
            const Slope s = Slope::parse(o.arg1);
            const BigInt m = markov_number(s);
            if (limit && m > *limit) {
                throw Error(ErrorCode::size_guard, "Markov number of " + s.to_string() +
                                                       " exceeds the search limit");
            }
            return Outcome{{{"slope", s.to_string()}, {"search_limit", o.search_limit}},
                           "square scan", conjecture_json(check_conjecture(s, m))};
        }
        const Coeff max_q = require_max_q(o);
        return Outcome{{{"max_q", max_q}, {"search_limit", o.search_limit}}, "square scan sweep",
                       suite_json(run_check_suite(max_q, limit, o.jobs))};
    };
    return h;
}

json error_doc(std::string_view code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

CommandResult emit(const Options& o, std::string payload) {
    CommandResult r{kExitOk, std::move(payload), false};
    if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        file << r.payload;
        file.close();
        if (!file) {
            return {kExitDomain, error_doc("io", "cannot write " + o.out).dump(2) + "\n", false};
        }
        r.written_to_file = true;
    }
    return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Continued fractions, snake graphs and Markov numbers", "snakecf"};
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "ascii, svg or json")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    app.add_option("--out", o.out, "write the document to this path");
    app.add_option("--max-q", o.max_q, "largest denominator for sweeps");
    app.add_option("--search-limit", o.search_limit,
                   "largest Markov number to scan, or 'unlimited'");
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 1024U));
    app.add_option("--cell-size", o.cell_size, "svg pixels per tile");

    const std::map<std::string, std::vector<std::pair<std::string, int>>> grammar{
        {"cf", {{"eval", 1}, {"from", 1}, {"even", 1}, {"tails", 1}, {"reverse", 1}}},
        {"snake", {{"from-cf", 1}, {"to-cf", 1}, {"symmetry", 1}, {"render", 1}}},
        {"match", {{"count", 1}, {"list", 1}, {"prefix", 1}}},
        {"pal",
         {{"value", 1}, {"odd", 1}, {"square", 1}, {"sum-squares", 1}, {"enum", 1}, {"reduce", 1}}},
        {"markov",
         {{"number", 1},
          {"cf", 1},
          {"word", 1},
          {"triple", 1},
          {"split", 1},
          {"mutate", 2},
          {"tree", 0},
          {"band", 1},
          {"pair", 1},
          {"check", -1}}},
    };

    std::vector<std::pair<std::string, CLI::App*>> leaves;
    for (const auto& [group, commands] : grammar) {
        CLI::App* g = app.add_subcommand(group);
        g->require_subcommand(1, 1);
        g->fallthrough();
        for (const auto& [name, arity] : commands) {
            CLI::App* leaf = g->add_subcommand(name);
            leaf->fallthrough();
            if (arity != 0) {
                auto* opt = leaf->add_option("arg", o.arg1);
                if (arity > 0) {
                    opt->required();
                }
            }
            if (arity == 2) {
                leaf->add_option("index", o.arg2)->required();
            }
            if (group == "snake" && name == "render") {
                leaf->add_flag("--signs", o.signs, "label the distinguished edges (svg)");
            }
            if (group == "snake" && name == "to-cf") {
                leaf->add_option("--edge", o.edge)->check(CLI::IsMember({"north", "east"}));
            }
            if (group == "match" && name == "count") {
                leaf->add_option("--method", o.method)
                    ->check(CLI::IsMember({"transfer", "enumerate"}));
            }
            leaves.emplace_back(group + " " + name, leaf);
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        if (code == 0) {
            return {kExitOk, out.str(), false};
        }
        return {kExitUsage, error_doc("usage", e.what()).dump(2) + "\n", false};
    }

    std::string command;
    for (const auto& [name, leaf] : leaves) {
        if (leaf->parsed()) {
            command = name;
        }
    }

    try {
        static const std::map<std::string, Handler> table = handlers();
        Outcome out = table.at(command)(o);
        if (out.text) {
            return emit(o, *out.text);
        }
        const json doc{{"command", command},
                       {"input", std::move(out.input)},
                       {"method", out.method},
                       {"result", std::move(out.result)}};
        return emit(o, doc.dump(2) + "\n");
    } catch (const UsageError& e) {
        return {kExitUsage, error_doc("usage", e.what()).dump(2) + "\n", false};
    } catch (const Error& e) {
        return {kExitDomain, error_doc(to_string(e.code()), e.what()).dump(2) + "\n", false};
    } catch (const std::exception& e) {
        return {kExitDomain, error_doc("domain", e.what()).dump(2) + "\n", false};
    }
}

}  // namespace snakecf::cli
