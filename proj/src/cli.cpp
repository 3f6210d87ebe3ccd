#include "lct/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "lct/cartesian.hpp"
#include "lct/equivalence.hpp"
#include "lct/error.hpp"
#include "lct/lyndon.hpp"
#include "lct/reference.hpp"
#include "lct/runs.hpp"
#include "lct/suffix.hpp"
#include "lct/word.hpp"

namespace lct::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, tsv, dot };

struct Options {
    std::string input_file;
    std::optional<std::string> text;
    std::optional<std::string> ints;
    Ordering ordering = Ordering::normal;
    Format format = Format::json;
    bool oracle = false;
    std::optional<std::string> prepend;
    bool trace = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string dump(const Json& j) {
    return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

Json link(Pos p) { return p == no_pos ? Json(nullptr) : Json(p); }

std::string tsv_link(Pos p) { return p == no_pos ? "-" : std::to_string(p); }

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string read_source(const std::string& file, std::istream& in) {
    if (file == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(file, std::ios::binary);
    if (!f)
        throw UsageError("cannot open input file '" + file + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Word word_input(const Options& o, std::istream& in) {
    if (o.ints)
        throw UsageError("this subcommand takes a word: use --text or --input");
    if (o.text)
        return ingest_text(*o.text);
    return ingest_text(read_source(o.input_file, in));
}

NumSeq numseq_input(const Options& o, std::istream& in) {
    if (o.text)
        throw UsageError("this subcommand takes integers: use --ints or --input");
    if (o.ints)
        return ingest_integers(*o.ints);
    return ingest_integers(read_source(o.input_file, in));
}

void emit_table(std::ostream& out, const std::vector<Pos>& values, Format f) {
    if (f == Format::tsv) {
        for (std::size_t k = 0; k < values.size(); ++k)
            out << (k ? " " : "") << values[k];
        out << '\n';
        return;
    }
    Json j;
    j["n"] = values.size();
    j["values"] = values;
    out << dump(j) << '\n';
}

void emit_pos_tree(std::ostream& out, const PosTree& t, const NumSeq& x, Format f) {
    const std::size_t n = t.size();
    if (f == Format::tsv) {
        for (Pos p = 0; p < n; ++p)
            out << p << '\t' << tsv_link(t.parent[p]) << '\t' << tsv_link(t.left[p]) << '\t'
                << tsv_link(t.right[p]) << '\n';
        return;
    }
    if (f == Format::dot) {
        out << "digraph cartesian {\n";
        for (Pos p = 0; p < n; ++p)
            out << "  n" << p << " [label=\"" << p << ':' << x[p] << "\"];\n";
        for (Pos p = 0; p < n; ++p) {
            if (t.left[p] != no_pos)
                out << "  n" << p << " -> n" << t.left[p] << " [label=\"L\"];\n";
            if (t.right[p] != no_pos)
                out << "  n" << p << " -> n" << t.right[p] << " [label=\"R\"];\n";
        }
        out << "}\n";
        return;
    }
    Json j;
    j["root"] = t.root;
    Json parent = Json::array(), left = Json::array(), right = Json::array();
    for (Pos p = 0; p < n; ++p) {
        parent.push_back(link(t.parent[p]));
        left.push_back(link(t.left[p]));
        right.push_back(link(t.right[p]));
    }
    j["parent"] = std::move(parent);
    j["left"] = std::move(left);
    j["right"] = std::move(right);
    out << dump(j) << '\n';
}

void emit_lyndon_tree(std::ostream& out, const LyndonTree& t, const Word& y, Format f) {
    const std::size_t nodes = t.node_count();
    if (f == Format::tsv) {
        for (Pos id = 0; id < nodes; ++id)
            out << id << '\t' << tsv_link(t.parent[id]) << '\t' << tsv_link(t.left[id]) << '\t'
                << tsv_link(t.right[id]) << '\t' << t.span[id].first << '\t' << t.span[id].last
                << '\n';
        return;
    }
    if (f == Format::dot) {
        out << "digraph lyndon {\n";
        for (Pos id = 0; id < nodes; ++id) {
            const Interval s = t.span[id];
            std::string label;
            if (t.is_leaf(id)) {
                label = std::to_string(s.first) + ":" + std::string(1, static_cast<char>(y[s.first]));
            } else {
                label = "[" + std::to_string(s.first) + "," + std::to_string(s.last) + "]";
                if (s.length() <= 32) {
                    const auto text = y.factor(s.first, s.last);
                    label += " " + std::string(text.begin(), text.end());
                }
            }
            out << "  n" << id << " [label=\"" << dot_escape(label) << "\""
                << (t.is_leaf(id) ? ", shape=plaintext" : "") << "];\n";
        }
        for (Pos id = t.leaves; id < nodes; ++id) {
            out << "  n" << id << " -> n" << t.left[id] << ";\n";
            out << "  n" << id << " -> n" << t.right[id] << ";\n";
        }
        out << "}\n";
        return;
    }
    Json j;
    j["root"] = t.root;
    Json parent = Json::array(), left = Json::array(), right = Json::array(),
         interval = Json::array();
    for (Pos id = 0; id < nodes; ++id) {
        parent.push_back(link(t.parent[id]));
        left.push_back(link(t.left[id]));
        right.push_back(link(t.right[id]));
        interval.push_back(Json::array({t.span[id].first, t.span[id].last}));
    }
    j["parent"] = std::move(parent);
    j["left"] = std::move(left);
    j["right"] = std::move(right);
    j["interval"] = std::move(interval);
    j["leaves"] = t.leaves;
    out << dump(j) << '\n';
}

Json runs_json(const std::vector<Run>& runs) {
    Json arr = Json::array();
    for (const Run& r : runs)
        arr.push_back(Json{{"start", r.start}, {"end", r.end}, {"period", r.period},
                           {"length", r.length()}});
    return arr;
}

void emit_runs(std::ostream& out, const std::vector<Run>& runs,
               const std::vector<RunCandidate>* trace, Format f) {
    if (f == Format::tsv) {
        for (const Run& r : runs)
            out << r.start << '\t' << r.end << '\t' << r.period << '\t' << r.length() << '\n';
        if (trace) {
            for (const RunCandidate& c : *trace)
                out << "candidate\t" << to_string(c.ordering) << '\t' << c.i << '\t' << c.lyn
                    << '\t' << c.ell << '\t' << c.r << '\t' << (c.emitted() ? 1 : 0) << '\n';
        }
        return;
    }
    if (!trace) {
        out << dump(runs_json(runs)) << '\n';
        return;
    }
    Json candidates = Json::array();
    for (const RunCandidate& c : *trace)
        candidates.push_back(Json{{"ordering", to_string(c.ordering)},
                                  {"i", c.i},
                                  {"lyn", c.lyn},
                                  {"ell", c.ell},
                                  {"r", c.r},
                                  {"emitted", c.emitted()}});
    Json j;
    j["runs"] = runs_json(runs);
    j["candidates"] = std::move(candidates);
    out << dump(j) << '\n';
}

void emit_factors(std::ostream& out, const Word& y, const std::vector<Interval>& factors,
                  Format f) {
    auto text = [&](const Interval& iv) {
        const auto s = y.factor(iv.first, iv.last);
        return std::string(s.begin(), s.end());
    };
    if (f == Format::tsv) {
        for (const Interval& iv : factors)
            out << iv.first << '\t' << iv.last << '\t' << text(iv) << '\n';
        return;
    }
    Json arr = Json::array();
    for (const Interval& iv : factors)
        arr.push_back(Json{{"start", iv.first}, {"end", iv.last}, {"factor", text(iv)}});
    out << dump(arr) << '\n';
}

bool emit_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format f) {
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        if (f == Format::tsv) {
            out << r.property << '\t' << to_string(r.ordering) << '\t'
                << (r.pass ? "pass" : "FAIL") << '\t' << r.checked << '\t' << r.subject;
            if (r.witness)
                out << '\t' << *r.witness;
            out << '\n';
            continue;
        }
        arr.push_back(Json{{"property", r.property},
                           {"subject", r.subject},
                           {"ordering", to_string(r.ordering)},
                           {"pass", r.pass},
                           {"checked", r.checked},
                           {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}});
    }
    if (f == Format::json)
        out << dump(arr) << '\n';
    return all;
}

void require_format(Format f, bool dot_allowed) {
    if (f == Format::dot && !dot_allowed)
        throw UsageError("--format dot is only available for tree-producing subcommands");
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::istream& in) {
    const bool tree_cmd = cmd == "cartesian-tree" || cmd == "lyndon-tree";
    require_format(o.format, tree_cmd);
    if (o.prepend && cmd != "lyndon-tree")
        throw UsageError("--prepend only applies to lyndon-tree");
    if (o.trace && cmd != "runs")
        throw UsageError("--trace only applies to runs");

    if (cmd == "nns") {
        const NumSeq x = numseq_input(o, in);
        emit_table(out, o.oracle ? reference::naive_nns(x) : nns_table(x), o.format);
    } else if (cmd == "cartesian-tree") {
        const NumSeq x = numseq_input(o, in);
        emit_pos_tree(out, o.oracle ? reference::naive_cartesian(x) : build_cartesian(x), x,
                      o.format);
    } else if (cmd == "ranks") {
        const Word y = word_input(o, in);
        const RankTable r =
            o.oracle ? reference::naive_rank(y, o.ordering) : rank_table(y, o.ordering);
        emit_table(out, r.rank, o.format);
    } else if (cmd == "lyn") {
        const Word y = word_input(o, in);
        emit_table(out,
                   o.oracle ? reference::naive_lyn(y, o.ordering)
                            : lyndon_table_ranked(y, rank_table(y, o.ordering)),
                   o.format);
    } else if (cmd == "lyndon-tree") {
        Word y = word_input(o, in);
        if (o.prepend) {
            if (o.prepend->size() != 1)
                throw UsageError("--prepend takes exactly one symbol");
            y = Word(*o.prepend + y.str());
        }
        emit_lyndon_tree(out,
                         o.oracle ? reference::naive_lyndon_tree(y, o.ordering)
                                  : lyndon_tree(y, o.ordering),
                         y, o.format);
    } else if (cmd == "cfl") {
        const Word y = word_input(o, in);
        emit_factors(out, y,
                     o.oracle ? reference::naive_cfl(y, o.ordering)
                              : cfl_factorize(y, lyndon_table_ranked(y, rank_table(y, o.ordering))),
                     o.format);
    } else if (cmd == "runs") {
        const Word y = word_input(o, in);
        if (o.oracle) {
            if (o.trace)
                throw UsageError("--trace is not available with --oracle");
            emit_runs(out, reference::naive_runs(y), nullptr, o.format);
        } else {
            std::vector<RunCandidate> trace;
            const auto runs = find_runs(y, o.trace ? &trace : nullptr);
            emit_runs(out, runs, o.trace ? &trace : nullptr, o.format);
        }
    } else if (cmd == "verify") {
        if (o.oracle)
            throw UsageError("--oracle does not apply to verify");
        const bool has_input = o.text || o.ints || !o.input_file.empty();
        const auto reports =
            has_input ? verify_word(word_input(o, in), o.ordering) : run_builtin_suites();
        if (!emit_reports(out, reports, o.format))
            return exit_verification_failed;
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"Cartesian trees, Lyndon tables and runs", "lct"};
    app.require_subcommand(1);
    Options o;

    std::string ordering_name = "normal";
    std::string format_name = "json";

    struct Spec {
        const char* name;
        const char* help;
        bool numeric;
    };
    const Spec specs[] = {
        {"nns", "next nearest smaller table of an integer sequence", true},
        {"cartesian-tree", "Cartesian tree of an integer sequence", true},
        {"ranks", "suffix rank table", false},
        {"lyn", "longest Lyndon factor table", false},
        {"lyndon-tree", "Lyndon tree of a Lyndon word", false},
        {"cfl", "Lyndon factorisation", false},
        {"runs", "all runs (maximal periodicities)", false},
        {"verify", "structural equivalence checks; built-in suites without input", false},
    };

    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        auto* file = sub->add_option("--input", o.input_file, "input file, - for stdin");
        if (s.numeric) {
            auto* ints = sub->add_option("--ints", o.ints, "comma/space separated integers");
            file->excludes(ints);
        } else {
            auto* text = sub->add_option("--text", o.text, "input word");
            file->excludes(text);
            sub->add_option("--ordering", ordering_name, "normal or inverted")
                ->check(CLI::IsMember({"normal", "inverted"}));
        }
        sub->add_option("--format", format_name, "json, tsv or dot")
            ->check(CLI::IsMember({"json", "tsv", "dot"}));
        sub->add_flag("--oracle", o.oracle, "use the definitional brute-force computation");
        if (std::string_view(s.name) == "lyndon-tree")
            sub->add_option("--prepend", o.prepend, "symbol prepended before building");
        if (std::string_view(s.name) == "runs")
            sub->add_flag("--trace", o.trace, "also emit every examined candidate");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    o.ordering = ordering_name == "inverted" ? Ordering::inverted : Ordering::normal;
    o.format = format_name == "tsv" ? Format::tsv : format_name == "dot" ? Format::dot : Format::json;
    const bool has_input = o.text || o.ints || !o.input_file.empty();
    if (!has_input && cmd != "verify") {
        err << "error: " << cmd << " needs --input, --text or --ints\n";
        return exit_usage;
    }

    try {
        return dispatch(cmd, o, out, in);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace lct::cli
