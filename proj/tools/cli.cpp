#include "cli.hpp"

#include "gtkk/charpoly.hpp"
#include "gtkk/error.hpp"
#include "gtkk/json_io.hpp"
#include "gtkk/kk.hpp"
#include "gtkk/kogan.hpp"
#include "gtkk/reading.hpp"
#include "gtkk/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace gtkk::cli {

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
    std::vector<T> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not an integer");
        }
        if (used != item.size()) throw UsageError(flag + ": '" + item + "' is not an integer");
        out.push_back(static_cast<T>(value));
    }
    return out;
}

Partition parse_partition(const std::string& text, const std::string& flag) {
    try {
        return Partition(parse_list<Entry>(text, flag));
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Word parse_word(const std::string& text, int n, const std::string& flag) {
    try {
        return Word(n, parse_list<int>(text, flag));
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Permutation parse_one_line(const std::string& text, int n, const std::string& flag) {
    const auto images = parse_list<int>(text, flag);
    try {
        return Permutation::from_prefix(n, images);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

GTPattern read_pattern(const std::string& path) {
    try {
        return pattern_from_json(read_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::uint64_t limit_of(const RunConfig& c) {
    return c.force ? std::numeric_limits<std::uint64_t>::max() : kDefaultPairLimit;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json members_json(const std::vector<TensorElement>& members) {
    json out = json::array();
    for (const auto& t : members) out.push_back(to_json(t));
    return out;
}

json multiplicities_json(const std::map<Weight, std::int64_t>& mult) {
    json out = json::array();
    for (const auto& [w, m] : mult) out.push_back({{"highest_weight", w.coords}, {"mult", m}});
    return out;
}

int run_verify_command(const RunConfig& c, std::ostream& out) {
    VerifyOptions opts;
    opts.n = c.n;
    opts.max_weight = c.max_weight;
    opts.threads = c.threads;
    opts.convention = c.mirror_tensor ? TensorConvention::Mirrored : TensorConvention::Standard;
    const auto report = run_verify(opts);
    if (c.format == "text") {
        for (const auto& p : report.properties)
            out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checks)\n";
    } else {
        emit(out, report.to_json());
    }
    return report.all_passed() ? kOk : kVerifyFailed;
}

std::string dot_graph(const std::vector<GTPattern>& patterns, const std::vector<CrystalEdge>& edges) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t k = 0; k < patterns.size(); ++k) os << "  v" << k << " [label=\"" << patterns[k].to_string() << "\"];\n";
    for (const auto& e : edges) os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Gelfand-Tsetlin models of Kostant-Kumar modules for sl_n", "gtkk"};
    app.require_subcommand(1);

    RunConfig c;
    std::string shape, lambda, mu, word, w_line, w_word, u_line, v_line;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1U, 1024U));
        sub->add_flag("--force", c.force, "Lift the default size guard");
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& about) {
        auto* sub = parent->add_subcommand(name, about);
        common(sub);
        return sub;
    };
    auto group = [&](const std::string& name, const std::string& about) {
        auto* sub = app.add_subcommand(name, about);
        sub->require_subcommand(1);
        return sub;
    };

    auto* perm = group("perm", "Symmetric group operations");
    for (const char* name : {"demazure-product", "evaluate"}) {
        auto* s = leaf(perm, name, name == std::string("evaluate") ? "Product of a word" : "Demazure product of a word");
        s->add_option("--n", c.n, "Rank")->required()->check(CLI::Range(1, 64));
        s->add_option("--word", word, "Comma-separated letters")->required();
    }
    auto* bruhat = leaf(perm, "bruhat", "Bruhat comparison u ≤ v");
    bruhat->add_option("--u", u_line, "One-line permutation")->required();
    bruhat->add_option("--v", v_line, "One-line permutation")->required();

    auto* gt = group("gt", "Gelfand-Tsetlin patterns");
    auto* gt_enum = leaf(gt, "enumerate", "All patterns of a shape");
    gt_enum->add_option("--shape", shape, "Top row, weakly decreasing")->required();
    gt_enum->add_flag("--count-only", c.count_only, "Print only the count");
    for (const char* name : {"weight", "validate"}) {
        auto* s = leaf(gt, name, name == std::string("weight") ? "Weight of a pattern" : "Check interlacing");
        s->add_option("--pattern", c.pattern_path, "Pattern JSON file")->required();
    }

    auto* crystal = group("crystal", "Crystal operators");
    auto* graph = leaf(crystal, "graph", "Crystal graph of a shape");
    graph->add_option("--shape", shape)->required();
    auto* dem = leaf(crystal, "demazure", "Demazure crystal");
    dem->add_option("--shape", shape)->required();
    auto* dem_w = dem->add_option("--w", w_line, "One-line permutation");
    dem->add_option("--word", word, "Reduced word")->excludes(dem_w);
    dem->add_flag("--opposite", c.opposite, "Opposite Demazure crystal");

    auto* reading = group("reading", "Reading words");
    auto* rp = leaf(reading, "p", "Associated permutation of a pair");
    rp->add_option("--left", c.left_path, "Left pattern JSON file")->required();
    rp->add_option("--right", c.right_path, "Right pattern JSON file")->required();

    auto* kogan = group("kogan", "Kogan faces");
    auto* faces = leaf(kogan, "faces", "Reduced faces with a given permutation");
    faces->add_option("--shape", shape)->required();
    faces->add_option("--w", w_line, "Face permutation, one-line")->required();
    faces->add_flag("--dual", c.dual, "Dual (SE) faces");
    auto* bik = leaf(kogan, "bikogan", "Reduced BiKogan faces with a given permutation");
    bik->add_option("--lambda", lambda)->required();
    bik->add_option("--mu", mu)->required();
    bik->add_option("--w", w_line, "Face permutation, one-line")->required();

    auto* kk = group("kk", "Kostant-Kumar crystals");
    auto* kk_char = leaf(kk, "char", "Character of a Kostant-Kumar crystal");
    kk_char->add_option("--lambda", lambda)->required();
    kk_char->add_option("--mu", mu)->required();
    auto* kk_w = kk_char->add_option("--w", w_line, "One-line permutation");
    kk_char->add_option("--w-word", w_word, "Word for the permutation")->excludes(kk_w);
    kk_char->add_flag("--decompose", c.decompose, "Highest-weight multiplicities");
    kk_char->add_option("--json", c.output_path, "Also write the result to this file");

    auto add_verify = [&](CLI::App* s) {
        s->add_option("--n", c.n, "Rank")->check(CLI::Range(1, 5));
        s->add_option("--max-weight", c.max_weight, "Largest shape size")->check(CLI::Range(0, 64));
        s->add_flag("--mirror-tensor", c.mirror_tensor, "Use the mirrored tensor rule");
    };
    add_verify(leaf(kk, "verify", "Run the cross-check suite"));
    add_verify(leaf(&app, "verify", "Run the cross-check suite"));

    auto* chr = group("char", "Characters");
    leaf(chr, "schur", "Schur character")->add_option("--shape", shape)->required();
    auto* cdem = leaf(chr, "demazure", "Demazure character");
    cdem->add_option("--shape", shape)->required();
    cdem->add_option("--word", word, "Reduced word")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        c.command = "help";
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        c.help = target->help();
        return c;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const CLI::App* node = &app;
    while (!node->get_subcommands().empty()) {
        node = node->get_subcommands().front();
        c.command += (c.command.empty() ? "" : ".") + node->get_name();
    }
    if (c.command == "kk.verify") c.command = "verify";
    if (c.command == "verify" && c.n == 0) c.n = 3;

    if (!shape.empty()) c.shape = parse_partition(shape, "--shape");
    if (!lambda.empty()) c.lambda = parse_partition(lambda, "--lambda");
    if (!mu.empty()) c.mu = parse_partition(mu, "--mu");
    if (c.lambda && c.mu && c.lambda->rank() != c.mu->rank()) throw UsageError("--lambda and --mu differ in length");
    if (c.shape) c.n = c.shape->rank();
    if (c.mu) c.n = c.mu->rank();

    if (c.command == "perm.bruhat") {
        const auto u = parse_list<int>(u_line, "--u");
        const auto v = parse_list<int>(v_line, "--v");
        c.n = static_cast<int>(std::max(u.size(), v.size()));
        c.u = parse_one_line(u_line, c.n, "--u");
        c.v = parse_one_line(v_line, c.n, "--v");
    }
    if (!word.empty() || c.command.starts_with("perm.") || c.command == "char.demazure")
        if (c.command != "perm.bruhat") c.word = parse_word(word, c.n, "--word");
    if (!w_line.empty()) c.w = parse_one_line(w_line, c.n, "--w");
    if (!w_word.empty()) c.w = evaluate(parse_word(w_word, c.n, "--w-word"));
    if (c.command == "kk.char" && !c.w) throw UsageError("kk char needs --w or --w-word");
    if (c.command == "crystal.demazure" && !c.w && !c.word) throw UsageError("crystal demazure needs --w or --word");
    if (c.word && (c.command == "crystal.demazure" || c.command == "char.demazure") && !is_reduced(*c.word))
        throw UsageError("--word must be reduced");

    // Size guards.
    if (!c.force) {
        if (c.shape && dimension_oracle(*c.shape) > kDefaultPatternLimit)
            throw GuardError("shape has " + std::to_string(dimension_oracle(*c.shape)) + " patterns (use --force)");
        if (c.lambda && c.mu) {
            const auto a = dimension_oracle(*c.lambda);
            const auto b = dimension_oracle(*c.mu);
            if (a != 0 && b > kDefaultPairLimit / a)
                throw GuardError("pair set exceeds " + std::to_string(kDefaultPairLimit) + " (use --force)");
        }
    }
    return c;
}

int run(const RunConfig& c, std::ostream& out) {
    const auto& cmd = c.command;
    const std::uint64_t limit = limit_of(c);
    const bool text = c.format == "text";

    if (cmd == "help") {
        out << c.help;
        return kOk;
    }
    if (cmd == "perm.demazure-product" || cmd == "perm.evaluate") {
        const auto w = cmd == "perm.evaluate" ? evaluate(*c.word) : demazure_product(*c.word);
        if (text)
            out << w.to_string() << '\n';
        else
            emit(out, {{"permutation", to_json(w)}, {"length", length(w)}, {"reduced_word", to_json(reduced_word(w))}});
        return kOk;
    }
    if (cmd == "perm.bruhat") {
        const bool leq = bruhat_leq(*c.u, *c.v);
        if (text)
            out << (leq ? "true" : "false") << '\n';
        else
            emit(out, {{"u", to_json(*c.u)}, {"v", to_json(*c.v)}, {"leq", leq}});
        return kOk;
    }
    if (cmd == "gt.enumerate") {
        const auto patterns = enumerate(*c.shape, limit);
        if (c.count_only) {
            if (text)
                out << patterns.size() << '\n';
            else
                emit(out, {{"shape", to_json(*c.shape)}, {"count", patterns.size()}});
            return kOk;
        }
        if (text) {
            for (const auto& p : patterns) out << p.to_string() << '\n';
        } else {
            json list = json::array();
            for (const auto& p : patterns) list.push_back(to_json(p));
            emit(out, {{"shape", to_json(*c.shape)}, {"count", patterns.size()}, {"patterns", list}});
        }
        return kOk;
    }
    if (cmd == "gt.weight" || cmd == "gt.validate") {
        const auto p = read_pattern(c.pattern_path);
        const auto report = validate(p);
        if (cmd == "gt.weight") {
            if (!report.ok) throw UsageError(c.pattern_path + ": pattern violates interlacing");
            emit(out, {{"weight", weight(p).coords}});
            return kOk;
        }
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"kind", v.kind == InequalityKind::NE ? "NE" : "SE"},
                                  {"i", v.i},
                                  {"j", v.j},
                                  {"difference", v.difference}});
        emit(out, {{"valid", report.ok}, {"violations", violations}});
        return report.ok ? kOk : kVerifyFailed;
    }
    if (cmd == "crystal.graph") {
        const auto patterns = enumerate(*c.shape, limit);
        const auto edges = crystal_edges(patterns);
        if (c.format == "dot") {
            out << dot_graph(patterns, edges);
        } else {
            json vertices = json::array();
            for (const auto& p : patterns) vertices.push_back(to_json(p));
            json es = json::array();
            for (const auto& e : edges) es.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
            emit(out, {{"vertices", vertices}, {"edges", es}});
        }
        return kOk;
    }
    if (cmd == "crystal.demazure") {
        std::set<GTPattern> set;
        if (c.word)
            set = c.opposite ? opposite_demazure_crystal(*c.shape, *c.word) : demazure_crystal(*c.shape, *c.word);
        else
            set = c.opposite ? opposite_demazure_crystal(*c.shape, *c.w) : demazure_crystal(*c.shape, *c.w);
        const std::vector<GTPattern> members(set.begin(), set.end());
        json list = json::array();
        for (const auto& p : members) list.push_back(to_json(p));
        emit(out, {{"size", members.size()}, {"character", to_json(character_of(members))}, {"patterns", list}});
        return kOk;
    }
    if (cmd == "reading.p") {
        const auto p = read_pattern(c.left_path);
        const auto q = read_pattern(c.right_path);
        if (!is_valid(p) || !is_valid(q)) throw UsageError("input pattern violates interlacing");
        if (p.size() != q.size()) throw UsageError("patterns have different sizes");
        const auto r = read_pair(p, q);
        emit(out, {{"f_word", to_json(r.f_word)},
                   {"i_word", to_json(r.i_word)},
                   {"pair_word", to_json(r.pair_word)},
                   {"demazure_product", to_json(r.demazure_product)},
                   {"p", to_json(r.p)}});
        return kOk;
    }
    if (cmd == "kogan.faces") {
        const auto kind = c.dual ? FaceKind::SE : FaceKind::NE;
        const auto faces = reduced_faces(c.n, kind, *c.w);
        const auto patterns = enumerate(*c.shape, limit);
        json list = json::array();
        for (const auto& f : faces) {
            std::size_t points = 0;
            for (const auto& p : patterns) points += f.contains(p) ? 1 : 0;
            list.push_back({{"face", to_json(f)}, {"points", points}});
        }
        const auto unioned = c.dual ? dual_kogan_points(*c.shape, *c.w) : kogan_points(*c.shape, *c.w);
        emit(out, {{"w", to_json(*c.w)}, {"faces", list}, {"union_points", unioned.size()}});
        return kOk;
    }
    if (cmd == "kogan.bikogan") {
        const auto faces = reduced_bifaces(*c.w);
        json list = json::array();
        for (const auto& b : faces)
            list.push_back({{"face", to_json(b)}, {"points", bikogan_points(*c.lambda, *c.mu, b, limit).size()}});
        const auto unioned = bikogan_union_points(*c.lambda, *c.mu, *c.w, {c.threads, limit});
        emit(out, {{"w", to_json(*c.w)}, {"faces", list}, {"union_points", unioned.size()}});
        return kOk;
    }
    if (cmd == "kk.char") {
        const KKOptions opts{c.threads, limit};
        const auto kk = kk_crystal(*c.lambda, *c.mu, *c.w, opts);
        CharPoly ch(c.n);
        for (const auto& t : kk.members) ch.add_term(weight(t), 1);
        json result = {{"lambda", to_json(*c.lambda)},
                       {"mu", to_json(*c.mu)},
                       {"w", to_json(*c.w)},
                       {"size", kk.members.size()},
                       {"character", to_json(ch)}};
        if (c.decompose)
            result["decomposition"] =
                multiplicities_json(decompose(components(*c.lambda, *c.mu, TensorConvention::Standard, limit), kk));
        if (!c.output_path.empty()) {
            json full = result;
            full["members"] = members_json(kk.members);
            std::ofstream file(c.output_path);
            if (!file) throw UsageError("cannot write " + c.output_path);
            file << full.dump(2) << '\n';
        }
        emit(out, result);
        return kOk;
    }
    if (cmd == "char.schur" || cmd == "char.demazure") {
        const auto ch = cmd == "char.schur" ? schur(*c.shape) : demazure_character(*c.shape, *c.word);
        emit(out, to_json(ch));
        return kOk;
    }
    if (cmd == "verify") return run_verify_command(c, out);
    throw UsageError("unknown command " + cmd);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_args(args), out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const GuardError& e) {
        err << "resource guard: " << e.what() << '\n';
        return kGuard;
    } catch (const ConsistencyError& e) {
        err << "verification failure: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace gtkk::cli
