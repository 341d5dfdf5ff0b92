#include "oddref_cli/app.hpp"

#include "oddref/bethe.hpp"
#include "oddref/diffop.hpp"
#include "oddref/error.hpp"
#include "oddref/qchar11.hpp"
#include "oddref/reflection.hpp"
#include "oddref/tableaux.hpp"
#include "oddref_cli/config.hpp"
#include "oddref_cli/json_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <functional>
#include <optional>

namespace oddref::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Terminal columns taken by a UTF-8 string; continuation bytes and the combining
// macron used for barred letters take none.
std::size_t display_width(const std::string& s)
{
    std::size_t w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto c = static_cast<unsigned char>(s[i]);
        if (c == 0xCC && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x84) {
            ++i;
            continue;
        }
        if ((c & 0xC0) != 0x80)
            ++w;
    }
    return w;
}

using Row = std::vector<std::string>;

std::string render_table(const Row& header, const std::vector<Row>& rows)
{
    std::vector<std::size_t> widths(header.size());
    const auto widen = [&](const Row& r) {
        for (std::size_t c = 0; c < r.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], display_width(r[c]));
    };
    widen(header);
    for (const auto& r : rows)
        widen(r);
    std::string out;
    const auto line = [&](const Row& r) {
        std::string text;
        for (std::size_t c = 0; c < r.size(); ++c) {
            const std::size_t pad = c + 1 < r.size() ? widths[c] - display_width(r[c]) + 2 : 0;
            text += fmt::format("{}{:{}}", r[c], "", pad);
        }
        out += text + "\n";
    };
    line(header);
    Row rule;
    for (auto w : widths)
        rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& r : rows)
        line(r);
    return out;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string lweight_table(const LWeight& z)
{
    std::vector<Row> rows;
    for (int j = 1; j <= z.size(); ++j)
        rows.push_back({std::to_string(j), sign_char(z.parity()[Position(j)]), z[Position(j)].to_string()});
    return "parity " + z.parity().to_string() + "\n" + render_table({"position", "sign", "component"}, rows);
}

std::string qchar_table(const QChar& q)
{
    Row header{"mult"};
    for (int j = 1; j <= q.parity().size(); ++j)
        header.push_back("z" + std::to_string(j));
    std::vector<Row> rows;
    for (const auto& [z, mult] : q.terms()) {
        Row r{std::to_string(mult)};
        for (const auto& c : z.components())
            r.push_back(c.to_string());
        rows.push_back(std::move(r));
    }
    return "parity " + q.parity().to_string() + "\ndimension " + std::to_string(q.dimension()) + "\n" +
           render_table(header, rows);
}

std::string null_or(const std::optional<std::string>& s) { return s ? *s : "-"; }

// Options shared by every leaf command.
struct Common {
    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<int> order;
    std::optional<std::uint64_t> cap;

    Config resolve() const
    {
        Config cfg = resolve_config(config_path);
        if (format)
            cfg.output_format = parse_format(*format);
        if (order)
            cfg.truncation_order = *order;
        if (cap)
            cfg.tableau_cap = *cap;
        return cfg;
    }
};

void add_common(CLI::App* cmd, Common& common)
{
    cmd->add_option("--config", common.config_path, "JSON config file (default: $ODDREF_CONFIG)");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

Json read_flag(const std::string& flag, const std::string& path)
{
    try {
        return io::read_file(path);
    } catch (const io::FormatError& e) {
        throw io::FormatError(flag + ": " + e.what());
    }
}

template <class F>
auto parse_flag(const std::string& flag, F&& f)
{
    try {
        return f();
    } catch (const io::FormatError& e) {
        throw io::FormatError(flag + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw io::FormatError(flag + ": " + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// -------------------------------------------------------------------- commands

struct Inputs {
    Common common;
    std::string lweight_path;
    std::string qchar_path;
    std::string system_path;
    std::string before_path;
    std::string after_path;
    int node = 0;
    std::optional<int> node_opt;
    std::string target;
    std::string outer;
    std::string inner;
    std::string parity;
    bool list_tableaux = false;
    bool count = false;
    bool character = false;
};

LWeight load_lweight(const Inputs& in)
{
    const Json doc = read_flag("--lweight", in.lweight_path);
    return parse_flag("--lweight", [&] { return io::lweight_document_from(doc); });
}

BAESystem load_system(const std::string& flag, const std::string& path)
{
    const Json doc = read_flag(flag, path);
    return parse_flag(flag, [&] { return io::system_from(doc); });
}

void cmd_reflect(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const LWeight z = reflect(load_lweight(in), Node(in.node));
    if (cfg.output_format == OutputFormat::table)
        out << lweight_table(z);
    else
        emit(out, io::lweight_document(z));
}

void cmd_reflect_to(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const LWeight z = load_lweight(in);
    const ParitySeq target = ParitySeq::parse(in.target);
    const auto path = canonical_path(z.parity(), target);
    const LWeight result = reflect_to(z, target);
    if (cfg.output_format == OutputFormat::table) {
        std::string nodes;
        for (auto n : path)
            nodes += (nodes.empty() ? "" : ",") + std::to_string(n.value);
        out << "path " << (nodes.empty() ? "(empty)" : nodes) << "\n" << lweight_table(result);
        return;
    }
    Json doc = io::lweight_document(result);
    Json p = Json::array();
    for (auto n : path)
        p.push_back(n.value);
    doc["path"] = p;
    emit(out, doc);
}

void cmd_qchar11(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const LWeight z = load_lweight(in);
    const QChar q = qchar_gl11(z);
    if (cfg.output_format == OutputFormat::table) {
        out << qchar_table(q);
        if (qchar_gl11_has_collisions(z))
            out << "note: repeated roots; some subsets give equal l-weights\n";
        return;
    }
    Json doc = io::qchar_document(q);
    doc["dimension"] = q.dimension();
    doc["collisions"] = qchar_gl11_has_collisions(z);
    emit(out, doc);
}

void cmd_qchar_reflect(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const Json doc = read_flag("--qchar", in.qchar_path);
    const QChar q = parse_flag("--qchar", [&] { return io::qchar_document_from(doc); });
    const QChar r = qchar_reflect_gl11(q);
    if (cfg.output_format == OutputFormat::table) {
        out << qchar_table(r);
        return;
    }
    Json result = io::qchar_document(r);
    result["dimension"] = r.dimension();
    emit(out, result);
}

Partition parse_partition_flag(const std::string& flag, const std::string& text)
{
    try {
        return Partition::parse(text);
    } catch (const Error& e) {
        throw Error(e.kind(), flag + ": " + e.what());
    }
}

void cmd_skew_char(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const ParitySeq s = ParitySeq::parse(in.parity);
    const SkewDiagram d(parse_partition_flag("--outer", in.outer), parse_partition_flag("--inner", in.inner));

    if (in.count) {
        out << count_ssyt(s, d) << "\n";
        return;
    }
    if (in.list_tableaux) {
        const auto cells = skew_cells(d);
        const auto tableaux = enumerate_ssyt(s, d, cfg.tableau_cap);
        const auto letters = alphabet_order(s);
        if (cfg.output_format == OutputFormat::table) {
            out << "shape " << d.to_string() << "  parity " << s.to_string() << "  tableaux " << tableaux.size()
                << "\n";
            for (std::size_t t = 0; t < tableaux.size(); ++t) {
                out << "\n#" << t + 1 << "\n";
                std::vector<Row> grid(d.outer().length());
                for (int r = 1; r <= d.outer().length(); ++r)
                    grid[r - 1].assign(d.outer().part(r), ".");
                for (std::size_t c = 0; c < cells.size(); ++c)
                    grid[cells[c].row - 1][cells[c].col - 1] = letters[tableaux[t].entries[c] - 1].to_string();
                for (const auto& row : grid) {
                    std::string line;
                    for (const auto& e : row)
                        line += fmt::format("{}{}{:{}}", line.empty() ? "" : " ", e, "",
                                            display_width(e) < 2 ? 2 - display_width(e) : 0);
                    out << line << "\n";
                }
            }
            return;
        }
        Json jcells = Json::array();
        for (const auto& c : cells)
            jcells.push_back(Json{{"row", c.row}, {"col", c.col}, {"content", c.content}});
        Json jt = Json::array();
        for (const auto& t : tableaux)
            jt.push_back(t.entries);
        Json jl = Json::array();
        for (const auto& l : letters)
            jl.push_back(l.to_string());
        emit(out, Json{{"parity", s.to_string()},
                       {"outer", d.outer().to_string()},
                       {"inner", d.inner().to_string()},
                       {"alphabet", jl},
                       {"cells", jcells},
                       {"count", tableaux.size()},
                       {"tableaux", jt}});
        return;
    }
    const QChar q = skew_qchar(s, d, cfg.tableau_cap);
    if (cfg.output_format == OutputFormat::table) {
        out << qchar_table(q);
        return;
    }
    Json doc = io::qchar_document(q);
    doc["dimension"] = q.dimension();
    emit(out, doc);
}

struct NodeReport {
    int node;
    bool odd;
    std::optional<bool> divisible;
    std::vector<std::pair<Rational, std::optional<Rational>>> residuals;  // root, value (absent: pole)
    int unsplit_degree = 0;
    std::optional<bool> residuals_vanish;
    std::optional<bool> satisfied;
};

NodeReport check_node_report(const BAESystem& sys, int i)
{
    NodeReport r{i, sys.parity().is_odd(Node(i)), std::nullopt, {}, 0, std::nullopt, std::nullopt};
    if (r.odd)
        r.divisible = bae_divisibility(sys, Node(i));
    const DensePoly& y = sys.y()[i - 1];
    const RationalRoots split = extract_rational_roots(y);
    r.unsplit_degree = std::max(split.cofactor.degree(), 0);
    bool all_zero = true;
    bool all_defined = true;
    std::optional<Rational> last;
    for (const auto& t : split.roots.roots()) {
        if (last && *last == t)
            continue;
        last = t;
        try {
            const Rational v = bae_residual(sys, Node(i), t);
            all_zero = all_zero && v.is_zero();
            r.residuals.emplace_back(t, v);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PoleAtEvaluation)
                throw;
            all_defined = false;
            r.residuals.emplace_back(t, std::nullopt);
        }
    }
    if (all_defined && r.unsplit_degree == 0)
        r.residuals_vanish = all_zero;
    r.satisfied = r.odd ? r.divisible : r.residuals_vanish;
    return r;
}

void cmd_bae_check(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const BAESystem sys = load_system("--system", in.system_path);
    std::vector<int> nodes;
    if (in.node_opt) {
        check_node(sys.parity(), Node(*in.node_opt));
        nodes.push_back(*in.node_opt);
    } else {
        for (int i = 1; i <= sys.parity().node_count(); ++i)
            nodes.push_back(i);
    }
    std::vector<NodeReport> reports;
    for (int i : nodes)
        reports.push_back(check_node_report(sys, i));

    std::optional<bool> solution = true;
    for (const auto& r : reports) {
        if (!r.satisfied) {
            if (solution == true)
                solution = std::nullopt;
        } else if (!*r.satisfied) {
            solution = false;
        }
    }
    const auto opt_bool = [](std::optional<bool> b) { return b ? Json(*b) : Json(nullptr); };

    if (cfg.output_format == OutputFormat::table) {
        std::vector<Row> rows;
        const auto yes_no = [](std::optional<bool> b) { return null_or(b ? std::optional<std::string>(*b ? "yes" : "no") : std::nullopt); };
        for (const auto& r : reports) {
            std::string res;
            for (const auto& [t, v] : r.residuals)
                res += (res.empty() ? "" : " ") + t.to_string() + ":" + (v ? v->to_string() : "pole");
            rows.push_back({std::to_string(r.node), r.odd ? "odd" : "even", yes_no(r.divisible),
                            yes_no(r.residuals_vanish), res.empty() ? "-" : res});
        }
        out << render_table({"node", "kind", "divisible", "residuals vanish", "residuals at roots"}, rows);
        out << "solution " << null_or(solution ? std::optional<std::string>(*solution ? "yes" : "no") : std::nullopt)
            << "\n";
        return;
    }
    Json jn = Json::array();
    for (const auto& r : reports) {
        Json res = Json::array();
        for (const auto& [t, v] : r.residuals)
            res.push_back(Json{{"root", io::to_json(t)}, {"value", v ? io::to_json(*v) : Json(nullptr)}});
        Json entry{{"node", r.node},
                   {"odd", r.odd},
                   {"divisible", opt_bool(r.divisible)},
                   {"residuals", res},
                   {"unsplit_degree", r.unsplit_degree},
                   {"residuals_vanish", opt_bool(r.residuals_vanish)},
                   {"satisfied", opt_bool(r.satisfied)}};
        if (r.divisible && r.residuals_vanish)
            entry["forms_agree"] = *r.divisible == *r.residuals_vanish;
        jn.push_back(entry);
    }
    emit(out, Json{{"parity", sys.parity().to_string()}, {"nodes", jn}, {"solution", opt_bool(solution)}});
}

void cmd_bae_reproduce(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const BAESystem sys = fermionic_reproduce(load_system("--system", in.system_path), Node(in.node));
    if (cfg.output_format == OutputFormat::table) {
        out << lweight_table(sys.zeta());
        std::vector<Row> rows;
        for (std::size_t i = 0; i < sys.y().size(); ++i)
            rows.push_back({std::to_string(i + 1), sys.y()[i].to_string()});
        out << render_table({"i", "y_i"}, rows);
        return;
    }
    emit(out, io::to_json(sys));
}

void cmd_diffop_compare(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    if (cfg.truncation_order < 0)
        throw UsageError("--order must be nonnegative");
    const BAESystem before = load_system("--before", in.before_path);
    const BAESystem after = load_system("--after", in.after_path);
    const int order = cfg.truncation_order;
    const SeriesComparison cmp = sos_compare(build_operator(before, order), build_operator(after, order));
    if (cfg.output_format == OutputFormat::table) {
        out << render_table({"equal", "order", "first_mismatch"},
                            {{cmp.equal ? "yes" : "no", std::to_string(cmp.order),
                              cmp.first_mismatch ? std::to_string(*cmp.first_mismatch) : "-"}});
        return;
    }
    emit(out, Json{{"equal", cmp.equal},
                   {"order", cmp.order},
                   {"first_mismatch", cmp.first_mismatch ? Json(*cmp.first_mismatch) : Json(nullptr)}});
}

void cmd_finite_dim(const Inputs& in, std::ostream& out)
{
    const Config cfg = in.common.resolve();
    const LWeight z = load_lweight(in);
    const bool finite = finite_dim_check(z);
    const ParitySeq& s = z.parity();
    Json nodes = Json::array();
    std::vector<Row> rows;
    for (int i = 1; i <= s.node_count(); ++i) {
        if (i == s.m())
            continue;
        const CoprimeRatio r = coprime_ratio(z, Node(i));
        const auto g = shift_ladder_solve(r.phi, r.psi, s[Position(i)]);
        nodes.push_back(Json{{"node", i}, {"g", g ? io::to_json(*g) : Json(nullptr)}});
        rows.push_back({std::to_string(i), g ? g->to_string() : "none"});
    }
    if (cfg.output_format == OutputFormat::table) {
        out << render_table({"node", "g"}, rows) << "finite-dimensional " << (finite ? "yes" : "no") << "\n";
        return;
    }
    emit(out, Json{{"finite_dimensional", finite}, {"nodes", nodes}});
}

void report_domain_error(std::ostream& err, const Error& e)
{
    err << Json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Odd reflections, q-characters and Bethe ansatz reproduction for Y(gl(m|n))", "oddref"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Inputs in;
    std::function<void()> action;
    const auto leaf = [&](CLI::App* cmd, void (*fn)(const Inputs&, std::ostream&)) {
        add_common(cmd, in.common);
        cmd->callback([&action, &out, &in, fn] { action = [&out, &in, fn] { fn(in, out); }; });
    };

    auto* reflect_cmd = app.add_subcommand("reflect", "Odd reflection of a highest l-weight at one node");
    reflect_cmd->add_option("--lweight", in.lweight_path, "l-weight document")->required()->check(CLI::ExistingFile);
    reflect_cmd->add_option("--node", in.node, "Node i with s_i != s_{i+1}")->required();
    leaf(reflect_cmd, cmd_reflect);

    auto* reflect_to_cmd = app.add_subcommand("reflect-to", "Reflect along the canonical path to a target parity");
    reflect_to_cmd->add_option("--lweight", in.lweight_path, "l-weight document")->required()->check(CLI::ExistingFile);
    reflect_to_cmd->add_option("--target", in.target, "Target parity, e.g. \"-+\"")->required();
    leaf(reflect_to_cmd, cmd_reflect_to);

    auto* qchar11_cmd = app.add_subcommand("qchar11", "q-character of an irreducible Y(gl(1|1))-module");
    qchar11_cmd->add_option("--lweight", in.lweight_path, "Highest l-weight document")->required()->check(CLI::ExistingFile);
    leaf(qchar11_cmd, cmd_qchar11);

    auto* qref_cmd = app.add_subcommand("qchar-reflect", "Rewrite a gl(1|1) q-character over the swapped parity");
    qref_cmd->add_option("--qchar", in.qchar_path, "q-character document")->required()->check(CLI::ExistingFile);
    leaf(qref_cmd, cmd_qchar_reflect);

    auto* skew_cmd = app.add_subcommand("skew-char", "Semi-standard s-tableaux and the skew q-character");
    skew_cmd->add_option("--outer", in.outer, "Outer partition, e.g. 5,3,3")->required();
    skew_cmd->add_option("--inner", in.inner, "Inner partition (default empty)");
    skew_cmd->add_option("--parity", in.parity, "Parity sequence, e.g. \"+-+-\"")->required();
    skew_cmd->add_option("--cap", in.common.cap, "Maximum number of tableaux")->check(CLI::PositiveNumber);
    auto* list_flag = skew_cmd->add_flag("--list-tableaux", in.list_tableaux, "List the tableaux");
    auto* count_flag = skew_cmd->add_flag("--count", in.count, "Print the number of tableaux");
    auto* char_flag = skew_cmd->add_flag("--char", in.character, "Print the q-character (default)");
    list_flag->excludes(count_flag)->excludes(char_flag);
    count_flag->excludes(char_flag);
    leaf(skew_cmd, cmd_skew_char);

    auto* bae_cmd = app.add_subcommand("bae", "Bethe ansatz equations");
    bae_cmd->require_subcommand(1);
    auto* check_cmd = bae_cmd->add_subcommand("check", "Check divisibility and residuals");
    check_cmd->add_option("--system", in.system_path, "System document")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("--node", in.node_opt, "Restrict to one node");
    leaf(check_cmd, cmd_bae_check);
    auto* repro_cmd = bae_cmd->add_subcommand("reproduce", "Fermionic reproduction at an odd node");
    repro_cmd->add_option("--system", in.system_path, "System document")->required()->check(CLI::ExistingFile);
    repro_cmd->add_option("--node", in.node, "Odd node")->required();
    leaf(repro_cmd, cmd_bae_reproduce);

    auto* diffop_cmd = app.add_subcommand("diffop", "Rational difference operators");
    diffop_cmd->require_subcommand(1);
    auto* cmp_cmd = diffop_cmd->add_subcommand("compare", "Compare the operators of two systems");
    cmp_cmd->add_option("--before", in.before_path, "First system")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("--after", in.after_path, "Second system")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("--order", in.common.order, "Truncation order R")->check(CLI::NonNegativeNumber);
    leaf(cmp_cmd, cmd_diffop_compare);

    auto* fd_cmd = app.add_subcommand("finite-dim", "Finite-dimensionality test (standard parity)");
    fd_cmd->add_option("--lweight", in.lweight_path, "Highest l-weight document")->required()->check(CLI::ExistingFile);
    leaf(fd_cmd, cmd_finite_dim);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (action)
            action();
        return exit_ok;
    } catch (const Error& e) {
        report_domain_error(err, e);
        return exit_domain_error;
    } catch (const io::FormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage_error;
    }
}

}  // namespace oddref::cli
