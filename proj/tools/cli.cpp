#include "cli.hpp"

#include "phx/algebra.hpp"
#include "phx/document.hpp"
#include "phx/error.hpp"
#include "phx/oracle.hpp"
#include "phx/text.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>

namespace phx::cli {

namespace {

struct Options {
    std::string file = "taxonomy.phx";
    bool closed_world = false;
    std::string mode = "symbolic";
    bool force = false;
    std::string name;
    std::string root = "[]";
    std::string label;
    std::string flag;
    std::string payload;
    std::string lhs;
    std::string rhs;
};

World world_of(const Options& o) { return o.closed_world ? World::Closed : World::Open; }

const char* boolean(bool b) { return b ? "true" : "false"; }

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

const SimpleCollection& require_simple(const Expression& e) {
    const auto* s = e.simple();
    if (s == nullptr) throw Error(ErrorCode::ValidationError, "expected a simple collection");
    return *s;
}

BranchUnionCollection require_branch_unions(const Expression& e) {
    if (const auto* b = e.branch_unions()) return *b;
    if (const auto* s = e.simple(); s != nullptr && !s->has_complements()) {
        return BranchUnionCollection::from_simple(*s);
    }
    throw Error(ErrorCode::ValidationError, "expected a branch-union collection");
}

void print_criteria(const std::vector<CriterionId>& ids, const GeneratingPolyhierarchy& gp, std::ostream& out) {
    for (CriterionId c : ids) out << gp.criterion(c).name << '\n';
}

template <typename T>
void print_all(const std::vector<T>& items, const GeneratingPolyhierarchy& gp, std::ostream& out) {
    for (const auto& item : items) out << format(Expression(item), gp) << '\n';
}

int run_query(const std::string& op, const Options& o, std::ostream& out) {
    const Taxonomy t = load(o.file);
    const auto& gp = t.gp;
    std::vector<Expression> args{parse(o.lhs, gp)};
    if (!o.rhs.empty()) args.push_back(parse(o.rhs, gp));

    if (op == "includes") {
        out << boolean(includes(args[0], args[1], gp, world_of(o))) << '\n';
    } else if (op == "equals") {
        out << boolean(equals(args[0], args[1], gp, world_of(o))) << '\n';
    } else if (op == "union") {
        out << format(unite(args[0], args[1], gp), gp) << '\n';
    } else if (op == "intersect") {
        out << format(intersect(args[0], args[1], gp), gp) << '\n';
    } else if (op == "diff") {
        const auto mode = o.mode == "expanded" ? ComplementMode::Expanded : ComplementMode::Symbolic;
        out << format(complement(args[0], args[1], gp, mode), gp) << '\n';
    } else if (op == "empty") {
        out << boolean(is_empty(args[0], gp, world_of(o))) << '\n';
    } else if (op == "parents" || op == "children") {
        const bool up = op == "parents";
        if (const auto* s = args[0].simple()) {
            if (up && s->is_universe()) return kOk;
            print_all(up ? direct_parents(*s, gp) : direct_children(*s, gp), gp, out);
        } else if (const auto* b = args[0].branch_unions()) {
            print_all(up ? direct_parents_bu(*b, gp) : direct_children_bu(*b, gp), gp, out);
        } else {
            print_all(up ? direct_parents_composite(args[0], gp) : direct_children_composite(args[0], gp), gp, out);
        }
    } else if (op == "hull") {
        out << format(hull(require_branch_unions(args[0]), gp).expression, gp) << '\n';
    } else if (op == "free") {
        print_criteria(free_criteria(require_simple(args[0]), gp), gp, out);
    } else if (op == "leaf") {
        print_criteria(leaf_criteria(require_simple(args[0]), gp), gp, out);
    } else if (op == "classify") {
        const QuerySummary q = classify_query(args[0], gp);
        out << "empty " << boolean(q.empty) << '\n';
        auto names = [&](const std::vector<CriterionId>& ids) {
            std::string s;
            for (CriterionId c : ids) s += ' ' + gp.criterion(c).name;
            return s;
        };
        if (q.leaf) out << "leaf" << names(*q.leaf) << '\n';
        if (q.free) out << "free" << names(*q.free) << '\n';
        out << "parents " << q.parents << '\n' << "children " << q.children << '\n';
    }
    return kOk;
}

void export_dag(const Taxonomy& t, std::ostream& out) {
    const auto dag = oracle::materialize_dag(t.gp, 10'000);
    out << "digraph phx {\n";
    for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << dot_escape(format(dag.nodes[i], t.gp)) << "\"];\n";
    }
    for (const auto& [p, c] : dag.edges) out << "  n" << p << " -> n" << c << ";\n";
    out << "}\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Build and query polyhierarchical taxonomies", "phx"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--file", o.file, "Taxonomy document")->capture_default_str();
    app.add_flag("--closed-world", o.closed_world, "Treat registered branches as exhaustive");
    app.add_option("--mode", o.mode, "Complement mode")
        ->check(CLI::IsMember({"symbolic", "expanded"}))
        ->capture_default_str();

    auto* init = app.add_subcommand("init", "Create an empty taxonomy");
    init->add_flag("--force", o.force, "Overwrite an existing file");

    auto* criterion = app.add_subcommand("criterion", "Criteria");
    criterion->require_subcommand(1);
    auto* criterion_add = criterion->add_subcommand("add", "Register a criterion");
    criterion_add->add_option("NAME", o.name)->required();
    criterion_add->add_option("--root", o.root, "Domain of definition")->capture_default_str();

    auto* branch = app.add_subcommand("branch", "Branches");
    branch->require_subcommand(1);
    auto* branch_add = branch->add_subcommand("add", "Register a branch");
    branch_add->add_option("CRITERION", o.name)->required();
    branch_add->add_option("LABEL", o.label)->required();

    auto* category = app.add_subcommand("category", "Persistent categories");
    category->require_subcommand(1);
    auto* category_define = category->add_subcommand("define", "Name a root or container category");
    category_define->add_option("NAME", o.name)->required();
    category_define->add_option("EXPR", o.root)->required();
    category_define->add_option("--flag", o.flag)->check(CLI::IsMember({"root", "container"}));

    auto* object = app.add_subcommand("object", "Objects");
    object->require_subcommand(1);
    auto* object_add = object->add_subcommand("add", "Classify an object");
    object_add->add_option("ID", o.name)->required();
    object_add->add_option("ATTRS", o.label, "e.g. C1=2,C3=1")->required();
    object_add->add_option("--payload", o.payload);

    auto* query = app.add_subcommand("query", "Algebra queries");
    query->require_subcommand(1);
    std::map<CLI::App*, std::string> queries;
    for (const char* op : {"includes", "equals", "union", "intersect", "diff"}) {
        auto* q = query->add_subcommand(op);
        q->add_option("EXPR", o.lhs)->required();
        q->add_option("EXPR2", o.rhs)->required();
        queries[q] = op;
    }
    for (const char* op : {"empty", "parents", "children", "hull", "free", "leaf", "classify"}) {
        auto* q = query->add_subcommand(op);
        q->add_option("EXPR", o.lhs)->required();
        queries[q] = op;
    }

    auto* members = app.add_subcommand("members", "Objects in a category");
    members->add_option("EXPR", o.root)->required();
    auto* stats = app.add_subcommand("stats", "Compactness counters");
    auto* validate = app.add_subcommand("validate", "Check a document");
    auto* export_cmd = app.add_subcommand("export-dag", "Induced DAG in dot format");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    try {
        if (*init) {
            if (std::filesystem::exists(o.file) && !o.force) {
                throw Error(ErrorCode::IoError, o.file + " already exists");
            }
            save(Taxonomy{}, o.file);
        } else if (*criterion_add) {
            Taxonomy t = load(o.file);
            const CriterionId id = t.gp.add_criterion(o.name, parse(o.root, t.gp));
            save(t, o.file);
            out << id.value << '\n';
        } else if (*branch_add) {
            Taxonomy t = load(o.file);
            auto c = t.gp.find_criterion(o.name);
            if (!c) throw Error(ErrorCode::UnknownCriterion, "unknown criterion '" + o.name + "'");
            const BranchId id = t.gp.add_branch(*c, o.label);
            save(t, o.file);
            out << id.value << '\n';
        } else if (*category_define) {
            Taxonomy t = load(o.file);
            std::optional<CategoryFlag> flag;
            if (!o.flag.empty()) flag = parse_category_flag(o.flag);
            const auto& entry = t.universe.register_category(o.name, parse(o.root, t.gp), t.gp, flag);
            out << entry.name << '\t' << category_flag_name(entry.flag) << '\t' << format(entry.expression, t.gp)
                << '\n';
            save(t, o.file);
        } else if (*object_add) {
            Taxonomy t = load(o.file);
            const auto& record = t.universe.assign(o.name, parse_assignment(o.label, t.gp), t.gp, o.payload);
            out << record.id << '\t' << format(record.assignment, t.gp) << '\n';
            save(t, o.file);
        } else if (*query) {
            for (const auto& [sub, op] : queries) {
                if (*sub) return run_query(op, o, out);
            }
        } else if (*members) {
            const Taxonomy t = load(o.file);
            for (const auto& id : t.universe.members(parse(o.root, t.gp), t.gp)) out << id << '\n';
        } else if (*stats) {
            const Taxonomy t = load(o.file);
            const auto s = t.universe.compactness_stats(t.gp);
            out << "stored_expressions " << s.stored_expressions << '\n'
                << "criteria " << s.criteria_count << '\n'
                << "objects " << s.object_count << '\n';
        } else if (*validate) {
            load(o.file);
            out << "ok\n";
        } else if (*export_cmd) {
            export_dag(load(o.file), out);
        }
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace phx::cli
