#include "phx/document.hpp"

#include "phx/error.hpp"
#include "phx/text.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace phx {

namespace {

constexpr std::string_view kSections[] = {"[criteria]", "[branches]", "[collections]",
                                          "[unions]",   "[categories]", "[objects]"};

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) return fields;
        start = tab + 1;
    }
}

std::optional<std::uint32_t> parse_index(std::string_view text) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return value;
}

/// Interning table for expressions shared by several category/object lines.
class Interner {
public:
    void add_root(const std::string& text, CriterionId id) {
        if (text != "[]") roots_.emplace(text, id);
    }

    void count(const std::string& text, bool simple) {
        if (roots_.contains(text)) return;
        auto& [n, is_simple] = seen_[text];
        ++n;
        is_simple = simple;
        if (n == 2) (simple ? collections_ : unions_).push_back(text);
    }

    std::string reference(const std::string& text) const {
        if (auto r = roots_.find(text); r != roots_.end()) return "@r" + std::to_string(r->second.value);
        auto it = std::find(collections_.begin(), collections_.end(), text);
        if (it != collections_.end()) return "@c" + std::to_string(it - collections_.begin() + 1);
        it = std::find(unions_.begin(), unions_.end(), text);
        if (it != unions_.end()) return "@u" + std::to_string(it - unions_.begin() + 1);
        return text;
    }

    const std::vector<std::string>& collections() const { return collections_; }
    const std::vector<std::string>& unions() const { return unions_; }

private:
    std::map<std::string, CriterionId> roots_; // first criterion with that root
    std::map<std::string, std::pair<std::size_t, bool>> seen_;
    std::vector<std::string> collections_;
    std::vector<std::string> unions_;
};

struct Pending {
    std::size_t line;
    std::string text;
};

struct RawCategory {
    std::size_t line;
    std::string name;
    CategoryFlag flag;
    std::string text;
};

struct RawObject {
    std::size_t line;
    std::string id;
    std::string text;
    std::string payload;
};

} // namespace

std::string serialize(const Taxonomy& t) {
    const auto& gp = t.gp;
    std::vector<std::pair<std::string, const CategoryEntry*>> categories;
    std::vector<std::pair<std::string, const ObjectRecord*>> objects;
    Interner interner;
    for (const auto& c : gp.criteria()) interner.add_root(format(c.root, gp), c.id);
    for (const auto& [name, entry] : t.universe.categories()) {
        categories.emplace_back(format(entry.expression, gp), &entry);
        interner.count(categories.back().first, entry.expression.kind() == Expression::Kind::Simple);
    }
    for (const auto& [id, record] : t.universe.objects()) {
        objects.emplace_back(format(record.assignment, gp), &record);
        interner.count(objects.back().first, true);
    }

    std::ostringstream out;
    out << "PHX " << kFormatVersion << "\n[criteria]\n";
    for (const auto& c : gp.criteria()) out << c.id.value << '\t' << c.name << '\t' << format(c.root, gp) << '\n';
    out << "[branches]\n";
    for (const auto& c : gp.criteria()) {
        for (const auto& b : c.branches) out << c.id.value << '\t' << b.id.value << '\t' << b.label << '\n';
    }
    out << "[collections]\n";
    for (std::size_t i = 0; i < interner.collections().size(); ++i) {
        out << i + 1 << '\t' << interner.collections()[i] << '\n';
    }
    out << "[unions]\n";
    for (std::size_t i = 0; i < interner.unions().size(); ++i) out << i + 1 << '\t' << interner.unions()[i] << '\n';
    out << "[categories]\n";
    for (const auto& [text, entry] : categories) {
        out << entry->name << '\t' << category_flag_name(entry->flag) << '\t' << interner.reference(text) << '\n';
    }
    out << "[objects]\n";
    for (const auto& [text, record] : objects) {
        out << record->id << '\t' << interner.reference(text);
        if (!record->payload.empty()) out << '\t' << record->payload;
        out << '\n';
    }
    return out.str();
}

Taxonomy deserialize(std::string_view text) {
    std::vector<std::string_view> lines;
    {
        std::size_t start = 0;
        while (start < text.size()) {
            auto nl = text.find('\n', start);
            if (nl == std::string_view::npos) throw FormatError(lines.size() + 1, "truncated line (no newline)");
            lines.push_back(text.substr(start, nl - start));
            start = nl + 1;
        }
    }
    if (lines.empty()) throw FormatError(1, "empty document");
    {
        const std::string_view header = lines[0];
        if (header.substr(0, 4) != "PHX ") throw FormatError(1, "missing PHX header");
        auto version = parse_index(header.substr(4));
        if (!version) throw FormatError(1, "bad format version");
        if (*version != kFormatVersion) {
            throw Error(ErrorCode::VersionUnsupported,
                        "format version " + std::to_string(*version) + " is not supported");
        }
    }

    std::vector<Criterion> criteria;
    std::vector<Pending> roots;
    std::vector<Pending> collections;
    std::vector<Pending> unions;
    std::vector<RawCategory> categories;
    std::vector<RawObject> objects;

    std::size_t section = 0; // index into kSections plus one; 0 before the first
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string_view line = lines[i];
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[' && line.find('\t') == std::string_view::npos &&
            std::find(std::begin(kSections), std::end(kSections), line) != std::end(kSections)) {
            if (section == std::size(kSections) || line != kSections[section]) {
                throw FormatError(lineno, "expected section " +
                                              (section < std::size(kSections) ? std::string(kSections[section])
                                                                             : std::string("end of document")));
            }
            ++section;
            continue;
        }
        if (section == 0) throw FormatError(lineno, "content before the first section");
        const auto f = split_tabs(line);
        auto require_fields = [&](std::size_t lo, std::size_t hi) {
            if (f.size() < lo || f.size() > hi) {
                throw FormatError(lineno, "expected " + std::to_string(lo) + " tab-separated fields");
            }
        };
        switch (section) {
            case 1: {
                require_fields(3, 3);
                auto id = parse_index(f[0]);
                if (!id || *id != criteria.size() + 1) throw FormatError(lineno, "criterion ids must be 1..n in order");
                criteria.push_back({CriterionId{*id}, std::string(f[1]), Expression::universe(), {}});
                roots.push_back({lineno, std::string(f[2])});
                break;
            }
            case 2: {
                require_fields(3, 3);
                auto cid = parse_index(f[0]);
                auto bid = parse_index(f[1]);
                if (!cid || *cid == 0 || *cid > criteria.size()) throw FormatError(lineno, "unknown criterion id");
                auto& branches = criteria[*cid - 1].branches;
                if (!bid || *bid != branches.size() + 1) throw FormatError(lineno, "branch ids must be 1..k in order");
                branches.push_back({BranchId{*bid}, std::string(f[2])});
                break;
            }
            case 3:
            case 4: {
                require_fields(2, 2);
                auto& table = section == 3 ? collections : unions;
                auto idx = parse_index(f[0]);
                if (!idx || *idx != table.size() + 1) throw FormatError(lineno, "indices must be 1..n in order");
                table.push_back({lineno, std::string(f[1])});
                break;
            }
            case 5: {
                require_fields(3, 3);
                auto flag = parse_category_flag(f[1]);
                if (!flag) throw FormatError(lineno, "category flag must be root or container");
                categories.push_back({lineno, std::string(f[0]), *flag, std::string(f[2])});
                break;
            }
            case 6: {
                require_fields(2, 3);
                objects.push_back({lineno, std::string(f[0]), std::string(f[1]),
                                   f.size() == 3 ? std::string(f[2]) : std::string()});
                break;
            }
            default: throw FormatError(lineno, "unexpected content");
        }
    }
    if (section != std::size(kSections)) {
        throw FormatError(lines.size() + 1, "missing section " + std::string(kSections[section]));
    }

    Taxonomy t;
    t.gp = GeneratingPolyhierarchy::from_records(criteria);
    auto parse_at = [&](const Pending& p) {
        try {
            return parse(p.text, t.gp);
        } catch (const Error& e) {
            throw FormatError(p.line, e.what());
        }
    };
    for (std::size_t i = 0; i < criteria.size(); ++i) criteria[i].root = parse_at(roots[i]);
    t.gp = GeneratingPolyhierarchy::from_records(std::move(criteria));
    if (auto report = t.gp.validate(); !report.ok()) {
        throw Error(ErrorCode::CorruptDocument, "invalid polyhierarchy:\n" + report.to_string());
    }

    std::vector<Expression> interned_collections;
    std::vector<Expression> interned_unions;
    for (const auto& p : collections) {
        interned_collections.push_back(parse_at(p));
        if (interned_collections.back().simple() == nullptr) throw FormatError(p.line, "not a simple collection");
    }
    for (const auto& p : unions) interned_unions.push_back(parse_at(p));
    auto resolve = [&](std::size_t line, const std::string& text) {
        if (!text.empty() && text.front() == '@') {
            const char kind = text.size() > 1 ? text[1] : '\0';
            auto idx = parse_index(std::string_view(text).substr(std::min<std::size_t>(2, text.size())));
            if (kind == 'r' && idx && *idx >= 1 && *idx <= t.gp.size()) return t.gp.criterion(CriterionId{*idx}).root;
            const auto& table = kind == 'c' ? interned_collections : interned_unions;
            if ((kind != 'c' && kind != 'u') || !idx || *idx == 0 || *idx > table.size()) {
                throw FormatError(line, "bad reference " + text);
            }
            return table[*idx - 1];
        }
        return parse_at({line, text});
    };

    std::vector<CategoryEntry> category_records;
    std::vector<ObjectRecord> object_records;
    for (const auto& c : categories) {
        if (std::any_of(category_records.begin(), category_records.end(),
                        [&](const CategoryEntry& e) { return e.name == c.name; })) {
            throw FormatError(c.line, "duplicate category " + c.name);
        }
        category_records.push_back({c.name, c.flag, resolve(c.line, c.text)});
    }
    for (const auto& o : objects) {
        Expression e = resolve(o.line, o.text);
        if (e.simple() == nullptr) throw FormatError(o.line, "object assignment must be a simple collection");
        if (std::any_of(object_records.begin(), object_records.end(),
                        [&](const ObjectRecord& r) { return r.id == o.id; })) {
            throw FormatError(o.line, "duplicate object " + o.id);
        }
        object_records.push_back({o.id, *e.simple(), o.payload});
    }
    t.universe = Universe::from_records(std::move(object_records), std::move(category_records));
    if (auto report = t.universe.validate(t.gp); !report.ok()) {
        throw Error(ErrorCode::CorruptDocument, "invalid universe:\n" + report.to_string());
    }
    return t;
}

void save(const Taxonomy& taxonomy, const std::filesystem::path& path) {
    const std::string text = serialize(taxonomy);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out) throw Error(ErrorCode::IoError, "write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot replace " + path.string() + ": " + ec.message());
}

Taxonomy load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

} // namespace phx
